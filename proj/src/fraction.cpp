#include "dagconvex/fraction.hpp"

#include <numeric>

#include "dagconvex/error.hpp"

namespace dagconvex {

Fraction::Fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidParameter, "fraction with zero denominator");
  std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Fraction::to_decimal(int digits) const {
  __extension__ using u128 = unsigned __int128;
  if (digits < 0 || digits > 18) throw Error(ErrorCode::InvalidParameter, "decimal digits must be 0..18");
  u128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  u128 scaled = static_cast<u128>(num_) * scale;
  u128 q = scaled / den_;
  u128 twice_rem = (scaled % den_) * 2;
  if (twice_rem > den_ || (twice_rem == den_ && (q & 1) == 1)) ++q;

  auto whole = static_cast<std::uint64_t>(q / scale);
  auto frac = static_cast<std::uint64_t>(q % scale);
  std::string out = std::to_string(whole);
  if (digits > 0) {
    std::string tail = std::to_string(frac);
    out += '.';
    out.append(static_cast<std::size_t>(digits) - tail.size(), '0');
    out += tail;
  }
  return out;
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Fraction& a, const Fraction& b) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<u128>(a.num_) * b.den_ < static_cast<u128>(b.num_) * a.den_;
}

}  // namespace dagconvex
