#pragma once

#include <cstdint>
#include <string>

namespace dagconvex {

/// Non-negative exact fraction in lowest terms.
class Fraction {
 public:
  Fraction() = default;
  /// Throws Error{InvalidParameter} when den == 0.
  Fraction(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Fixed-point rendering with round-half-even at the last digit.
  std::string to_decimal(int digits = 6) const;
  /// "num/den", or just "num" when den == 1.
  std::string to_string() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  /// Exact comparison by cross-multiplication.
  friend bool operator<(const Fraction& a, const Fraction& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace dagconvex
