#include "dagconvex/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dagconvex/error.hpp"

namespace dagconvex {

namespace {

bool is_skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

long long parse_int(std::string_view token, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected integer, got '" +
                                      std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(const std::string& line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.data() + i, j - i);
    i = j;
  }
  return out;
}

int checked_vertex(long long v, int line_no) {
  if (v < 0 || v > 1'000'000) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": vertex id out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected two integers");
    }
    long long a = parse_int(tokens[0], line_no);
    long long b = parse_int(tokens[1], line_no);
    if (n < 0) {
      if (a < 0 || a > 1'000'000 || b < 0) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad header 'n m'");
      }
      n = a;
      m = b;
      arcs.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 20)));
      continue;
    }
    if (static_cast<long long>(arcs.size()) == m) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": more than " +
                                        std::to_string(m) + " arcs");
    }
    arcs.push_back({checked_vertex(a, line_no), checked_vertex(b, line_no)});
  }
  if (n < 0) throw Error(ErrorCode::Parse, "missing 'n m' header");
  if (static_cast<long long>(arcs.size()) != m) {
    throw Error(ErrorCode::Parse, "header announces " + std::to_string(m) + " arcs, found " +
                                      std::to_string(arcs.size()));
  }
  return Digraph(static_cast<int>(n), std::move(arcs));
}

namespace {

class DotLexer {
 public:
  explicit DotLexer(std::string text) : text_(std::move(text)) {}

  // Returns the next token: identifier/number, "->", or a single punctuation
  // character. Empty string at end of input.
  std::string next() {
    skip_space_and_comments();
    if (pos_ >= text_.size()) return {};
    char c = text_[pos_];
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return "->";
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
      std::size_t start = pos_++;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return text_.substr(start, pos_ - start);
    }
    if (c == '"') {
      std::size_t start = pos_++;
      while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
      ++pos_;
      return text_.substr(start, pos_ - start);
    }
    ++pos_;
    return std::string(1, c);
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_.compare(pos_, 2, "//") == 0 || text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.compare(pos_, 2, "/*") == 0) {
        auto end = text_.find("*/", pos_ + 2);
        pos_ = end == std::string::npos ? text_.size() : end + 2;
      } else {
        return;
      }
    }
  }

  std::string text_;
  std::size_t pos_ = 0;
};

int dot_node_id(const std::string& token) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::Parse, "DOT node ids must be non-negative integers, got '" + token + "'");
  }
  return checked_vertex(parse_int(token, 0), 0);
}

}  // namespace

Digraph read_dot(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  DotLexer lex(buffer.str());

  std::string tok = lex.next();
  if (tok == "strict") tok = lex.next();
  if (tok != "digraph") throw Error(ErrorCode::Parse, "DOT input must start with 'digraph'");
  tok = lex.next();
  if (tok != "{") tok = lex.next();  // optional graph name
  if (tok != "{") throw Error(ErrorCode::Parse, "expected '{' after digraph header");

  std::vector<Arc> arcs;
  int max_id = -1;
  std::string pending = lex.next();
  while (true) {
    if (pending.empty()) throw Error(ErrorCode::Parse, "unterminated DOT body");
    if (pending == "}") break;
    if (pending == ";") {
      pending = lex.next();
      continue;
    }
    int prev = dot_node_id(pending);
    max_id = std::max(max_id, prev);
    pending = lex.next();
    while (pending == "->") {
      int cur = dot_node_id(lex.next());
      max_id = std::max(max_id, cur);
      arcs.push_back({prev, cur});
      prev = cur;
      pending = lex.next();
    }
    if (pending == "[") {
      while (!pending.empty() && pending != "]") pending = lex.next();
      if (pending.empty()) throw Error(ErrorCode::Parse, "unterminated attribute list");
      pending = lex.next();
    }
  }
  return Digraph(max_id + 1, std::move(arcs));
}

Digraph read_digraph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::istringstream probe(text);
  std::string word;
  std::string line;
  while (std::getline(probe, line)) {
    if (is_skippable(line)) continue;
    auto tokens = split_ws(line);
    if (!tokens.empty()) word = std::string(tokens[0]);
    break;
  }
  std::istringstream source(text);
  // Edge lists never start with a C-style comment.
  if (word.rfind("digraph", 0) == 0 || word == "strict" || word.rfind('/', 0) == 0) return read_dot(source);
  return read_edge_list(source);
}

Digraph load_digraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return read_digraph(in);
}

void write_edge_list(std::ostream& out, const Digraph& d, const std::vector<std::string>& header) {
  for (const auto& line : header) out << "# " << line << '\n';
  out << d.order() << ' ' << d.arcs().size() << '\n';
  for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
}

}  // namespace dagconvex
