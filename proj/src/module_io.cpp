#include "kronbrist/module_io.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace kronbrist {

namespace {

using boost::multiprecision::cpp_int;

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

/// Non-blank lines with comments removed, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::size_t parse_count(std::string_view s, std::size_t line, std::size_t column, const char* what) {
  if (!all_digits(s) || s.size() > 9) throw ParseError(line, column, std::string("expected a count for ") + what);
  return std::stoul(std::string(s));
}

/// Strip "key=" from a header token, or fail.
std::string_view expect_key(const Token& t, std::string_view key, std::size_t line) {
  if (t.text.rfind(key, 0) != 0) throw ParseError(line, t.column, "expected '" + std::string(key) + "'");
  return std::string_view(t.text).substr(key.size());
}

FieldSpec parse_field(std::string_view s, std::size_t line, std::size_t column) {
  if (s == "q") return FieldSpec::rationals();
  if (s.size() > 4 && s.substr(0, 3) == "gf(" && s.back() == ')') {
    std::string_view p = s.substr(3, s.size() - 4);
    if (all_digits(p) && p.size() <= 10) {
      try {
        return FieldSpec::prime(std::stoull(std::string(p)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, column, e.what());
      }
    }
  }
  throw ParseError(line, column, "field must be gf(p) or q");
}

Scalar parse_entry(FieldSpec field, const Token& t, std::size_t line) {
  const std::string_view s = t.text;
  if (field.is_finite()) {
    if (!all_digits(s)) throw ParseError(line, t.column, "entry '" + t.text + "' is not an integer in [0,p)");
    if (s.size() > 10 || std::stoull(std::string(s)) >= field.characteristic())
      throw ParseError(line, t.column, "entry '" + t.text + "' is out of range for " + field.to_string());
    return Scalar(field, static_cast<long long>(std::stoull(std::string(s))));
  }
  const std::size_t slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  const bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!all_digits(num)) throw ParseError(line, t.column, "entry '" + t.text + "' is not a rational number");
  cpp_int numerator{std::string(num)};
  if (negative) numerator = -numerator;
  cpp_int denominator = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(den)) throw ParseError(line, t.column, "entry '" + t.text + "' has a malformed denominator");
    denominator = cpp_int{std::string(den)};
    if (denominator == 0) throw ParseError(line, t.column, "entry '" + t.text + "' has a zero denominator");
    if (boost::multiprecision::gcd(numerator, denominator) != 1)
      throw ParseError(line, t.column, "entry '" + t.text + "' is not in lowest terms");
  }
  return Scalar(field, Rational(numerator, denominator));
}

}  // namespace

KroneckerModule parse_module_file(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header 'kron n=... field=... dims=a,b'");

  const Line& header = lines.front();
  const std::size_t hl = header.number;
  if (header.tokens[0].text != "kron") throw ParseError(hl, header.tokens[0].column, "expected 'kron'");
  if (header.tokens.size() != 4)
    throw ParseError(hl, header.tokens.size() > 4 ? header.tokens[4].column : header.tokens.back().column,
                     "header must be 'kron n=<int> field=<gf(p)|q> dims=<a>,<b>'");
  const std::size_t n = parse_count(expect_key(header.tokens[1], "n=", hl), hl, header.tokens[1].column, "n");
  if (n == 0) throw ParseError(hl, header.tokens[1].column, "n must be at least 1");
  const FieldSpec field = parse_field(expect_key(header.tokens[2], "field=", hl), hl, header.tokens[2].column);
  const std::string_view dims = expect_key(header.tokens[3], "dims=", hl);
  const std::size_t comma = dims.find(',');
  if (comma == std::string_view::npos) throw ParseError(hl, header.tokens[3].column, "dims must be '<a>,<b>'");
  const std::size_t a = parse_count(dims.substr(0, comma), hl, header.tokens[3].column, "dims");
  const std::size_t b = parse_count(dims.substr(comma + 1), hl, header.tokens[3].column, "dims");

  std::vector<Matrix> alphas;
  std::size_t cursor = 1;
  const std::size_t rows_per_block = a == 0 ? 0 : b;
  for (std::size_t i = 1; i <= n; ++i) {
    if (cursor >= lines.size()) {
      const Line& last = lines.back();
      throw ParseError(last.number, last.tokens.back().column, "missing block 'alpha " + std::to_string(i) + "'");
    }
    const Line& tag = lines[cursor++];
    if (tag.tokens.size() != 2 || tag.tokens[0].text != "alpha" || tag.tokens[1].text != std::to_string(i))
      throw ParseError(tag.number, tag.tokens[0].column, "expected 'alpha " + std::to_string(i) + "'");
    Matrix m(field, b, a);
    for (std::size_t r = 0; r < rows_per_block; ++r) {
      if (cursor >= lines.size())
        throw ParseError(lines.back().number, lines.back().tokens.back().column,
                         "alpha " + std::to_string(i) + " needs " + std::to_string(b) + " rows");
      const Line& row = lines[cursor];
      if (row.tokens.front().text == "alpha")
        throw ParseError(row.number, row.tokens.front().column,
                         "alpha " + std::to_string(i) + " has " + std::to_string(r) + " rows, expected " +
                             std::to_string(b));
      if (row.tokens.size() != a) {
        const std::size_t col = row.tokens.size() > a ? row.tokens[a].column : row.tokens.back().column;
        throw ParseError(row.number, col,
                         "row has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(a));
      }
      for (std::size_t c = 0; c < a; ++c) m.set(r, c, parse_entry(field, row.tokens[c], row.number));
      ++cursor;
    }
    alphas.push_back(std::move(m));
  }
  if (cursor < lines.size())
    throw ParseError(lines[cursor].number, lines[cursor].tokens.front().column, "unexpected content after the last block");
  return KroneckerModule(n, field, a, b, std::move(alphas));
}

std::string write_module_file(const KroneckerModule& m) {
  std::ostringstream out;
  out << "kron n=" << m.n() << " field=" << m.field().to_string() << " dims=" << m.dim1() << "," << m.dim2()
      << "\n";
  for (std::size_t i = 0; i < m.n(); ++i) {
    out << "alpha " << (i + 1) << "\n";
    if (m.dim1() == 0) continue;
    const Matrix& a = m.alpha(i);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) out << (c ? " " : "") << a.at(r, c).to_string();
      out << "\n";
    }
  }
  return out.str();
}

KroneckerModule read_module_path(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open module file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_module_file(buf.str());
}

}  // namespace kronbrist
