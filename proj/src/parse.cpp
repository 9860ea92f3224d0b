#include "zetascope/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace zetascope {

namespace {

// Parses one signed decimal number starting at pos; "" / "+" / "-" directly
// before 'i' mean 1 / 1 / -1.
bool parse_part(const std::string& s, size_t& pos, bool before_i, double* out) {
  const size_t start = pos;
  size_t p = pos;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
  if (before_i && (p == s.size() || s[p] == 'i')) {
    if (p == start || (p - start == 1 && s[start] == '+'))
      *out = 1.0;
    else
      *out = -1.0;
    pos = p;
    return true;
  }
  const char* begin = s.c_str() + start;
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin) return false;
  pos = start + static_cast<size_t>(end - begin);
  *out = v;
  return std::isfinite(v);
}

}  // namespace

std::optional<Complex> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) return std::nullopt;

  // Single trailing-'i' token means a pure imaginary value.
  size_t pos = 0;
  double first = 0.0;
  // Find where a second signed term would start: a '+'/'-' that is not the
  // leading sign and not an exponent sign.
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }

  if (split == std::string::npos) {
    const bool imag = s.back() == 'i';
    if (!parse_part(s, pos, imag, &first)) return std::nullopt;
    if (imag) {
      if (pos + 1 != s.size() || s[pos] != 'i') return std::nullopt;
      return Complex(0.0, first);
    }
    if (pos != s.size()) return std::nullopt;
    return Complex(first, 0.0);
  }

  if (!parse_part(s, pos, false, &first) || pos != split) return std::nullopt;
  double second = 0.0;
  if (!parse_part(s, pos, true, &second)) return std::nullopt;
  if (pos + 1 != s.size() || s[pos] != 'i') return std::nullopt;
  return Complex(first, second);
}

}  // namespace zetascope
