#include "flagcoh/rational.hpp"

#include <cctype>

#include "flagcoh/errors.hpp"

namespace flagcoh {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

template <typename T, typename F>
std::vector<T> split_list(std::string_view text, F parse) {
  std::vector<T> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw InputError("not a rational number: '" + std::string(text) + "'");
  const Integer d = parse_integer(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

RationalVector parse_rational_list(std::string_view text) {
  return split_list<Rational>(text, [](std::string_view s) { return parse_rational(s); });
}

IntVector parse_int_list(std::string_view text) {
  return split_list<int>(text, [&](std::string_view s) {
    s = trim(s);
    if (!is_integer_literal(s) || s.size() > 9) throw InputError("not a small integer: '" + std::string(s) + "'");
    return static_cast<int>(parse_integer(s).get_si());
  });
}

RationalVector to_rational(const IntVector& v) { return RationalVector(v.begin(), v.end()); }

}  // namespace flagcoh
