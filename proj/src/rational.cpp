#include "alcove/rational.hpp"

#include "alcove/errors.hpp"

#include <charconv>

namespace alcove {

std::string to_string(const Rational& q)
{
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

long long parse_integer(std::string_view text, std::string_view whole)
{
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw InvalidInput("not a rational number: '" + std::string(whole) + "'");
  return value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const long long num = parse_integer(text.substr(0, slash), text);
  const long long den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

long long floor(const Rational& q)
{
  // boost::rational keeps the denominator positive.
  long long n = q.numerator();
  long long d = q.denominator();
  long long f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

RationalPoint to_rational(const std::vector<long long>& v)
{
  RationalPoint out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(x);
  return out;
}

} // namespace alcove
