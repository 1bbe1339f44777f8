#include "leroy/numerics/decimal.hpp"

#include <cctype>
#include <charconv>
#include <climits>
#include <cmath>

#include "leroy/errors.hpp"

namespace leroy::numerics {

namespace {

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorKind::invalid_argument, "not an exact decimal: '" + std::string(text) + "'");
}

mpz_class pow10(long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(n));
  return r;
}

}  // namespace

Decimal Decimal::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0 || den == 0) bad(text);
    return Decimal(mpq_class(num, den));
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) bad(text);
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') bad(text);
    ++pos;
    auto first = s.data() + pos;
    if (pos < s.size() && s[pos] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), exponent);
    if (ec != std::errc() || ptr != s.data() + s.size() || std::labs(exponent) > 100000) bad(text);
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  long scale = exponent - frac_digits;
  mpq_class q = scale >= 0 ? mpq_class(num * pow10(scale)) : mpq_class(num, pow10(-scale));
  return Decimal(q);
}

Decimal Decimal::from_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorKind::invalid_argument, "non-finite parameter");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return parse(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

std::optional<long> Decimal::as_integer() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) return std::nullopt;
  return q_.get_num().get_si();
}

std::string Decimal::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  // exact decimal when the denominator is 2^a 5^b, p/q otherwise
  mpz_class den = q_.get_den();
  long twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return q_.get_str();
  long scale = std::max(twos, fives);
  mpz_class scaled = q_.get_num() * pow10(scale) / q_.get_den();
  bool negative = scaled < 0;
  std::string d = negative ? mpz_class(-scaled).get_str() : scaled.get_str();
  if (static_cast<long>(d.size()) <= scale) d.insert(0, static_cast<std::size_t>(scale) - d.size() + 1, '0');
  d.insert(d.size() - static_cast<std::size_t>(scale), ".");
  return (negative ? "-" : "") + d;
}

long floor_of(const Decimal& d) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), d.rational().get_num_mpz_t(), d.rational().get_den_mpz_t());
  if (!f.fits_slong_p()) throw Error(ErrorKind::invalid_argument, "value out of range");
  return f.get_si();
}

}  // namespace leroy::numerics
