#include "spm/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace spm {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text[0] == '-' ||
      den_text[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  std::string num(num_text);
  if (num[0] == '+') num.erase(0, 1);
  Integer p(num, 10);
  Integer q(std::string(den_text), 10);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(value.get_num_mpz_t()) ||
      !mpz_perfect_square_p(value.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer p = sqrt(value.get_num());
  Integer q = sqrt(value.get_den());
  return Rational(p, q);
}

Rational power(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational scale_to_primitive(std::vector<Rational>& coefficients) {
  Integer den_lcm = 1;
  for (const auto& c : coefficients) den_lcm = lcm(den_lcm, c.get_den());
  Integer num_gcd = 0;
  for (const auto& c : coefficients) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    num_gcd = gcd(num_gcd, scaled);
  }
  if (num_gcd == 0) return Rational(1);
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  for (auto& c : coefficients) c *= factor;
  return factor;
}

}  // namespace spm
