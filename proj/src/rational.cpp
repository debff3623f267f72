#include "hooklen/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hooklen {

namespace {

bool is_decimal(std::string_view digits) {
  return !digits.empty() &&
         std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::string to_fraction_string(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_decimal(num_text) || !is_decimal(den_text)) {
    throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  Rational result(num, den);
  result.canonicalize();
  return result;
}

BigInt factorial(std::size_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt pow2(std::size_t exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

}  // namespace hooklen
