#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/padic.hpp"
#include "supercong/poly.hpp"

namespace supercong {

/// coef_n * n + coef_k * k + constant
struct LinearForm {
  long coef_n = 0;
  long coef_k = 0;
  long constant = 0;

  long eval(long n, long k) const { return coef_n * n + coef_k * k + constant; }
  LinearForm shifted(long dn, long dk) const {
    return {coef_n, coef_k, constant + coef_n * dn + coef_k * dk};
  }
  BiPoly to_poly() const { return BiPoly::linear(coef_n, coef_k, constant); }
  std::string to_string() const;

  auto operator<=>(const LinearForm&) const = default;
};

/// (param)_{arg}^exponent
struct PochFactor {
  Rational param;
  LinearForm arg;
  long exponent = 1;

  bool operator==(const PochFactor& other) const {
    return param == other.param && arg == other.arg && exponent == other.exponent;
  }
};

/// scalar * (-1)^sign_exponent * poly_prefactor * prod (param)_{arg}^exponent
///
/// Normalized: factors sorted and merged, no zero exponents, the prefactor a
/// primitive integer polynomial with positive leading coefficient (its content
/// moved into scalar), and the sign exponent reduced mod 2.
struct HyperTerm {
  LinearForm sign_exponent;
  BiPoly poly_prefactor = BiPoly(1);
  Rational scalar = 1;
  std::vector<PochFactor> factors;

  void normalize();
  bool is_polynomial() const;

  /// Round-trips through parse.
  std::string to_string() const;

  bool operator==(const HyperTerm& other) const;
};

/// Syntax or semantic error in the term language, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

HyperTerm parse_term(const std::string& text);

/// A polynomial in n, k written with + - * ^ and parentheses.
BiPoly parse_polynomial(const std::string& text);

/// The two hypergeometric terms in the Zeilberger certificate for the
/// (8n+1)(1/4)_n^4/(1)_n^4 series.
const char* const kSeriesTermF =
    "(-1)^k * (8*n+1) * poch(1/4,n)^3 * poch(1/4,n+k) / "
    "(poch(1,n)^3 * poch(1,n-k) * poch(1/4,k)^2)";
const char* const kSeriesTermG =
    "(-1)^(k-1) * 16 * poch(1/4,n)^3 * poch(1/4,n+k-1) / "
    "(poch(1,n-1)^3 * poch(1,n-k) * poch(1/4,k)^2)";

/// Exact value at integer (n, k).
///
/// Negative lengths follow (a)_{-m} = 1/prod_{j=1}^{m} (a - j). A reciprocal
/// whose underlying symbol has a pole (a a positive integer, a + m <= 0)
/// vanishes and makes the whole term 0. A pole in the numerator or the
/// reciprocal of a zero symbol throws DomainError.
Rational eval(const HyperTerm& t, long n, long k);

/// nu_p of the value at (n, k); kInfinite when the value is 0.
long term_valuation(const HyperTerm& t, long n, long k, std::uint64_t p);

/// Thrown when a quotient of two terms is not a rational function.
class NonSimilar : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// a(n + dn, k + dk) / b(n, k) as a rational function in n, k.
RationalFunction cross_ratio(const HyperTerm& a, const HyperTerm& b, long dn, long dk);

/// t(n + dn, k + dk) / t(n, k).
RationalFunction shift_ratio(const HyperTerm& t, long dn, long dk);

}  // namespace supercong
