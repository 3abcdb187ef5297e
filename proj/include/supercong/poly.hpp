#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supercong/padic.hpp"

namespace supercong {

/// Polynomial in two variables n, k with rational coefficients, stored densely
/// as coefficient rows: row i holds the coefficients of n^i k^0, n^i k^1, ...
/// Rows and trailing zeros are trimmed, so the zero polynomial has no rows.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Rational& constant);  // NOLINT: implicit on purpose
  BiPoly(long constant) : BiPoly(Rational(constant)) {}  // NOLINT

  static BiPoly n();
  static BiPoly k();
  /// cn*n + ck*k + c0
  static BiPoly linear(const Rational& cn, const Rational& ck, const Rational& c0);

  bool is_zero() const { return rows_.empty(); }
  bool is_constant() const;
  int degree_n() const { return static_cast<int>(rows_.size()) - 1; }  // -1 for zero
  int degree_k() const;
  int total_degree() const;
  Rational coefficient(int i, int j) const;
  void set_coefficient(int i, int j, const Rational& value);

  /// Coefficient of the lexicographically largest monomial (n first, then k).
  Rational leading_coefficient() const;

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& rhs) const;
  BiPoly operator-(const BiPoly& rhs) const;
  BiPoly operator*(const BiPoly& rhs) const;
  BiPoly& operator+=(const BiPoly& rhs) { return *this = *this + rhs; }
  BiPoly& operator-=(const BiPoly& rhs) { return *this = *this - rhs; }
  BiPoly& operator*=(const BiPoly& rhs) { return *this = *this * rhs; }
  BiPoly pow(unsigned e) const;
  bool operator==(const BiPoly& rhs) const { return rows_ == rhs.rows_; }
  bool operator!=(const BiPoly& rhs) const { return !(*this == rhs); }

  /// p(n + dn, k + dk)
  BiPoly shifted(const Rational& dn, const Rational& dk) const;
  Rational eval(const Rational& n, const Rational& k) const;

  /// Scaled so that the leading coefficient is 1 (zero stays zero).
  BiPoly monic() const;
  /// The rational c with *this = c * P, P having coprime integer
  /// coefficients and a positive leading coefficient; 0 for zero.
  Rational content() const;
  BiPoly primitive_part() const;

  /// Human and parser friendly, e.g. "8*n+1", "n^2*k-3/4". Zero prints "0".
  std::string to_string() const;

  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  friend BiPoly from_rows(std::vector<std::vector<Rational>> rows);
  void trim();

  std::vector<std::vector<Rational>> rows_;
};

/// Quotient a / b; throws DomainError unless b divides a exactly.
BiPoly divide_exact(const BiPoly& a, const BiPoly& b);

/// Greatest common divisor in Q[n, k], scaled to leading coefficient 1.
/// gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// num / den in lowest terms with a primitive integer denominator whose
/// leading coefficient is positive, so equal functions have equal
/// representations.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(const BiPoly& num);  // NOLINT
  RationalFunction(const BiPoly& num, const BiPoly& den);

  const BiPoly& numerator() const { return num_; }
  const BiPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator/(const RationalFunction& rhs) const;
  RationalFunction pow(long e) const;
  bool operator==(const RationalFunction& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }

  /// Empty where the denominator vanishes.
  std::optional<Rational> eval(const Rational& n, const Rational& k) const;

  std::string to_string() const;

 private:
  void normalize();

  BiPoly num_;
  BiPoly den_;
};

}  // namespace supercong
