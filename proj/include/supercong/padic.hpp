#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace supercong {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Valuation of zero.
inline constexpr long kInfinite = std::numeric_limits<long>::max();

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a result is requested beyond the digits actually known.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside Z_p, bad prime, non-invertible value, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Desk-scale size limit exceeded (p^r above the configured cap).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p^e as an exact integer; throws CapExceeded when it exceeds cap.
std::uint64_t checked_power(std::uint64_t p, long e, std::uint64_t cap);

long valuation(const BigInt& n, std::uint64_t p);  // kInfinite for 0
long valuation(const Rational& q, std::uint64_t p);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

Rational make_rational(const BigInt& num, const BigInt& den);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// An odd prime p together with a working precision M (digits of p-adic
/// accuracy) and the cached modulus p^M.
class PadicContext {
 public:
  PadicContext(std::uint64_t p, int precision);

  std::uint64_t prime() const { return p_; }
  int precision() const { return precision_; }
  const BigInt& modulus() const { return modulus_; }
  /// p^e for 0 <= e <= precision, otherwise computed.
  BigInt power(long e) const;

  bool operator==(const PadicContext& other) const {
    return p_ == other.p_ && precision_ == other.precision_;
  }

 private:
  std::uint64_t p_;
  int precision_;
  BigInt modulus_;
};

using ContextPtr = std::shared_ptr<const PadicContext>;

ContextPtr make_context(std::uint64_t p, int precision);

/// p^valuation * unit, with the unit known modulo p^relative_precision.
///
/// Zero carries an absolute precision instead (kInfinite for exact zero), so
/// cancellation never fabricates digits. Operations refuse to mix contexts.
class PadicNum {
 public:
  static PadicNum zero(ContextPtr ctx);
  static PadicNum zero_to(ContextPtr ctx, long absolute_precision);
  static PadicNum one(ContextPtr ctx);
  static PadicNum from_integer(const BigInt& n, ContextPtr ctx);
  static PadicNum from_rational(const Rational& q, ContextPtr ctx);
  /// unit must be coprime to p; it is reduced modulo p^relative_precision.
  static PadicNum from_parts(ContextPtr ctx, long valuation, const BigInt& unit,
                             int relative_precision);

  const ContextPtr& context() const { return ctx_; }
  std::uint64_t prime() const { return ctx_->prime(); }
  bool is_zero() const { return valuation_ == kInfinite; }
  long valuation() const { return valuation_; }
  const BigInt& unit() const { return unit_; }
  int relative_precision() const { return relative_; }
  /// Digits known absolutely: valuation + relative precision (or the
  /// recorded bound for zero).
  long absolute_precision() const;

  PadicNum operator-() const;
  PadicNum operator+(const PadicNum& rhs) const;
  PadicNum operator-(const PadicNum& rhs) const;
  PadicNum operator*(const PadicNum& rhs) const;
  PadicNum operator/(const PadicNum& rhs) const;
  PadicNum inverse() const;
  PadicNum pow(long e) const;
  /// Multiply by p^e; exact bookkeeping, no residue arithmetic.
  PadicNum shifted(long e) const;

  /// Move to another context over the same prime. Relative precision is
  /// capped at the new context's precision.
  PadicNum with_context(ContextPtr ctx) const;

  /// The value mod p^t as an integer in [0, p^t). Requires valuation >= 0 and
  /// t <= absolute precision.
  BigInt residue(long t) const;

  /// "p^v * u", "u" when v = 0, or "0".
  std::string to_string() const;
  /// Same, but only the digits that matter modulo p^t.
  std::string to_string_mod(long t) const;

 private:
  PadicNum(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  void require_same(const PadicNum& other) const;

  ContextPtr ctx_;
  long valuation_ = kInfinite;
  BigInt unit_ = 0;
  int relative_ = 0;
  long zero_precision_ = kInfinite;
};

inline PadicNum inv(const PadicNum& a) { return a.inverse(); }
inline PadicNum pow(const PadicNum& a, long e) { return a.pow(e); }

/// nu_p(a - b) >= t. Throws PrecisionError if either operand is known to
/// fewer than t digits.
bool congruent_mod(const PadicNum& a, const PadicNum& b, long t);

/// Lower bound for nu_p(a - b), exact unless the difference vanishes to the
/// known precision.
long difference_valuation(const PadicNum& a, const PadicNum& b);

}  // namespace supercong
