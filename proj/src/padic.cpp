#include "supercong/padic.hpp"

#include <algorithm>
#include <cctype>

namespace supercong {

namespace {

long saturating_add(long a, long b) {
  if (a == kInfinite || b == kInfinite) return kInfinite;
  return a + b;
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

BigInt pow_ui(std::uint64_t p, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

}  // namespace

long valuation(const BigInt& n, std::uint64_t p) {
  if (n == 0) return kInfinite;
  BigInt rest;
  BigInt prime = p;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long valuation(const Rational& q, std::uint64_t p) {
  if (q == 0) return kInfinite;
  return valuation(BigInt(q.get_num()), p) - valuation(BigInt(q.get_den()), p);
}

std::uint64_t checked_power(std::uint64_t p, long e, std::uint64_t cap) {
  if (e < 0) throw DomainError("negative exponent");
  std::uint64_t r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > cap / p) {
      throw CapExceeded(std::to_string(p) + "^" + std::to_string(e) + " exceeds the size cap " +
                        std::to_string(cap));
    }
    r *= p;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                              31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t first_digit = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == first_digit) throw DomainError("malformed rational '" + text + "'");
    return text.substr(start, i - start);
  };
  std::string num = digits(true);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits(false);
  }
  if (i != text.size()) throw DomainError("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  return make_rational(BigInt(num), BigInt(den));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

PadicContext::PadicContext(std::uint64_t p, int precision) : p_(p), precision_(precision) {
  if (p < 3 || !is_prime_u64(p)) {
    throw DomainError("p = " + std::to_string(p) + " is not an odd prime");
  }
  if (precision < 1) throw DomainError("precision must be at least 1");
  modulus_ = pow_ui(p, static_cast<unsigned long>(precision));
}

BigInt PadicContext::power(long e) const {
  if (e < 0) throw DomainError("negative power of p");
  if (e == precision_) return modulus_;
  return pow_ui(p_, static_cast<unsigned long>(e));
}

ContextPtr make_context(std::uint64_t p, int precision) {
  return std::make_shared<const PadicContext>(p, precision);
}

PadicNum PadicNum::zero(ContextPtr ctx) { return zero_to(std::move(ctx), kInfinite); }

PadicNum PadicNum::zero_to(ContextPtr ctx, long absolute_precision) {
  PadicNum z(std::move(ctx));
  z.zero_precision_ = absolute_precision;
  return z;
}

PadicNum PadicNum::one(ContextPtr ctx) { return from_integer(1, std::move(ctx)); }

PadicNum PadicNum::from_integer(const BigInt& n, ContextPtr ctx) {
  return from_rational(Rational(n), std::move(ctx));
}

PadicNum PadicNum::from_rational(const Rational& q, ContextPtr ctx) {
  if (q == 0) return zero(std::move(ctx));
  const std::uint64_t p = ctx->prime();
  BigInt num = q.get_num();
  BigInt den = q.get_den();
  BigInt prime = p;
  const mpz_srcptr pp = prime.get_mpz_t();
  const long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pp));
  const long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pp));
  BigInt inv_den;
  mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), ctx->modulus().get_mpz_t());
  BigInt unit = num * inv_den;
  const int m = ctx->precision();
  return from_parts(std::move(ctx), vn - vd, unit, m);
}

PadicNum PadicNum::from_parts(ContextPtr ctx, long valuation, const BigInt& unit,
                              int relative_precision) {
  PadicNum r(std::move(ctx));
  r.relative_ = std::clamp(relative_precision, 1, r.ctx_->precision());
  const BigInt mod = r.ctx_->power(r.relative_);
  mpz_fdiv_r(r.unit_.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
  if (mpz_divisible_ui_p(r.unit_.get_mpz_t(), r.ctx_->prime())) {
    throw DomainError("unit part divisible by p");
  }
  r.valuation_ = valuation;
  r.zero_precision_ = kInfinite;
  return r;
}

long PadicNum::absolute_precision() const {
  if (is_zero()) return zero_precision_;
  return valuation_ + relative_;
}

void PadicNum::require_same(const PadicNum& other) const {
  if (!(*ctx_ == *other.ctx_)) {
    throw ContextMismatch("p-adic operands live in different contexts");
  }
}

PadicNum PadicNum::operator-() const {
  if (is_zero()) return *this;
  return from_parts(ctx_, valuation_, -unit_, relative_);
}

PadicNum PadicNum::operator+(const PadicNum& rhs) const {
  require_same(rhs);
  const long abs_prec = std::min(absolute_precision(), rhs.absolute_precision());
  if (is_zero() || rhs.is_zero()) {
    const PadicNum& other = is_zero() ? rhs : *this;
    if (other.is_zero()) return zero_to(ctx_, abs_prec);
    if (abs_prec <= other.valuation_) return zero_to(ctx_, abs_prec);
    const long digits = std::min<long>(other.relative_, abs_prec - other.valuation_);
    return from_parts(ctx_, other.valuation_, other.unit_, static_cast<int>(digits));
  }
  const long v = std::min(valuation_, rhs.valuation_);
  const long digits = abs_prec - v;
  const BigInt mod = ctx_->power(digits);
  BigInt sum = 0;
  for (const PadicNum* x : {this, &rhs}) {
    const long gap = x->valuation_ - v;
    if (gap >= digits) continue;
    sum += x->unit_ * ctx_->power(gap);
  }
  mpz_fdiv_r(sum.get_mpz_t(), sum.get_mpz_t(), mod.get_mpz_t());
  if (sum == 0) return zero_to(ctx_, abs_prec);
  const long w = supercong::valuation(sum, ctx_->prime());
  BigInt unit = sum;
  BigInt prime = ctx_->prime();
  mpz_remove(unit.get_mpz_t(), unit.get_mpz_t(), prime.get_mpz_t());
  return from_parts(ctx_, v + w, unit, static_cast<int>(digits - w));
}

PadicNum PadicNum::operator-(const PadicNum& rhs) const { return *this + (-rhs); }

PadicNum PadicNum::operator*(const PadicNum& rhs) const {
  require_same(rhs);
  if (is_zero() || rhs.is_zero()) {
    long bound;
    if (is_zero() && rhs.is_zero()) {
      bound = saturating_add(zero_precision_, rhs.zero_precision_);
    } else {
      const PadicNum& z = is_zero() ? *this : rhs;
      const PadicNum& nz = is_zero() ? rhs : *this;
      bound = saturating_add(z.zero_precision_, nz.valuation_);
    }
    return zero_to(ctx_, bound);
  }
  const int rel = std::min(relative_, rhs.relative_);
  return from_parts(ctx_, valuation_ + rhs.valuation_, unit_ * rhs.unit_, rel);
}

PadicNum PadicNum::operator/(const PadicNum& rhs) const { return *this * rhs.inverse(); }

PadicNum PadicNum::inverse() const {
  if (is_zero()) throw DomainError("inversion of zero");
  const BigInt mod = ctx_->power(relative_);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  return from_parts(ctx_, -valuation_, inv, relative_);
}

PadicNum PadicNum::pow(long e) const {
  if (e == 0) return one(ctx_);
  if (e < 0) return inverse().pow(-e);
  if (is_zero()) {
    return zero_to(ctx_, zero_precision_ == kInfinite ? kInfinite : zero_precision_ * e);
  }
  const BigInt mod = ctx_->power(relative_);
  BigInt u;
  BigInt exponent = static_cast<unsigned long>(e);
  mpz_powm(u.get_mpz_t(), unit_.get_mpz_t(), exponent.get_mpz_t(), mod.get_mpz_t());
  return from_parts(ctx_, valuation_ * e, u, relative_);
}

PadicNum PadicNum::shifted(long e) const {
  if (is_zero()) return zero_to(ctx_, saturating_add(zero_precision_, e));
  PadicNum r = *this;
  r.valuation_ += e;
  return r;
}

PadicNum PadicNum::with_context(ContextPtr ctx) const {
  if (ctx->prime() != prime()) {
    throw ContextMismatch("cannot move a p-adic value to a different prime");
  }
  if (is_zero()) return zero_to(std::move(ctx), zero_precision_);
  return from_parts(std::move(ctx), valuation_, unit_, relative_);
}

BigInt PadicNum::residue(long t) const {
  if (t > absolute_precision()) {
    throw PrecisionError("residue mod p^" + std::to_string(t) + " requested but only " +
                         std::to_string(absolute_precision()) + " digits are known");
  }
  if (is_zero() || valuation_ >= t) return 0;
  if (valuation_ < 0) throw DomainError("residue of a non-integral p-adic value");
  const BigInt mod = ctx_->power(t);
  BigInt r = unit_ * ctx_->power(valuation_);
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

std::string PadicNum::to_string() const {
  if (is_zero()) return "0";
  if (valuation_ == 0) return unit_.get_str();
  return std::to_string(prime()) + "^" + std::to_string(valuation_) + " * " + unit_.get_str();
}

std::string PadicNum::to_string_mod(long t) const {
  if (t > absolute_precision()) {
    throw PrecisionError("cannot render modulo p^" + std::to_string(t));
  }
  if (is_zero() || valuation_ >= t) return "0";
  BigInt u = unit_ % ctx_->power(t - valuation_);
  if (valuation_ == 0) return u.get_str();
  return std::to_string(prime()) + "^" + std::to_string(valuation_) + " * " + u.get_str();
}

bool congruent_mod(const PadicNum& a, const PadicNum& b, long t) {
  if (t > a.absolute_precision() || t > b.absolute_precision()) {
    throw PrecisionError("congruence mod p^" + std::to_string(t) +
                         " exceeds known precision (" +
                         std::to_string(std::min(a.absolute_precision(), b.absolute_precision())) +
                         " digits)");
  }
  const PadicNum d = a - b;
  return d.is_zero() || d.valuation() >= t;
}

long difference_valuation(const PadicNum& a, const PadicNum& b) {
  const PadicNum d = a - b;
  return d.is_zero() ? d.absolute_precision() : d.valuation();
}

}  // namespace supercong
