#include "supercong/pochhammer.hpp"

#include <limits>

#include "supercong/gamma.hpp"

namespace supercong {

namespace {

bool fits_int64(const BigInt& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

Rational rising_exact(const Rational& x, std::uint64_t n) {
  Rational acc = 1;
  for (std::uint64_t j = 0; j < n; ++j) acc *= x + Rational(static_cast<unsigned long>(j));
  return acc;
}

PochValue p_factor_split(const Rational& x, std::uint64_t n, std::uint64_t p) {
  if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), p)) {
    throw DomainError(to_string(x) + " is not in Z_" + std::to_string(p));
  }
  PochValue out{x, n, 1, 1, 1};
  for (std::uint64_t j = 0; j < n; ++j) {
    const Rational f = x + Rational(static_cast<unsigned long>(j));
    if (f == 0 || mpz_divisible_ui_p(f.get_num().get_mpz_t(), p)) {
      out.p_part *= f;
    } else {
      out.unit_part *= f;
    }
  }
  out.exact = out.p_part * out.unit_part;
  return out;
}

long poch_valuation(const Rational& x, long n, std::uint64_t p) {
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  const long vb = valuation(b, p);
  long total = 0;
  if (n >= 0) {
    // factors (a + j b)/b, j = 0..n-1
    for (long j = 0; j < n; ++j) {
      const BigInt f = a + b * j;
      if (f == 0) return kInfinite;
      total += valuation(f, p) - vb;
    }
    return total;
  }
  for (long j = 1; j <= -n; ++j) {
    const BigInt f = a - b * j;
    if (f == 0) throw DomainError("Pochhammer symbol (" + to_string(x) + ")_" +
                                  std::to_string(n) + " is a pole");
    total -= valuation(f, p) - vb;
  }
  return total;
}

PadicNum rising_padic(const Rational& x, std::uint64_t n, const ContextPtr& ctx,
                      Execution exec) {
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  const std::uint64_t p = ctx->prime();
  const bool word_sized = fits_int64(a) && fits_int64(b) &&
                          n < static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) /
                                  (b.get_ui() + 1) - 1 &&
                          abs(a) < BigInt(1) << 62;
  if (!word_sized) return PadicNum::from_rational(rising_exact(x, n), ctx);

  const auto prod = kernels::strided_product(exec, a.get_si(), b.get_si(), n, p, ctx->modulus(),
                                             kernels::FactorMode::Strip);
  if (prod.zero) return PadicNum::zero(ctx);
  PadicNum value = PadicNum::from_parts(ctx, prod.valuation, prod.negative ? -prod.unit : prod.unit,
                                        ctx->precision());
  // divide by b^n
  const PadicNum den = PadicNum::from_integer(b, ctx).pow(static_cast<long>(n));
  return value / den;
}

bool check_gamma_factorization(const Rational& x, std::uint64_t n, const ContextPtr& ctx) {
  const PochValue split = p_factor_split(x, n, ctx->prime());
  const PadicNum lhs = PadicNum::from_rational(split.exact, ctx);
  const PadicNum fp = PadicNum::from_rational(split.p_part, ctx);
  const PadicNum sign = PadicNum::from_integer(n % 2 == 0 ? 1 : -1, ctx);
  const Rational shifted = x + Rational(static_cast<unsigned long>(n));
  const PadicNum rhs = sign * fp * gamma_rational(shifted, ctx) / gamma_rational(x, ctx);
  return sides_agree({lhs, rhs});
}

bool sides_agree(const IdentitySides& sides) {
  const PadicNum& lhs = sides.lhs;
  const PadicNum& rhs = sides.rhs;
  if (lhs.is_zero() || rhs.is_zero()) return lhs.is_zero() && rhs.is_zero();
  if (lhs.valuation() != rhs.valuation()) return false;
  const auto& ctx = lhs.context();
  return congruent_mod(lhs / rhs, PadicNum::one(ctx),
                       std::min(lhs.relative_precision(), rhs.relative_precision()));
}

IdentitySides ratio_identity_sides(RatioIdentity id, std::uint64_t p, long r,
                                   const ContextPtr& ctx, std::uint64_t desk_cap) {
  if (p % 4 != 3) throw DomainError("ratio identities need p = 3 (mod 4)");
  if (r <= 1 || r % 2 == 0) throw DomainError("ratio identities need odd r > 1");
  if (ctx->prime() != p) throw ContextMismatch("context prime differs from p");
  const std::uint64_t pr = checked_power(p, r, desk_cap);
  const std::uint64_t pr1 = pr / p;
  const std::uint64_t pr2 = pr1 / p;
  const Rational Pr(static_cast<unsigned long>(pr));
  const Rational Pr1(static_cast<unsigned long>(pr1));
  const Rational Pr2(static_cast<unsigned long>(pr2));

  Rational base;
  std::uint64_t upper = 0;
  std::uint64_t lower = 0;
  long shift = 0;
  std::uint64_t sign_exponent = 0;
  std::vector<Rational> gamma_num;
  std::vector<Rational> gamma_den;
  std::vector<Rational> factors;

  switch (id) {
    case RatioIdentity::QuarterHalfLength:
      base = q(1, 4);
      upper = (pr - 3) / 2;
      lower = (pr2 - 3) / 2;
      shift = static_cast<long>((pr1 + pr2) / 2);
      sign_exponent = (pr + pr1 - 4) / 2;
      gamma_num = {Pr / 2 - q(5, 4), Pr1 / 2 + q(1, 4)};
      gamma_den = {q(1, 4), q(3, 4)};
      factors = {Pr2 / 2 - q(5, 4), Pr2 / 2 - q(1, 4)};
      break;
    case RatioIdentity::OneQuarterLength:
      base = 1;
      upper = (pr - 3) / 4;
      lower = (pr2 - 3) / 4;
      shift = static_cast<long>((pr1 + pr2 - 4) / 4);
      sign_exponent = (pr + pr1 - 4) / 4;
      gamma_num = {(Pr + 1) / 4, (Pr1 + 3) / 4};
      break;
    case RatioIdentity::QuarterQuarterLength:
    case RatioIdentity::QuarterQuarterLengthVariant:
      base = q(1, 4);
      upper = (pr - 3) / 4;
      lower = (pr2 - 3) / 4;
      shift = static_cast<long>((pr1 + pr2) / 4);
      sign_exponent = (pr + pr1 - 4) / 4;
      gamma_num = {Pr / 4 - q(1, 2),
                   id == RatioIdentity::QuarterQuarterLength ? Pr1 / 4 + q(1, 2)
                                                             : Pr1 / 2 + q(1, 2)};
      gamma_den = {q(1, 4), q(3, 4)};
      factors = {Pr2 / 4 - q(1, 2)};
      break;
    case RatioIdentity::HalfQuarterLength:
      base = q(1, 2);
      upper = (pr - 3) / 4;
      lower = (pr2 - 3) / 4;
      shift = static_cast<long>((pr1 + pr2) / 4);
      sign_exponent = (pr + pr1 - 4) / 4;
      gamma_num = {Pr / 4 - q(1, 4), Pr1 / 4 + q(1, 4)};
      gamma_den = {q(1, 2), q(1, 2)};
      factors = {Pr2 / 4 - q(1, 4)};
      break;
  }

  const PadicNum lhs = rising_padic(base, upper, ctx) / rising_padic(base, lower, ctx);
  PadicNum rhs = PadicNum::from_integer(sign_exponent % 2 == 0 ? 1 : -1, ctx).shifted(shift);
  for (const auto& x : gamma_num) rhs = rhs * gamma_rational(x, ctx);
  for (const auto& x : gamma_den) rhs = rhs / gamma_rational(x, ctx);
  for (const auto& x : factors) rhs = rhs * PadicNum::from_rational(x, ctx);
  return {lhs, rhs};
}

bool check_ratio_identity(RatioIdentity id, std::uint64_t p, long r, const ContextPtr& ctx,
                          std::uint64_t desk_cap) {
  return sides_agree(ratio_identity_sides(id, p, r, ctx, desk_cap));
}

std::pair<Rational, Rational> product_identity(std::uint64_t m) {
  Rational prod = 1;
  for (std::uint64_t k = 1; k <= m; ++k) {
    const long kk = static_cast<long>(k);
    prod *= q(4 * kk - 2, 4 * kk - 3);
  }
  return {prod, rising_exact(q(1, 2), m) / rising_exact(q(1, 4), m)};
}

}  // namespace supercong
