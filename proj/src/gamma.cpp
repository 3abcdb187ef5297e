#include "supercong/gamma.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace supercong {

namespace {

constexpr std::uint64_t kMaxGammaWork = std::uint64_t{1} << 40;

class GammaCache {
 public:
  using Key = std::tuple<std::uint64_t, int, std::string>;

  bool find(const Key& key, BigInt& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }

  void insert(const Key& key, const BigInt& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(key, value);
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, BigInt> table_;
};

GammaCache& cache() {
  static GammaCache instance;
  return instance;
}

void require_in_zp(const Rational& x, std::uint64_t p) {
  if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), p)) {
    throw DomainError(to_string(x) + " is not in Z_" + std::to_string(p));
  }
}

}  // namespace

PadicNum gamma_int(const BigInt& n, const ContextPtr& ctx, Execution exec) {
  if (n < 0) throw DomainError("gamma_int needs n >= 0");
  if (n == 0) return PadicNum::one(ctx);
  const BigInt& mod = ctx->modulus();
  BigInt periods, rest;
  mpz_fdiv_qr(periods.get_mpz_t(), rest.get_mpz_t(), n.get_mpz_t(), mod.get_mpz_t());
  if (rest > kMaxGammaWork) {
    throw DomainError("Gamma_p evaluation needs more than 2^40 multiplications");
  }
  // Each complete period of p^M contributes the product of all units, -1.
  const std::uint64_t count = rest == 0 ? 0 : rest.get_ui() - 1;
  BigInt product =
      kernels::strided_product(exec, 1, 1, count, ctx->prime(), mod, kernels::FactorMode::Skip)
          .unit;
  // (-1)^periods from the complete periods, (-1)^n from the definition.
  const bool flip = mpz_odd_p(periods.get_mpz_t()) != mpz_odd_p(n.get_mpz_t());
  if (flip) product = mod - product;
  return PadicNum::from_parts(ctx, 0, product, ctx->precision());
}

BigInt representative(const Rational& x, const PadicContext& ctx) {
  require_in_zp(x, ctx.prime());
  const BigInt& mod = ctx.modulus();
  BigInt inv;
  BigInt den = x.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  BigInt r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  if (r == 0) r = mod;
  return r;
}

PadicNum gamma_rational(const Rational& x, const ContextPtr& ctx, Execution exec) {
  const BigInt n = representative(x, *ctx);
  const GammaCache::Key key{ctx->prime(), ctx->precision(), n.get_str()};
  BigInt unit;
  if (cache().find(key, unit)) return PadicNum::from_parts(ctx, 0, unit, ctx->precision());
  PadicNum value = gamma_int(n, ctx, exec);
  cache().insert(key, value.unit());
  return value;
}

std::uint64_t a0(const Rational& x, std::uint64_t p) {
  require_in_zp(x, p);
  BigInt mod = static_cast<unsigned long>(p);
  BigInt inv;
  BigInt den = x.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  BigInt r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r == 0 ? p : r.get_ui();
}

bool check_reflection(const Rational& x, const ContextPtr& ctx) {
  const PadicNum lhs = gamma_rational(x, ctx) * gamma_rational(Rational(1) - x, ctx);
  const long sign = a0(x, ctx->prime()) % 2 == 0 ? 1 : -1;
  return congruent_mod(lhs, PadicNum::from_integer(sign, ctx), ctx->precision());
}

bool check_ratio(const Rational& x, const ContextPtr& ctx) {
  const PadicNum ratio = gamma_rational(x + 1, ctx) / gamma_rational(x, ctx);
  const long v = valuation(x, ctx->prime());
  const PadicNum expected =
      v == 0 ? PadicNum::from_rational(-x, ctx) : PadicNum::from_integer(-1, ctx);
  return congruent_mod(ratio, expected, ctx->precision());
}

void clear_gamma_cache() { cache().clear(); }

std::size_t gamma_cache_size() { return cache().size(); }

}  // namespace supercong
