#pragma once

#include <cstdint>
#include <utility>

#include "supercong/kernels.hpp"
#include "supercong/padic.hpp"

namespace supercong {

inline constexpr std::uint64_t kDefaultDeskCap = 10'000'000;

/// (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
Rational rising_exact(const Rational& x, std::uint64_t n);

/// A rising factorial split into the factors with positive p-adic valuation
/// (f_p[(x)_n]) and the rest.
struct PochValue {
  Rational base;
  std::uint64_t length = 0;
  Rational exact;
  Rational p_part;
  Rational unit_part;
};

PochValue p_factor_split(const Rational& x, std::uint64_t n, std::uint64_t p);

/// nu_p((x)_n). Negative n uses the gamma extension (x)_n = 1/prod_{j=1}^{-n}(x-j).
/// Returns kInfinite when (x)_n = 0; throws DomainError at a pole.
long poch_valuation(const Rational& x, long n, std::uint64_t p);

/// (x)_n as an exact p-adic value (full relative precision) in O(n) word
/// operations.
PadicNum rising_padic(const Rational& x, std::uint64_t n, const ContextPtr& ctx,
                      Execution exec = Execution::Parallel);

/// (x)_n = (-1)^n f_p[(x)_n] Gamma_p(x+n)/Gamma_p(x), compared as a ratio
/// to 1 modulo p^M.
bool check_gamma_factorization(const Rational& x, std::uint64_t n, const ContextPtr& ctx);

/// Pochhammer ratio identities for p = 3 (mod 4) and odd r > 1. Each compares
/// an exact ratio of rising factorials with a closed form in Gamma_p obtained
/// by peeling off the p-factors twice.
enum class RatioIdentity {
  QuarterHalfLength,             // (1/4)_{(p^r-3)/2} / (1/4)_{(p^{r-2}-3)/2}
  OneQuarterLength,              // (1)_{(p^r-3)/4} / (1)_{(p^{r-2}-3)/4}
  QuarterQuarterLength,          // (1/4)_{(p^r-3)/4} / (1/4)_{(p^{r-2}-3)/4}
  QuarterQuarterLengthVariant,   // same ratio, Gamma_p(p^{r-1}/2 + 1/2) replacing
                                 // Gamma_p(p^{r-1}/4 + 1/2); does not hold
  HalfQuarterLength,             // (1/2)_{(p^r-3)/4} / (1/2)_{(p^{r-2}-3)/4}
};

struct IdentitySides {
  PadicNum lhs;
  PadicNum rhs;
};

IdentitySides ratio_identity_sides(RatioIdentity id, std::uint64_t p, long r,
                                   const ContextPtr& ctx,
                                   std::uint64_t desk_cap = kDefaultDeskCap);

/// Same valuation and lhs/rhs = 1 (mod p^M).
bool sides_agree(const IdentitySides& sides);

bool check_ratio_identity(RatioIdentity id, std::uint64_t p, long r, const ContextPtr& ctx,
                          std::uint64_t desk_cap = kDefaultDeskCap);

/// (prod_{k=1}^m (4k-2)/(4k-3), (1/2)_m / (1/4)_m).
std::pair<Rational, Rational> product_identity(std::uint64_t m);

}  // namespace supercong
