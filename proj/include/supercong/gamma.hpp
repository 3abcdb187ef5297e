#pragma once

#include <cstdint>

#include "supercong/kernels.hpp"
#include "supercong/padic.hpp"

namespace supercong {

/// Morita's Gamma_p(n) = (-1)^n prod_{0<j<n, p does not divide j} j, exact mod p^M.
PadicNum gamma_int(const BigInt& n, const ContextPtr& ctx, Execution exec = Execution::Parallel);

/// Gamma_p(x) for rational x in Z_p, evaluated at the representative
/// n* in [1, p^M] with n* = x (mod p^M). Results are memoized.
PadicNum gamma_rational(const Rational& x, const ContextPtr& ctx,
                        Execution exec = Execution::Parallel);

/// The integer in [1, p^M] congruent to x modulo p^M.
BigInt representative(const Rational& x, const PadicContext& ctx);

/// a_0(x) in {1, ..., p} with a_0(x) = x (mod p).
std::uint64_t a0(const Rational& x, std::uint64_t p);

/// Gamma_p(x) Gamma_p(1-x) = (-1)^{a_0(x)} to full precision.
bool check_reflection(const Rational& x, const ContextPtr& ctx);

/// Gamma_p(x+1)/Gamma_p(x) = -x if x is a unit, -1 otherwise.
bool check_ratio(const Rational& x, const ContextPtr& ctx);

/// Drops every memoized gamma value (benchmarks and tests).
void clear_gamma_cache();
std::size_t gamma_cache_size();

}  // namespace supercong
