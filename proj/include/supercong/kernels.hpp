#pragma once

// Modular product and summation kernels. Every kernel has a serial reference
// and an OpenMP version; both return bit-identical results (the arithmetic is
// exact, so the reduction order does not matter).

#include <cstdint>

#include "supercong/padic.hpp"

namespace supercong {

enum class Execution { Serial, Parallel };

namespace kernels {

enum class FactorMode {
  Skip,   // drop factors divisible by p (Morita gamma product)
  Strip,  // divide p out of every factor and count it (Pochhammer p-split)
};

struct StridedProduct {
  BigInt unit = 1;     // product of |factor| with p removed or skipped, mod modulus
  long valuation = 0;  // total p-adic valuation removed (Strip mode)
  bool negative = false;
  bool zero = false;  // some factor was exactly 0
};

/// prod_{j=0}^{count-1} (start + j*step). start + count*step must fit in int64.
StridedProduct strided_product_serial(std::int64_t start, std::int64_t step, std::uint64_t count,
                                      std::uint64_t p, const BigInt& modulus, FactorMode mode);
StridedProduct strided_product_parallel(std::int64_t start, std::int64_t step,
                                        std::uint64_t count, std::uint64_t p,
                                        const BigInt& modulus, FactorMode mode);

inline StridedProduct strided_product(Execution exec, std::int64_t start, std::int64_t step,
                                      std::uint64_t count, std::uint64_t p,
                                      const BigInt& modulus, FactorMode mode) {
  return exec == Execution::Serial
             ? strided_product_serial(start, step, count, p, modulus, mode)
             : strided_product_parallel(start, step, count, p, modulus, mode);
}

/// S(m) = sum_{n<=m} (8n+1)(1/4)_n^4/(1)_n^4 modulo p^precision, via the term
/// recurrence with p stripped from every integer factor. Throws DomainError if
/// a term ever has negative valuation.
BigInt ramanujan_sum_serial(std::uint64_t m, std::uint64_t p, int precision);
/// Blocked two-pass scan: block ratio products, exclusive scan, block sums.
BigInt ramanujan_sum_parallel(std::uint64_t m, std::uint64_t p, int precision);

inline BigInt ramanujan_sum(Execution exec, std::uint64_t m, std::uint64_t p, int precision) {
  return exec == Execution::Serial ? ramanujan_sum_serial(m, p, precision)
                                   : ramanujan_sum_parallel(m, p, precision);
}

int max_threads();

}  // namespace kernels
}  // namespace supercong
