#include "supercong/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <vector>

namespace supercong::kernels {

namespace {

// Residues below 2^62 stay in machine words; anything larger falls back to GMP.
struct WordRing {
  using T = std::uint64_t;
  std::uint64_t m;

  T one() const { return 1; }
  T zero() const { return 0; }
  T mul(T a, T b) const { return static_cast<T>(static_cast<unsigned __int128>(a) * b % m); }
  T add(T a, T b) const {
    const T s = a + b;
    return s >= m ? s - m : s;
  }
  T from(std::uint64_t x) const { return x % m; }
  T inv(T a) const {
    __int128 r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      const __int128 q = r0 / r1;
      __int128 t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    if (r0 != 1) throw DomainError("residue not invertible");
    if (s0 < 0) s0 += m;
    return static_cast<T>(s0);
  }
  BigInt big(T a) const { return BigInt(static_cast<unsigned long>(a)); }
};

struct BigRing {
  using T = BigInt;
  BigInt m;

  T one() const { return 1; }
  T zero() const { return 0; }
  T mul(const T& a, const T& b) const {
    T r = a * b;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  T add(const T& a, const T& b) const {
    T r = a + b;
    if (r >= m) r -= m;
    return r;
  }
  T from(std::uint64_t x) const {
    T r = static_cast<unsigned long>(x);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  T inv(const T& a) const {
    T r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
      throw DomainError("residue not invertible");
    }
    return r;
  }
  BigInt big(const T& a) const { return a; }
};

template <class Fn>
decltype(auto) with_ring(const BigInt& modulus, Fn&& fn) {
  if (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= 62) {
    return fn(WordRing{modulus.get_ui()});
  }
  return fn(BigRing{modulus});
}

inline int strip(std::uint64_t& x, std::uint64_t p) {
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

template <class T>
struct Partial {
  T unit;
  long valuation = 0;
  bool negative = false;
  bool zero = false;
};

template <class Ring>
Partial<typename Ring::T> strided_range(const Ring& ring, std::int64_t start, std::int64_t step,
                                        std::uint64_t begin, std::uint64_t end, std::uint64_t p,
                                        FactorMode mode) {
  Partial<typename Ring::T> out{ring.one()};
  for (std::uint64_t j = begin; j < end; ++j) {
    const __int128 f = static_cast<__int128>(start) + static_cast<__int128>(j) * step;
    if (f == 0) {
      out.zero = true;
      continue;
    }
    std::uint64_t a = static_cast<std::uint64_t>(f < 0 ? -f : f);
    if (a % p == 0) {
      if (mode == FactorMode::Skip) continue;
      out.valuation += strip(a, p);
    }
    if (f < 0) out.negative = !out.negative;
    out.unit = ring.mul(out.unit, ring.from(a));
  }
  return out;
}

template <class Ring>
StridedProduct finish(const Ring& ring, const Partial<typename Ring::T>& part) {
  StridedProduct r;
  r.unit = ring.big(part.unit);
  r.valuation = part.valuation;
  r.negative = part.negative;
  r.zero = part.zero;
  return r;
}

void check_range(std::int64_t start, std::int64_t step, std::uint64_t count) {
  const __int128 last = static_cast<__int128>(start) + static_cast<__int128>(count) * step;
  if (count > static_cast<std::uint64_t>(INT64_MAX) || last > INT64_MAX || last < -INT64_MAX) {
    throw DomainError("strided product range exceeds 64-bit factors");
  }
}

// Chunk count for the parallel kernels: several chunks per thread, and never
// a single chunk once the range is non-trivial, so the combine step always runs.
std::uint64_t chunk_count(std::uint64_t work) {
  const std::uint64_t threads = static_cast<std::uint64_t>(max_threads());
  std::uint64_t chunks = std::max<std::uint64_t>(8, threads * 4);
  return std::max<std::uint64_t>(1, std::min(chunks, work / 16));
}

// Ratio t_{n+1}/t_n of the Ramanujan summand, p stripped from every factor:
// (8n+9)(4n+1)^4 / ((8n+1) 4^4 (n+1)^4).
template <class Ring>
struct StepFactor {
  typename Ring::T num, den;
  long dv;
};

template <class Ring>
StepFactor<Ring> summand_step(const Ring& ring, std::uint64_t n, std::uint64_t p) {
  std::uint64_t a1 = 8 * n + 9, a2 = 4 * n + 1, d1 = 8 * n + 1, d2 = n + 1;
  long dv = strip(a1, p) + 4L * strip(a2, p) - strip(d1, p) - 4L * strip(d2, p);
  auto pow4 = [&](typename Ring::T x) {
    auto sq = ring.mul(x, x);
    return ring.mul(sq, sq);
  };
  return {ring.mul(ring.from(a1), pow4(ring.from(a2))),
          ring.mul(ring.from(d1), pow4(ring.mul(ring.from(4), ring.from(d2)))), dv};
}

template <class Ring>
std::vector<typename Ring::T> p_powers(const Ring& ring, std::uint64_t p, int precision) {
  std::vector<typename Ring::T> pw(static_cast<std::size_t>(precision));
  pw[0] = ring.one();
  for (int i = 1; i < precision; ++i) pw[i] = ring.mul(pw[i - 1], ring.from(p));
  return pw;
}

template <class Ring>
struct SumState {
  long v = 0;
  typename Ring::T num, den;
};

BigInt modulus_of(std::uint64_t p, int precision) {
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), p, static_cast<unsigned long>(precision));
  return m;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

StridedProduct strided_product_serial(std::int64_t start, std::int64_t step, std::uint64_t count,
                                      std::uint64_t p, const BigInt& modulus, FactorMode mode) {
  check_range(start, step, count);
  return with_ring(modulus, [&](const auto& ring) {
    return finish(ring, strided_range(ring, start, step, 0, count, p, mode));
  });
}

StridedProduct strided_product_parallel(std::int64_t start, std::int64_t step,
                                        std::uint64_t count, std::uint64_t p,
                                        const BigInt& modulus, FactorMode mode) {
  check_range(start, step, count);
  return with_ring(modulus, [&](const auto& ring) {
    using Ring = std::decay_t<decltype(ring)>;
    const std::uint64_t chunks = chunk_count(count);
    std::vector<Partial<typename Ring::T>> parts(chunks);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
      const std::uint64_t lo = count * static_cast<std::uint64_t>(c) / chunks;
      const std::uint64_t hi = count * static_cast<std::uint64_t>(c + 1) / chunks;
      parts[static_cast<std::size_t>(c)] = strided_range(ring, start, step, lo, hi, p, mode);
    }
    Partial<typename Ring::T> total{ring.one()};
    for (const auto& part : parts) {
      total.unit = ring.mul(total.unit, part.unit);
      total.valuation += part.valuation;
      total.negative = total.negative != part.negative;
      total.zero = total.zero || part.zero;
    }
    return finish(ring, total);
  });
}

BigInt ramanujan_sum_serial(std::uint64_t m, std::uint64_t p, int precision) {
  return with_ring(modulus_of(p, precision), [&](const auto& ring) {
    using Ring = std::decay_t<decltype(ring)>;
    const auto pw = p_powers(ring, p, precision);
    SumState<Ring> s{0, ring.one(), ring.one()};
    auto acc = ring.zero();
    for (std::uint64_t n = 0;; ++n) {
      if (s.v < precision) acc = ring.add(acc, ring.mul(pw[s.v], s.num));
      if (n == m) break;
      const auto f = summand_step(ring, n, p);
      s.v += f.dv;
      if (s.v < 0) {
        throw DomainError("summand with negative valuation at n = " + std::to_string(n + 1));
      }
      s.num = ring.mul(s.num, f.num);
      s.den = ring.mul(s.den, f.den);
      acc = ring.mul(acc, f.den);
    }
    return ring.big(ring.mul(acc, ring.inv(s.den)));
  });
}

BigInt ramanujan_sum_parallel(std::uint64_t m, std::uint64_t p, int precision) {
  return with_ring(modulus_of(p, precision), [&](const auto& ring) {
    using Ring = std::decay_t<decltype(ring)>;
    using T = typename Ring::T;
    const auto pw = p_powers(ring, p, precision);
    const std::uint64_t terms = m + 1;
    const std::uint64_t blocks = chunk_count(terms);
    auto lo_of = [&](std::uint64_t b) { return terms * b / blocks; };

    // Pass 1: ratio product over each block's steps.
    std::vector<StepFactor<Ring>> block_step(blocks, StepFactor<Ring>{ring.one(), ring.one(), 0});
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      auto& out = block_step[static_cast<std::size_t>(b)];
      const std::uint64_t hi = std::min(lo_of(b + 1), m);
      for (std::uint64_t n = lo_of(b); n < hi; ++n) {
        const auto f = summand_step(ring, n, p);
        out.num = ring.mul(out.num, f.num);
        out.den = ring.mul(out.den, f.den);
        out.dv += f.dv;
      }
    }

    // Exclusive scan: recurrence state at each block start.
    std::vector<SumState<Ring>> start(blocks);
    start[0] = SumState<Ring>{0, ring.one(), ring.one()};
    for (std::uint64_t b = 1; b < blocks; ++b) {
      const auto& prev = start[b - 1];
      const auto& f = block_step[b - 1];
      start[b] = SumState<Ring>{prev.v + f.dv, ring.mul(prev.num, f.num),
                                ring.mul(prev.den, f.den)};
    }

    // Pass 2: block partial sums, each normalised by its own final denominator.
    std::vector<T> block_sum(blocks, ring.zero());
    std::atomic<bool> negative{false};
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      SumState<Ring> s = start[static_cast<std::size_t>(b)];
      T acc = ring.zero();
      const std::uint64_t hi = lo_of(b + 1);
      for (std::uint64_t n = lo_of(b); n < hi; ++n) {
        if (s.v < 0) negative = true;
        if (s.v >= 0 && s.v < precision) acc = ring.add(acc, ring.mul(pw[s.v], s.num));
        if (n == m) break;
        const auto f = summand_step(ring, n, p);
        s.v += f.dv;
        s.num = ring.mul(s.num, f.num);
        s.den = ring.mul(s.den, f.den);
        acc = ring.mul(acc, f.den);
      }
      block_sum[static_cast<std::size_t>(b)] = ring.mul(acc, ring.inv(s.den));
    }
    if (negative) throw DomainError("summand with negative valuation");

    T total = ring.zero();
    for (const auto& x : block_sum) total = ring.add(total, x);
    return ring.big(total);
  });
}

}  // namespace supercong::kernels
