#include <doctest.h>

#include <random>

#include "supercong/gamma.hpp"

using namespace supercong;

namespace {

BigInt gamma_residue(const Rational& x, std::uint64_t p, int M,
                     Execution exec = Execution::Parallel) {
  const auto ctx = make_context(p, M);
  return gamma_rational(x, ctx, exec).residue(M);
}

}  // namespace

TEST_SUITE("gamma") {

TEST_CASE("gamma at integers") {
  const auto c3 = make_context(3, 4);
  CHECK(gamma_int(1, c3).residue(4) == 80);           // -1
  CHECK(gamma_int(0, make_context(7, 3)).residue(3) == 1);
  CHECK(gamma_int(5, c3).residue(4) == 81 - 8);       // -(1*2*4)
  CHECK(gamma_int(2, c3).residue(4) == 1);
}

TEST_CASE("gamma at rationals, brute-force oracle values") {
  CHECK(gamma_residue(Rational(1, 2), 3, 2) == 1);
  CHECK(gamma_residue(Rational(1, 4), 3, 4) == 41);
  CHECK(gamma_residue(Rational(3, 4), 3, 4) == 79);
  CHECK(gamma_residue(Rational(1, 2), 5, 3) == 68);
  CHECK(gamma_residue(Rational(1, 4), 5, 3) == 21);
  CHECK(gamma_residue(Rational(3, 4), 5, 3) == 6);
  CHECK(gamma_residue(Rational(1, 2), 7, 3) == 342);
  CHECK(gamma_residue(Rational(3, 4), 7, 3) == 92);
  for (std::uint64_t p : {3, 5, 7, 11}) CHECK(gamma_residue(1, p, 3) == BigInt(p * p * p - 1));
}

TEST_CASE("gamma outside Z_p is rejected") {
  CHECK_THROWS_AS(gamma_rational(Rational(1, 3), make_context(3, 2)), DomainError);
}

TEST_CASE("representative and a0") {
  const auto ctx = make_context(3, 2);
  CHECK(representative(Rational(1, 2), *ctx) == 5);
  CHECK(representative(Rational(9), *ctx) == 9);
  CHECK(representative(Rational(0), *ctx) == 9);
  CHECK(a0(Rational(1, 2), 3) == 2);
  CHECK(a0(Rational(1, 4), 3) == 1);
  CHECK(a0(Rational(3), 3) == 3);
  CHECK(a0(Rational(1, 2), 5) == 3);
}

TEST_CASE("reflection and ratio formulas") {
  CHECK(check_reflection(Rational(1, 2), make_context(5, 4)));
  CHECK(check_reflection(Rational(1), make_context(7, 3)));
  CHECK(check_reflection(Rational(1, 4), make_context(3, 4)));
  CHECK(check_ratio(Rational(1, 4), make_context(3, 4)));
  CHECK(check_ratio(Rational(3), make_context(3, 4)));
  CHECK(check_ratio(Rational(0), make_context(7, 3)));
}

TEST_CASE("serial and parallel evaluation agree") {
  clear_gamma_cache();
  for (std::uint64_t p : {3, 7, 13}) {
    for (const Rational& x : {Rational(1, 4), Rational(3, 4), Rational(-5, 8), Rational(22, 7)}) {
      if (p == 7 && x == Rational(22, 7)) continue;
      const auto s = gamma_residue(x, p, 5, Execution::Serial);
      clear_gamma_cache();
      const auto q = gamma_residue(x, p, 5, Execution::Parallel);
      CHECK(s == q);
    }
  }
}

TEST_CASE("memoization") {
  clear_gamma_cache();
  CHECK(gamma_cache_size() == 0);
  const auto ctx = make_context(11, 3);
  const auto first = gamma_rational(Rational(1, 4), ctx);
  CHECK(gamma_cache_size() == 1);
  const auto second = gamma_rational(Rational(1, 4), ctx);
  CHECK(gamma_cache_size() == 1);
  CHECK(first.residue(3) == second.residue(3));
}

TEST_CASE("random arguments: reflection, ratio, continuity, stability") {
  std::mt19937_64 rng(97531);
  std::uniform_int_distribution<long> num(-400, 400);
  std::uniform_int_distribution<long> den(1, 60);
  for (std::uint64_t p : {5, 11}) {
    const auto ctx = make_context(p, 4);
    const auto wide = make_context(p, 6);
    int tested = 0;
    while (tested < 25) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      if (valuation(x, p) < 0) continue;
      ++tested;
      CHECK(check_reflection(x, ctx));
      CHECK(check_ratio(x, ctx));
      const Rational y = x + Rational(static_cast<long>(p));
      CHECK(gamma_rational(x, ctx).residue(1) == gamma_rational(y, ctx).residue(1));
      CHECK(gamma_rational(x, wide).residue(4) == gamma_rational(x, ctx).residue(4));
    }
  }
}

}  // TEST_SUITE
