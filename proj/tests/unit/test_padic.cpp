#include <doctest.h>

#include <random>

#include "supercong/padic.hpp"

using namespace supercong;

TEST_SUITE("padic") {

TEST_CASE("valuation of rationals") {
  CHECK(valuation(Rational(9, 2), 3) == 2);
  CHECK(valuation(Rational(0), 7) == kInfinite);
  CHECK(valuation(Rational(1, 4), 3) == 0);
  CHECK(valuation(Rational(5, 27), 3) == -3);
  CHECK(valuation(BigInt(250), 5) == 3);
}

TEST_CASE("primality and checked powers") {
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(1'000'000'007));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));
  CHECK(checked_power(3, 5, 1000) == 243);
  CHECK_THROWS_AS(checked_power(3, 7, 1000), CapExceeded);
}

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("1/4") == Rational(1, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(make_context(2, 3), DomainError);
  CHECK_THROWS_AS(make_context(9, 3), DomainError);
  CHECK_THROWS_AS(make_context(3, 0), DomainError);
  const auto ctx = make_context(3, 4);
  CHECK(ctx->modulus() == 81);
  CHECK(ctx->power(2) == 9);
}

TEST_CASE("from_rational gives valuation and unit") {
  const auto a = PadicNum::from_rational(Rational(1, 4), make_context(3, 4));
  CHECK(a.valuation() == 0);
  CHECK(a.unit() == 61);
  const auto b = PadicNum::from_rational(Rational(9, 2), make_context(3, 2));
  CHECK(b.valuation() == 2);
  CHECK(b.unit() == 5);
  CHECK(PadicNum::from_rational(0, make_context(5, 3)).is_zero());
}

TEST_CASE("arithmetic") {
  const auto ctx = make_context(3, 2);
  SUBCASE("cancellation to exact zero") {
    const auto one = PadicNum::from_parts(ctx, 0, 1, 2);
    const auto minus_one = PadicNum::from_parts(ctx, 0, 8, 2);
    const auto sum = one + minus_one;
    CHECK(sum.is_zero());
  }
  SUBCASE("product adds valuations") {
    const auto x = PadicNum::from_parts(ctx, 1, 2, 2);
    const auto y = PadicNum::from_parts(ctx, 2, 5, 2);
    const auto z = x * y;
    CHECK(z.valuation() == 3);
    CHECK(z.unit() == 1);
  }
  SUBCASE("inverse matches from_rational") {
    const auto c4 = make_context(3, 4);
    const auto inv4 = PadicNum::from_rational(4, c4).inverse();
    CHECK(inv4.valuation() == 0);
    CHECK(inv4.unit() == 61);
  }
  SUBCASE("division by zero") {
    CHECK_THROWS_AS(PadicNum::one(ctx) / PadicNum::zero(ctx), DomainError);
  }
  SUBCASE("contexts do not mix") {
    CHECK_THROWS_AS(PadicNum::one(ctx) + PadicNum::one(make_context(5, 2)), ContextMismatch);
  }
}

TEST_CASE("cancellation keeps only known digits") {
  const auto ctx = make_context(5, 3);
  const auto a = PadicNum::from_rational(Rational(1, 3), ctx);
  const auto b = a + PadicNum::from_integer(125, ctx);
  const auto d = b - a;
  // The difference 125 is below the known precision and reads as zero.
  CHECK(d.is_zero());
  CHECK(d.absolute_precision() == 3);
  CHECK(difference_valuation(a, b) == 3);
}

TEST_CASE("congruent_mod") {
  const auto ctx = make_context(3, 4);
  const auto one = PadicNum::one(ctx);
  CHECK(congruent_mod(one, one, 4));
  CHECK(congruent_mod(one, PadicNum::from_integer(1 + 27, ctx), 3));
  CHECK_FALSE(congruent_mod(one, PadicNum::from_integer(1 + 9, ctx), 3));
  CHECK_THROWS_AS(congruent_mod(one, one, 5), PrecisionError);
}

TEST_CASE("residue and rendering") {
  const auto ctx = make_context(3, 6);
  const auto x = PadicNum::from_rational(Rational(54), ctx);
  CHECK(x.to_string() == "3^3 * 2");
  CHECK(x.residue(4) == 54);
  CHECK(x.to_string_mod(3) == "0");
  CHECK(x.to_string_mod(4) == "3^3 * 2");
  CHECK(PadicNum::from_integer(7, ctx).to_string() == "7");
  CHECK_THROWS_AS(PadicNum::from_rational(Rational(1, 3), ctx).residue(2), DomainError);
}

TEST_CASE("with_context caps relative precision") {
  const auto big = make_context(7, 6);
  const auto small = make_context(7, 2);
  const auto x = PadicNum::from_rational(Rational(1, 4), big).with_context(small);
  CHECK(x.relative_precision() == 2);
  CHECK(x.residue(2) == PadicNum::from_rational(Rational(1, 4), small).residue(2));
  CHECK_THROWS_AS(x.with_context(make_context(5, 2)), ContextMismatch);
}

TEST_CASE("ring operations agree with exact rationals") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 400);
  for (std::uint64_t p : {3, 7, 11}) {
    const auto ctx = make_context(p, 8);
    for (int i = 0; i < 200; ++i) {
      const Rational a(num(rng), den(rng));
      const Rational b(num(rng), den(rng));
      Rational qa = a, qb = b;
      qa.canonicalize();
      qb.canonicalize();
      const auto pa = PadicNum::from_rational(qa, ctx);
      const auto pb = PadicNum::from_rational(qb, ctx);
      const auto check_equal = [&](const PadicNum& got, const Rational& want) {
        const auto exact = PadicNum::from_rational(want, ctx);
        const long t = std::min(got.absolute_precision(), exact.absolute_precision());
        if (t == kInfinite) {
          CHECK(got.is_zero());
          return;
        }
        CHECK(difference_valuation(got, exact) >= t);
      };
      check_equal(pa + pb, qa + qb);
      check_equal(pa - pb, qa - qb);
      check_equal(pa * pb, qa * qb);
      if (qb != 0) check_equal(pa / pb, qa / qb);
    }
  }
}

}  // TEST_SUITE
