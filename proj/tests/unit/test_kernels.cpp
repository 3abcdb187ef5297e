#include <doctest.h>

#include "supercong/kernels.hpp"

using namespace supercong;
using kernels::FactorMode;

TEST_SUITE("kernels") {

TEST_CASE("strided product skipping multiples of p") {
  // 1 * 2 * 4, the factor 3 dropped.
  const auto r = kernels::strided_product_serial(1, 1, 4, 3, 81, FactorMode::Skip);
  CHECK(r.unit == 8);
  CHECK(r.valuation == 0);
  CHECK_FALSE(r.negative);
  CHECK_FALSE(r.zero);
}

TEST_CASE("strided product stripping p") {
  // 3 * 6 * 9 = 3^4 * 2
  const auto r = kernels::strided_product_serial(3, 3, 3, 3, 81, FactorMode::Strip);
  CHECK(r.valuation == 4);
  CHECK(r.unit == 2);
}

TEST_CASE("strided product signs and zeros") {
  // (-5)(-3) = 15, (-5)(-3)(-1) = -15
  const auto two = kernels::strided_product_serial(-5, 2, 2, 7, 49, FactorMode::Strip);
  CHECK_FALSE(two.negative);
  CHECK(two.unit == 15);
  const auto three = kernels::strided_product_serial(-5, 2, 3, 7, 49, FactorMode::Strip);
  CHECK(three.negative);
  CHECK(three.unit == 15);
  const auto z = kernels::strided_product_serial(-2, 1, 4, 5, 25, FactorMode::Strip);
  CHECK(z.zero);
}

TEST_CASE("serial and parallel kernels agree") {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    const BigInt modulus = BigInt(p) * p * p * p * p * p;
    for (std::uint64_t count : {0, 1, 17, 1000, 40000}) {
      for (auto mode : {FactorMode::Skip, FactorMode::Strip}) {
        const auto s = kernels::strided_product_serial(1, 4, count, p, modulus, mode);
        const auto q = kernels::strided_product_parallel(1, 4, count, p, modulus, mode);
        CHECK(s.unit == q.unit);
        CHECK(s.valuation == q.valuation);
        CHECK(s.negative == q.negative);
        CHECK(s.zero == q.zero);
      }
    }
    for (std::uint64_t m : {0, 1, 6, 60, 2500}) {
      CHECK(kernels::ramanujan_sum_serial(m, p, 6) == kernels::ramanujan_sum_parallel(m, p, 6));
    }
  }
}

TEST_CASE("ramanujan sum small values") {
  // S(1) = 265/256 and 265/256 = 65 (mod 125).
  CHECK(kernels::ramanujan_sum_serial(1, 5, 3) == 65);
  CHECK(kernels::ramanujan_sum_serial(0, 7, 4) == 1);
  // S(60) = 729 (mod 3^7).
  CHECK(kernels::ramanujan_sum_parallel(60, 3, 7) == 729);
}

}  // TEST_SUITE
