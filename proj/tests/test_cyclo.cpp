#include "doctest.h"
#include "matfac/cyclo.hpp"
#include "matfac/errors.hpp"
#include "oracles.hpp"

using namespace mfac;

TEST_SUITE("cyclo") {
  TEST_CASE("cyclotomic polynomials against hand-expanded values") {
    using V = std::vector<Integer>;
    CHECK(cyclotomic_polynomial(1) == V{-1, 1});
    CHECK(cyclotomic_polynomial(3) == V{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == V{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == V{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
    // Phi_15 = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1
    CHECK(cyclotomic_polynomial(15) == V{1, -1, 0, 1, -1, 1, 0, -1, 1});
    for (int m : {1, 2, 7, 8, 9, 15, 16, 30}) CHECK(cyclotomic_polynomial(m).size() == static_cast<std::size_t>(euler_phi(m) + 1));
  }

  TEST_CASE("zeta has exact order m") {
    for (int m : {1, 2, 3, 4, 5, 6, 8, 12, 15}) {
      CycloField k(m);
      CycloElem z = k.zeta();
      CHECK(z.pow(m).is_one());
      for (int e = 1; e < m; ++e) CHECK_FALSE(z.pow(e).is_one());
      CHECK(root_order(z) == m);
    }
  }

  TEST_CASE("sum of all m-th roots vanishes") {
    for (int m : {2, 3, 5, 8, 9}) {
      CycloField k(m);
      CycloElem s = k.zero();
      for (int e = 0; e < m; ++e) s += k.zeta_pow(e);
      CHECK(s.is_zero());
    }
  }

  TEST_CASE("inverses agree with numeric values") {
    CycloField k(7);
    CycloElem a = k.from_int(2) + k.zeta() * Rational(3, 5) - k.zeta_pow(4);
    CycloElem inv = a.inverse();
    CHECK((a * inv).is_one());
    auto num = oracle::to_complex(a) * oracle::to_complex(inv);
    CHECK(std::abs(num - 1.0) < 1e-10);
    CHECK_THROWS_AS(k.zero().inverse(), DivisionByZero);
  }

  TEST_CASE("negative powers and conjugate roots") {
    CycloField k(5);
    CHECK(k.zeta().pow(-1) == k.zeta_pow(4));
    CHECK(k.zeta().pow(-7) * k.zeta().pow(7) == k.one());
  }

  TEST_CASE("roots of unity and primitivity") {
    CycloField k(12);
    CHECK(is_primitive_root(k.root_of_unity(4), 4));
    CHECK(is_primitive_root(k.root_of_unity(4, 3), 4));
    CHECK_FALSE(is_primitive_root(k.root_of_unity(4, 2), 4));
    CHECK(root_order(k.root_of_unity(6)) == 6);
    CHECK_THROWS_AS(k.root_of_unity(5), FieldMismatch);
    CHECK(root_order(k.from_int(2)) == 0);
  }

  TEST_CASE("field mismatch is rejected") {
    CHECK_THROWS_AS(CycloField(3).zeta() + CycloField(4).zeta(), FieldMismatch);
  }

  TEST_CASE("embedding preserves arithmetic") {
    CycloField k3(3);
    CycloElem a = k3.zeta() + k3.from_int(1);
    CycloElem b = embed(a, 12);
    CHECK(b.field().conductor() == 12);
    CHECK(std::abs(oracle::to_complex(a) - oracle::to_complex(b)) < 1e-12);
    CHECK(embed(k3.zeta(), 12) == CycloField(12).zeta_pow(4));
  }

  TEST_CASE("basis strings") {
    CycloField k(3);
    CHECK(k.zero().basis_string() == "0");
    CHECK(k.from_int(1).basis_string() == "1");
    CHECK(k.zeta().is_rational() == false);
    // zeta^2 = -1 - zeta in Q(zeta_3)
    CHECK(k.zeta_pow(2) == -k.one() - k.zeta());
  }
}
