#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhyper/torus.hpp"
#include "qhyper/uzeta.hpp"

using namespace qhyper;

namespace {

TorusTensor d_tensor(const TorusElement& a, const TorusElement& b) { return tensor_of(a, b); }

Weight random_weight(std::mt19937_64& rng, int ell) {
  return Weight{static_cast<int>(rng() % ell), CycloNum(mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)))};
}

}  // namespace

TEST_CASE("weights: carry rule and group laws") {
  Weight a{2, CycloNum(0L)};
  CHECK(weight_add(a, a, 3) == Weight{1, CycloNum(1L)});
  for (int ell : {3, 5, 7}) {
    for (long m = 0; m <= 3 * ell; ++m)
      for (long n = 0; n <= 3 * ell; ++n)
        CHECK(weight_add(integral_weight(m, ell), integral_weight(n, ell), ell) == integral_weight(m + n, ell));
    std::mt19937_64 rng(ell);
    for (int t = 0; t < 30; ++t) {
      Weight x = random_weight(rng, ell), y = random_weight(rng, ell), z = random_weight(rng, ell);
      CHECK(weight_add(x, y, ell) == weight_add(y, x, ell));
      CHECK(weight_add(weight_add(x, y, ell), z, ell) == weight_add(x, weight_add(y, z, ell), ell));
      CHECK(weight_add(x, Weight{0, CycloNum(0L)}, ell) == x);
      CHECK(weight_add(x, weight_neg(x, ell), ell) == Weight{0, CycloNum(0L)});
    }
  }
  CHECK(integral_weight(-1, 5) == Weight{4, CycloNum(-1L)});
}

TEST_CASE("coproduct: group-likes, idempotents, counit, coassociativity") {
  for (int ell : {3, 5}) {
    const CycloField& f = CycloField::get(ell);
    TorusElement K = TorusElement::K_pow(f, 1), one = TorusElement::scalar(f, CycloNum(1L)), dl = TorusElement::delta(f);
    CHECK(coproduct(K) == d_tensor(K, K));
    CHECK(coproduct(one) == d_tensor(one, one));
    for (int m = 0; m < ell; ++m) {
      TorusTensor expect;
      for (int i = 0; i < ell; ++i)
        expect = tensor_add(expect, d_tensor(TorusElement::idempotent(f, i), TorusElement::idempotent(f, m - i)));
      CHECK(coproduct(TorusElement::idempotent(f, m)) == expect);
    }
    for (const TorusElement& x : {dl, dl * dl * K, dl * TorusElement::K_pow(f, 2) + K}) {
      TorusTensor dx = coproduct(x);
      CHECK(coproduct_at(dx, 0, f, 6) == coproduct_at(dx, 1, f, 6));
      CHECK(counit_at(dx, 0) == x.as_tensor());
      CHECK(counit_at(dx, 1) == x.as_tensor());
    }
    CHECK(counit(dl).is_zero());
    CHECK(counit(K).is_one());
  }
  const CycloField& f3 = CycloField::get(3);
  TorusElement big(f3, 6);
  big.add(0, 4, CycloNum(1L));
  CHECK_THROWS_AS(coproduct(big * big), TorusError);
}

TEST_CASE("primitive element d") {
  for (int ell : {3, 5, 7}) {
    const CycloField& f = CycloField::get(ell);
    TorusElement d = primitive_d(f);
    TorusElement one = TorusElement::scalar(f, CycloNum(1L));
    CHECK(coproduct(d) == tensor_add(d_tensor(d, one), d_tensor(one, d)));
    CHECK(counit(d).is_zero());
    // delta alone is not primitive
    TorusElement dl = TorusElement::delta(f);
    CHECK_FALSE(coproduct(dl) == tensor_add(d_tensor(dl, one), d_tensor(one, dl)));
  }
  const CycloField& f = CycloField::get(3);
  TorusElement expect = TorusElement::delta(f) + TorusElement::idempotent(f, 1).scaled(CycloNum(mpq_class(1, 3))) +
                        TorusElement::idempotent(f, 2).scaled(CycloNum(mpq_class(2, 3)));
  CHECK(primitive_d(f) == expect);
}

TEST_CASE("characters: evaluation and convolution") {
  for (int ell : {3, 5}) {
    const CycloField& f = CycloField::get(ell);
    std::mt19937_64 rng(17 + ell);
    for (int t = 0; t < 50; ++t) {
      Weight a = random_weight(rng, ell), b = random_weight(rng, ell);
      CHECK(char_eval(a, TorusElement::K_pow(f, 1)) == CycloNum::zeta_pow(f, a.r));
      CHECK(char_eval(a, TorusElement::delta(f)) == a.alpha);
      Weight s = weight_add(a, b, ell);
      for (int i = 0; i < ell; ++i)
        for (int j = 0; j <= 2; ++j) {
          TorusElement x(f);
          x.add(i, j, CycloNum(1L));
          CHECK(char_convolve(a, b, x) == char_eval(s, x));
        }
    }
  }
}

TEST_CASE("binom_K evaluates to Gaussian binomials") {
  for (int ell : {3, 5}) {
    const CycloField& f = CycloField::get(ell);
    const Uzeta& u = Uzeta::get(ell);
    for (int m = 0; m < ell; ++m) {
      TorusElement b = binom_K(f, m);
      UzetaElement tb = u.torus_binom(0, m);
      TorusElement as_torus(f);
      for (int k = 0; k < ell; ++k) as_torus.add(k, 0, tb.coeff(0, k, 0));
      CHECK(b == as_torus);
    }
    CHECK(binom_K(f, ell) == TorusElement::delta(f));
    for (long n = -ell; n <= 3 * ell; ++n)
      for (long m = 0; m <= 3 * ell; ++m) CHECK(char_eval(integral_weight(n, ell), binom_K(f, m)) == gauss_binom(f, n, m));
  }
}
