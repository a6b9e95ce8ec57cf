#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qhyper/cyclo.hpp"

using namespace qhyper;

namespace {

CycloNum random_num(const CycloField& f, std::mt19937_64& rng) {
  CycloNum x;
  for (int k = 0; k < f.degree(); ++k) {
    long n = static_cast<long>(rng() % 11) - 5;
    long d = static_cast<long>(rng() % 4) + 1;
    x += CycloNum(mpq_class(n, d)) * CycloNum::zeta_pow(f, k);
  }
  return x;
}

// [n] as the symmetric sum z^(n-1) + z^(n-3) + ... + z^(1-n).
CycloNum q_int_sum(const CycloField& f, long n) {
  if (n < 0) return -q_int_sum(f, -n);
  CycloNum s;
  for (long j = 0; j < n; ++j) s += CycloNum::zeta_pow(f, n - 1 - 2 * j);
  return s;
}

// Product formula prod_{s=1}^k [n-s+1]/[s], valid for k < ell.
CycloNum binom_product(const CycloField& f, long n, long k) {
  CycloNum r = CycloNum::zeta_pow(f, 0);
  for (long s = 1; s <= k; ++s) r *= q_int_sum(f, n - s + 1) / q_int_sum(f, s);
  return r;
}

}  // namespace

TEST_CASE("field: roots of unity and small identities") {
  for (int ell : {3, 5, 7, 9, 15}) {
    const CycloField& f = CycloField::get(ell);
    CycloNum z = CycloNum::zeta_pow(f, 1);
    CHECK((z * CycloNum::zeta_pow(f, ell - 1)).is_one());
    CHECK(z.pow(ell).is_one());
    for (int j = 1; j < ell; ++j) CHECK_FALSE(z.pow(j).is_one());
  }
  const CycloField& f3 = CycloField::get(3);
  CycloNum z = CycloNum::zeta_pow(f3, 1);
  CHECK(z + z * z == CycloNum(-1L));
  CHECK_THROWS_AS(CycloNum().inverse(), std::domain_error);
  CHECK_THROWS_AS(CycloField::get(4), std::invalid_argument);
  CHECK_THROWS_AS(CycloField::get(1), std::invalid_argument);
}

TEST_CASE("field: axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int ell : {3, 5, 7, 9}) {
    const CycloField& f = CycloField::get(ell);
    for (int trial = 0; trial < 40; ++trial) {
      CycloNum a = random_num(f, rng), b = random_num(f, rng), c = random_num(f, rng);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("field: canonical text form") {
  const CycloField& f = CycloField::get(3);
  CHECK(CycloNum::parse(CycloField::get(5), "1/3 - 2/3*z^2").to_string() == "1/3 - 2/3*z^2");
  // Below degree phi(3) = 2 the same text reduces: z^2 = -1 - z.
  CHECK(CycloNum::parse(f, "1/3 - 2/3*z^2").to_string() == "1 + 2/3*z");
  CHECK(CycloNum::parse(f, "z^5") == CycloNum::zeta_pow(f, 2));
  CHECK(CycloNum::parse(f, "z^2").to_string() == "-1 - z");
  CHECK(CycloNum::parse(f, "(z - z^-1)^2") == CycloNum(-3L));
  CHECK(CycloNum().to_string() == "0");
  std::mt19937_64 rng(11);
  for (int ell : {5, 7}) {
    const CycloField& g = CycloField::get(ell);
    for (int t = 0; t < 20; ++t) {
      CycloNum a = random_num(g, rng);
      CHECK(CycloNum::parse(g, a.to_string()) == a);
    }
  }
  CHECK_THROWS_AS(CycloNum::parse(f, "1 +"), std::invalid_argument);
  CHECK_THROWS_AS(CycloNum::parse(f, "y"), std::invalid_argument);
}

TEST_CASE("q-integers and q-factorials") {
  for (int ell : {3, 5, 7}) {
    const CycloField& f = CycloField::get(ell);
    CHECK(q_int(f, 1).is_one());
    CHECK(q_int(f, ell).is_zero());
    for (long n = -3 * ell; n <= 3 * ell; ++n) CHECK(q_int(f, n) == q_int_sum(f, n));
    CHECK(q_factorial(f, 0).is_one());
    CHECK(q_factorial(f, ell).is_zero());
    for (long n = 0; n < ell; ++n) CHECK_FALSE(q_factorial(f, n).is_zero());
  }
  const CycloField& f3 = CycloField::get(3);
  CHECK(q_int(f3, 2) == CycloNum(-1L));
  CHECK(q_factorial(f3, 2) == CycloNum(-1L));
}

TEST_CASE("Gaussian binomials at 2 ell") {
  for (int ell : {3, 5, 7}) {
    const CycloField& f = CycloField::get(ell);
    for (int j = 1; j < ell; ++j) CHECK(gauss_binom(f, 2 * ell, j).is_zero());
    CHECK(gauss_binom(f, 2 * ell, ell) == CycloNum(2L));
    CHECK(gauss_binom(f, 17, 0).is_one());
    for (int j = 1; j < ell; ++j) CHECK(gauss_binom(f, ell, j).is_zero());
  }
}

TEST_CASE("Gaussian binomials: q-Lucas, symmetry, product formula") {
  for (int ell : {3, 5, 7}) {
    const CycloField& f = CycloField::get(ell);
    for (long n = 0; n < ell; ++n)
      for (long k = 0; k <= n; ++k) {
        CHECK(gauss_binom(f, n, k) == binom_product(f, n, k));
        CHECK(gauss_binom(f, n, k) == gauss_binom(f, n, n - k));
      }
    for (long m = 0; m <= 4 * ell; ++m)
      for (long n = 0; n <= 4 * ell; ++n) {
        CycloNum lucas = gauss_binom(f, m % ell, n % ell) * CycloNum(mpq_class(binom_z(m / ell, n / ell)));
        if (n % ell > m % ell) lucas = CycloNum();
        CHECK(gauss_binom(f, m, n) == lucas);
      }
    // Negative upper index agrees with the product formula below ell.
    for (long n = -3 * ell; n < 0; ++n)
      for (long k = 0; k < ell; ++k) CHECK(gauss_binom(f, n, k) == binom_product(f, n, k));
  }
}

TEST_CASE("Gaussian binomials: q-Pascal recurrence on all integers") {
  const CycloField& f = CycloField::get(5);
  for (long n = -12; n <= 12; ++n)
    for (long k = 1; k <= 12; ++k) {
      CycloNum rhs = gauss_binom(f, n - 1, k).mul_zeta_pow(-k) + gauss_binom(f, n - 1, k - 1).mul_zeta_pow(n - k);
      CHECK(gauss_binom(f, n, k) == rhs);
    }
}
