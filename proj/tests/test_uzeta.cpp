#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <tuple>

#include "qhyper/uzeta.hpp"

using namespace qhyper;

namespace {

// Independent multiplication: apply generators from the left using
// E F^a = F^a E + [a] F^(a-1) (z^(1-a) K - z^(a-1) K^-1)/(z - z^-1).
using Mono = std::tuple<int, int, int>;
using Elt = std::map<Mono, CycloNum>;

void add_to(Elt& e, Mono m, const CycloNum& c) {
  auto& slot = e[m];
  slot += c;
  if (slot.is_zero()) e.erase(m);
}

Elt left_K(const Uzeta& u, const Elt& y) {
  Elt r;
  for (const auto& [m, c] : y) {
    auto [a, b, cc] = m;
    add_to(r, {a, (b + 1) % u.ell(), cc}, c.mul_zeta_pow(u.field(), -2L * a));
  }
  return r;
}

Elt left_F(const Uzeta& u, const Elt& y) {
  Elt r;
  for (const auto& [m, c] : y) {
    auto [a, b, cc] = m;
    if (a + 1 < u.ell()) add_to(r, {a + 1, b, cc}, c);
  }
  return r;
}

Elt left_E(const Uzeta& u, const Elt& y) {
  const CycloField& f = u.field();
  int l = u.ell();
  Elt r;
  for (const auto& [m, c] : y) {
    auto [a, b, cc] = m;
    // F^a E K^b E^cc = z^(-2b) F^a K^b E^(cc+1)
    if (cc + 1 < l) add_to(r, {a, b, cc + 1}, c.mul_zeta_pow(u.field(), -2L * b));
    if (a == 0) continue;
    CycloNum s = c * q_int(f, a) * f.inv_qdiff();
    add_to(r, {a - 1, (b + 1) % l, cc}, s.mul_zeta_pow(1 - a));
    add_to(r, {a - 1, (b + l - 1) % l, cc}, -s.mul_zeta_pow(a - 1));
  }
  return r;
}

Elt oracle_product(const Uzeta& u, Mono x, const Elt& y) {
  auto [a, b, c] = x;
  Elt r = y;
  for (int i = 0; i < c; ++i) r = left_E(u, r);
  for (int i = 0; i < b; ++i) r = left_K(u, r);
  for (int i = 0; i < a; ++i) r = left_F(u, r);
  return r;
}

UzetaElement to_elem(const Uzeta& u, const Elt& e) {
  UzetaElement r = u.zero();
  for (const auto& [m, c] : e) {
    auto [a, b, cc] = m;
    r += u.monomial(a, b, cc, c);
  }
  return r;
}

UzetaElement random_elem(const Uzeta& u, std::mt19937_64& rng, int terms) {
  UzetaElement r = u.zero();
  for (int t = 0; t < terms; ++t) {
    int idx = static_cast<int>(rng() % u.dim());
    auto [a, b, c] = u.triple(idx);
    long coef = static_cast<long>(rng() % 7) - 3;
    r += u.monomial(a, b, c, CycloNum::zeta_pow(u.field(), static_cast<long>(rng() % u.ell())) * CycloNum(coef));
  }
  return r;
}

}  // namespace

TEST_CASE("u_z multiplication agrees with the generator recursion") {
  for (int ell : {3, 5}) {
    const Uzeta& u = Uzeta::get(ell);
    std::mt19937_64 rng(ell);
    int pairs = ell == 3 ? u.dim() * u.dim() : 600;
    for (int p = 0; p < pairs; ++p) {
      int i = ell == 3 ? p / u.dim() : static_cast<int>(rng() % u.dim());
      int j = ell == 3 ? p % u.dim() : static_cast<int>(rng() % u.dim());
      auto [a, b, c] = u.triple(i);
      auto [a2, b2, c2] = u.triple(j);
      Elt y{{{a2, b2, c2}, CycloNum(1L)}};
      UzetaElement expect = to_elem(u, oracle_product(u, {a, b, c}, y));
      UzetaElement got = u.monomial(a, b, c) * u.monomial(a2, b2, c2);
      CHECK(got == expect);
    }
  }
}

TEST_CASE("u_z: defining relations and unit") {
  for (int ell : {3, 5, 7}) {
    const Uzeta& u = Uzeta::get(ell);
    UzetaElement E = u.E(), F = u.F(), K = u.K(), Ki = u.K(-1);
    CHECK(commutator(E, F) == (K - Ki).scaled(u.field().inv_qdiff()));
    CHECK(K * E * Ki == E.scaled(CycloNum::zeta_pow(u.field(), 2)));
    CHECK(K * F * Ki == F.scaled(CycloNum::zeta_pow(u.field(), -2)));
    CHECK(K.pow(ell) == u.one());
    CHECK(E.pow(ell).is_zero());
    CHECK(F.pow(ell).is_zero());
    CHECK_FALSE(E.pow(ell - 1).is_zero());
    CHECK(K * u.K(ell - 1) == u.one());
    CHECK(u.torus_binom(0, 1) == (K - Ki).scaled(u.field().inv_qdiff()));
    CHECK(u.torus_binom(5, 0) == u.one());
    CHECK_THROWS(u.torus_binom(0, ell));
  }
}

TEST_CASE("u_z: associativity on random triples") {
  std::mt19937_64 rng(2024);
  for (int ell : {3, 5, 7}) {
    const Uzeta& u = Uzeta::get(ell);
    for (int t = 0; t < 100; ++t) {
      auto mono = [&]() {
        auto [a, b, c] = u.triple(static_cast<int>(rng() % u.dim()));
        return u.monomial(a, b, c);
      };
      UzetaElement x = mono(), y = mono(), z = mono();
      CHECK((x * y) * z == x * (y * z));
      CHECK(u.one() * x == x);
      CHECK(x * u.one() == x);
    }
  }
}

TEST_CASE("u_z: Casimir is central and omega is an automorphism") {
  for (int ell : {3, 5, 7}) {
    const Uzeta& u = Uzeta::get(ell);
    UzetaElement c = u.casimir();
    CHECK(commutator(c, u.E()).is_zero());
    CHECK(commutator(c, u.F()).is_zero());
    CHECK(commutator(c, u.K()).is_zero());
    CHECK(u.omega(c) == c);
    std::mt19937_64 rng(ell * 31);
    for (int t = 0; t < 20; ++t) {
      UzetaElement x = random_elem(u, rng, 3), y = random_elem(u, rng, 3);
      CHECK(u.omega(x * y) == u.omega(x) * u.omega(y));
      CHECK(u.omega(u.omega(x)) == x);
    }
  }
  const Uzeta& u3 = Uzeta::get(3);
  CHECK(u3.casimir_eigenvalue(0) == CycloNum(mpq_class(1, 3)));
  CHECK(u3.casimir_eigenvalue(2) == CycloNum(mpq_class(-2, 3)));
}

TEST_CASE("u_z: torus idempotents") {
  for (int ell : {3, 5, 7}) {
    const Uzeta& u = Uzeta::get(ell);
    UzetaElement sum = u.zero();
    for (int m = 0; m < ell; ++m) {
      UzetaElement em = u.idempotent_e(m);
      sum += em;
      CHECK(em * em == em);
      CHECK(u.K() * em == em.scaled(CycloNum::zeta_pow(u.field(), m)));
      for (int n = 0; n < ell; ++n)
        if (n != m) CHECK((em * u.idempotent_e(n)).is_zero());
    }
    CHECK(sum == u.one());
  }
}

TEST_CASE("u_z: formula for F^(s) E^(s)") {
  for (int ell : {3, 5, 7}) {
    const Uzeta& u = Uzeta::get(ell);
    for (int s = 0; s < ell; ++s) CHECK(u.verify_FsEs(s));
  }
}

TEST_CASE("u_z: the element f lies in the span of K^i c^j") {
  for (int ell : {3, 5}) {
    const Uzeta& u = Uzeta::get(ell);
    std::vector<SparseVec> span;
    UzetaElement c = u.casimir();
    UzetaElement cj = u.one();
    for (int j = 0; j < 2 * ell; ++j) {
      for (int i = 0; i < ell; ++i) span.push_back((u.K(i) * cj).coords());
      cj = cj * c;
    }
    UzetaElement f = u.lemma1_f();
    CHECK_FALSE(f.is_zero());
    CHECK(span_contains(span, f.coords()));
    // k[K, c] is commutative
    CHECK(commutator(u.K(), c).is_zero());
  }
}

TEST_CASE("u_z: text form round trip") {
  const Uzeta& u = Uzeta::get(5);
  UzetaElement c = u.casimir();
  CHECK(u.parse(c.to_string()) == c);
  CHECK(u.parse("E F - F E") == (u.K() - u.K(-1)).scaled(u.field().inv_qdiff()));
  CHECK(u.parse("K^5") == u.one());
  CHECK(u.parse("K^-1 * K") == u.one());
  CHECK(u.parse("(z + 1/2) * F^2 K E") == u.monomial(2, 1, 1, CycloNum::parse(u.field(), "z + 1/2")));
  CHECK(u.zero().to_string() == "0");
  CHECK_THROWS(u.parse("E^-1"));
}
