#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhyper/frobenius.hpp"
#include "qhyper/graded.hpp"
#include "qhyper/modules.hpp"

using namespace qhyper;

namespace {

void check_relations(const ModuleRep& x) {
  for (const auto& c : relation_checklist(x)) {
    INFO(x.name() << ": " << c.name);
    CHECK(c.ok);
  }
}

long reflect(long m, int l) {
  long m0 = m % l, m1 = m / l;
  return l - 2 - m0 + (m1 - 1) * l;
}

}  // namespace

TEST_CASE("relation checklist and the E^(l) F^(l) commutator for all module families") {
  for (int l : {3, 5}) {
    const CycloField& f = CycloField::get(l);
    for (long r = 0; r < l; ++r) {
      check_relations(simple_L(f, r));
      check_relations(injective_I(f, r));
    }
    for (long m = 0; m <= 3 * l; ++m) {
      for (const ModuleRep& x : {weyl_W(f, m), coweyl_M(f, m), simple_module(f, m), injective_module(f, m)}) {
        check_relations(x);
        INFO(x.name());
        CHECK(verify_lemma1_H(x));
      }
    }
  }
}

TEST_CASE("a wrong structure constant is caught by the checklist") {
  const CycloField& f = CycloField::get(3);
  ModuleRep w = weyl_W(f, 4);
  Matrix El = w.mat(Gen::El);
  El.add(0, 3, CycloNum(1L));
  ModuleRep bad(f, "bad", w.labels(), w.mat(Gen::E), w.mat(Gen::F), El, w.mat(Gen::Fl));
  CHECK_FALSE(passes_checklist(bad));
}

TEST_CASE("simple modules L(r)") {
  for (int l : {3, 5, 7}) {
    const CycloField& f = CycloField::get(l);
    CHECK(simple_L(f, 0).dim() == 1);
    for (long r = 0; r < l; ++r) {
      ModuleRep L = simple_L(f, r);
      CHECK(L.dim() == r + 1);
      CHECK(L.mat(Gen::El).is_zero());
      CHECK(L.mat(Gen::Fl).is_zero());
      CHECK(is_simple(L));
    }
    ModuleRep St = simple_L(f, l - 1);
    CHECK(span_equal(St.mat(Gen::E).pow(l - 1).col(l - 1).is_zero() ? std::vector<SparseVec>{}
                                                                     : std::vector<SparseVec>{St.mat(Gen::E).pow(l - 1).col(l - 1)},
                     {SparseVec::unit(0)}));
    CHECK_THROWS_AS(simple_L(f, l), std::invalid_argument);
  }
}

TEST_CASE("torus_binom on the highest vector of L(r)") {
  for (int l : {3, 5}) {
    const CycloField& f = CycloField::get(l);
    const Uzeta& u = Uzeta::get(l);
    for (long r = 0; r < l; ++r) {
      ModuleRep L = simple_L(f, r);
      for (long c = -l; c <= l; ++c)
        for (long t = 0; t < l; ++t) CHECK(L.act(u.torus_binom(c, t)).col(0) == SparseVec::unit(0, gauss_binom(f, r + c, t)));
    }
  }
}

TEST_CASE("the derivation D_e is the commutator with E^(l) in every module") {
  std::mt19937_64 rng(11);
  for (int l : {3, 5}) {
    const FrobeniusAction& fa = FrobeniusAction::get(l);
    const Uzeta& u = fa.algebra();
    const CycloField& f = u.field();
    for (const ModuleRep& x : {weyl_W(f, 2 * l + 1), injective_I(f, 0), injective_module(f, l + 1)})
      for (int t = 0; t < 6; ++t) {
        auto [a, b, c] = u.triple(static_cast<int>(rng() % u.dim()));
        UzetaElement y = u.monomial(a, b, c);
        CHECK(x.act(fa.apply(SlGen::e, y)) == commutator(x.mat(Gen::El), x.act(y)));
        CHECK(x.act(fa.apply(SlGen::f, y)) == commutator(x.mat(Gen::Fl), x.act(y)));
      }
  }
}

TEST_CASE("Weyl and co-Weyl modules") {
  for (int l : {3, 5}) {
    const CycloField& f = CycloField::get(l);
    for (long r = 0; r < l; ++r) {
      ModuleRep w = weyl_W(f, r), L = simple_L(f, r);
      CHECK(w.mat(Gen::E) == L.mat(Gen::E));
      CHECK(w.mat(Gen::F) == L.mat(Gen::F));
      CHECK(is_simple(w));
      ModuleRep M = coweyl_M(f, r);
      CHECK(is_simple(M));
      CHECK(M.character() == L.character());
    }
    CHECK_FALSE(is_simple(weyl_W(f, l)));
    for (long m = 0; m <= 3 * l; ++m) {
      ModuleRep w = weyl_W(f, m), M = coweyl_M(f, m);
      CHECK(M.dim() == m + 1);
      CHECK(socle_factors(M) == std::map<long, int>{{m, 1}});
      std::map<long, int> cf = composition_factors(w);
      if (m % l == l - 1 || m < l) {
        CHECK(cf == std::map<long, int>{{m, 1}});
        CHECK(is_simple(w));
      } else {
        CHECK(cf == std::map<long, int>{{m, 1}, {reflect(m, l), 1}});
        CHECK(radical(w).size() == static_cast<std::size_t>(w.dim() - simple_module(f, m).dim()));
      }
      CHECK(intertwiners(w, w).size() == 1);
    }
  }
}

TEST_CASE("injective modules I(r)") {
  for (int l : {3, 5}) {
    const CycloField& f = CycloField::get(l);
    CHECK(injective_I(f, l - 1).mat(Gen::E) == simple_L(f, l - 1).mat(Gen::E));
    for (long r = 0; r + 1 < l; ++r) {
      ModuleRep I = injective_I(f, r);
      const long top = 2 * l - 2 - r, rp = l - 2 - r;
      const int nv = static_cast<int>(top) + 1;
      CHECK(I.dim() == 2 * l);
      const CycloNum a = q_int(f, l - r - 1);
      CHECK(I.mat(Gen::E).col(nv) == SparseVec::unit(static_cast<int>(rp), a));
      CHECK(I.mat(Gen::F).col(nv + static_cast<int>(r)) == SparseVec::unit(l, r % 2 == 0 ? a : -a));
      std::vector<SparseVec> wsub;
      for (int j = 0; j < nv; ++j) wsub.push_back(SparseVec::unit(j));
      CHECK(submodule_closure(I, wsub).size() == wsub.size());
      auto series = socle_series(I);
      REQUIRE(series.size() == 3);
      CHECK(series[0].factors == std::map<long, int>{{r, 1}});
      CHECK(series[1].factors == std::map<long, int>{{top, 1}});
      CHECK(series[2].factors == std::map<long, int>{{r, 1}});
      // lowest socle vector
      std::vector<SparseVec> c = submodule_closure(I, {SparseVec::unit(l - 1)});
      CHECK(c.size() == static_cast<std::size_t>(r + 1));
      CHECK(span_equal(c, socle(I)));
      CHECK(composition_factors(I, Level::small) == std::map<long, int>{{r, 2}, {rp, 2}});
      CHECK(intertwiners(I, I).size() == 2);
      CHECK_FALSE(is_simple(I));
    }
  }
  const CycloField& f3 = CycloField::get(3);
  ModuleRep I0 = injective_I(f3, 0);
  CHECK(I0.mat(Gen::E).col(5) == SparseVec::unit(1, CycloNum(-1L)));
  CHECK(I0.mat(Gen::F).col(5) == SparseVec::unit(3, CycloNum(-1L)));
}

TEST_CASE("Frobenius twists and general simples") {
  const CycloField& f3 = CycloField::get(3);
  ModuleRep t = tensor_frobenius(simple_L(f3, 1), 1);
  CHECK(t.dim() == 4);
  CHECK(t.highest_weight() == 4);
  CHECK(is_simple(t));
  for (int l : {3, 5}) {
    const CycloField& f = CycloField::get(l);
    for (long r = 0; r < l; ++r) {
      ModuleRep a = tensor_frobenius(simple_L(f, r), 0), b = simple_L(f, r);
      CHECK(a.mat(Gen::E) == b.mat(Gen::E));
      CHECK(a.mat(Gen::El) == b.mat(Gen::El));
    }
    for (long m = 0; m <= 3 * l; ++m) {
      ModuleRep L = simple_module(f, m);
      CHECK(L.dim() == (m % l + 1) * (m / l + 1));
      CHECK(L.highest_weight() == m);
      CHECK(is_simple(L));
    }
  }
}

TEST_CASE("closures and quotients") {
  const CycloField& f = CycloField::get(5);
  ModuleRep w = weyl_W(f, 7);
  CHECK(submodule_closure(w, {SparseVec::unit(0)}).size() == 8);
  CHECK(submodule_closure(w, {SparseVec{}}).empty());
  std::vector<SparseVec> s = socle(w);
  ModuleRep q = quotient(w, s);
  CHECK(passes_checklist(q));
  CHECK(passes_checklist(submodule(w, s)));
  CHECK(q.dim() + static_cast<int>(s.size()) == w.dim());
  ModuleRep dd = dual(dual(w));
  CHECK(dd.labels() == w.labels());
  auto homs = intertwiners(dd, w);
  REQUIRE(homs.size() == 1);
  std::vector<SparseVec> cols;
  for (int j = 0; j < w.dim(); ++j) cols.push_back(homs[0].col(j));
  CHECK(rank(cols) == static_cast<std::size_t>(w.dim()));
}

TEST_CASE("Steinberg factorization of heads of Weyl modules") {
  for (int l : {3, 5}) {
    const CycloField& f = CycloField::get(l);
    for (long m = 0; m <= 3 * l; ++m) {
      INFO("l=" << l << " m=" << m);
      CHECK(steinberg_verify(f, m).ok());
    }
    for (long k = 0; k <= 2; ++k) CHECK(is_simple(weyl_W(f, l - 1 + k * l)));
  }
}
