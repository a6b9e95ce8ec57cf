// Acceptance gate: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qhyper/blocks.hpp"
#include "qhyper/ideals.hpp"

using namespace qhyper;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

class Gate {
public:
  void run(int id, const std::string& title, double budget, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget > 0 && secs >= budget) {
      o.ok = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s  %2d  %-48s %8.2fs%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
    failures_ += o.ok ? 0 : 1;
  }
  int failures() const { return failures_; }

private:
  int failures_ = 0;
};

#define EXPECT(cond, what)                     \
  do {                                         \
    if (!(cond)) return Outcome{false, what};  \
  } while (0)

std::vector<SparseVec> columns(const Matrix& m) {
  std::vector<SparseVec> out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

bool stable_under(const Matrix& d, const std::vector<SparseVec>& span) {
  for (const auto& v : span)
    if (!span_contains(span, d.apply(v))) return false;
  return true;
}

}  // namespace

int main() {
  Gate g;

  g.run(1, "q-binomial vanishing at 2l", 1.0, [] {
    for (int l : {3, 5, 7}) {
      const CycloField& f = CycloField::get(l);
      for (long j = 1; j < l; ++j) EXPECT(gauss_binom(f, 2 * l, j).is_zero(), "nonzero [2l; j] at l=" + std::to_string(l));
      EXPECT(gauss_binom(f, 2 * l, l) == CycloNum(2L), "[2l; l] != 2 at l=" + std::to_string(l));
    }
    return Outcome{};
  });

  g.run(2, "F^(s) E^(s) PBW identity, 1 <= s < l", 10.0, [] {
    for (int l : {3, 5, 7}) {
      const Uzeta& u = Uzeta::get(l);
      for (int s = 1; s < l; ++s)
        EXPECT(u.verify_FsEs(s), "l=" + std::to_string(l) + " s=" + std::to_string(s));
    }
    return Outcome{};
  });

  g.run(3, "sl2 relations of D_e, D_f, D_h", 60.0, [] {
    for (int l : {3, 5, 7}) {
      const FrobeniusAction& fa = FrobeniusAction::get(l);
      const Matrix &e = fa.D(SlGen::e), &f = fa.D(SlGen::f), &h = fa.D(SlGen::h);
      const CycloNum two(2L);
      EXPECT(h * e - e * h == e.scaled(two), "[D_h,D_e] at l=" + std::to_string(l));
      EXPECT(h * f - f * h == f.scaled(-two), "[D_h,D_f] at l=" + std::to_string(l));
      EXPECT(e * f - f * e == h, "[D_e,D_f] at l=" + std::to_string(l));
    }
    return Outcome{};
  });

  g.run(4, "Casimir minimal polynomial and linkage", 0, [] {
    for (int l : {3, 5, 7}) {
      const Uzeta& u = Uzeta::get(l);
      EXPECT(u.eval_poly(casimir_minimal_polynomial(u), u.casimir()).is_zero(), "Phi(c) != 0");
      EXPECT(minimality_witness(u), "a proper divisor annihilates");
      for (long r = 0; r < l; ++r)
        for (long s = 0; s < l; ++s)
          EXPECT((u.casimir_eigenvalue(r) == u.casimir_eigenvalue(s)) == (r == s || r + s == l - 2), "linkage");
    }
    return Outcome{};
  });

  g.run(5, "block idempotents and PIM multiplicities", 0, [] {
    for (int l : {3, 5}) {
      const Uzeta& u = Uzeta::get(l);
      const auto labels = block_labels(l);
      for (long r : labels) {
        const BlockData bd = block_data(u, r);
        const UzetaElement& e = bd.idempotent;
        EXPECT(e * e == e, "not idempotent");
        for (const auto& x : {u.E(), u.F(), u.K()}) EXPECT(commutator(e, x).is_zero(), "not central");
        for (long s : labels)
          if (s != r) EXPECT((e * block_idempotent(u, s)).is_zero(), "not orthogonal");
        const bool st = r == l - 1;
        EXPECT(bd.dim == (st ? l * l : 2 * l * l), "dim eps u");
        std::map<long, int> count;
        for (const auto& p : bd.pims) ++count[p.type];
        const long rp = l - 2 - r;
        EXPECT(count == (st ? std::map<long, int>{{r, l}} : std::map<long, int>{{r, r + 1}, {rp, rp + 1}}),
               "PIM multiplicities at l=" + std::to_string(l) + " r=" + std::to_string(r));
      }
    }
    return Outcome{};
  });

  g.run(6, "D-stability and U-decomposition of PIMs", 0, [] {
    for (int l : {3, 5}) {
      const FrobeniusAction& fa = FrobeniusAction::get(l);
      const Uzeta& u = fa.algebra();
      for (long r : block_labels(l)) {
        const BlockData bd = block_data(u, r);
        for (const auto& p : bd.pims) {
          const auto right = span_basis(columns(u.left_mult_matrix(bd.idempotent * u.idempotent_e(p.j))));
          for (SlGen s : {SlGen::e, SlGen::f, SlGen::h}) {
            EXPECT(stable_under(fa.D(s), right), "eps e_j u not D-stable");
            EXPECT(stable_under(fa.D(s), p.basis), "u eps e_j not D-stable");
          }
          if (r == l - 1) continue;
          const UDecomposition d = u_decompose(fa, p.basis);
          const long other = p.type == r ? l - 2 - r : r;
          EXPECT(d.m0 == 2 * (p.type + 1), "trivial multiplicity");
          EXPECT(d.m1 == other + 1, "defining multiplicity");
          EXPECT(d.m0 + 2 * d.m1 == 2 * l, "dimension count");
        }
      }
    }
    return Outcome{true, "defining multiplicity computed as r'+1; 2(r'+1) would exceed dim 2l"};
  });

  g.run(7, "center of u_z", 60.0, [] {
    for (int l : {3, 5, 7}) {
      const Uzeta& u = Uzeta::get(l);
      const auto z = center_uzeta(u);
      EXPECT(static_cast<int>(z.size()) == 3 * (l - 1) / 2 + 1, "dim Z at l=" + std::to_string(l));
      std::vector<SparseVec> fam;
      for (const auto& x : center_family(u)) fam.push_back(x.coords());
      EXPECT(span_equal(z, fam), "family span");
    }
    EXPECT(center_uzeta(Uzeta::get(3)).size() == 4, "dim 4 at l=3");
    return Outcome{};
  });

  g.run(8, "truncated center of the smash product", 0, [] {
    for (int l : {3, 5}) {
      const FrobeniusAction& fa = FrobeniusAction::get(l);
      for (long r : block_labels(l)) {
        const SmashCenter c = center_smash_truncated(fa, r, 4);
        EXPECT(c.matches_expected, "span differs from the expected family");
        if (r != l - 1) EXPECT(c.dim == 7, "dim != 7 at l=" + std::to_string(l) + " r=" + std::to_string(r));
      }
    }
    return Outcome{};
  });

  g.run(9, "c-multiplication on a two-dimensional U-module", 0, [] {
    for (int l : {3, 5}) {
      const CActionReport rep = verify_lemma4(FrobeniusAction::get(l), 3);
      EXPECT(rep.entries.size() == 3, "missing entries");
      for (const auto& e : rep.entries) EXPECT(e.ok(), "n=" + std::to_string(e.n));
      const UElement c = u_casimir();
      const CActionEntry& e1 = rep.entries.front();
      EXPECT(e1.a == u_add(c, u_add(u_monomial(0, 1, 0, CycloNum(2L)), u_monomial(0, 0, 0, CycloNum(3L)))), "c.t");
      EXPECT(e1.c == u_monomial(0, 0, 1, CycloNum(4L)), "4ve term");
      EXPECT(e1.b == u_monomial(1, 0, 0, CycloNum(4L)), "4tf term");
      EXPECT(e1.d == u_add(c, u_add(u_monomial(0, 1, 0, CycloNum(-2L)), u_monomial(0, 0, 0, CycloNum(3L)))), "c.v");
    }
    return Outcome{};
  });

  g.run(10, "module checklists, socle series, Steinberg", 0, [] {
    for (int l : {3, 5}) {
      const CycloField& f = CycloField::get(l);
      for (long m = 0; m <= 3 * l; ++m)
        for (const ModuleRep& x : {simple_module(f, m), weyl_W(f, m), coweyl_M(f, m), injective_module(f, m)})
          EXPECT(passes_checklist(x), x.name());
      for (long r = 0; r + 1 < l; ++r) {
        const auto s = socle_series(injective_I(f, r));
        EXPECT(s.size() == 3, "socle length");
        EXPECT(s[0].factors == (std::map<long, int>{{r, 1}}) && s[1].factors == (std::map<long, int>{{2 * l - 2 - r, 1}}) &&
                   s[2].factors == (std::map<long, int>{{r, 1}}),
               "socle layers of I(" + std::to_string(r) + ")");
      }
      for (long m = 0; m <= 3 * l; ++m) EXPECT(steinberg_verify(f, m).ok(), "Steinberg m=" + std::to_string(m));
    }
    return Outcome{};
  });

  g.run(11, "ideal lattice and annihilator products", 600.0, [] {
    int blocks = 0, cases = 0;
    for (int l : {3, 5}) {
      const CycloField& f = CycloField::get(l);
      for (long r0 = 0; r0 <= l + 3; ++r0) {
        if (block_root(r0, l) != r0) continue;
        const LatticeReport rep = verify_lattice(f, r0, l + 3, false);
        EXPECT(rep.ok(), "lattice l=" + std::to_string(l) + " r0=" + std::to_string(r0));
        ++blocks;
      }
      const long jmax = l == 3 ? 3 : 2;
      for (long r0 = 0; r0 + 1 < l; ++r0)
        for (long j = 0; j <= jmax; ++j)
          for (const auto& c : verify_theorem7(f, r0, j)) {
            EXPECT(c.equal && c.stable, "l=" + std::to_string(l) + " r0=" + std::to_string(r0) + " j=" +
                                            std::to_string(j) + " " + c.module);
            ++cases;
          }
    }
    return Outcome{true, std::to_string(blocks) + " blocks, " + std::to_string(cases) + " product identities"};
  });

  g.run(12, "primitive ideals at l=3", 0, [] {
    const CycloField& f = CycloField::get(3);
    for (long m = 0; m <= 6; ++m) {
      EXPECT(verify_primitive_ideal(f, m, 6).equal, "m=" + std::to_string(m));
      EXPECT(verify_primitive_ideal(f, m, 9).equal, "unstable at m=" + std::to_string(m));
    }
    return Outcome{};
  });

  std::printf("%d criteria failed\n", g.failures());
  return g.failures() == 0 ? 0 : 1;
}
