#include "qhyper/blocks.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace qhyper {

namespace {

int mod(long a, int l) {
  long r = a % l;
  return static_cast<int>(r < 0 ? r + l : r);
}

CycloPoly linear(const CycloNum& root) { return {-root, CycloNum(1L)}; }

bool in_B(int ell, long r) { return r >= 0 && 2 * r <= ell - 3; }

Matrix eval_matrix(const CycloPoly& p, const Matrix& x) {
  Matrix r(x.rows(), x.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + Matrix::identity(x.rows()).scaled(*it);
  return r;
}

// Closure of span{e_m b} under left multiplication by E and F, split by left weight.
std::map<int, Echelon> left_closure(const Uzeta& u, const std::vector<UzetaElement>& gens) {
  const int l = u.ell();
  std::map<int, Echelon> pieces;
  for (int m = 0; m < l; ++m) pieces[m];
  std::vector<std::pair<int, SparseVec>> work;
  auto push = [&](int w, const UzetaElement& x) {
    if (x.is_zero()) return;
    if (pieces[w].add(x.coords())) work.emplace_back(w, x.coords());
  };
  for (const auto& b : gens)
    for (int m = 0; m < l; ++m) push(m, u.idempotent_e(m) * b);
  const UzetaElement E = u.E(), F = u.F();
  while (!work.empty()) {
    auto [w, v] = std::move(work.back());
    work.pop_back();
    UzetaElement x = u.element(v);
    push(mod(w + 2, l), E * x);
    push(mod(w - 2, l), F * x);
  }
  return pieces;
}

std::vector<SparseVec> flatten(const std::map<int, Echelon>& pieces) {
  std::vector<SparseVec> out;
  for (const auto& [w, e] : pieces)
    for (auto& v : e.reduced_rows()) out.push_back(std::move(v));
  return out;
}

// Coordinates of v in fully reduced rows (read off at the leads).
std::optional<SparseVec> reduced_coords(const std::vector<SparseVec>& rows, const SparseVec& v, int offset) {
  SparseVec rest = v;
  SparseAccum acc;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CycloNum c = v.get(rows[i].lead());
    if (c.is_zero()) continue;
    acc.add(offset + static_cast<int>(i), c);
    rest.axpy(-c, rows[i]);
  }
  if (!rest.is_zero()) return std::nullopt;
  return acc.finish();
}

}  // namespace

std::vector<long> block_labels(int ell) {
  std::vector<long> out;
  for (long r = 0; 2 * r <= ell - 3; ++r) out.push_back(r);
  out.push_back(ell - 1);
  return out;
}

std::vector<int> simple_weights_mod(int ell, long s) {
  std::vector<int> out;
  for (long i = 0; i <= s; ++i) out.push_back(mod(s - 2 * i, ell));
  std::sort(out.begin(), out.end());
  return out;
}

CycloPoly casimir_minimal_polynomial(const Uzeta& u) {
  const int l = u.ell();
  CycloPoly p = linear(u.casimir_eigenvalue(l - 1));
  for (long r : block_labels(l)) {
    if (r == l - 1) continue;
    CycloPoly q = linear(u.casimir_eigenvalue(r));
    p = poly_mul(p, poly_mul(q, q));
  }
  return p;
}

std::vector<CycloPoly> maximal_proper_divisors(const Uzeta& u) {
  const int l = u.ell();
  std::vector<CycloPoly> out;
  for (long s : block_labels(l)) {
    CycloPoly p{CycloNum(1L)};
    for (long r : block_labels(l)) {
      const CycloPoly q = linear(u.casimir_eigenvalue(r));
      int k = r == l - 1 ? 1 : 2;
      if (r == s) --k;
      for (int i = 0; i < k; ++i) p = poly_mul(p, q);
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool minimality_witness(const Uzeta& u) {
  const CycloField& f = u.field();
  std::vector<Matrix> cs;
  const UzetaElement c = u.casimir();
  for (long r : block_labels(u.ell())) cs.push_back(injective_I(f, r).act(c));
  for (const auto& d : maximal_proper_divisors(u)) {
    bool nonzero = false;
    for (const auto& m : cs) nonzero = nonzero || !eval_matrix(d, m).is_zero();
    if (!nonzero) return false;
  }
  return true;
}

UzetaElement idem_monomial(const Uzeta& u, int a, int k, int c) {
  const int l = u.ell();
  const CycloField& f = u.field();
  const CycloNum inv(mpq_class(mpz_class(1), mpz_class(l)));
  SparseAccum acc;
  for (int j = 0; j < l; ++j) acc.add(u.index(a, j, c), CycloNum::zeta_pow(f, -static_cast<long>(k) * j) * inv);
  return u.element(acc.finish());
}

UzetaElement block_idempotent(const Uzeta& u, long r) {
  const int l = u.ell();
  if (r != l - 1 && !in_B(l, r)) throw std::invalid_argument("block_idempotent: r is not a block label");
  const CycloNum lam = u.casimir_eigenvalue(r);
  CycloPoly Q{CycloNum(1L)};
  for (long s : block_labels(l)) {
    if (s == r) continue;
    const CycloPoly q = linear(u.casimir_eigenvalue(s));
    Q = poly_mul(Q, q);
    if (s != l - 1) Q = poly_mul(Q, q);
  }
  const CycloNum alpha = poly_eval(Q, lam).inverse();
  CycloPoly p;
  if (r == l - 1) {
    p = poly_mul(Q, {alpha});
  } else {
    const CycloNum beta = -poly_eval(poly_derivative(Q), lam) * alpha * alpha;
    p = poly_mul(Q, {alpha - beta * lam, beta});
  }
  return u.eval_poly(p, u.casimir());
}

std::map<int, std::vector<SparseVec>> left_ideal(const Uzeta& u, const UzetaElement& b) {
  std::map<int, std::vector<SparseVec>> out;
  for (const auto& [w, e] : left_closure(u, {b})) out[w] = e.reduced_rows();
  return out;
}

ModuleRep left_ideal_module(const Uzeta& u, const UzetaElement& b, std::string name) {
  const int l = u.ell();
  const auto pieces = left_ideal(u, b);
  std::vector<long> labels;
  std::map<int, int> offset;
  for (const auto& [w, rows] : pieces) {
    offset[w] = static_cast<int>(labels.size());
    labels.insert(labels.end(), rows.size(), w);
  }
  const int n = static_cast<int>(labels.size());
  Matrix E(n, n), F(n, n);
  const UzetaElement Eu = u.E(), Fu = u.F();
  for (const auto& [w, rows] : pieces)
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const UzetaElement x = u.element(rows[i]);
      const int col = offset[w] + static_cast<int>(i);
      for (auto [m, g] : {std::pair{&E, Eu}, std::pair{&F, Fu}}) {
        const int t = mod(w + (m == &E ? 2 : -2), l);
        auto c = reduced_coords(pieces.at(t), (g * x).coords(), offset[t]);
        if (!c) throw std::logic_error("left_ideal_module: not closed");
        m->set_col(col, std::move(*c));
      }
    }
  return ModuleRep(u.field(), std::move(name), std::move(labels), E, F, Matrix(n, n), Matrix(n, n), true);
}

BlockData block_data(const Uzeta& u, long r, bool with_pims) {
  const int l = u.ell();
  BlockData out;
  out.r = r;
  out.idempotent = block_idempotent(u, r);
  out.types = r == l - 1 ? std::vector<long>{r} : std::vector<long>{r, partner(l, r)};
  out.cartan.assign(out.types.size(), std::vector<int>(out.types.size(), 0));
  if (!with_pims) {
    std::vector<UzetaElement> gens;
    for (int j = 0; j < l; ++j) gens.push_back(out.idempotent * u.idempotent_e(j));
    out.dim = static_cast<int>(flatten(left_closure(u, gens)).size());
    return out;
  }
  for (int j = 0; j < l; ++j) {
    const UzetaElement b = out.idempotent * u.idempotent_e(j);
    if (b.is_zero()) continue;
    ModuleRep P = left_ideal_module(u, b, "P_" + std::to_string(j));
    auto soc = socle_factors(P, Level::small);
    if (soc.size() != 1 || soc.begin()->second != 1) throw std::logic_error("block_data: PIM socle is not simple");
    PimSummand s;
    s.j = j;
    s.type = soc.begin()->first;
    s.dim = P.dim();
    auto pieces = left_ideal(u, b);
    for (auto& [w, rows] : pieces)
      for (auto& v : rows) s.basis.push_back(std::move(v));
    const auto t = std::find(out.types.begin(), out.types.end(), s.type);
    if (t == out.types.end()) throw std::logic_error("block_data: PIM of a foreign type");
    const std::size_t ti = static_cast<std::size_t>(t - out.types.begin());
    for (std::size_t si = 0; si < out.types.size(); ++si)
      out.cartan[si][ti] = static_cast<int>(pieces[simple_weights_mod(l, out.types[si]).front()].size());
    out.dim += s.dim;
    out.pims.push_back(std::move(s));
  }
  return out;
}

std::vector<SparseVec> center_uzeta(const Uzeta& u) {
  // [z, K] = 0 confines z to span F^a K^b E^a.
  const int l = u.ell(), n = u.dim();
  std::map<int, SparseAccum> rows;
  const UzetaElement E = u.E(), F = u.F();
  std::vector<int> idx;
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) {
      const int k = static_cast<int>(idx.size());
      idx.push_back(u.index(a, b, a));
      const UzetaElement m = u.monomial(a, b, a);
      const UzetaElement ce = commutator(E, m), cf = commutator(F, m);
      for (const auto& [i, c] : ce.coords().entries()) rows[i].add(k, c);
      for (const auto& [i, c] : cf.coords().entries()) rows[n + i].add(k, c);
    }
  std::vector<SparseVec> eqs;
  for (auto& [i, acc] : rows) eqs.push_back(acc.finish());
  std::vector<SparseVec> out;
  for (const auto& sol : nullspace(eqs, static_cast<int>(idx.size()))) {
    SparseAccum z;
    for (const auto& [k, c] : sol.entries()) z.add(idx[k], c);
    out.push_back(z.finish());
  }
  return out;
}

UzetaElement theta(const Uzeta& u, long r) {
  const UzetaElement eps = block_idempotent(u, r);
  UzetaElement s = u.zero();
  for (long j = 0; j <= r; ++j) s += u.idempotent_e(r - 2 * j);
  return eps * (u.casimir() - u.scalar(u.casimir_eigenvalue(r))) * s;
}

std::vector<UzetaElement> center_family(const Uzeta& u) {
  const int l = u.ell();
  std::vector<UzetaElement> out;
  for (long r : block_labels(l)) {
    const UzetaElement eps = block_idempotent(u, r);
    out.push_back(eps);
    if (r == l - 1) continue;
    out.push_back(eps * (u.casimir() - u.scalar(u.casimir_eigenvalue(r))));
    out.push_back(theta(u, r));
  }
  return out;
}

Nilradical nilradical(const Uzeta& u) {
  const int l = u.ell();
  const int inv2 = (l + 1) / 2;
  std::vector<ModuleRep> simples;
  for (long r = 0; r < l; ++r) simples.push_back(simple_L(u.field(), r));
  // N is a sum of pieces e_m N e_n; candidates in a piece are F^a e_k E^c.
  std::map<std::pair<int, int>, std::vector<UzetaElement>> N;
  for (int m = 0; m < l; ++m)
    for (int n = 0; n < l; ++n) {
      std::vector<UzetaElement> cand;
      std::map<int, SparseAccum> rows;
      for (int a = 0; a < l; ++a) {
        const int k = mod(m + 2 * a, l);
        const int c = mod(static_cast<long>(k - n) * inv2, l);
        cand.push_back(idem_monomial(u, a, k, c));
        int off = 0;
        for (const auto& L : simples) {
          const Matrix x = L.act(cand.back());
          for (int j = 0; j < L.dim(); ++j)
            for (const auto& [i, v] : x.col(j).entries()) rows[off + j * L.dim() + i].add(a, v);
          off += L.dim() * L.dim();
        }
      }
      std::vector<SparseVec> eqs;
      for (auto& [i, acc] : rows) eqs.push_back(acc.finish());
      for (const auto& sol : nullspace(eqs, l)) {
        UzetaElement x = u.zero();
        for (const auto& [a, c] : sol.entries()) x += cand[a].scaled(c);
        N[{m, n}].push_back(x);
      }
    }
  Nilradical out;
  for (const auto& [k, xs] : N)
    for (const auto& x : xs) out.N.push_back(x.coords());
  std::map<std::pair<int, int>, Echelon> N2;
  for (const auto& [k1, xs] : N)
    for (const auto& [k2, ys] : N) {
      if (k1.second != k2.first) continue;
      Echelon& e = N2[{k1.first, k2.second}];
      for (const auto& x : xs)
        for (const auto& y : ys) e.add((x * y).coords());
    }
  out.cube_zero = true;
  for (const auto& [k1, e] : N2) {
    for (const auto& v : e.rows()) out.N2.push_back(v);
    for (const auto& [k2, ys] : N) {
      if (k1.second != k2.first || !out.cube_zero) continue;
      for (const auto& v : e.rows())
        for (const auto& y : ys)
          if (!(u.element(v) * y).is_zero()) out.cube_zero = false;
    }
  }
  out.N2 = span_basis(out.N2);
  return out;
}

std::vector<SparseVec> ideal_of_central(const Uzeta& u, const std::vector<UzetaElement>& gens) {
  return flatten(left_closure(u, gens));
}

SmashCenter center_smash_truncated(const FrobeniusAction& fa, long r, int N) {
  const Uzeta& u = fa.algebra();
  const int l = u.ell();
  const int bound = N + 2;
  const SmashAlgebra S(fa, bound);
  const UzetaElement eps = block_idempotent(u, r);

  // Central elements have Z-degree 0: x # f^i h^j e^i with x of degree 0.
  Echelon xe;
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) xe.add((eps * u.monomial(a, b, a)).coords());
  std::vector<UMono> monos;
  for (int i = 0; 2 * i <= N; ++i)
    for (int j = 0; 2 * i + j <= N; ++j) monos.push_back({i, j, i});

  const std::vector<SmashElement> gens{S.embed(u.E()), S.embed(u.F()), S.embed(u.K()), S.gen(SlGen::e),
                                       S.gen(SlGen::f)};
  std::vector<SmashElement> unknowns;
  std::map<std::pair<std::size_t, SmashKey>, SparseAccum> rows;
  for (const auto& x : xe.reduced_rows())
    for (const auto& m : monos) {
      const int k = static_cast<int>(unknowns.size());
      unknowns.push_back(S.tensor(u.element(x), u_monomial(m[0], m[1], m[2])));
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const SmashElement cm = S.commutator(gens[g], unknowns.back(), bound);
        for (const auto& [key, c] : cm.terms()) rows[{g, key}].add(k, c);
      }
    }
  std::vector<SparseVec> eqs;
  for (auto& [key, acc] : rows) eqs.push_back(acc.finish());

  SmashCenter out;
  for (const auto& sol : nullspace(eqs, static_cast<int>(unknowns.size()))) {
    SmashElement z;
    for (const auto& [k, c] : sol.entries()) z += unknowns[k].scaled(c);
    out.basis.push_back(std::move(z));
  }
  out.dim = static_cast<int>(out.basis.size());

  std::vector<UElement> cpow{u_monomial(0, 0, 0)};
  while (static_cast<int>(cpow.size()) * 2 <= N) cpow.push_back(u_mul(cpow.back(), u_casimir(), bound));
  if (r == l - 1) {
    for (const auto& cp : cpow) out.expected.push_back(S.tensor(eps, cp));
  } else {
    out.expected.push_back(S.embed(eps));
    const UzetaElement m1 = eps * (u.casimir() - u.scalar(u.casimir_eigenvalue(r)));
    const UzetaElement m2 = theta(u, r);
    for (const auto& cp : cpow) {
      out.expected.push_back(S.tensor(m1, cp));
      out.expected.push_back(S.tensor(m2, cp));
    }
  }

  std::map<SmashKey, int> index;
  auto flat = [&](const std::vector<SmashElement>& zs) {
    std::vector<SparseVec> vs;
    for (const auto& z : zs) {
      SparseAccum acc;
      for (const auto& [key, c] : z.terms()) {
        auto it = index.emplace(key, static_cast<int>(index.size())).first;
        acc.add(it->second, c);
      }
      vs.push_back(acc.finish());
    }
    return vs;
  };
  const auto a = flat(out.basis);
  const auto b = flat(out.expected);
  out.matches_expected = span_equal(a, b);
  return out;
}

bool CActionReport::ok() const {
  if (entries.empty()) return false;
  for (const auto& e : entries)
    if (!e.ok()) return false;
  return true;
}

CActionReport verify_lemma4(const FrobeniusAction& fa, int nmax, long r) {
  const Uzeta& u = fa.algebra();
  const int l = u.ell();
  const int bound = 2 * nmax + 2;
  const SmashAlgebra S(fa, bound);

  // t in eps_r u_z with D_e t = 0, D_h t = t.
  std::vector<UzetaElement> gens;
  const UzetaElement eps = block_idempotent(u, r);
  for (int j = 0; j < l; ++j) gens.push_back(eps * u.idempotent_e(j));
  const std::vector<SparseVec> X = flatten(left_closure(u, gens));
  std::map<int, SparseAccum> rows;
  for (std::size_t k = 0; k < X.size(); ++k) {
    const SparseVec de = fa.D(SlGen::e).apply(X[k]);
    for (const auto& [i, c] : de.entries()) rows[i].add(static_cast<int>(k), c);
    SparseVec h = fa.D(SlGen::h).apply(X[k]) - X[k];
    for (const auto& [i, c] : h.entries()) rows[u.dim() + i].add(static_cast<int>(k), c);
  }
  std::vector<SparseVec> eqs;
  for (auto& [i, acc] : rows) eqs.push_back(acc.finish());
  const auto sols = nullspace(eqs, static_cast<int>(X.size()));
  if (sols.empty()) throw std::logic_error("verify_lemma4: no highest vector of D_h-weight 1");
  SparseAccum tacc;
  for (const auto& [k, c] : sols.front().entries()) tacc.add(X[k], c);

  CActionReport rep;
  rep.t = u.element(tacc.finish());
  rep.v = fa.apply(SlGen::f, rep.t);
  const std::vector<SparseVec> tv{rep.t.coords(), rep.v.coords()};

  const UElement cas = u_casimir();
  const UElement f = u_monomial(1, 0, 0);
  UElement cn = u_monomial(0, 0, 0);
  for (int n = 1; n <= nmax; ++n) {
    cn = u_mul(cn, cas, bound);
    CActionEntry e;
    e.n = n;
    e.decomposes = true;
    auto split = [&](const UzetaElement& w, UElement& onto_t, UElement& onto_v) {
      for (const auto& [m, part] : S.by_monomial(S.multiply(S.embed(cn), S.embed(w), bound))) {
        auto co = coordinates(tv, part.coords());
        if (!co) {
          e.decomposes = false;
          continue;
        }
        if (!(*co)[0].is_zero()) onto_t = u_add(onto_t, u_monomial(m[0], m[1], m[2], (*co)[0]));
        if (!(*co)[1].is_zero()) onto_v = u_add(onto_v, u_monomial(m[0], m[1], m[2], (*co)[1]));
      }
    };
    split(rep.t, e.a, e.c);
    split(rep.v, e.b, e.d);
    e.b_is_bracket = e.b == u_bracket(f, e.a, bound);
    e.c_is_omega_b = e.c == u_omega(e.b, bound);
    e.d_is_omega_a = e.d == u_omega(e.a, bound);

    // a_n in the basis c^i h^j, 2i + j <= 2n.
    std::vector<std::pair<int, int>> ij;
    std::vector<UElement> basis;
    UElement ci = u_monomial(0, 0, 0);
    for (int i = 0; 2 * i <= 2 * n; ++i) {
      for (int j = 0; 2 * i + j <= 2 * n; ++j) {
        ij.emplace_back(i, j);
        basis.push_back(u_mul(ci, u_monomial(0, j, 0), bound));
      }
      ci = u_mul(ci, cas, bound);
    }
    std::map<UMono, int> index;
    auto flat = [&](const UElement& x) {
      SparseAccum acc;
      for (const auto& [m, c] : x) acc.add(index.emplace(m, static_cast<int>(index.size())).first->second, c);
      return acc.finish();
    };
    std::vector<SparseVec> bv;
    for (const auto& b : basis) bv.push_back(flat(b));
    auto co = coordinates(bv, flat(e.a));
    if (co) {
      e.a_in_kch = true;
      e.phi.assign(static_cast<std::size_t>(n) + 1, UElement{});
      for (std::size_t k = 0; k < ij.size(); ++k) {
        const auto [i, j] = ij[k];
        if ((*co)[k].is_zero()) continue;
        if (j > 1) e.a_in_kch = false;
        e.phi[static_cast<std::size_t>(i)] = u_add(e.phi[static_cast<std::size_t>(i)], u_monomial(0, j, 0, (*co)[k]));
      }
      e.leading = e.phi[static_cast<std::size_t>(n)] == u_monomial(0, 0, 0);
      const UElement sub = u_add(u_monomial(0, 1, 0, CycloNum(2L * n)), u_monomial(0, 0, 0, CycloNum(static_cast<long>(n) * (2 * n + 1))));
      e.subleading = e.phi[static_cast<std::size_t>(n - 1)] == sub;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace qhyper
