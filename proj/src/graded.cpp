#include "qhyper/graded.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace qhyper {

namespace {

using Key = GradedAlgebra::Key;

// Left and right multiplication closure inside A, grown incrementally.
class Closure {
public:
  Closure(const GradedAlgebra& A, bool left, bool right) : A_(A), left_(left), right_(right) {}

  bool contains(const Key& k, const SparseVec& v) const {
    auto it = ech_.find(k);
    return it == ech_.end() ? v.is_zero() : it->second.contains(v);
  }

  void add(const Key& k, const SparseVec& v) {
    push(k, v);
    while (!work_.empty()) {
      auto [key, x] = std::move(work_.back());
      work_.pop_back();
      const auto [mu, nu] = key;
      for (const auto& [s, g] : A_.generators()) {
        if (left_ && A_.has_weight(mu + s))
          push({mu + s, nu}, A_.multiply(gen_block(g, mu + s, mu), mu + s, mu, x, nu));
        if (right_ && A_.has_weight(nu - s))
          push({mu, nu - s}, A_.multiply(x, mu, nu, gen_block(g, nu, nu - s), nu - s));
      }
    }
  }

  GradedIdeal result() const {
    GradedIdeal r;
    for (const auto& [k, e] : ech_)
      if (e.dim() > 0) r.pieces[k] = e.reduced_rows();
    return r;
  }

private:
  void push(const Key& k, const SparseVec& v) {
    if (v.is_zero()) return;
    Echelon& e = ech_[k];
    SparseVec r = e.reduce(v);
    if (r.is_zero()) return;
    e.add(r);
    work_.emplace_back(k, std::move(r));
  }

  const SparseVec& gen_block(Gen g, long mu, long nu) {
    auto key = std::make_tuple(static_cast<int>(g), mu, nu);
    auto it = blocks_.find(key);
    if (it == blocks_.end()) it = blocks_.emplace(key, A_.block(A_.module().mat(g), mu, nu)).first;
    return it->second;
  }

  const GradedAlgebra& A_;
  bool left_, right_;
  std::map<Key, Echelon> ech_;
  std::vector<std::pair<Key, SparseVec>> work_;
  std::map<std::tuple<int, long, long>, SparseVec> blocks_;
};

}  // namespace

GradedAlgebra::GradedAlgebra(const ModuleRep& x) : x_(x) {
  if (x.small_only()) throw std::invalid_argument("GradedAlgebra: needs a U_z-module");
  local_.resize(x.dim());
  for (int i = 0; i < x.dim(); ++i) {
    auto& v = index_[x.labels()[i]];
    local_[i] = static_cast<int>(v.size());
    v.push_back(i);
  }
  for (const auto& [w, idx] : index_) weights_.push_back(w);
  const long l = x.ell();
  gens_ = {{2, Gen::E}, {-2, Gen::F}, {2 * l, Gen::El}, {-2 * l, Gen::Fl}};
  if (weights_.empty()) return;

  const long span = (weights_.back() - weights_.front()) / 2;
  std::vector<Matrix> Ed, Fd;
  for (long c = 0; c <= span; ++c) {
    Ed.push_back(x.divided_E(c));
    Fd.push_back(x.divided_F(c));
  }
  std::map<Key, Echelon> ech;
  for (long kappa : weights_)
    for (long c = 0; c <= span; ++c) {
      const long nu = kappa - 2 * c;
      if (!has_weight(nu)) continue;
      SparseVec eb = block(Ed[c], kappa, nu);
      if (eb.is_zero()) continue;
      for (long a = 0; a <= span; ++a) {
        const long mu = kappa - 2 * a;
        if (!has_weight(mu)) continue;
        SparseVec fb = block(Fd[a], mu, kappa);
        if (fb.is_zero()) continue;
        ech[{mu, nu}].add(multiply(fb, mu, kappa, eb, nu));
      }
    }
  for (auto& [k, e] : ech)
    if (e.dim() > 0) pieces_[k] = e.reduced_rows();
}

const std::vector<SparseVec>& GradedAlgebra::piece(const Key& k) const {
  static const std::vector<SparseVec> empty;
  auto it = pieces_.find(k);
  return it == pieces_.end() ? empty : it->second;
}

int GradedAlgebra::dim() const {
  int d = 0;
  for (const auto& [k, v] : pieces_) d += static_cast<int>(v.size());
  return d;
}

SparseVec GradedAlgebra::block(const Matrix& m, long mu, long nu) const {
  auto im = index_.find(mu), in = index_.find(nu);
  if (im == index_.end() || in == index_.end()) return {};
  const int dn = static_cast<int>(in->second.size());
  std::vector<SparseVec::Entry> e;
  for (int j = 0; j < dn; ++j)
    for (const auto& [i, c] : m.col(in->second[j]).entries())
      if (x_.labels()[i] == mu) e.emplace_back(local_[i] * dn + j, c);
  return SparseVec::from_entries(std::move(e));
}

SparseVec GradedAlgebra::multiply(const SparseVec& a, long mu, long kappa, const SparseVec& b, long nu) const {
  (void)mu;
  const int dk = weight_dim(kappa), dn = weight_dim(nu);
  std::vector<std::vector<std::pair<int, CycloNum>>> brows(dk);
  for (const auto& [p, c] : b.entries()) brows[p / dn].emplace_back(p % dn, c);
  SparseAccum acc;
  for (const auto& [p, c] : a.entries()) {
    const int i = p / dk, k = p % dk;
    for (const auto& [j, d] : brows[k]) acc.add(i * dn + j, c * d);
  }
  return acc.finish();
}

SparseVec GradedAlgebra::apply(const SparseVec& a, long mu, long nu, const SparseVec& v) const {
  const int dn = weight_dim(nu);
  const auto& im = indices(mu);
  std::vector<CycloNum> loc(dn);
  for (const auto& [i, c] : v.entries()) {
    if (x_.labels()[i] != nu) throw std::invalid_argument("GradedAlgebra::apply: vector not of the source weight");
    loc[local_[i]] = c;
  }
  SparseAccum acc;
  for (const auto& [p, c] : a.entries()) {
    const CycloNum& x = loc[p % dn];
    if (!x.is_zero()) acc.add(im[p / dn], c * x);
  }
  return acc.finish();
}

Matrix GradedAlgebra::to_matrix(const SparseVec& a, long mu, long nu) const {
  Matrix m(x_.dim(), x_.dim());
  const int dn = weight_dim(nu);
  const auto& im = indices(mu);
  const auto& in = indices(nu);
  for (const auto& [p, c] : a.entries()) m.add(im[p / dn], in[p % dn], c);
  return m;
}

int GradedIdeal::dim() const {
  int d = 0;
  for (const auto& [k, v] : pieces) d += static_cast<int>(v.size());
  return d;
}

GradedIdeal whole_ideal(const GradedAlgebra& A) {
  GradedIdeal r;
  r.pieces = A.pieces();
  return r;
}

GradedIdeal ideal_generated(const GradedAlgebra& A, const std::map<Key, std::vector<SparseVec>>& gens) {
  Closure cl(A, true, true);
  for (const auto& [k, vs] : gens)
    for (const auto& v : vs) cl.add(k, v);
  return cl.result();
}

GradedIdeal annihilator(const GradedAlgebra& A, const std::vector<SparseVec>& sub, const std::vector<SparseVec>& lower) {
  const ModuleRep& x = A.module();
  auto split = [&](const std::vector<SparseVec>& vs) {
    std::map<long, std::vector<SparseVec>> m;
    for (const auto& v : vs) {
      if (v.is_zero()) continue;
      const long w = x.labels()[v.lead()];
      for (const auto& e : v.entries())
        if (x.labels()[e.first] != w) throw std::invalid_argument("annihilator: vectors must be weight vectors");
      m[w].push_back(v);
    }
    return m;
  };
  auto subw = split(sub), loww = split(lower);
  GradedIdeal r;
  for (const auto& [key, basis] : A.pieces()) {
    const auto [mu, nu] = key;
    auto is = subw.find(nu);
    if (is == subw.end()) {
      r.pieces[key] = basis;
      continue;
    }
    // functionals on weight mu vanishing on lower
    std::vector<SparseVec> low_local;
    if (auto il = loww.find(mu); il != loww.end())
      for (const auto& v : il->second) {
        std::vector<SparseVec::Entry> e;
        for (const auto& [i, c] : v.entries()) e.emplace_back(A.local(i), c);
        low_local.push_back(SparseVec::from_entries(std::move(e)));
      }
    std::vector<SparseVec> phis = nullspace(low_local, A.weight_dim(mu));
    if (phis.empty()) {
      r.pieces[key] = basis;
      continue;
    }
    const int nb = static_cast<int>(basis.size());
    std::vector<SparseVec> rows;
    for (const auto& s : is->second) {
      std::vector<SparseVec> images;
      for (const auto& b : basis) images.push_back(A.apply(b, mu, nu, s));
      for (const auto& phi : phis) {
        std::vector<SparseVec::Entry> e;
        for (int k = 0; k < nb; ++k) {
          CycloNum d;
          for (const auto& [i, c] : images[k].entries()) {
            CycloNum p = phi.get(A.local(i));
            if (!p.is_zero()) d += p * c;
          }
          if (!d.is_zero()) e.emplace_back(k, d);
        }
        if (!e.empty()) rows.push_back(SparseVec::from_entries(std::move(e)));
      }
    }
    std::vector<SparseVec> sol = nullspace(rows, nb);
    if (sol.empty()) continue;
    Echelon ech;
    for (const auto& s : sol) {
      SparseVec v;
      for (const auto& [k, c] : s.entries()) v.axpy(c, basis[k]);
      ech.add(v);
    }
    r.pieces[key] = ech.reduced_rows();
  }
  return r;
}

std::map<Key, std::vector<SparseVec>> ideal_generators(const GradedAlgebra& A, const GradedIdeal& P) {
  Closure cl(A, true, true);
  std::map<Key, std::vector<SparseVec>> gens;
  // Off-diagonal pieces far from the diagonal tend to generate little; start at the diagonal.
  std::vector<Key> keys;
  for (const auto& [k, v] : P.pieces) keys.push_back(k);
  std::stable_sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    return std::abs(a.first - a.second) < std::abs(b.first - b.second);
  });
  for (const Key& k : keys)
    for (const auto& v : P.pieces.at(k))
      if (!cl.contains(k, v)) {
        gens[k].push_back(v);
        cl.add(k, v);
      }
  return gens;
}

GradedIdeal ideal_product(const GradedAlgebra& A, const GradedIdeal& P, const GradedIdeal& Q) {
  // PQ = A S Q for S generating P as a two-sided ideal.
  Closure cl(A, true, false);
  for (const auto& [kp, ss] : ideal_generators(A, P)) {
    const auto [mu, kappa] = kp;
    for (const auto& [kq, qs] : Q.pieces) {
      if (kq.first != kappa) continue;
      for (const auto& s : ss)
        for (const auto& q : qs) cl.add({mu, kq.second}, A.multiply(s, mu, kappa, q, kq.second));
    }
  }
  return cl.result();
}

GradedIdeal ideal_intersect(const GradedAlgebra& A, const GradedIdeal& P, const GradedIdeal& Q) {
  GradedIdeal r;
  for (const auto& [k, p] : P.pieces) {
    auto it = Q.pieces.find(k);
    if (it == Q.pieces.end()) continue;
    auto v = span_intersect(p, it->second, A.weight_dim(k.first) * A.weight_dim(k.second));
    if (!v.empty()) {
      Echelon e;
      for (const auto& x : v) e.add(x);
      r.pieces[k] = e.reduced_rows();
    }
  }
  return r;
}

GradedIdeal ideal_sum(const GradedAlgebra& A, const GradedIdeal& P, const GradedIdeal& Q) {
  (void)A;
  std::map<Key, Echelon> ech;
  for (const auto* I : {&P, &Q})
    for (const auto& [k, vs] : I->pieces)
      for (const auto& v : vs) ech[k].add(v);
  GradedIdeal r;
  for (const auto& [k, e] : ech)
    if (e.dim() > 0) r.pieces[k] = e.reduced_rows();
  return r;
}

bool ideal_contains(const GradedIdeal& big, const GradedIdeal& small) {
  for (const auto& [k, vs] : small.pieces) {
    auto it = big.pieces.find(k);
    if (it == big.pieces.end()) return false;
    Echelon e;
    for (const auto& v : it->second) e.add(v);
    for (const auto& v : vs)
      if (!e.contains(v)) return false;
  }
  return true;
}

bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b) {
  return a.dim() == b.dim() && ideal_contains(a, b);
}

}  // namespace qhyper
