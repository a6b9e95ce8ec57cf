#include "qhyper/frobenius.hpp"

#include <memory>
#include <mutex>
#include <sstream>

namespace qhyper {

// ---------------------------------------------------------------------------
// Derivations

Matrix build_D_e(const Uzeta& u) {
  const int l = u.ell();
  // D_e(F) = [K; 1-l; 1] E^(l-1)
  UzetaElement deF = u.torus_binom(1 - l, 1) * u.divided_E(l - 1);
  std::vector<UzetaElement> deFa(l, u.zero());
  for (int a = 1; a < l; ++a) {
    UzetaElement s = u.zero();
    for (int i = 0; i < a; ++i) s += u.FK_times(i, 0, deF * u.monomial(a - 1 - i, 0, 0));
    deFa[a] = s;
  }
  Matrix m(u.dim(), u.dim());
  for (int idx = 0; idx < u.dim(); ++idx) {
    auto [a, b, c] = u.triple(idx);
    m.set_col(idx, u.times_KE(deFa[a], b, c).coords());
  }
  return m;
}

Matrix build_D_f(const Uzeta& u, const Matrix& de) {
  Matrix om(u.dim(), u.dim());
  for (int idx = 0; idx < u.dim(); ++idx)
    om.set_col(idx, u.omega(u.element(SparseVec::unit(idx))).coords());
  return om * (de * om);
}

Matrix build_D_h(const Matrix& de, const Matrix& df) { return de * df - df * de; }

FrobeniusAction::FrobeniusAction(const Uzeta& u) : u_(&u) {
  omega_ = Matrix(u.dim(), u.dim());
  for (int idx = 0; idx < u.dim(); ++idx)
    omega_.set_col(idx, u.omega(u.element(SparseVec::unit(idx))).coords());
  de_ = build_D_e(u);
  df_ = omega_ * (de_ * omega_);
  dh_ = build_D_h(de_, df_);
}

const FrobeniusAction& FrobeniusAction::get(int ell) {
  const Uzeta& u = Uzeta::get(ell);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FrobeniusAction>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[ell];
  if (!slot) slot.reset(new FrobeniusAction(u));
  return *slot;
}

const Matrix& FrobeniusAction::D(SlGen g) const {
  switch (g) {
    case SlGen::e: return de_;
    case SlGen::f: return df_;
    case SlGen::h: return dh_;
  }
  return dh_;
}

UzetaElement FrobeniusAction::apply(SlGen g, const UzetaElement& x) const {
  return u_->element(D(g).apply(x.coords()));
}

UDecomposition u_decompose(const FrobeniusAction& fa, const std::vector<SparseVec>& span) {
  std::vector<SparseVec> basis = span_basis(span);
  Echelon ech;
  for (const auto& b : basis) ech.add(b);
  const int n = static_cast<int>(basis.size());
  for (SlGen g : {SlGen::e, SlGen::f, SlGen::h})
    for (const auto& b : basis)
      if (!ech.contains(fa.D(g).apply(b)))
        throw std::invalid_argument("u_decompose: subspace is not stable under the sl2 action");
  UDecomposition d;
  d.dim = n;
  std::vector<SparseVec> dh;
  for (const auto& b : basis) dh.push_back(fa.D(SlGen::h).apply(b));
  int total = 0;
  for (int lambda = -2; lambda <= 2; ++lambda) {
    std::vector<SparseVec> shifted;
    for (int i = 0; i < n; ++i) shifted.push_back(dh[i] - basis[i].scaled(CycloNum(static_cast<long>(lambda))));
    int k = n - static_cast<int>(rank(shifted));
    if (k > 0) d.eigen[lambda] = k;
    total += k;
  }
  const int N = fa.algebra().dim();
  std::vector<SparseVec> stacked;
  for (const auto& b : basis) stacked.push_back(fa.D(SlGen::e).apply(b) + fa.D(SlGen::f).apply(b).shifted(N));
  d.invariants = n - static_cast<int>(rank(stacked));
  d.m0 = d.eigen.count(0) ? d.eigen.at(0) : 0;
  d.m1 = d.eigen.count(1) ? d.eigen.at(1) : 0;
  if (total != n || d.eigen.count(2) || d.eigen.count(-2))
    throw std::invalid_argument("u_decompose: D_h has eigenvalues outside {-1, 0, 1}");
  return d;
}

// ---------------------------------------------------------------------------
// U(sl2)

namespace {

int degree(const UMono& m) { return m[0] + m[1] + m[2]; }

void u_add_term(UElement& a, const UMono& m, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = a.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

void check_bound(const UMono& m, int bound) {
  if (degree(m) > bound)
    throw TruncationError("U-degree " + std::to_string(degree(m)) + " exceeds truncation bound " +
                          std::to_string(bound));
}

// g * f^i h^j e^k, normal ordered.
UElement u_left_gen(SlGen g, const UMono& m, int bound) {
  auto [i, j, k] = m;
  UElement r;
  switch (g) {
    case SlGen::f:
      u_add_term(r, {i + 1, j, k}, CycloNum(1L));
      break;
    case SlGen::h:
      // h f^i = f^i (h - 2i)
      u_add_term(r, {i, j + 1, k}, CycloNum(1L));
      u_add_term(r, {i, j, k}, CycloNum(-2L * i));
      break;
    case SlGen::e: {
      // e f^i h^j = f^i (h-2)^j e + i f^(i-1) (h - i + 1) h^j
      for (int s = 0; s <= j; ++s) {
        mpz_class c = binom_z(j, s);
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(j - s));
        if ((j - s) % 2) p = -p;
        u_add_term(r, {i, s, k + 1}, CycloNum(mpq_class(c * p)));
      }
      if (i > 0) {
        u_add_term(r, {i - 1, j + 1, k}, CycloNum(static_cast<long>(i)));
        u_add_term(r, {i - 1, j, k}, CycloNum(static_cast<long>(i) * (1 - i)));
      }
      break;
    }
  }
  for (const auto& [mm, c] : r) check_bound(mm, bound);
  return r;
}

UElement u_left_gen(SlGen g, const UElement& y, int bound) {
  UElement r;
  for (const auto& [m, c] : y)
    for (const auto& [mm, cc] : u_left_gen(g, m, bound)) u_add_term(r, mm, cc * c);
  return r;
}

}  // namespace

UElement u_monomial(int i, int j, int k, const CycloNum& c) {
  UElement r;
  u_add_term(r, {i, j, k}, c);
  return r;
}

UElement u_add(const UElement& a, const UElement& b, const CycloNum& scale) {
  UElement r = a;
  for (const auto& [m, c] : b) u_add_term(r, m, c * scale);
  return r;
}

UElement u_mul(const UElement& a, const UElement& b, int bound) {
  UElement r;
  for (const auto& [m, c] : a) {
    UElement y = b;
    for (int t = 0; t < m[2]; ++t) y = u_left_gen(SlGen::e, y, bound);
    for (int t = 0; t < m[1]; ++t) y = u_left_gen(SlGen::h, y, bound);
    for (int t = 0; t < m[0]; ++t) y = u_left_gen(SlGen::f, y, bound);
    for (const auto& [mm, cc] : y) u_add_term(r, mm, cc * c);
  }
  return r;
}

UElement u_bracket(const UElement& a, const UElement& b, int bound) {
  return u_add(u_mul(a, b, bound), u_mul(b, a, bound), CycloNum(-1L));
}

UElement u_omega(const UElement& a, int bound) {
  UElement r;
  const UElement e = u_monomial(0, 0, 1), f = u_monomial(1, 0, 0), mh = u_monomial(0, 1, 0, CycloNum(-1L));
  for (const auto& [m, c] : a) {
    UElement t = u_monomial(0, 0, 0, c);
    for (int s = 0; s < m[0]; ++s) t = u_mul(t, e, bound);
    for (int s = 0; s < m[1]; ++s) t = u_mul(t, mh, bound);
    for (int s = 0; s < m[2]; ++s) t = u_mul(t, f, bound);
    r = u_add(r, t);
  }
  return r;
}

UElement u_casimir() {
  UElement c = u_monomial(1, 0, 1, CycloNum(4L));
  c = u_add(c, u_monomial(0, 2, 0));
  c = u_add(c, u_monomial(0, 1, 0, CycloNum(2L)));
  return u_add(c, u_monomial(0, 0, 0));
}

std::string u_to_string(const UElement& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (m[0]) os << " f^" << m[0];
    if (m[1]) os << " h^" << m[1];
    if (m[2]) os << " e^" << m[2];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Smash product

void SmashElement::add(const SmashKey& k, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

SmashElement& SmashElement::operator+=(const SmashElement& o) {
  for (const auto& [k, c] : o.t_) add(k, c);
  return *this;
}

SmashElement& SmashElement::operator-=(const SmashElement& o) {
  for (const auto& [k, c] : o.t_) add(k, -c);
  return *this;
}

SmashElement SmashElement::scaled(const CycloNum& c) const {
  SmashElement r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : t_) r.t_.emplace(k, x * c);
  return r;
}

int SmashElement::max_degree() const {
  int d = 0;
  for (const auto& [k, c] : t_) d = std::max(d, k[1] + k[2] + k[3]);
  return d;
}

SmashElement operator+(SmashElement a, const SmashElement& b) { return a += b; }
SmashElement operator-(SmashElement a, const SmashElement& b) { return a -= b; }

SmashElement SmashAlgebra::embed(const UzetaElement& x) const {
  SmashElement r;
  for (const auto& [i, c] : x.coords().entries()) r.add({i, 0, 0, 0}, c);
  return r;
}

SmashElement SmashAlgebra::embed(const UElement& u) const { return tensor(algebra().one(), u); }

SmashElement SmashAlgebra::tensor(const UzetaElement& x, const UElement& u) const {
  SmashElement r;
  for (const auto& [i, c] : x.coords().entries())
    for (const auto& [m, cu] : u) r.add({i, m[0], m[1], m[2]}, c * cu);
  return r;
}

SmashElement SmashAlgebra::gen(SlGen g) const {
  switch (g) {
    case SlGen::e: return embed(u_monomial(0, 0, 1));
    case SlGen::f: return embed(u_monomial(1, 0, 0));
    case SlGen::h: return embed(u_monomial(0, 1, 0));
  }
  return {};
}

SmashElement SmashAlgebra::left_gen(SlGen g, const SmashElement& y, int bound) const {
  // (1 # g)(w # m) = D_g(w) # m + w # (g m)
  SmashElement r;
  const Matrix& D = fa_->D(g);
  for (const auto& [key, c] : y.terms()) {
    UMono m{key[1], key[2], key[3]};
    for (const auto& [i, dc] : D.col(key[0]).entries()) r.add({i, m[0], m[1], m[2]}, dc * c);
    for (const auto& [mm, cc] : u_left_gen(g, m, bound)) r.add({key[0], mm[0], mm[1], mm[2]}, cc * c);
  }
  return r;
}

SmashElement SmashAlgebra::multiply(const SmashElement& x, const SmashElement& y, int bound) const {
  const Uzeta& u = algebra();
  // Group x by U-monomial so each (1 # m) y is computed once.
  std::map<UMono, SparseAccum> groups;
  for (const auto& [key, c] : x.terms()) groups[{key[1], key[2], key[3]}].add(key[0], c);
  SmashElement r;
  for (auto& [m, acc] : groups) {
    UzetaElement xm = u.element(acc.finish());
    SmashElement w = y;
    for (int t = 0; t < m[2]; ++t) w = left_gen(SlGen::e, w, bound);
    for (int t = 0; t < m[1]; ++t) w = left_gen(SlGen::h, w, bound);
    for (int t = 0; t < m[0]; ++t) w = left_gen(SlGen::f, w, bound);
    // (xm # 1)(w_k # k)
    for (auto& [mm, part] : by_monomial(w)) {
      UzetaElement prod = xm * part;
      for (const auto& [i, c] : prod.coords().entries()) r.add({i, mm[0], mm[1], mm[2]}, c);
    }
  }
  return r;
}

SmashElement SmashAlgebra::commutator(const SmashElement& x, const SmashElement& y, int bound) const {
  return multiply(x, y, bound) - multiply(y, x, bound);
}

std::map<UMono, UzetaElement> SmashAlgebra::by_monomial(const SmashElement& z) const {
  std::map<UMono, SparseAccum> acc;
  for (const auto& [key, c] : z.terms()) acc[{key[1], key[2], key[3]}].add(key[0], c);
  std::map<UMono, UzetaElement> out;
  for (auto& [m, a] : acc) {
    SparseVec v = a.finish();
    if (!v.is_zero()) out.emplace(m, algebra().element(std::move(v)));
  }
  return out;
}

}  // namespace qhyper
