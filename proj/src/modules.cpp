#include "qhyper/modules.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "qhyper/graded.hpp"

namespace qhyper {

namespace {

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

Matrix diag_of(const std::vector<long>& labels, const std::function<CycloNum(long)>& fn) {
  std::vector<CycloNum> d;
  d.reserve(labels.size());
  for (long w : labels) d.push_back(fn(w));
  return Matrix::diagonal(d);
}

ModuleRep permuted(const ModuleRep& x, const std::vector<int>& perm, std::string name) {
  // new index k is old index perm[k]
  const int n = x.dim();
  std::vector<int> inv(n);
  for (int k = 0; k < n; ++k) inv[perm[k]] = k;
  auto remap = [&](const Matrix& m) {
    Matrix r(n, n);
    for (int k = 0; k < n; ++k)
      for (const auto& [i, c] : m.col(perm[k]).entries()) r.add(inv[i], k, c);
    return r;
  };
  std::vector<long> labels(n);
  for (int k = 0; k < n; ++k) labels[k] = x.labels()[perm[k]];
  return ModuleRep(x.field(), std::move(name), std::move(labels), remap(x.mat(Gen::E)), remap(x.mat(Gen::F)),
                   remap(x.mat(Gen::El)), remap(x.mat(Gen::Fl)), x.small_only());
}

long grade(const ModuleRep& x, int i, Level lv) {
  long w = x.labels()[i];
  return lv == Level::full ? w : floor_mod(w, x.ell());
}

std::vector<Gen> level_gens(Level lv) {
  if (lv == Level::full) return {Gen::E, Gen::F, Gen::El, Gen::Fl};
  return {Gen::E, Gen::F};
}

std::map<long, std::vector<int>> by_grade(const ModuleRep& x, Level lv) {
  std::map<long, std::vector<int>> m;
  for (int i = 0; i < x.dim(); ++i) m[grade(x, i, lv)].push_back(i);
  return m;
}

std::vector<SparseVec> lift(const std::vector<SparseVec>& vs, const std::vector<int>& to_global) {
  std::vector<SparseVec> out;
  for (const auto& v : vs) {
    std::vector<SparseVec::Entry> e;
    for (const auto& [i, c] : v.entries()) e.emplace_back(to_global[i], c);
    out.push_back(SparseVec::from_entries(std::move(e)));
  }
  return out;
}

// Complement of the echelon pivots of sub, in increasing order.
std::vector<int> non_pivots(const Echelon& ech, int n) {
  std::vector<int> q;
  for (int i = 0; i < n; ++i)
    if (!ech.is_pivot(i)) q.push_back(i);
  return q;
}

}  // namespace

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::E: return "E";
    case Gen::F: return "F";
    case Gen::K: return "K";
    case Gen::El: return "El";
    case Gen::Fl: return "Fl";
  }
  return "?";
}

ModuleRep::ModuleRep(const CycloField& f, std::string name, std::vector<long> labels, Matrix E, Matrix F,
                     Matrix El, Matrix Fl, bool small_only)
    : f_(&f), name_(std::move(name)), labels_(std::move(labels)), E_(std::move(E)), F_(std::move(F)),
      El_(std::move(El)), Fl_(std::move(Fl)), small_only_(small_only) {
  const int n = dim();
  for (const Matrix* m : {&E_, &F_, &El_, &Fl_})
    if (m->rows() != n || m->cols() != n) throw std::invalid_argument("ModuleRep: matrix size mismatch");
  K_ = diag_of(labels_, [&](long w) { return CycloNum::zeta_pow(f, w); });
}

const Matrix& ModuleRep::mat(Gen g) const {
  switch (g) {
    case Gen::E: return E_;
    case Gen::F: return F_;
    case Gen::K: return K_;
    case Gen::El: return El_;
    case Gen::Fl: return Fl_;
  }
  throw std::invalid_argument("unknown generator");
}

Matrix ModuleRep::K_pow(long b) const {
  return diag_of(labels_, [&](long w) { return CycloNum::zeta_pow(*f_, b * w); });
}

Matrix ModuleRep::torus_diag(long c, long t) const {
  return diag_of(labels_, [&](long w) { return gauss_binom(*f_, w + c, t); });
}

Matrix ModuleRep::divided_E(long c) const {
  const long l = ell();
  Matrix m = E_.pow(static_cast<int>(c % l)).scaled(q_factorial(*f_, c % l).inverse());
  if (c >= l) {
    mpz_class fact = 1;
    for (long k = 2; k <= c / l; ++k) fact *= k;
    m = m * El_.pow(static_cast<int>(c / l)).scaled(CycloNum(mpq_class(mpz_class(1), fact)));
  }
  return m;
}

Matrix ModuleRep::divided_F(long a) const {
  const long l = ell();
  Matrix m = F_.pow(static_cast<int>(a % l)).scaled(q_factorial(*f_, a % l).inverse());
  if (a >= l) {
    mpz_class fact = 1;
    for (long k = 2; k <= a / l; ++k) fact *= k;
    m = m * Fl_.pow(static_cast<int>(a / l)).scaled(CycloNum(mpq_class(mpz_class(1), fact)));
  }
  return m;
}

Matrix ModuleRep::act(const UzetaElement& x) const {
  const Uzeta& u = Uzeta::get(ell());
  const int l = ell();
  std::map<std::pair<int, int>, std::vector<CycloNum>> diag;  // (a, c) -> diagonal entries
  for (const auto& [idx, coef] : x.coords().entries()) {
    auto [a, b, c] = u.triple(idx);
    auto& d = diag[{a, c}];
    if (d.empty()) d.assign(dim(), CycloNum());
    for (int i = 0; i < dim(); ++i) d[i] += coef * CycloNum::zeta_pow(*f_, static_cast<long>(b) * labels_[i]);
  }
  std::vector<Matrix> Ep(l), Fp(l);
  Ep[0] = Fp[0] = Matrix::identity(dim());
  for (int k = 1; k < l; ++k) {
    Ep[k] = Ep[k - 1] * E_;
    Fp[k] = Fp[k - 1] * F_;
  }
  Matrix r(dim(), dim());
  for (const auto& [ac, d] : diag) r = r + Fp[ac.first] * Matrix::diagonal(d) * Ep[ac.second];
  return r;
}

long ModuleRep::highest_weight() const {
  if (labels_.empty()) throw std::logic_error("zero module has no highest weight");
  return *std::max_element(labels_.begin(), labels_.end());
}

std::map<long, int> ModuleRep::character() const {
  std::map<long, int> ch;
  for (long w : labels_) ++ch[w];
  return ch;
}

ModuleRep simple_L(const CycloField& f, long r) {
  if (r < 0 || r >= f.ell()) throw std::invalid_argument("simple_L: need 0 <= r < l");
  const int n = static_cast<int>(r) + 1;
  Matrix E(n, n), F(n, n);
  std::vector<long> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = r - 2 * i;
    if (i >= 1) E.add(i - 1, i, q_int(f, r - i + 1));
    if (i + 1 < n) F.add(i + 1, i, q_int(f, i + 1));
  }
  return ModuleRep(f, "L(" + std::to_string(r) + ")", std::move(labels), E, F, Matrix(n, n), Matrix(n, n));
}

ModuleRep weyl_W(const CycloField& f, long m) {
  if (m < 0) throw std::invalid_argument("weyl_W: need m >= 0");
  const int n = static_cast<int>(m) + 1;
  const int l = f.ell();
  Matrix E(n, n), F(n, n), El(n, n), Fl(n, n);
  std::vector<long> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = m - 2 * i;
    if (i >= 1) E.add(i - 1, i, q_int(f, m - i + 1));
    if (i + 1 < n) F.add(i + 1, i, q_int(f, i + 1));
    if (i >= l) El.add(i - l, i, gauss_binom(f, m - i + l, l));
    if (i + l < n) Fl.add(i + l, i, gauss_binom(f, i + l, l));
  }
  return ModuleRep(f, "W(" + std::to_string(m) + ")", std::move(labels), E, F, El, Fl);
}

ModuleRep coweyl_M(const CycloField& f, long m) {
  ModuleRep d = dual(weyl_W(f, m));
  std::vector<int> perm(d.dim());
  for (int k = 0; k < d.dim(); ++k) perm[k] = d.dim() - 1 - k;
  return permuted(d, perm, "M(" + std::to_string(m) + ")");
}

ModuleRep injective_I(const CycloField& f, long r) {
  const int l = f.ell();
  if (r < 0 || r >= l) throw std::invalid_argument("injective_I: need 0 <= r < l");
  const std::string name = "I(" + std::to_string(r) + ")";
  if (r == l - 1) {
    ModuleRep s = simple_L(f, r);
    return ModuleRep(f, name, s.labels(), s.mat(Gen::E), s.mat(Gen::F), s.mat(Gen::El), s.mat(Gen::Fl));
  }
  const long top = 2 * l - 2 - r;  // the Weyl submodule W(top)
  const long rp = l - 2 - r;
  ModuleRep w = weyl_W(f, top);
  const int nv = static_cast<int>(top) + 1;
  const int n = nv + static_cast<int>(r) + 1;
  Matrix E(n, n), F(n, n), El(n, n), Fl(n, n);
  for (Gen g : {Gen::E, Gen::F, Gen::El, Gen::Fl}) {
    Matrix& dst = g == Gen::E ? E : g == Gen::F ? F : g == Gen::El ? El : Fl;
    for (int j = 0; j < nv; ++j)
      for (const auto& [i, c] : w.mat(g).col(j).entries()) dst.add(i, j, c);
  }
  std::vector<long> labels(w.labels());
  const CycloNum a = q_int(f, l - r - 1);
  const CycloNum b = (r % 2 == 0) ? a : -a;
  for (int i = 0; i <= r; ++i) {
    labels.push_back(r - 2 * i);
    const int zi = nv + i;
    if (i >= 1) E.add(zi - 1, zi, q_int(f, r - i + 1));
    E.add(static_cast<int>(rp) + i, zi, a * gauss_binom(f, rp + i, i));
    if (i < r)
      F.add(zi + 1, zi, q_int(f, i + 1));
    else
      F.add(l, zi, b);
  }
  return ModuleRep(f, name, std::move(labels), E, F, El, Fl);
}

ModuleRep tensor_frobenius(const ModuleRep& x, long n) {
  if (n < 0) throw std::invalid_argument("tensor_frobenius: need n >= 0");
  if (x.small_only()) throw std::invalid_argument("tensor_frobenius: needs a U_z-module");
  const int N = static_cast<int>(n) + 1;
  const int d = x.dim() * N;
  const int l = x.ell();
  auto left = [&](const Matrix& m) {
    Matrix r(d, d);
    for (int j = 0; j < x.dim(); ++j)
      for (const auto& [i, c] : m.col(j).entries())
        for (int k = 0; k < N; ++k) r.add(i * N + k, j * N + k, c);
    return r;
  };
  Matrix El = left(x.mat(Gen::El)), Fl = left(x.mat(Gen::Fl));
  std::vector<long> labels(d);
  for (int j = 0; j < x.dim(); ++j)
    for (int k = 0; k < N; ++k) {
      labels[j * N + k] = x.labels()[j] + static_cast<long>(l) * (n - 2 * k);
      if (k >= 1) El.add(j * N + k - 1, j * N + k, CycloNum(n - k + 1));
      if (k + 1 < N) Fl.add(j * N + k + 1, j * N + k, CycloNum(static_cast<long>(k) + 1));
    }
  return ModuleRep(x.field(), x.name() + "(x)Fr" + std::to_string(n), std::move(labels), left(x.mat(Gen::E)),
                   left(x.mat(Gen::F)), El, Fl);
}

ModuleRep simple_module(const CycloField& f, long m) {
  if (m < 0) throw std::invalid_argument("simple_module: need m >= 0");
  const int l = f.ell();
  if (m < l) return simple_L(f, m);
  ModuleRep t = tensor_frobenius(simple_L(f, m % l), m / l);
  return ModuleRep(f, "L(" + std::to_string(m) + ")", t.labels(), t.mat(Gen::E), t.mat(Gen::F), t.mat(Gen::El),
                   t.mat(Gen::Fl));
}

ModuleRep injective_module(const CycloField& f, long m) {
  if (m < 0) throw std::invalid_argument("injective_module: need m >= 0");
  const int l = f.ell();
  if (m < l) return injective_I(f, m);
  ModuleRep t = tensor_frobenius(injective_I(f, m % l), m / l);
  return ModuleRep(f, "I(" + std::to_string(m) + ")", t.labels(), t.mat(Gen::E), t.mat(Gen::F), t.mat(Gen::El),
                   t.mat(Gen::Fl));
}

ModuleRep direct_sum(const std::vector<ModuleRep>& parts, std::string name) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
  int d = 0;
  bool small = false;
  for (const auto& p : parts) {
    d += p.dim();
    small = small || p.small_only();
  }
  Matrix m[4] = {Matrix(d, d), Matrix(d, d), Matrix(d, d), Matrix(d, d)};
  const Gen gens[4] = {Gen::E, Gen::F, Gen::El, Gen::Fl};
  std::vector<long> labels;
  int off = 0;
  for (const auto& p : parts) {
    for (int g = 0; g < 4; ++g)
      for (int j = 0; j < p.dim(); ++j)
        for (const auto& [i, c] : p.mat(gens[g]).col(j).entries()) m[g].add(off + i, off + j, c);
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
    off += p.dim();
  }
  return ModuleRep(parts.front().field(), std::move(name), std::move(labels), m[0], m[1], m[2], m[3], small);
}

ModuleRep dual(const ModuleRep& x) {
  // rho*(y) = rho(S y)^T with S(E) = -K^-1 E, S(F) = -F K, S(E^(l)) = -E^(l), S(F^(l)) = -F^(l)
  const CycloNum minus(-1L);
  Matrix E = (x.K_pow(-1) * x.mat(Gen::E)).transpose().scaled(minus);
  Matrix F = (x.mat(Gen::F) * x.mat(Gen::K)).transpose().scaled(minus);
  Matrix El = x.mat(Gen::El).transpose().scaled(minus);
  Matrix Fl = x.mat(Gen::Fl).transpose().scaled(minus);
  std::vector<long> labels;
  for (long w : x.labels()) labels.push_back(-w);
  return ModuleRep(x.field(), "dual " + x.name(), std::move(labels), E, F, El, Fl, x.small_only());
}

ModuleRep restrict_small(const ModuleRep& x) {
  const int n = x.dim();
  return ModuleRep(x.field(), x.name() + "|u", x.labels(), x.mat(Gen::E), x.mat(Gen::F), Matrix(n, n), Matrix(n, n),
                   true);
}

std::vector<RelationCheck> relation_checklist(const ModuleRep& x) {
  const CycloField& f = x.field();
  const int l = x.ell();
  const int n = x.dim();
  const Matrix& E = x.mat(Gen::E);
  const Matrix& F = x.mat(Gen::F);
  const Matrix& K = x.mat(Gen::K);
  const Matrix& El = x.mat(Gen::El);
  const Matrix& Fl = x.mat(Gen::Fl);
  const Matrix I = Matrix::identity(n);
  std::vector<RelationCheck> out;
  auto check = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };

  auto shifts = [&](const Matrix& m, long s, bool modl) {
    for (int j = 0; j < n; ++j)
      for (const auto& e : m.col(j).entries()) {
        long d = x.labels()[e.first] - x.labels()[j] - s;
        if (modl ? floor_mod(d, l) != 0 : d != 0) return false;
      }
    return true;
  };
  const bool small = x.small_only();
  check("weight labels", shifts(E, 2, small) && shifts(F, -2, small) &&
                             (small || (shifts(El, 2L * l, false) && shifts(Fl, -2L * l, false))));
  check("K E K^-1 = z^2 E", K * E == E.scaled(CycloNum::zeta_pow(f, 2)) * K);
  check("K F K^-1 = z^-2 F", K * F == F.scaled(CycloNum::zeta_pow(f, -2)) * K);
  const CycloNum inv = (CycloNum::zeta_pow(f, 1) - CycloNum::zeta_pow(f, -1)).inverse();
  check("[E,F] = (K - K^-1)/(z - z^-1)", commutator(E, F) == (K - x.K_pow(-1)).scaled(inv));
  check("E^l = 0", E.pow(l).is_zero());
  check("F^l = 0", F.pow(l).is_zero());
  check("K^l = 1", K.pow(l) == I);
  if (small) return out;

  check("[El,E] = 0", commutator(El, E).is_zero());
  check("[Fl,F] = 0", commutator(Fl, F).is_zero());
  check("[K,El] = 0", commutator(K, El).is_zero());
  check("[K,Fl] = 0", commutator(K, Fl).is_zero());
  const CycloNum inv_fact = q_factorial(f, l - 1).inverse();
  const Matrix T = x.torus_diag(1 - l, 1);
  check("[El,F] = [K;1-l,1] E^(l-1)", commutator(El, F) == T * E.pow(l - 1).scaled(inv_fact));
  check("[Fl,E] = -F^(l-1) [K;1-l,1]", commutator(Fl, E) == (F.pow(l - 1) * T).scaled(-inv_fact));
  const Matrix H = commutator(El, Fl);
  check("[H,El] = 2 El", commutator(H, El) == El.scaled(CycloNum(2L)));
  check("[H,Fl] = -2 Fl", commutator(H, Fl) == Fl.scaled(CycloNum(-2L)));

  // H preserves labels; on each weight space it must be diagonalizable with
  // integer eigenvalues bounded by the dimension.
  bool diag_ok = true;
  std::map<long, std::vector<int>> ws;
  for (int i = 0; i < n; ++i) ws[x.labels()[i]].push_back(i);
  for (const auto& [w, idx] : ws) {
    const int k = static_cast<int>(idx.size());
    std::map<int, int> pos;
    for (int a = 0; a < k; ++a) pos[idx[a]] = a;
    int total = 0;
    for (long lam = -n; lam <= n && diag_ok; ++lam) {
      std::vector<std::vector<SparseVec::Entry>> rows(k);
      for (int a = 0; a < k; ++a) {
        for (const auto& [i, c] : H.col(idx[a]).entries()) {
          auto it = pos.find(i);
          if (it == pos.end()) {
            diag_ok = false;
            break;
          }
          rows[it->second].emplace_back(a, c);
        }
        rows[a].emplace_back(a, CycloNum(-lam));
      }
      std::vector<SparseVec> rv;
      for (auto& r : rows) rv.push_back(SparseVec::from_entries(std::move(r)));
      total += k - static_cast<int>(rank(rv));
    }
    if (total != k) diag_ok = false;
  }
  check("[El,Fl] diagonalizable with integer eigenvalues", diag_ok);
  return out;
}

bool passes_checklist(const ModuleRep& x) {
  for (const auto& c : relation_checklist(x))
    if (!c.ok) return false;
  return true;
}

bool verify_lemma1_H(const ModuleRep& x) {
  const Uzeta& u = Uzeta::get(x.ell());
  const Matrix H = commutator(x.mat(Gen::El), x.mat(Gen::Fl));
  return H == x.torus_diag(0, x.ell()) + x.act(u.lemma1_f());
}

std::vector<SparseVec> weight_components(const ModuleRep& x, const SparseVec& v, Level lv) {
  std::map<long, std::vector<SparseVec::Entry>> parts;
  for (const auto& e : v.entries()) parts[grade(x, e.first, lv)].push_back(e);
  std::vector<SparseVec> out;
  for (auto& [g, e] : parts) out.push_back(SparseVec::from_entries(std::move(e)));
  return out;
}

std::vector<SparseVec> submodule_closure(const ModuleRep& x, const std::vector<SparseVec>& gens, Level lv) {
  Echelon ech;
  std::vector<SparseVec> work;
  auto push = [&](const SparseVec& v) {
    SparseVec r = ech.reduce(v);
    if (r.is_zero()) return;
    ech.add(r);
    work.push_back(std::move(r));
  };
  for (const auto& g : gens)
    for (const auto& c : weight_components(x, g, lv)) push(c);
  const std::vector<Gen> gl = level_gens(lv);
  while (!work.empty()) {
    SparseVec v = std::move(work.back());
    work.pop_back();
    for (Gen g : gl) push(x.mat(g).apply(v));
  }
  return ech.reduced_rows();
}

ModuleRep submodule(const ModuleRep& x, const std::vector<SparseVec>& sub, Level lv) {
  Echelon ech;
  for (const auto& v : sub) ech.add(v);
  std::vector<SparseVec> rows = ech.reduced_rows();
  const int k = static_cast<int>(rows.size());
  std::vector<long> labels;
  std::map<int, int> lead_pos;
  for (int a = 0; a < k; ++a) {
    labels.push_back(x.labels()[rows[a].lead()]);
    lead_pos[rows[a].lead()] = a;
  }
  auto restrict = [&](Gen g) {
    Matrix m(k, k);
    if (lv == Level::small && (g == Gen::El || g == Gen::Fl)) return m;
    for (int a = 0; a < k; ++a) {
      SparseVec img = x.mat(g).apply(rows[a]);
      for (const auto& [i, c] : img.entries()) {
        auto it = lead_pos.find(i);
        if (it != lead_pos.end()) m.add(it->second, a, c);
      }
      SparseVec back;
      for (const auto& [p, b] : lead_pos) {
        CycloNum c = img.get(p);
        if (!c.is_zero()) back.axpy(c, rows[b]);
      }
      if (back != img) throw std::invalid_argument("submodule: subspace is not stable");
    }
    return m;
  };
  return ModuleRep(x.field(), "sub " + x.name(), std::move(labels), restrict(Gen::E), restrict(Gen::F),
                   restrict(Gen::El), restrict(Gen::Fl), x.small_only() || lv == Level::small);
}

ModuleRep quotient(const ModuleRep& x, const std::vector<SparseVec>& sub, Level lv) {
  Echelon ech;
  for (const auto& v : sub) ech.add(v);
  std::vector<int> q = non_pivots(ech, x.dim());
  const int k = static_cast<int>(q.size());
  std::map<int, int> pos;
  for (int a = 0; a < k; ++a) pos[q[a]] = a;
  std::vector<long> labels;
  for (int i : q) labels.push_back(x.labels()[i]);
  auto induced = [&](Gen g) {
    Matrix m(k, k);
    if (lv == Level::small && (g == Gen::El || g == Gen::Fl)) return m;
    for (int a = 0; a < k; ++a) {
      SparseVec img = ech.reduce(x.mat(g).col(q[a]));
      for (const auto& [i, c] : img.entries()) m.add(pos.at(i), a, c);
    }
    return m;
  };
  return ModuleRep(x.field(), "quot " + x.name(), std::move(labels), induced(Gen::E), induced(Gen::F),
                   induced(Gen::El), induced(Gen::Fl), x.small_only() || lv == Level::small);
}

std::vector<Matrix> intertwiners(const ModuleRep& a, const ModuleRep& b, Level lv) {
  auto ga = by_grade(a, lv), gb = by_grade(b, lv);
  // unknown phi(i, j), i in b, j in a, same grade
  std::map<std::pair<int, int>, int> unk;
  std::vector<std::pair<int, int>> unk_list;
  for (const auto& [g, js] : ga) {
    auto it = gb.find(g);
    if (it == gb.end()) continue;
    for (int j : js)
      for (int i : it->second) {
        unk[{i, j}] = static_cast<int>(unk_list.size());
        unk_list.emplace_back(i, j);
      }
  }
  const int nu = static_cast<int>(unk_list.size());
  if (nu == 0) return {};
  std::map<std::tuple<int, int, int>, SparseAccum> eqs;
  int gi = 0;
  for (Gen g : level_gens(lv)) {
    const Matrix& A = a.mat(g);
    const Matrix& B = b.mat(g);
    for (int j = 0; j < a.dim(); ++j) {
      // (phi A)(i, j) = sum_k phi(i, k) A(k, j)
      for (const auto& [k, c] : A.col(j).entries()) {
        auto it = gb.find(grade(a, k, lv));
        if (it == gb.end()) continue;
        for (int i : it->second) eqs[{gi, i, j}].add(unk.at({i, k}), c);
      }
      // -(B phi)(i, j) = -sum_k B(i, k) phi(k, j)
      auto it = gb.find(grade(a, j, lv));
      if (it == gb.end()) continue;
      for (int k : it->second)
        for (const auto& [i, c] : B.col(k).entries()) eqs[{gi, i, j}].add(unk.at({k, j}), -c);
    }
    ++gi;
  }
  std::vector<SparseVec> rows;
  for (auto& [key, acc] : eqs) {
    SparseVec r = acc.finish();
    if (!r.is_zero()) rows.push_back(std::move(r));
  }
  std::vector<Matrix> out;
  for (const auto& sol : nullspace(rows, nu)) {
    Matrix m(b.dim(), a.dim());
    for (const auto& [u, c] : sol.entries()) m.add(unk_list[u].first, unk_list[u].second, c);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<SparseVec> isotypic_socle(const ModuleRep& x, const ModuleRep& s, Level lv) {
  Echelon ech;
  for (const auto& phi : intertwiners(s, x, lv))
    for (int j = 0; j < s.dim(); ++j) ech.add(phi.col(j));
  return ech.reduced_rows();
}

namespace {

std::vector<std::pair<long, ModuleRep>> simple_candidates(const ModuleRep& x, Level lv) {
  std::vector<std::pair<long, ModuleRep>> out;
  if (lv == Level::small) {
    for (long r = 0; r < x.ell(); ++r) out.emplace_back(r, restrict_small(simple_L(x.field(), r)));
    return out;
  }
  std::set<long> ws;
  for (long w : x.labels())
    if (w >= 0) ws.insert(w);
  for (long w : ws) out.emplace_back(w, simple_module(x.field(), w));
  return out;
}

}  // namespace

std::vector<SparseVec> socle(const ModuleRep& x, Level lv) {
  Echelon ech;
  for (const auto& [w, s] : simple_candidates(x, lv))
    for (const auto& v : isotypic_socle(x, s, lv)) ech.add(v);
  return ech.reduced_rows();
}

std::map<long, int> socle_factors(const ModuleRep& x, Level lv) {
  std::map<long, int> out;
  for (const auto& [w, s] : simple_candidates(x, lv)) {
    int k = static_cast<int>(intertwiners(s, x, lv).size());
    if (k > 0) out[w] = k;
  }
  return out;
}

std::vector<SocleLayer> socle_series(const ModuleRep& x, Level lv) {
  std::vector<SocleLayer> out;
  std::vector<SparseVec> cum;
  while (static_cast<int>(cum.size()) < x.dim()) {
    Echelon ech;
    for (const auto& v : cum) ech.add(v);
    std::vector<int> q = non_pivots(ech, x.dim());
    ModuleRep Q = quotient(x, cum, lv);
    std::vector<SparseVec> s = socle(Q, lv);
    if (s.empty()) throw std::logic_error("socle_series: empty socle of a nonzero module");
    for (const auto& v : lift(s, q)) ech.add(v);
    SocleLayer layer;
    layer.cumulative = ech.reduced_rows();
    layer.factors = socle_factors(Q, lv);
    cum = layer.cumulative;
    out.push_back(std::move(layer));
  }
  return out;
}

std::vector<SparseVec> radical(const ModuleRep& x) {
  std::vector<SparseVec> s = socle(dual(x));
  return nullspace(s, x.dim());
}

std::map<long, int> composition_factors(const ModuleRep& x, Level lv) {
  std::map<long, int> out;
  for (const auto& layer : socle_series(x, lv))
    for (const auto& [w, k] : layer.factors) out[w] += k;
  return out;
}

bool is_simple(const ModuleRep& x) {
  if (x.small_only()) throw std::invalid_argument("is_simple: needs a U_z-module");
  if (x.dim() == 0) return false;
  GradedAlgebra A(x);
  return A.dim() == x.dim() * x.dim();
}

ModuleRep head_weyl(const CycloField& f, long m) {
  ModuleRep w = weyl_W(f, m);
  Echelon sum;
  for (int i = 0; i < w.dim(); ++i) {
    std::vector<SparseVec> c = submodule_closure(w, {SparseVec::unit(i)});
    if (static_cast<int>(c.size()) < w.dim())
      for (const auto& v : c) sum.add(v);
  }
  ModuleRep h = quotient(w, sum.rows());
  return ModuleRep(f, "head W(" + std::to_string(m) + ")", h.labels(), h.mat(Gen::E), h.mat(Gen::F), h.mat(Gen::El),
                   h.mat(Gen::Fl));
}

SteinbergResult steinberg_verify(const CycloField& f, long m) {
  SteinbergResult r;
  ModuleRep h = head_weyl(f, m);
  ModuleRep t = simple_module(f, m);
  r.head_simple = is_simple(h);
  r.tensor_simple = is_simple(t);
  r.same_dim = h.dim() == t.dim();
  r.same_highest = h.highest_weight() == m && t.highest_weight() == m;
  r.intertwiner = false;
  for (const auto& phi : intertwiners(h, t))
    if (!phi.is_zero()) r.intertwiner = true;
  return r;
}

std::vector<int> weight_indices(const ModuleRep& x, long label) {
  std::vector<int> out;
  for (int i = 0; i < x.dim(); ++i)
    if (x.labels()[i] == label) out.push_back(i);
  return out;
}

}  // namespace qhyper
