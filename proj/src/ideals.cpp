#include "qhyper/ideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qhyper/frobenius.hpp"

namespace qhyper {

namespace {

long fdiv(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }
long fmod_(long a, long b) { return a - fdiv(a, b) * b; }

std::vector<SparseVec> reduced(const std::vector<SparseVec>& vs) {
  Echelon e;
  for (const auto& v : vs) e.add(v);
  return e.reduced_rows();
}

std::vector<SparseVec> image_of(const Matrix& m, const std::vector<SparseVec>& vs) {
  std::vector<SparseVec> out;
  for (const auto& v : vs) out.push_back(m.apply(v));
  return reduced(out);
}

std::vector<SparseVec> image_of(const Matrix& m) {
  std::vector<SparseVec> out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return reduced(out);
}

std::vector<SparseVec> all_units(int n) {
  std::vector<SparseVec> out;
  for (int i = 0; i < n; ++i) out.push_back(SparseVec::unit(i));
  return out;
}

long simple_dim(long m, int l) { return (fmod_(m, l) + 1) * (fdiv(m, l) + 1); }

// Image of the unique (up to scalar) intertwiner src -> I.
std::vector<SparseVec> embedded_image(const ModuleRep& src, const ModuleRep& I) {
  auto homs = intertwiners(src, I);
  if (homs.size() != 1) throw std::logic_error("injective_data: expected a unique embedding of " + src.name());
  auto im = image_of(homs.front());
  if (static_cast<int>(im.size()) != src.dim()) throw std::logic_error("injective_data: " + src.name() + " does not embed");
  return im;
}

// Weight multiset of a subspace spanned by weight vectors.
std::map<long, int> weight_dims(const ModuleRep& x, const std::vector<SparseVec>& vs) {
  std::map<long, int> out;
  for (const auto& v : vs)
    if (!v.is_zero()) ++out[x.labels()[v.lead()]];
  return out;
}

}  // namespace

bool is_steinberg(long m, int ell) { return fmod_(m, ell) == ell - 1; }

long rho(long m, int ell) {
  if (is_steinberg(m, ell)) return m;
  return ell - 2 - fmod_(m, ell) + (fdiv(m, ell) - 1) * ell;
}

long rho_inverse(long m, int ell) {
  if (is_steinberg(m, ell)) return m;
  const long n = ell - 2 - fmod_(m, ell) + (fdiv(m, ell) + 1) * ell;
  if (n < 0) throw std::domain_error("rho_inverse: no nonnegative preimage");
  return n;
}

long block_root(long m, int ell) {
  if (m < 0) throw std::invalid_argument("block_root: negative weight");
  while (!is_steinberg(m, ell) && rho(m, ell) >= 0) m = rho(m, ell);
  return m;
}

std::vector<long> block_members(long r0, int ell, long bound) {
  if (block_root(r0, ell) != r0) throw std::invalid_argument("block_members: not a block root");
  std::vector<long> out;
  if (is_steinberg(r0, ell)) {
    if (r0 <= bound) out.push_back(r0);
    return out;
  }
  for (long r = r0; r <= bound; r = rho_inverse(r, ell)) out.push_back(r);
  return out;
}

std::vector<long> block_of(long m, int ell, long bound) { return block_members(block_root(m, ell), ell, bound); }

const char* label_name(SubLabel x) {
  switch (x) {
    case SubLabel::Zero: return "0";
    case SubLabel::L: return "L";
    case SubLabel::M: return "M";
    case SubLabel::W: return "W";
    case SubLabel::MW: return "MW";
    case SubLabel::I: return "I";
  }
  return "?";
}

std::vector<SubLabel> InjectiveData::labels() const {
  std::vector<SubLabel> out;
  for (const auto& [k, v] : subs) out.push_back(k);
  return out;
}

std::optional<SubLabel> InjectiveData::match(const std::vector<SparseVec>& v) const {
  for (const auto& [k, s] : subs)
    if (span_equal(s, v)) return k;
  return std::nullopt;
}

bool InjectiveData::leq(SubLabel a, SubLabel b) const {
  const auto& sb = sub(b);
  for (const auto& v : sub(a))
    if (!span_contains(sb, v)) return false;
  return true;
}

InjectiveData injective_data(const CycloField& f, long r) {
  const int l = f.ell();
  ModuleRep I = injective_module(f, r);
  std::map<SubLabel, std::vector<SparseVec>> subs;
  subs[SubLabel::Zero] = {};
  subs[SubLabel::I] = all_units(I.dim());
  if (!is_steinberg(r, l)) {
    subs[SubLabel::L] = socle(I);
    subs[SubLabel::W] = embedded_image(weyl_W(f, rho_inverse(r, l)), I);
    if (r >= l) {
      subs[SubLabel::M] = embedded_image(coweyl_M(f, r), I);
      std::vector<SparseVec> mw = subs[SubLabel::M];
      mw.insert(mw.end(), subs[SubLabel::W].begin(), subs[SubLabel::W].end());
      subs[SubLabel::MW] = reduced(mw);
    }
  }
  return InjectiveData{r, std::move(I), std::move(subs)};
}

std::vector<Matrix> hom_space(const InjectiveData& a, const InjectiveData& b) {
  return intertwiners(a.module, b.module);
}

// ---------------------------------------------------------------------------

BlockLattice::BlockLattice(const CycloField& f, long r0, long bound) : f_(&f) {
  const int l = f.ell();
  members_ = block_members(r0, l, bound);
  if (members_.empty()) throw std::invalid_argument("BlockLattice: empty window");
  for (long r : members_) inj_.push_back(injective_data(f, r));
  if (!is_steinberg(r0, l)) inj_.push_back(injective_data(f, rho_inverse(members_.back(), l)));

  const std::size_t n = inj_.size();
  hom_dims_.assign(n, std::vector<int>(n, 0));
  std::map<std::pair<std::size_t, std::size_t>, Matrix> gen;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      auto h = hom_space(inj_[j], inj_[k]);
      hom_dims_[j][k] = static_cast<int>(h.size());
      if (k == j + 1 || j == k + 1) {
        if (h.size() != 1) throw std::logic_error("BlockLattice: linked Hom space is not one-dimensional");
        gen.emplace(std::pair{j, k}, h.front());
      }
    }
  for (const auto& [jk, phi] : gen) {
    const auto [j, k] = jk;
    for (SubLabel x : inj_[j].labels()) {
      auto lab = inj_[k].match(image_of(phi, inj_[j].sub(x)));
      if (!lab) throw std::logic_error("BlockLattice: image of a subcomodule is not a subcomodule label");
      transfer_[{j, k, x}] = *lab;
    }
  }
  join_.resize(members_.size());
  meet_.resize(members_.size());
  for (std::size_t j = 0; j < members_.size(); ++j) {
    const InjectiveData& d = inj_[j];
    const int dim = d.module.dim();
    for (SubLabel a : d.labels())
      for (SubLabel b : d.labels()) {
        std::vector<SparseVec> s = d.sub(a);
        s.insert(s.end(), d.sub(b).begin(), d.sub(b).end());
        auto jl = d.match(reduced(s));
        auto ml = d.match(span_intersect(d.sub(a), d.sub(b), dim));
        if (!jl || !ml) throw std::logic_error("BlockLattice: labels are not closed under sum and intersection");
        join_[j][{a, b}] = *jl;
        meet_[j][{a, b}] = *ml;
      }
  }
}

SubLabel BlockLattice::transfer(std::size_t j, std::size_t k, SubLabel x) const { return transfer_.at({j, k, x}); }
SubLabel BlockLattice::join(std::size_t j, SubLabel a, SubLabel b) const { return join_.at(j).at({a, b}); }
SubLabel BlockLattice::meet(std::size_t j, SubLabel a, SubLabel b) const { return meet_.at(j).at({a, b}); }

BlockLattice::Tuple BlockLattice::join(const Tuple& a, const Tuple& b) const {
  Tuple r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = join(j, a[j], b[j]);
  return r;
}

BlockLattice::Tuple BlockLattice::meet(const Tuple& a, const Tuple& b) const {
  Tuple r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = meet(j, a[j], b[j]);
  return r;
}

bool BlockLattice::leq(const Tuple& a, const Tuple& b) const {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (join(j, a[j], b[j]) != b[j]) return false;
  return true;
}

bool BlockLattice::balanced(const Tuple& t) const {
  for (std::size_t j = 0; j < members_.size(); ++j)
    for (std::size_t k : {j - 1, j + 1}) {
      if (k >= inj_.size()) continue;
      const SubLabel img = transfer(j, k, t[j]);
      const SubLabel target = k < members_.size() ? t[k] : SubLabel::Zero;
      if (!inj_[k].leq(img, target)) return false;
    }
  return true;
}

std::vector<BlockLattice::Tuple> BlockLattice::enumerate() const {
  std::vector<Tuple> out;
  Tuple t = zero();
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == members_.size()) {
      if (balanced(t)) out.push_back(t);
      return;
    }
    for (SubLabel x : inj_[j].labels()) {
      t[j] = x;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<BlockLattice::Tuple> BlockLattice::generated(std::size_t j, SubLabel x) const {
  Tuple t = zero();
  t[j] = x;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < members_.size(); ++a)
      for (std::size_t k : {a - 1, a + 1}) {
        if (k >= inj_.size()) continue;
        const SubLabel img = transfer(a, k, t[a]);
        if (k >= members_.size()) {
          if (img != SubLabel::Zero) return std::nullopt;
          continue;
        }
        const SubLabel nx = join(k, t[k], img);
        if (nx != t[k]) {
          t[k] = nx;
          changed = true;
        }
      }
  }
  return t;
}

std::vector<BlockLattice::Tuple> BlockLattice::locals() const {
  std::set<Tuple> seen;
  std::vector<Tuple> out;
  for (std::size_t j = 0; j < members_.size(); ++j)
    for (SubLabel x : {SubLabel::L, SubLabel::M, SubLabel::W, SubLabel::I}) {
      if (!inj_[j].subs.count(x)) continue;
      auto t = generated(j, x);
      if (t && seen.insert(*t).second) out.push_back(*t);
    }
  return out;
}

std::vector<BlockLattice::Tuple> BlockLattice::local_decompose(const Tuple& t) const {
  std::vector<Tuple> below;
  for (const auto& c : locals())
    if (leq(c, t)) below.push_back(c);
  std::vector<Tuple> out;
  for (const auto& c : below) {
    bool maximal = true;
    for (const auto& d : below)
      if (d != c && leq(c, d)) maximal = false;
    if (maximal) out.push_back(c);
  }
  return out;
}

bool BlockLattice::decomposition_unique(const Tuple& t) const {
  std::vector<Tuple> below;
  for (const auto& c : locals())
    if (leq(c, t)) below.push_back(c);
  if (below.size() > 20) throw std::length_error("decomposition_unique: too many locals");
  auto join_of = [&](unsigned mask) {
    Tuple r = zero();
    for (std::size_t i = 0; i < below.size(); ++i)
      if (mask & (1u << i)) r = join(r, below[i]);
    return r;
  };
  int count = 0;
  std::set<Tuple> found;
  for (unsigned mask = 0; mask < (1u << below.size()); ++mask) {
    if (join_of(mask) != t) continue;
    bool irredundant = true;
    for (std::size_t i = 0; i < below.size() && irredundant; ++i)
      if ((mask & (1u << i)) && join_of(mask & ~(1u << i)) == t) irredundant = false;
    if (!irredundant) continue;
    ++count;
    for (std::size_t i = 0; i < below.size(); ++i)
      if (mask & (1u << i)) found.insert(below[i]);
  }
  const auto dec = local_decompose(t);
  return count == 1 && found == std::set<Tuple>(dec.begin(), dec.end());
}

std::string tuple_to_string(const BlockLattice::Tuple& t) {
  std::string s = "(";
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) s += ",";
    s += label_name(t[j]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

Window::Window(const CycloField& f, const std::vector<long>& weights) : f_(&f), weights_(weights) {
  std::vector<ModuleRep> parts;
  int off = 0;
  for (long r : weights_) {
    inj_.push_back(injective_data(f, r));
    parts.push_back(inj_.back().module);
    offsets_.push_back(off);
    off += parts.back().dim();
  }
  A_ = std::make_unique<GradedAlgebra>(direct_sum(parts, "window"));
}

Window Window::block(const CycloField& f, long r0, int J) {
  const int l = f.ell();
  std::vector<long> ws{r0};
  if (!is_steinberg(r0, l))
    for (int j = 1; j <= J; ++j) ws.push_back(rho_inverse(ws.back(), l));
  return Window(f, ws);
}

std::vector<SparseVec> Window::embed(std::size_t i, const std::vector<SparseVec>& sub) const {
  std::vector<SparseVec> out;
  for (const auto& v : sub) out.push_back(v.shifted(offsets_.at(i)));
  return out;
}

GradedIdeal Window::ann(std::size_t i, SubLabel x) const { return annihilator(*A_, embed(i, inj_.at(i).sub(x))); }

GradedIdeal Window::ann(std::size_t i, SubLabel upper, SubLabel lower) const {
  return annihilator(*A_, embed(i, inj_.at(i).sub(upper)), embed(i, inj_.at(i).sub(lower)));
}

GradedIdeal Window::maximal(std::size_t k) const {
  if (k < inj_.size()) return ann(k, is_steinberg(weights_[k], f_->ell()) ? SubLabel::I : SubLabel::L);
  if (k == inj_.size() && !is_steinberg(weights_.back(), f_->ell())) return ann(k - 1, SubLabel::W, SubLabel::L);
  throw std::out_of_range("Window::maximal: simple not realized in the window");
}

GradedIdeal Window::ann_tuple(const BlockLattice::Tuple& t) const {
  GradedIdeal r = whole_ideal(*A_);
  for (std::size_t j = 0; j < t.size(); ++j)
    if (t[j] != SubLabel::Zero) r = ideal_intersect(*A_, r, ann(j, t[j]));
  return r;
}

GradedIdeal Window::ideal_of_matrices(const std::vector<Matrix>& ms) const {
  const auto& labels = A_->module().labels();
  std::map<GradedAlgebra::Key, std::vector<SparseVec>> gens;
  for (const auto& m : ms) {
    std::set<GradedAlgebra::Key> keys;
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& [i, c] : m.col(j).entries()) keys.insert({labels[i], labels[j]});
    for (const auto& k : keys) {
      SparseVec b = A_->block(m, k.first, k.second);
      if (!b.is_zero()) gens[k].push_back(std::move(b));
    }
  }
  return ideal_generated(*A_, gens);
}

// ---------------------------------------------------------------------------

namespace {

struct Chain {
  std::string name;
  std::size_t summand;
  std::vector<SubLabel> labels;  // top to bottom, ending above Zero
};

// Block index of the simple factor upper/lower: its highest weight.
long factor_index(const Window& w, std::size_t i, SubLabel upper, SubLabel lower) {
  const ModuleRep& x = w.data(i).module;
  auto du = weight_dims(x, w.data(i).sub(upper));
  auto dl = weight_dims(x, w.data(i).sub(lower));
  long top = 0;
  bool any = false;
  for (const auto& [wt, d] : du)
    if (d > dl[wt] && (!any || wt > top)) {
      top = wt;
      any = true;
    }
  if (!any) throw std::logic_error("factor_index: trivial factor");
  long r = w.weights().front();
  for (long j = 0; j < 64; ++j) {
    if (r == top) return j;
    r = rho_inverse(r, x.ell());
  }
  throw std::logic_error("factor_index: factor outside the block");
}

ProductCase run_chain(const Window& w, const Chain& ch, long j, int J) {
  ProductCase c;
  c.module = ch.name;
  c.j = j;
  c.J = J;
  std::vector<SubLabel> seq = ch.labels;
  seq.push_back(SubLabel::Zero);
  for (std::size_t t = 0; t + 1 < seq.size(); ++t) c.factors.push_back(factor_index(w, ch.summand, seq[t], seq[t + 1]));
  const GradedAlgebra& A = w.algebra();
  const GradedIdeal ann = w.ann(ch.summand, ch.labels.front());
  // m_t ... m_1 with L_1 the top factor
  GradedIdeal prod = w.maximal(static_cast<std::size_t>(c.factors.back()));
  for (std::size_t t = c.factors.size() - 1; t-- > 0;)
    prod = ideal_product(A, prod, w.maximal(static_cast<std::size_t>(c.factors[t])));
  c.ann_dim = ann.dim();
  c.product_dim = prod.dim();
  c.equal = ideal_equal(ann, prod);
  return c;
}

std::vector<Chain> chains(const InjectiveData& d, std::size_t j, long ell) {
  std::vector<Chain> out;
  if (is_steinberg(d.r, static_cast<int>(ell))) {
    out.push_back({"L", j, {SubLabel::I}});
    return out;
  }
  out.push_back({"L", j, {SubLabel::L}});
  out.push_back({"W", j, {SubLabel::W, SubLabel::L}});
  if (d.subs.count(SubLabel::M)) {
    out.push_back({"M", j, {SubLabel::M, SubLabel::L}});
    out.push_back({"I via M", j, {SubLabel::I, SubLabel::MW, SubLabel::M, SubLabel::L}});
    out.push_back({"I via W", j, {SubLabel::I, SubLabel::MW, SubLabel::W, SubLabel::L}});
  } else {
    out.push_back({"I", j, {SubLabel::I, SubLabel::W, SubLabel::L}});
  }
  return out;
}

}  // namespace

std::vector<ProductCase> verify_theorem7(const CycloField& f, long r0, long j) {
  const int J = static_cast<int>(j) + 1;
  const Window w1 = Window::block(f, r0, J);
  const Window w2 = Window::block(f, r0, J + 1);
  const std::size_t js = static_cast<std::size_t>(j);
  std::vector<ProductCase> out;
  const auto chs = chains(w1.data(js), js, f.ell());
  for (const auto& ch : chs) {
    ProductCase c = run_chain(w1, ch, j, J);
    const ProductCase c2 = run_chain(w2, ch, j, J + 1);
    c.stable = c2.equal && c2.factors == c.factors;
    out.push_back(std::move(c));
  }
  // L(r_j) realized as W/L inside I(r_(j-1)) has the same annihilator.
  if (j >= 1 && !is_steinberg(r0, f.ell())) {
    for (const Window* w : {&w1, &w2}) {
      ProductCase c;
      c.module = "L as W/L";
      c.j = j;
      c.J = w == &w1 ? J : J + 1;
      c.factors = {j};
      const GradedIdeal a = w->ann(js - 1, SubLabel::W, SubLabel::L), m = w->maximal(js);
      c.ann_dim = a.dim();
      c.product_dim = m.dim();
      c.equal = ideal_equal(a, m);
      if (w == &w1) {
        out.push_back(c);
      } else {
        out.back().stable = c.equal;
      }
    }
  }
  return out;
}

PrimitiveCheck verify_primitive_ideal(const CycloField& f, long m, long R) {
  const int l = f.ell();
  if (m < 0 || m > R) throw std::invalid_argument("verify_primitive_ideal: m outside the window");
  std::vector<long> ws;
  for (long r = 0; r <= R; ++r) ws.push_back(r);
  const Window w(f, ws);
  const std::size_t i = static_cast<std::size_t>(m);
  const GradedIdeal ann = w.maximal(i);
  const ModuleRep& X = w.algebra().module();

  std::vector<Matrix> gens;
  // ann_u L(m0)
  const Uzeta& u = Uzeta::get(l);
  const ModuleRep L0 = simple_L(f, fmod_(m, l));
  std::map<int, SparseAccum> rows;
  for (int k = 0; k < u.dim(); ++k) {
    auto [a, b, c] = u.triple(k);
    const Matrix x = L0.act(u.monomial(a, b, c));
    for (int col = 0; col < x.cols(); ++col)
      for (const auto& [row, v] : x.col(col).entries()) rows[row * L0.dim() + col].add(k, v);
  }
  std::vector<SparseVec> eqs;
  for (auto& [k, acc] : rows) eqs.push_back(acc.finish());
  for (const auto& p : nullspace(eqs, u.dim())) gens.push_back(X.act(u.element(p)));

  // ann of the (n+1)-dimensional sl2-simple: c - (n+1)^2, e^(n+1), f^(n+1), prod (h - n + 2k)
  const long n = fdiv(m, l);
  const Matrix El = X.mat(Gen::El), Fl = X.mat(Gen::Fl), H = commutator(El, Fl);
  const int bound = static_cast<int>(2 * n + 4);
  std::vector<UElement> pbar{u_add(u_casimir(), u_monomial(0, 0, 0, CycloNum((n + 1) * (n + 1))), CycloNum(-1L)),
                             u_monomial(0, 0, static_cast<int>(n + 1)), u_monomial(static_cast<int>(n + 1), 0, 0)};
  UElement hp = u_monomial(0, 0, 0);
  for (long k = 0; k <= n; ++k)
    hp = u_mul(hp, u_add(u_monomial(0, 1, 0), u_monomial(0, 0, 0, CycloNum(2 * k - n))), bound);
  pbar.push_back(hp);
  for (const auto& g : pbar) {
    Matrix acc(X.dim(), X.dim());
    for (const auto& [mono, c] : g)
      acc = acc + (Fl.pow(mono[0]) * H.pow(mono[1]) * El.pow(mono[2])).scaled(c);
    gens.push_back(std::move(acc));
  }
  const GradedIdeal T = w.ideal_of_matrices(gens);
  PrimitiveCheck out;
  out.m = m;
  out.R = R;
  out.ann_dim = ann.dim();
  out.generated_dim = T.dim();
  out.equal = ideal_equal(ann, T);
  return out;
}

ExtensionCheck verify_remark4(const CycloField& f, long r0, long j) {
  const Window w = Window::block(f, r0, static_cast<int>(j) + 1);
  const GradedAlgebra& A = w.algebra();
  const std::size_t js = static_cast<std::size_t>(j);
  ExtensionCheck out;
  out.j = j;
  const GradedIdeal top = w.maximal(js + 1), bottom = w.maximal(js);
  const GradedIdeal prod = ideal_product(A, bottom, top);
  const GradedIdeal inter = ideal_intersect(A, bottom, top);
  out.product_formula = ideal_equal(w.ann(js, SubLabel::W), prod);
  std::vector<SparseVec> split = w.embed(js, w.data(js).sub(SubLabel::L));
  for (const auto& v : w.embed(js + 1, w.data(js + 1).sub(SubLabel::L))) split.push_back(v);
  out.split_is_intersection = ideal_equal(annihilator(A, split), inter);
  out.product_in_intersection = ideal_contains(inter, prod);
  out.product_strict = prod.dim() < inter.dim();
  out.ext_bound = hom_space(w.data(js), w.data(js + 1)).size() <= 1;
  return out;
}

LatticeReport verify_lattice(const CycloField& f, long r0, long bound, bool with_ideals) {
  const BlockLattice lat(f, r0, bound);
  const auto all = lat.enumerate();
  const auto locs = lat.locals();
  LatticeReport rep;
  rep.r0 = r0;
  rep.bound = bound;
  rep.tuples = static_cast<int>(all.size());
  rep.locals = static_cast<int>(locs.size());
  const std::set<BlockLattice::Tuple> set(all.begin(), all.end());

  rep.closed = true;
  for (const auto& a : all)
    for (const auto& b : all)
      if (!set.count(lat.join(a, b)) || !set.count(lat.meet(a, b))) rep.closed = false;

  rep.distributive = true;
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all)
        if (lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z))) rep.distributive = false;

  // join-irreducibles: nonzero with exactly one lower cover
  std::set<BlockLattice::Tuple> irr;
  for (const auto& t : all) {
    if (t == lat.zero()) continue;
    std::vector<BlockLattice::Tuple> lower;
    for (const auto& s : all)
      if (s != t && lat.leq(s, t)) lower.push_back(s);
    int covers = 0;
    for (const auto& s : lower) {
      bool cover = true;
      for (const auto& q : lower)
        if (q != s && lat.leq(s, q)) cover = false;
      if (cover) ++covers;
    }
    if (covers == 1) irr.insert(t);
  }
  rep.irreducibles_are_locals = irr == std::set<BlockLattice::Tuple>(locs.begin(), locs.end());

  rep.unique_decomposition = true;
  for (const auto& t : all) {
    const auto dec = lat.local_decompose(t);
    BlockLattice::Tuple j = lat.zero();
    for (const auto& c : dec) j = lat.join(j, c);
    if (j != t || !lat.decomposition_unique(t)) rep.unique_decomposition = false;
  }

  if (!with_ideals) return rep;
  rep.with_ideals = true;
  const Window w = Window::block(f, r0, static_cast<int>(lat.members().size()) - 1);
  const GradedAlgebra& A = w.algebra();
  std::map<BlockLattice::Tuple, GradedIdeal> anns;
  for (const auto& t : all) anns.emplace(t, w.ann_tuple(t));

  rep.antiisomorphism = true;
  for (const auto& a : all)
    for (const auto& b : all) {
      const bool le = lat.leq(a, b);
      if (le != ideal_contains(anns.at(a), anns.at(b))) rep.antiisomorphism = false;
      if (!ideal_equal(anns.at(lat.join(a, b)), ideal_intersect(A, anns.at(a), anns.at(b)))) rep.antiisomorphism = false;
      if (!ideal_equal(anns.at(lat.meet(a, b)), ideal_sum(A, anns.at(a), anns.at(b)))) rep.antiisomorphism = false;
    }

  rep.green_counts = true;
  for (const auto& t : all) {
    long expect = 0;
    for (std::size_t j = 0; j < t.size(); ++j)
      expect += simple_dim(lat.members()[j], f.ell()) * static_cast<long>(lat.data(j).sub(t[j]).size());
    if (A.dim() - anns.at(t).dim() != expect) rep.green_counts = false;
  }

  rep.local_annihilators = true;
  for (std::size_t j = 0; j < lat.members().size(); ++j)
    for (SubLabel x : {SubLabel::L, SubLabel::M, SubLabel::W, SubLabel::I}) {
      if (!lat.data(j).subs.count(x)) continue;
      auto c = lat.generated(j, x);
      if (c && !ideal_equal(anns.at(*c), w.ann(j, x))) rep.local_annihilators = false;
    }

  // Irredundant intersections of local annihilators equal to ann(t).
  rep.meet_decomposition_unique = true;
  for (const auto& t : all) {
    std::vector<BlockLattice::Tuple> above;  // ann(c) contains ann(t)
    for (const auto& c : locs)
      if (ideal_contains(anns.at(c), anns.at(t))) above.push_back(c);
    int count = 0;
    for (unsigned mask = 0; mask < (1u << above.size()); ++mask) {
      auto inter = [&](unsigned msk) {
        GradedIdeal r = whole_ideal(A);
        for (std::size_t i = 0; i < above.size(); ++i)
          if (msk & (1u << i)) r = ideal_intersect(A, r, anns.at(above[i]));
        return r;
      };
      if (!ideal_equal(inter(mask), anns.at(t))) continue;
      bool irredundant = true;
      for (std::size_t i = 0; i < above.size() && irredundant; ++i)
        if ((mask & (1u << i)) && ideal_equal(inter(mask & ~(1u << i)), anns.at(t))) irredundant = false;
      if (irredundant) ++count;
    }
    if (count != 1) rep.meet_decomposition_unique = false;
  }
  return rep;
}

}  // namespace qhyper
