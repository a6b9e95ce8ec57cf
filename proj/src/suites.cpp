#include "qhyper/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "qhyper/blocks.hpp"
#include "qhyper/cyclo.hpp"
#include "qhyper/frobenius.hpp"
#include "qhyper/ideals.hpp"
#include "qhyper/modules.hpp"
#include "qhyper/torus.hpp"
#include "qhyper/uzeta.hpp"

namespace qhyper {

namespace {

using nlohmann::json;

json vec_json(const SparseVec& v) {
  json a = json::array();
  for (const auto& [i, c] : v.entries()) a.push_back(json::array({i, c.to_string()}));
  return a;
}

json basis_json(const std::vector<SparseVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

class Collector {
public:
  Collector(std::string suite, int ell) : suite_(std::move(suite)), ell_(ell) {}

  void add(std::string id, bool ok, json details = json::object(), json witness = nullptr) {
    CheckReport r;
    r.suite = suite_;
    r.id = std::move(id);
    r.ell = ell_;
    r.status = ok ? Status::pass : Status::fail;
    r.details = std::move(details);
    if (!ok) r.witness = std::move(witness);
    out_.push_back(std::move(r));
  }

  std::vector<CheckReport> take() { return std::move(out_); }

private:
  std::string suite_;
  int ell_;
  std::vector<CheckReport> out_;
};

std::string idx(const std::string& base, const std::string& key, long v) {
  return base + "." + key + std::to_string(v);
}

// -- arith --------------------------------------------------------------------

std::vector<CheckReport> suite_arith(const RunConfig& cfg) {
  const int l = cfg.ell;
  const CycloField& f = CycloField::get(l);
  Collector c("arith", l);

  json wit = nullptr;
  for (long j = 1; j < l && wit.is_null(); ++j)
    if (!gauss_binom(f, 2 * l, j).is_zero()) wit = json{{"j", j}, {"value", gauss_binom(f, 2 * l, j).to_string()}};
  const CycloNum mid = gauss_binom(f, 2 * l, l);
  if (wit.is_null() && mid != CycloNum(2L)) wit = json{{"j", l}, {"value", mid.to_string()}};
  c.add("gauss_binom.2l", wit.is_null(), {{"vanishing", l - 1}, {"middle", mid.to_string()}}, wit);

  wit = nullptr;
  if (!q_int(f, l).is_zero()) wit = json{{"n", l}};
  for (long k = 1; k < l && wit.is_null(); ++k)
    if (q_int(f, k).is_zero()) wit = json{{"n", k}};
  c.add("q_int.zeros", wit.is_null(), {{"first_zero", l}}, wit);

  wit = nullptr;
  long count = 0;
  for (long n = 0; n <= 3 * l && wit.is_null(); ++n)
    for (long k = 0; k <= n && wit.is_null(); ++k, ++count) {
      CycloNum lucas = k % l > n % l ? CycloNum() : gauss_binom(f, n % l, k % l) * CycloNum(mpq_class(binom_z(n / l, k / l)));
      if (gauss_binom(f, n, k) != lucas) wit = json{{"n", n}, {"k", k}};
    }
  c.add("q_lucas", wit.is_null(), {{"pairs", count}}, wit);

  wit = nullptr;
  std::mt19937_64 rng(cfg.seed);
  const int samples = 40;
  for (int t = 0; t < samples && wit.is_null(); ++t) {
    const long n = static_cast<long>(rng() % (6 * l + 1)) - 3 * l;
    const long k = 1 + static_cast<long>(rng() % (2 * l));
    const CycloNum rhs = gauss_binom(f, n - 1, k).mul_zeta_pow(-k) + gauss_binom(f, n - 1, k - 1).mul_zeta_pow(n - k);
    if (gauss_binom(f, n, k) != rhs) wit = json{{"n", n}, {"k", k}};
  }
  c.add("q_pascal.sampled", wit.is_null(), {{"samples", samples}, {"seed", cfg.seed}}, wit);

  wit = nullptr;
  CycloNum acc(1L);
  for (long n = 1; n <= 2 * l && wit.is_null(); ++n) {
    acc = acc * q_int(f, n);
    if (q_factorial(f, n) != acc) wit = json{{"n", n}};
  }
  c.add("q_factorial", wit.is_null(), {{"max_n", 2 * l}}, wit);
  return c.take();
}

// -- algebra ------------------------------------------------------------------

UzetaElement random_element(const Uzeta& u, std::mt19937_64& rng) {
  const int l = u.ell();
  UzetaElement x = u.zero();
  for (int t = 0; t < 3; ++t) {
    const int a = static_cast<int>(rng() % l), b = static_cast<int>(rng() % l), cc = static_cast<int>(rng() % l);
    x = x + u.monomial(a, b, cc, CycloNum(static_cast<long>(rng() % 7) - 3));
  }
  return x;
}

std::vector<CheckReport> suite_algebra(const RunConfig& cfg) {
  const int l = cfg.ell;
  const Uzeta& u = Uzeta::get(l);
  Collector c("algebra", l);
  for (int s = 1; s < l; ++s) c.add(idx("FsEs", "s", s), u.verify_FsEs(s), {{"s", s}}, json{{"s", s}});

  std::mt19937_64 rng(cfg.seed);
  const int samples = 12;
  json wit = nullptr;
  for (int t = 0; t < samples && wit.is_null(); ++t) {
    const UzetaElement x = random_element(u, rng), y = random_element(u, rng), z = random_element(u, rng);
    if ((x * y) * z != x * (y * z))
      wit = json{{"x", u.to_string(x)}, {"y", u.to_string(y)}, {"z", u.to_string(z)}};
  }
  c.add("associativity.sampled", wit.is_null(), {{"samples", samples}, {"seed", cfg.seed}}, wit);

  const UzetaElement cz = u.casimir();
  wit = nullptr;
  for (const auto& [name, g] : {std::pair{"E", u.E()}, std::pair{"F", u.F()}, std::pair{"K", u.K()}})
    if (wit.is_null() && !commutator(cz, g).is_zero()) wit = json{{"generator", name}};
  c.add("casimir.central", wit.is_null(), {{"casimir", u.to_string(cz)}}, wit);

  wit = nullptr;
  for (long r = 0; r < l && wit.is_null(); ++r) {
    const ModuleRep L = simple_L(u.field(), r);
    if (L.act(cz) != Matrix::identity(L.dim()).scaled(u.casimir_eigenvalue(r))) wit = json{{"r", r}};
    for (long s = 0; s < l && wit.is_null(); ++s)
      if ((u.casimir_eigenvalue(r) == u.casimir_eigenvalue(s)) != (r == s || r + s == l - 2))
        wit = json{{"r", r}, {"s", s}};
  }
  c.add("casimir.eigenvalues", wit.is_null(), {{"restricted_weights", l}}, wit);
  return c.take();
}

// -- frobenius ----------------------------------------------------------------

std::vector<CheckReport> suite_frobenius(const RunConfig& cfg) {
  const int l = cfg.ell;
  const FrobeniusAction& fa = FrobeniusAction::get(l);
  const Uzeta& u = fa.algebra();
  Collector c("frobenius", l);
  const Matrix &De = fa.D(SlGen::e), &Df = fa.D(SlGen::f), &Dh = fa.D(SlGen::h);
  const CycloNum two(2L);
  c.add("sl2.he", Dh * De - De * Dh == De.scaled(two), {{"dim", u.dim()}}, json{{"relation", "[D_h,D_e]=2D_e"}});
  c.add("sl2.hf", Dh * Df - Df * Dh == Df.scaled(-two), {{"dim", u.dim()}}, json{{"relation", "[D_h,D_f]=-2D_f"}});
  c.add("sl2.ef", De * Df - Df * De == Dh, {{"dim", u.dim()}}, json{{"relation", "[D_e,D_f]=D_h"}});

  std::mt19937_64 rng(cfg.seed + 1);
  const int samples = 8;
  json wit = nullptr;
  for (int t = 0; t < samples && wit.is_null(); ++t) {
    const UzetaElement x = random_element(u, rng), y = random_element(u, rng);
    for (SlGen g : {SlGen::e, SlGen::f})
      if (wit.is_null() && fa.apply(g, x * y) != fa.apply(g, x) * y + x * fa.apply(g, y))
        wit = json{{"x", u.to_string(x)}, {"y", u.to_string(y)}, {"generator", g == SlGen::e ? "e" : "f"}};
  }
  c.add("derivation.sampled", wit.is_null(), {{"samples", samples}, {"seed", cfg.seed + 1}}, wit);
  return c.take();
}

// -- torus --------------------------------------------------------------------

std::vector<CheckReport> suite_torus(const RunConfig& cfg) {
  const int l = cfg.ell;
  const CycloField& f = CycloField::get(l);
  Collector c("torus", l);
  json wit = nullptr;
  for (long m = 0; m <= 3 * l && wit.is_null(); ++m)
    for (long n = 0; n <= 3 * l && wit.is_null(); ++n)
      if (!(weight_add(integral_weight(m, l), integral_weight(n, l), l) == integral_weight(m + n, l)))
        wit = json{{"m", m}, {"n", n}};
  c.add("weight_add.integral", wit.is_null(), {{"max", 3 * l}}, wit);

  std::mt19937_64 rng(cfg.seed + 2);
  auto random_weight = [&] {
    return Weight{static_cast<int>(rng() % l),
                  CycloNum(mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)))};
  };
  const int samples = 30;
  wit = nullptr;
  for (int t = 0; t < samples && wit.is_null(); ++t) {
    const Weight a = random_weight(), b = random_weight();
    const Weight s = weight_add(a, b, l);
    for (int i = 0; i < l && wit.is_null(); ++i)
      for (int j = 0; j <= 2 && wit.is_null(); ++j) {
        TorusElement x(f);
        x.add(i, j, CycloNum(1L));
        if (char_convolve(a, b, x) != char_eval(s, x))
          wit = json{{"a", a.to_string()}, {"b", b.to_string()}, {"K", i}, {"delta", j}};
      }
    if (wit.is_null() && !(weight_add(a, weight_neg(a, l), l) == Weight{0, CycloNum(0L)}))
      wit = json{{"a", a.to_string()}};
  }
  c.add("weight_add.sampled", wit.is_null(), {{"samples", samples}, {"seed", cfg.seed + 2}}, wit);
  return c.take();
}

// -- modules ------------------------------------------------------------------

std::vector<CheckReport> suite_modules(const RunConfig& cfg) {
  const int l = cfg.ell;
  const CycloField& f = CycloField::get(l);
  Collector c("modules", l);
  const long top = 3 * l;
  const std::vector<std::pair<std::string, std::function<ModuleRep(long)>>> families{
      {"L", [&](long m) { return simple_module(f, m); }},
      {"W", [&](long m) { return weyl_W(f, m); }},
      {"M", [&](long m) { return coweyl_M(f, m); }},
      {"I", [&](long m) { return injective_module(f, m); }}};
  for (const auto& [name, make] : families) {
    json wit = nullptr;
    long total = 0;
    for (long m = 0; m <= top && wit.is_null(); ++m) {
      const ModuleRep x = make(m);
      total += x.dim();
      for (const auto& rc : relation_checklist(x))
        if (!rc.ok) {
          wit = json{{"module", x.name()}, {"relation", rc.name}};
          break;
        }
    }
    c.add("checklist." + name, wit.is_null(), {{"max_weight", top}, {"total_dim", total}}, wit);
  }

  json wit = nullptr;
  for (long r = 0; r + 1 < l && wit.is_null(); ++r) {
    const auto series = socle_series(injective_I(f, r));
    std::vector<std::map<long, int>> got;
    for (const auto& s : series) got.push_back(s.factors);
    const std::vector<std::map<long, int>> want{{{r, 1}}, {{2 * l - 2 - r, 1}}, {{r, 1}}};
    if (got != want) wit = json{{"r", r}, {"layers", static_cast<int>(got.size())}};
  }
  c.add("socle_series.I", wit.is_null(), {{"restricted", l - 1}}, wit);

  wit = nullptr;
  for (long m = 0; m <= top && wit.is_null(); ++m) {
    const SteinbergResult s = steinberg_verify(f, m);
    if (!s.ok())
      wit = json{{"m", m}, {"head_simple", s.head_simple}, {"tensor_simple", s.tensor_simple},
                 {"intertwiner", s.intertwiner}};
  }
  c.add("steinberg", wit.is_null(), {{"max_weight", top}}, wit);
  return c.take();
}

// -- blocks -------------------------------------------------------------------

std::vector<CheckReport> suite_blocks(const RunConfig& cfg) {
  const int l = cfg.ell;
  const FrobeniusAction& fa = FrobeniusAction::get(l);
  const Uzeta& u = fa.algebra();
  Collector c("blocks", l);

  const CycloPoly phi = casimir_minimal_polynomial(u);
  json wit = nullptr;
  if (!u.eval_poly(phi, u.casimir()).is_zero()) wit = json{{"polynomial", poly_to_string(phi)}};
  if (wit.is_null() && !minimality_witness(u)) wit = json{{"reason", "a proper divisor annihilates the injectives"}};
  c.add("casimir.minimal_polynomial", wit.is_null(),
        {{"degree", static_cast<int>(phi.size()) - 1}, {"polynomial", poly_to_string(phi)}}, wit);

  const auto labels = block_labels(l);
  UzetaElement sum = u.zero();
  for (long r : labels) sum = sum + block_idempotent(u, r);
  c.add("idempotents.sum", sum == u.one(), {{"blocks", static_cast<int>(labels.size())}},
        json{{"sum", u.to_string(sum)}});

  for (long r : labels) {
    const BlockData bd = block_data(u, r);
    const UzetaElement& e = bd.idempotent;
    json w = nullptr;
    if (e * e != e) w = json{{"reason", "not idempotent"}};
    for (const auto& g : {u.E(), u.F(), u.K()})
      if (w.is_null() && !commutator(e, g).is_zero()) w = json{{"reason", "not central"}};
    for (long s : labels)
      if (w.is_null() && s != r && !(e * block_idempotent(u, s)).is_zero()) w = json{{"reason", "not orthogonal"}, {"s", s}};
    const bool steinberg = r == l - 1;
    const int want_dim = steinberg ? l * l : 2 * l * l;
    if (w.is_null() && bd.dim != want_dim) w = json{{"reason", "dimension"}, {"dim", bd.dim}};

    std::map<long, int> count;
    json pims = json::array();
    for (const auto& p : bd.pims) {
      ++count[p.type];
      for (SlGen g : {SlGen::e, SlGen::f, SlGen::h})
        for (const auto& v : p.basis)
          if (w.is_null() && !span_contains(p.basis, fa.D(g).apply(v)))
            w = json{{"reason", "not D-stable"}, {"j", p.j}, {"vector", vec_json(v)}};
      const UDecomposition d = u_decompose(fa, p.basis);
      pims.push_back(json{{"j", p.j}, {"type", p.type}, {"dim", p.dim}, {"trivial", d.m0}, {"defining", d.m1}});
      const long other = p.type == r ? l - 2 - r : r;
      const int want_m0 = steinberg ? l : static_cast<int>(2 * (p.type + 1));
      const int want_m1 = steinberg ? 0 : static_cast<int>(other + 1);
      if (w.is_null() && (d.m0 != want_m0 || d.m1 != want_m1))
        w = json{{"reason", "u_decompose"}, {"j", p.j}, {"trivial", d.m0}, {"defining", d.m1}};
    }
    const std::map<long, int> want_count =
        steinberg ? std::map<long, int>{{r, l}} : std::map<long, int>{{r, r + 1}, {l - 2 - r, l - 1 - r}};
    if (w.is_null() && count != want_count) w = json{{"reason", "PIM multiplicities"}};
    json mult = json::object();
    for (const auto& [t, k] : count) mult[std::to_string(t)] = k;
    c.add(idx("block", "r", r), w.is_null(),
          {{"dim", bd.dim}, {"multiplicities", mult}, {"cartan", bd.cartan}, {"pims", pims}}, w);
  }
  return c.take();
}

// -- center -------------------------------------------------------------------

std::vector<CheckReport> suite_center(const RunConfig& cfg) {
  const int l = cfg.ell;
  const FrobeniusAction& fa = FrobeniusAction::get(l);
  const Uzeta& u = fa.algebra();
  Collector c("center", l);

  const auto z = center_uzeta(u);
  std::vector<SparseVec> fam;
  for (const auto& x : center_family(u)) fam.push_back(x.coords());
  const int want = 3 * (l - 1) / 2 + 1;
  c.add("center.dim", static_cast<int>(z.size()) == want && span_equal(z, fam),
        {{"dim", static_cast<int>(z.size())}, {"expected", want}}, json{{"basis", basis_json(z)}});

  const Nilradical n = nilradical(u);
  long ss = 0;
  for (long r = 0; r < l; ++r) ss += (r + 1) * (r + 1);
  const long nd = static_cast<long>(n.N.size());
  c.add("nilradical", nd == static_cast<long>(l) * l * l - ss && n.cube_zero,
        {{"dim", nd}, {"square_dim", static_cast<long>(n.N2.size())}, {"cube_zero", n.cube_zero}},
        json{{"dim", nd}});

  for (long r : block_labels(l)) {
    const SmashCenter sc = center_smash_truncated(fa, r, cfg.trunc_degree);
    const int N = cfg.trunc_degree;
    const int expect = r == l - 1 ? N / 2 + 1 : 1 + 2 * (N / 2 + 1);
    c.add(idx("smash_center", "r", r), sc.matches_expected && sc.dim == expect,
          {{"degree", N}, {"dim", sc.dim}, {"expected", expect}}, json{{"dim", sc.dim}});
  }

  const CActionReport rep = verify_lemma4(fa, 3);
  json entries = json::array();
  json wit = nullptr;
  for (const auto& e : rep.entries) {
    json phis = json::array();
    for (const auto& p : e.phi) phis.push_back(u_to_string(p));
    entries.push_back(json{{"n", e.n}, {"a", u_to_string(e.a)}, {"phi", phis}});
    if (wit.is_null() && !e.ok()) wit = json{{"n", e.n}, {"a", u_to_string(e.a)}, {"b", u_to_string(e.b)}};
  }
  c.add("c_action.two_dim", wit.is_null() && !rep.entries.empty(), {{"entries", entries}}, wit);
  return c.take();
}

// -- ideals -------------------------------------------------------------------

std::vector<CheckReport> suite_ideals(const RunConfig& cfg) {
  const int l = cfg.ell;
  const CycloField& f = CycloField::get(l);
  Collector c("ideals", l);
  const long bound = cfg.effective_weight_bound();
  std::vector<long> roots;
  for (long m = 0; m <= bound; ++m)
    if (block_root(m, l) == m) roots.push_back(m);

  for (long r0 : roots) {
    const BlockLattice lat(f, r0, bound);
    // annihilator checks cost one ideal comparison per pair of tuples
    const bool with_ideals = lat.enumerate().size() <= 40;
    const LatticeReport rep = verify_lattice(f, r0, bound, with_ideals);
    json members = lat.members();
    json d{{"members", members},      {"tuples", rep.tuples},       {"locals", rep.locals},
           {"closed", rep.closed},     {"distributive", rep.distributive},
           {"irreducibles_are_locals", rep.irreducibles_are_locals},
           {"unique_decomposition", rep.unique_decomposition}, {"with_ideals", rep.with_ideals}};
    if (with_ideals) {
      d["antiisomorphism"] = rep.antiisomorphism;
      d["green_counts"] = rep.green_counts;
      d["local_annihilators"] = rep.local_annihilators;
      d["meet_decomposition_unique"] = rep.meet_decomposition_unique;
    }
    json wit = nullptr;
    if (!rep.ok()) {
      json ts = json::array();
      for (const auto& t : lat.enumerate()) ts.push_back(tuple_to_string(t));
      wit = json{{"tuples", ts}};
    }
    c.add(idx("lattice", "r", r0), rep.ok(), d, wit);
  }

  for (long r0 : roots) {
    if (is_steinberg(r0, l) || r0 >= l) continue;
    for (long j = 0; j <= cfg.window; ++j) {
      for (const auto& tc : verify_theorem7(f, r0, j)) {
        json d{{"module", tc.module}, {"factors", tc.factors}, {"window", tc.J},
               {"ann_dim", tc.ann_dim}, {"product_dim", tc.product_dim}, {"stable", tc.stable}};
        json wit = nullptr;
        if (!(tc.equal && tc.stable)) wit = json{{"ann_dim", tc.ann_dim}, {"product_dim", tc.product_dim}};
        std::string id = idx(idx("products", "r", r0), "j", j) + "." + tc.module;
        std::replace(id.begin(), id.end(), ' ', '_');
        c.add(id, tc.equal && tc.stable, d, wit);
      }
    }
    for (long j = 0; j <= 1; ++j) {
      const ExtensionCheck rc = verify_remark4(f, r0, j);
      c.add(idx(idx("extension", "r", r0), "j", j), rc.ok(),
            {{"product_formula", rc.product_formula}, {"split_is_intersection", rc.split_is_intersection},
             {"product_strict", rc.product_strict}, {"ext_bound", rc.ext_bound}});
    }
  }

  for (long m = 0; m <= 2 * l; ++m) {
    const PrimitiveCheck a = verify_primitive_ideal(f, m, 2 * l), b = verify_primitive_ideal(f, m, 3 * l);
    c.add(idx("primitive", "m", m), a.equal && b.equal,
          {{"window", a.R}, {"ann_dim", a.ann_dim}, {"generated_dim", a.generated_dim}, {"stable", b.equal}},
          json{{"ann_dim", a.ann_dim}, {"generated_dim", a.generated_dim}});
  }
  return c.take();
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.ell < 3 || cfg.ell % 2 == 0) throw ConfigError("ell must be odd and at least 3");
  if (cfg.trunc_degree <= 0) throw ConfigError("trunc-degree must be positive");
  if (cfg.window <= 0) throw ConfigError("window must be positive");
  if (cfg.weight_bound && *cfg.weight_bound <= 0) throw ConfigError("weight-bound must be positive");
  for (const auto& s : cfg.suites)
    if (suite_rank(s) >= static_cast<int>(suite_order().size())) throw ConfigError("unknown suite: " + s);
}

std::vector<CheckReport> run_suite(const std::string& suite, const RunConfig& cfg) {
  if (suite == "arith") return suite_arith(cfg);
  if (suite == "algebra") return suite_algebra(cfg);
  if (suite == "frobenius") return suite_frobenius(cfg);
  if (suite == "torus") return suite_torus(cfg);
  if (suite == "modules") return suite_modules(cfg);
  if (suite == "blocks") return suite_blocks(cfg);
  if (suite == "center") return suite_center(cfg);
  if (suite == "ideals") return suite_ideals(cfg);
  throw ConfigError("unknown suite: " + suite);
}

std::vector<CheckReport> run(const RunConfig& cfg) {
  validate(cfg);
  std::vector<std::string> selected = cfg.suites.empty() ? suite_order() : cfg.suites;
  std::sort(selected.begin(), selected.end(),
            [](const std::string& a, const std::string& b) { return suite_rank(a) < suite_rank(b); });
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  std::vector<CheckReport> out;
  for (const auto& s : selected) {
    auto r = run_suite(s, cfg);
    out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  sort_reports(out);
  return out;
}

}  // namespace qhyper
