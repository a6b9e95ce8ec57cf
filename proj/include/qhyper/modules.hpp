// Matrix models of finite-dimensional type-1 modules of U_z: simples, Weyl and
// co-Weyl modules, injective hulls, Frobenius twists, and the submodule
// machinery (closures, intertwiners, socle series).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhyper/linalg.hpp"
#include "qhyper/torus.hpp"
#include "qhyper/uzeta.hpp"

namespace qhyper {

enum class Gen { E, F, K, El, Fl };

/// Which algebra a computation is relative to: u_z (E, F, K; weights mod l)
/// or the full U_z (adds E^(l), F^(l); integral weights).
enum class Level { small, full };

const char* gen_name(Gen g);

/// A module given by generator matrices on a basis of weight vectors.  Every
/// basis vector carries an integral weight label; K acts by z^label.
class ModuleRep {
public:
  ModuleRep(const CycloField& f, std::string name, std::vector<long> labels, Matrix E, Matrix F, Matrix El,
            Matrix Fl, bool small_only = false);

  const std::string& name() const noexcept { return name_; }
  const CycloField& field() const noexcept { return *f_; }
  int ell() const { return f_->ell(); }
  int dim() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<long>& labels() const noexcept { return labels_; }
  Weight weight(int i) const { return integral_weight(labels_.at(i), ell()); }
  /// True for u_z-modules whose E^(l), F^(l) are not defined.
  bool small_only() const noexcept { return small_only_; }

  const Matrix& mat(Gen g) const;
  Matrix K_pow(long b) const;
  /// diag(gauss_binom(label + c, t)), the action of [K; c, t] for t < l.
  Matrix torus_diag(long c, long t) const;
  /// E^(c) = E^(c0) (E^(l))^c1 / c1!, c = c0 + l c1.
  Matrix divided_E(long c) const;
  Matrix divided_F(long a) const;
  /// Action of an element of u_z.
  Matrix act(const UzetaElement& x) const;

  long highest_weight() const;
  std::map<long, int> character() const;

private:
  const CycloField* f_;
  std::string name_;
  std::vector<long> labels_;
  Matrix E_, F_, K_, El_, Fl_;
  bool small_only_;
};

ModuleRep simple_L(const CycloField& f, long r);
ModuleRep weyl_W(const CycloField& f, long m);
ModuleRep coweyl_M(const CycloField& f, long m);
/// I(r), 0 <= r < l.
ModuleRep injective_I(const CycloField& f, long r);
/// x (x) L(n)^[Fr]: E, F, K act on x; E^(l) -> E^(l) (x) 1 + 1 (x) e, same for F.
ModuleRep tensor_frobenius(const ModuleRep& x, long n);
/// L(m) = L(m0) (x) L(m1)^[Fr] for any m >= 0.
ModuleRep simple_module(const CycloField& f, long m);
/// I(m) = I(m0) (x) L(m1)^[Fr] for any m >= 0.
ModuleRep injective_module(const CycloField& f, long m);
ModuleRep direct_sum(const std::vector<ModuleRep>& parts, std::string name);
/// Dual through the antipode; labels are negated.
ModuleRep dual(const ModuleRep& x);
/// Restriction to u_z.
ModuleRep restrict_small(const ModuleRep& x);

struct RelationCheck {
  std::string name;
  bool ok = false;
};

std::vector<RelationCheck> relation_checklist(const ModuleRep& x);
bool passes_checklist(const ModuleRep& x);
/// [E^(l), F^(l)] = diag(gauss_binom(w, l)) + rho(f) with f = Uzeta::lemma1_f().
bool verify_lemma1_H(const ModuleRep& x);

/// Splits v into components of constant grade (label, or label mod l).
std::vector<SparseVec> weight_components(const ModuleRep& x, const SparseVec& v, Level lv);
/// Smallest submodule containing the given vectors; returns echelon rows,
/// each homogeneous for the level's grading.
std::vector<SparseVec> submodule_closure(const ModuleRep& x, const std::vector<SparseVec>& gens,
                                         Level lv = Level::full);
ModuleRep submodule(const ModuleRep& x, const std::vector<SparseVec>& sub, Level lv = Level::full);
/// x / sub, on the complement of the echelon pivots of sub.
ModuleRep quotient(const ModuleRep& x, const std::vector<SparseVec>& sub, Level lv = Level::full);

/// Basis of Hom(a, b) (maps commuting with the level's generators).
std::vector<Matrix> intertwiners(const ModuleRep& a, const ModuleRep& b, Level lv = Level::full);
/// Sum of the images of all maps into x from the simple s.
std::vector<SparseVec> isotypic_socle(const ModuleRep& x, const ModuleRep& s, Level lv = Level::full);

struct SocleLayer {
  std::vector<SparseVec> cumulative;  // soc^k(x) inside x
  std::map<long, int> factors;        // highest weight -> multiplicity in soc^k / soc^(k-1)
};

std::vector<SparseVec> socle(const ModuleRep& x, Level lv = Level::full);
std::map<long, int> socle_factors(const ModuleRep& x, Level lv = Level::full);
std::vector<SocleLayer> socle_series(const ModuleRep& x, Level lv = Level::full);
/// rad(x) as the annihilator of soc of the dual.
std::vector<SparseVec> radical(const ModuleRep& x);
std::map<long, int> composition_factors(const ModuleRep& x, Level lv = Level::full);

/// Burnside: the image of U_z in End(x) is everything.
bool is_simple(const ModuleRep& x);
/// W(m) modulo the sum of the proper cyclic submodules generated by basis vectors.
ModuleRep head_weyl(const CycloField& f, long m);

struct SteinbergResult {
  bool head_simple = false;
  bool tensor_simple = false;
  bool same_dim = false;
  bool same_highest = false;
  bool intertwiner = false;
  bool ok() const { return head_simple && tensor_simple && same_dim && same_highest && intertwiner; }
};

/// head(W(m)) is isomorphic to L(m0) (x) L(m1)^[Fr].
SteinbergResult steinberg_verify(const CycloField& f, long m);

/// Subspace of x spanned by a single weight's basis vectors.
std::vector<int> weight_indices(const ModuleRep& x, long label);

}  // namespace qhyper
