// Cofinite ideals of U_z through injective comodules: the l-reflection and
// weight blocks, subcomodule lattices of I(r), balanced tuples, and
// annihilator ideals in windowed quotients of U_z.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qhyper/graded.hpp"
#include "qhyper/modules.hpp"

namespace qhyper {

bool is_steinberg(long m, int ell);
/// l-reflection; may be negative.
long rho(long m, int ell);
/// Inverse of rho; throws std::domain_error if the preimage is negative.
long rho_inverse(long m, int ell);
/// Smallest weight of the block of m >= 0.
long block_root(long m, int ell);
/// r_j = rho^-j(r0) for r_j <= bound (just r0 for Steinberg weights).
std::vector<long> block_members(long r0, int ell, long bound);
/// Members <= bound of the block containing m.
std::vector<long> block_of(long m, int ell, long bound);

/// MW (the radical M + W) is the sixth subcomodule for r >= l.
enum class SubLabel { Zero, L, M, W, MW, I };
const char* label_name(SubLabel x);

/// I(r) together with its submodule lattice.
struct InjectiveData {
  long r = 0;
  ModuleRep module;
  std::map<SubLabel, std::vector<SparseVec>> subs;

  std::vector<SubLabel> labels() const;
  const std::vector<SparseVec>& sub(SubLabel x) const { return subs.at(x); }
  /// Label whose subspace equals span(v), if any.
  std::optional<SubLabel> match(const std::vector<SparseVec>& v) const;
  bool leq(SubLabel a, SubLabel b) const;
};

InjectiveData injective_data(const CycloField& f, long r);
std::vector<Matrix> hom_space(const InjectiveData& a, const InjectiveData& b);

/// Balanced tuples of subcomodule labels over one block, supported on
/// members <= bound.  Neighbours beyond the bound are forced to zero.
class BlockLattice {
public:
  using Tuple = std::vector<SubLabel>;

  BlockLattice(const CycloField& f, long r0, long bound);

  const std::vector<long>& members() const noexcept { return members_; }
  const InjectiveData& data(std::size_t j) const { return inj_.at(j); }
  /// Image label of X at member j under Hom(I(r_j), I(r_k)), |j-k| = 1; k may be one past the last member.
  SubLabel transfer(std::size_t j, std::size_t k, SubLabel x) const;
  /// Hom dimensions between members (including the extra one).
  int hom_dim(std::size_t j, std::size_t k) const { return hom_dims_.at(j).at(k); }

  SubLabel join(std::size_t j, SubLabel a, SubLabel b) const;
  SubLabel meet(std::size_t j, SubLabel a, SubLabel b) const;
  Tuple join(const Tuple& a, const Tuple& b) const;
  Tuple meet(const Tuple& a, const Tuple& b) const;
  bool leq(const Tuple& a, const Tuple& b) const;

  bool balanced(const Tuple& t) const;
  std::vector<Tuple> enumerate() const;
  Tuple zero() const { return Tuple(members_.size(), SubLabel::Zero); }
  /// Least balanced tuple with X at member j; nullopt if it leaves the window.
  std::optional<Tuple> generated(std::size_t j, SubLabel x) const;
  /// C(X) for local labels X (L, M, W, I) that fit in the window.
  std::vector<Tuple> locals() const;
  /// Maximal locals below t.
  std::vector<Tuple> local_decompose(const Tuple& t) const;
  /// Exhaustive: exactly one irredundant set of locals joins to t.
  bool decomposition_unique(const Tuple& t) const;

private:
  const CycloField* f_;
  std::vector<long> members_;
  std::vector<InjectiveData> inj_;  // members plus one extra
  std::vector<std::vector<int>> hom_dims_;
  std::map<std::tuple<std::size_t, std::size_t, SubLabel>, SubLabel> transfer_;
  std::vector<std::map<std::pair<SubLabel, SubLabel>, SubLabel>> join_, meet_;
};

std::string tuple_to_string(const BlockLattice::Tuple& t);

/// The image of U_z acting on a direct sum of injectives.
class Window {
public:
  Window(const CycloField& f, const std::vector<long>& weights);
  /// r_0, ..., r_J of the block of r0.
  static Window block(const CycloField& f, long r0, int J);

  const std::vector<long>& weights() const noexcept { return weights_; }
  const GradedAlgebra& algebra() const noexcept { return *A_; }
  const InjectiveData& data(std::size_t i) const { return inj_.at(i); }
  /// Subspace of summand i, in coordinates of the direct sum.
  std::vector<SparseVec> embed(std::size_t i, const std::vector<SparseVec>& sub) const;
  GradedIdeal ann(std::size_t i, SubLabel x) const;
  /// Annihilator of the subquotient upper/lower of summand i.
  GradedIdeal ann(std::size_t i, SubLabel upper, SubLabel lower) const;
  /// ann L(r_k) for block windows: socle of summand k, or W/L of the last summand for k = J+1.
  GradedIdeal maximal(std::size_t k) const;
  GradedIdeal ann_tuple(const BlockLattice::Tuple& t) const;
  /// Generated two-sided ideal from matrices acting on the direct sum.
  GradedIdeal ideal_of_matrices(const std::vector<Matrix>& ms) const;

private:
  const CycloField* f_;
  std::vector<long> weights_;
  std::vector<InjectiveData> inj_;
  std::vector<int> offsets_;
  std::unique_ptr<GradedAlgebra> A_;
};

struct ProductCase {
  std::string module;          // "L", "M", "W", "I"
  long j = 0;                  // block index
  std::vector<long> factors;   // composition factors top to bottom (block indices)
  int J = 0;                   // window
  int ann_dim = 0;
  int product_dim = 0;
  bool equal = false;          // in A_J
  bool stable = false;         // also in A_(J+1)
};

/// All chains for X in {L, M, W, I} at block index j, windows J = j+1 and j+2.
std::vector<ProductCase> verify_theorem7(const CycloField& f, long r0, long j);

struct PrimitiveCheck {
  long m = 0;
  long R = 0;                  // window: all I(r), r <= R
  int ann_dim = 0;
  int generated_dim = 0;
  bool equal = false;
};

/// ann L(m) = ideal generated by ann_u L(m0) and the annihilator of the
/// (m1+1)-dimensional sl2-simple pushed through E^(l), F^(l), H.
PrimitiveCheck verify_primitive_ideal(const CycloField& f, long m, long R);

struct ExtensionCheck {
  long j = 0;
  bool product_formula = false;   // ann W = m_bottom m_top
  bool split_is_intersection = false;
  bool product_in_intersection = false;
  bool product_strict = false;    // m_bottom m_top != m_bottom cap m_top
  bool ext_bound = false;         // dim Hom(I(r_j), I(r_(j+1))) <= 1
  bool ok() const {
    return product_formula && split_is_intersection && product_in_intersection && product_strict && ext_bound;
  }
};

ExtensionCheck verify_remark4(const CycloField& f, long r0, long j);

/// Exhaustive lattice checks for one block below a weight bound.
struct LatticeReport {
  long r0 = 0;
  long bound = 0;
  int tuples = 0;
  int locals = 0;
  bool closed = false;               // join and meet of balanced tuples are balanced
  bool distributive = false;
  bool irreducibles_are_locals = false;
  bool unique_decomposition = false;
  // filled when ideals are requested
  bool with_ideals = false;
  bool antiisomorphism = false;      // order reversing, joins to intersections, meets to sums
  bool green_counts = false;         // dim A - dim ann(t) = sum dim L(r_j) dim X_j
  bool local_annihilators = false;   // ann C(X) = ann X
  bool meet_decomposition_unique = false;
  bool ok() const {
    return closed && distributive && irreducibles_are_locals && unique_decomposition &&
           (!with_ideals || (antiisomorphism && green_counts && local_annihilators && meet_decomposition_unique));
  }
};

LatticeReport verify_lattice(const CycloField& f, long r0, long bound, bool with_ideals);

}  // namespace qhyper
