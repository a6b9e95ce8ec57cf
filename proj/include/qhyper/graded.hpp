// The image A of U_z in End(X) for a module X, split into pieces
// A_{mu,nu} = Hom-part from weight nu to weight mu, with two-sided ideals
// stored piecewise.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qhyper/modules.hpp"

namespace qhyper {

class GradedAlgebra {
public:
  /// (target weight, source weight)
  using Key = std::pair<long, long>;

  /// A = span rho(F^(a)) P_k rho(E^(c)) over all divided powers and weights.
  explicit GradedAlgebra(const ModuleRep& x);

  const ModuleRep& module() const noexcept { return x_; }
  const std::vector<long>& weights() const noexcept { return weights_; }
  bool has_weight(long w) const { return index_.count(w) != 0; }
  int weight_dim(long w) const { return static_cast<int>(index_.at(w).size()); }
  const std::vector<int>& indices(long w) const { return index_.at(w); }
  /// Position of a global basis index inside its weight space.
  int local(int global) const { return local_.at(global); }

  const std::map<Key, std::vector<SparseVec>>& pieces() const noexcept { return pieces_; }
  const std::vector<SparseVec>& piece(const Key& k) const;
  int dim() const;

  /// Restriction of m to the block nu -> mu, flattened row-major.
  SparseVec block(const Matrix& m, long mu, long nu) const;
  /// (mu <- kappa) * (kappa <- nu).
  SparseVec multiply(const SparseVec& a, long mu, long kappa, const SparseVec& b, long nu) const;
  /// Applies a (mu <- nu) block to a vector supported on weight nu; result in global coordinates.
  SparseVec apply(const SparseVec& a, long mu, long nu, const SparseVec& v) const;
  /// Embeds a flattened block as a full matrix.
  Matrix to_matrix(const SparseVec& a, long mu, long nu) const;

  /// Weight shifts of E, F, E^(l), F^(l).
  const std::vector<std::pair<long, Gen>>& generators() const noexcept { return gens_; }

private:
  ModuleRep x_;
  std::vector<long> weights_;
  std::map<long, std::vector<int>> index_;
  std::vector<int> local_;
  std::map<Key, std::vector<SparseVec>> pieces_;
  std::vector<std::pair<long, Gen>> gens_;
};

/// A two-sided ideal of a GradedAlgebra, stored as echelon rows per piece.
struct GradedIdeal {
  std::map<GradedAlgebra::Key, std::vector<SparseVec>> pieces;
  int dim() const;
};

GradedIdeal whole_ideal(const GradedAlgebra& A);
GradedIdeal ideal_generated(const GradedAlgebra& A, const std::map<GradedAlgebra::Key, std::vector<SparseVec>>& gens);
/// {a in A : a sub subset lower} for submodules lower <= sub of X.
GradedIdeal annihilator(const GradedAlgebra& A, const std::vector<SparseVec>& sub,
                        const std::vector<SparseVec>& lower = {});
GradedIdeal ideal_product(const GradedAlgebra& A, const GradedIdeal& P, const GradedIdeal& Q);
GradedIdeal ideal_intersect(const GradedAlgebra& A, const GradedIdeal& P, const GradedIdeal& Q);
GradedIdeal ideal_sum(const GradedAlgebra& A, const GradedIdeal& P, const GradedIdeal& Q);
bool ideal_contains(const GradedIdeal& big, const GradedIdeal& small);
bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b);
/// A few elements generating P as a two-sided ideal.
std::map<GradedAlgebra::Key, std::vector<SparseVec>> ideal_generators(const GradedAlgebra& A, const GradedIdeal& P);

}  // namespace qhyper
