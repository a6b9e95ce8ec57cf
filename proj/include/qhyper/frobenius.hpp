// The sl2-action on u_z by the derivations D_e, D_f, D_h, and the truncated
// smash product u_z # U(sl2) modelling U_z.
#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhyper/uzeta.hpp"

namespace qhyper {

enum class SlGen { e, f, h };

/// D_e = [E^(l), -], D_f = omega D_e omega, D_h = [D_e, D_f], as matrices on
/// PBW coordinates.  Built once per ell.
class FrobeniusAction {
public:
  static const FrobeniusAction& get(int ell);

  const Uzeta& algebra() const noexcept { return *u_; }
  const Matrix& D(SlGen g) const;
  UzetaElement apply(SlGen g, const UzetaElement& x) const;
  /// Matrix of the automorphism omega on PBW coordinates.
  const Matrix& omega_matrix() const noexcept { return omega_; }

  FrobeniusAction(const FrobeniusAction&) = delete;
  FrobeniusAction& operator=(const FrobeniusAction&) = delete;

private:
  explicit FrobeniusAction(const Uzeta& u);

  const Uzeta* u_;
  Matrix omega_, de_, df_, dh_;
};

Matrix build_D_e(const Uzeta& u);
Matrix build_D_f(const Uzeta& u, const Matrix& de);
Matrix build_D_h(const Matrix& de, const Matrix& df);

struct UDecomposition {
  int dim = 0;
  int m0 = 0;               // trivial summands
  int m1 = 0;               // two-dimensional summands
  int invariants = 0;       // dim(ker D_e cap ker D_f)
  std::map<int, int> eigen; // D_h eigenvalue -> eigenspace dimension
};

/// Decomposes a D-stable subspace given by a spanning set.  Throws
/// std::invalid_argument if the span is not stable or D_h has eigenvalues
/// outside {-1, 0, 1}.
UDecomposition u_decompose(const FrobeniusAction& fa, const std::vector<SparseVec>& span);

/// Raised when a product leaves the configured U-degree budget.
class TruncationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Element of U(sl2) in the basis f^i h^j e^k.
using UMono = std::array<int, 3>;
using UElement = std::map<UMono, CycloNum>;

UElement u_monomial(int i, int j, int k, const CycloNum& c = CycloNum(1L));
UElement u_add(const UElement& a, const UElement& b, const CycloNum& scale = CycloNum(1L));
/// Normal-ordered product; throws TruncationError beyond degree bound.
UElement u_mul(const UElement& a, const UElement& b, int bound);
UElement u_bracket(const UElement& a, const UElement& b, int bound);
/// The automorphism e <-> f, h -> -h.
UElement u_omega(const UElement& a, int bound);
/// c = 4fe + (h + 1)^2.
UElement u_casimir();
std::string u_to_string(const UElement& a);

/// Key (u_z PBW index, f-exponent, h-exponent, e-exponent).
using SmashKey = std::array<int, 4>;

/// x # f^i h^j e^k combinations.
class SmashElement {
public:
  const std::map<SmashKey, CycloNum>& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  void add(const SmashKey& k, const CycloNum& c);
  SmashElement& operator+=(const SmashElement& o);
  SmashElement& operator-=(const SmashElement& o);
  SmashElement scaled(const CycloNum& c) const;
  bool operator==(const SmashElement& o) const { return t_ == o.t_; }
  int max_degree() const;

private:
  std::map<SmashKey, CycloNum> t_;
};

SmashElement operator+(SmashElement a, const SmashElement& b);
SmashElement operator-(SmashElement a, const SmashElement& b);

class SmashAlgebra {
public:
  explicit SmashAlgebra(const FrobeniusAction& fa, int bound = 8) : fa_(&fa), bound_(bound) {}

  int bound() const noexcept { return bound_; }
  const FrobeniusAction& action() const noexcept { return *fa_; }
  const Uzeta& algebra() const noexcept { return fa_->algebra(); }

  /// x # 1
  SmashElement embed(const UzetaElement& x) const;
  /// 1 # u
  SmashElement embed(const UElement& u) const;
  /// x # u
  SmashElement tensor(const UzetaElement& x, const UElement& u) const;
  SmashElement gen(SlGen g) const;

  /// (1 # g) y
  SmashElement left_gen(SlGen g, const SmashElement& y, int bound) const;
  SmashElement multiply(const SmashElement& x, const SmashElement& y) const { return multiply(x, y, bound_); }
  SmashElement multiply(const SmashElement& x, const SmashElement& y, int bound) const;
  SmashElement commutator(const SmashElement& x, const SmashElement& y, int bound) const;

  /// Splits z = sum_m w_m # m into its u_z parts grouped by U-monomial.
  std::map<UMono, UzetaElement> by_monomial(const SmashElement& z) const;

private:
  const FrobeniusAction* fa_;
  int bound_;
};

}  // namespace qhyper
