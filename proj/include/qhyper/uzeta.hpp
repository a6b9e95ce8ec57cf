// The small quantum group u_z: PBW basis F^a K^b E^c with 0 <= a, b, c < ell.
//
// Conventions: K E K^-1 = z^2 E, K F K^-1 = z^-2 F, EF - FE = (K - K^-1)/(z - z^-1).
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qhyper/cyclo.hpp"
#include "qhyper/linalg.hpp"

namespace qhyper {

class Uzeta;

/// Element of u_z as sparse PBW coordinates (index a*ell^2 + b*ell + c).
class UzetaElement {
public:
  UzetaElement() = default;
  UzetaElement(const Uzeta& alg, SparseVec coords) : alg_(&alg), v_(std::move(coords)) {}

  const Uzeta& algebra() const { return *alg_; }
  const SparseVec& coords() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_.is_zero(); }
  /// Coefficient of F^a K^b E^c.
  CycloNum coeff(int a, int b, int c) const;

  UzetaElement& operator+=(const UzetaElement& o);
  UzetaElement& operator-=(const UzetaElement& o);
  UzetaElement operator-() const;
  UzetaElement scaled(const CycloNum& c) const;
  UzetaElement pow(int e) const;
  bool operator==(const UzetaElement& o) const { return v_ == o.v_; }
  bool operator!=(const UzetaElement& o) const { return !(v_ == o.v_); }
  std::string to_string() const;

private:
  const Uzeta* alg_ = nullptr;
  SparseVec v_;
};

UzetaElement operator+(UzetaElement a, const UzetaElement& b);
UzetaElement operator-(UzetaElement a, const UzetaElement& b);
UzetaElement operator*(const UzetaElement& a, const UzetaElement& b);
UzetaElement operator*(const CycloNum& c, const UzetaElement& a);
inline UzetaElement commutator(const UzetaElement& a, const UzetaElement& b) { return a * b - b * a; }

/// Polynomial with CycloNum coefficients, lowest degree first.
using CycloPoly = std::vector<CycloNum>;
CycloPoly poly_mul(const CycloPoly& a, const CycloPoly& b);
CycloPoly poly_add(const CycloPoly& a, const CycloPoly& b);
CycloPoly poly_derivative(const CycloPoly& a);
CycloNum poly_eval(const CycloPoly& p, const CycloNum& x);
std::string poly_to_string(const CycloPoly& p);

/// Structure of u_z for a fixed ell.  One shared instance per ell.
class Uzeta {
public:
  static const Uzeta& get(int ell);

  const CycloField& field() const noexcept { return *field_; }
  int ell() const noexcept { return ell_; }
  int dim() const noexcept { return ell_ * ell_ * ell_; }
  int index(int a, int b, int c) const { return (a * ell_ + b) * ell_ + c; }
  std::array<int, 3> triple(int idx) const {
    return {idx / (ell_ * ell_), (idx / ell_) % ell_, idx % ell_};
  }

  UzetaElement element(SparseVec v) const { return UzetaElement(*this, std::move(v)); }
  UzetaElement zero() const { return element({}); }
  UzetaElement scalar(const CycloNum& c) const;
  UzetaElement one() const { return scalar(CycloNum(1L)); }
  /// c * F^a K^b E^c with b taken mod ell; zero if a or c >= ell.
  UzetaElement monomial(int a, long b, int c, const CycloNum& coef = CycloNum(1L)) const;
  UzetaElement E() const { return monomial(0, 0, 1); }
  UzetaElement F() const { return monomial(1, 0, 0); }
  UzetaElement K(long b = 1) const { return monomial(0, b, 0); }
  /// E^s/[s]! and F^s/[s]! for 0 <= s < ell.
  UzetaElement divided_E(int s) const;
  UzetaElement divided_F(int s) const;

  UzetaElement multiply(const UzetaElement& x, const UzetaElement& y) const;
  /// Casimir FE + (zK + z^-1 K^-1)/(z - z^-1)^2.
  UzetaElement casimir() const;
  /// [K; c; t] as a polynomial in K; requires 0 <= t < ell.
  UzetaElement torus_binom(long c, long t) const;
  /// e_m = (1/ell) sum_j z^(-mj) K^j.
  UzetaElement idempotent_e(long m) const;
  /// The automorphism E <-> F, K <-> K^-1.
  UzetaElement omega(const UzetaElement& x) const;
  /// f = sum_{1<=t<ell} F^(ell-t) [K; -2(ell-t); t] E^(ell-t).
  UzetaElement lemma1_f() const;
  /// Evaluates a polynomial at x by Horner's rule.
  UzetaElement eval_poly(const CycloPoly& p, const UzetaElement& x) const;
  /// lambda_r = (z^(r+1) + z^-(r+1))/(z - z^-1)^2.
  CycloNum casimir_eigenvalue(long r) const;

  /// Matrices of y -> x*y and y -> y*x on PBW coordinates.
  Matrix left_mult_matrix(const UzetaElement& x) const;
  Matrix right_mult_matrix(const UzetaElement& x) const;

  /// Left multiplication by F^a K^b and right multiplication by K^b E^c of
  /// a monomial; cheap special cases used by the derivation builders.
  UzetaElement times_KE(const UzetaElement& x, long b, int c) const;
  UzetaElement FK_times(int a, long b, const UzetaElement& x) const;

  /// Parses e.g. "(1/3) * F^1 K^0 E^1 + 2*K^2"; products are normal-ordered.
  UzetaElement parse(std::string_view text) const;
  std::string to_string(const UzetaElement& x) const;

  /// Verifies F^(s)E^(s) = (1/[s]!^2) prod_{i=1}^s (c - (z^(2i-1)K + z^(1-2i)K^-1)/(z-z^-1)^2).
  bool verify_FsEs(int s) const;

  Uzeta(const Uzeta&) = delete;
  Uzeta& operator=(const Uzeta&) = delete;

private:
  explicit Uzeta(int ell);
  // E^c F^a = sum over terms (a', kpoly, c') of F^a' kpoly(K) E^c'.
  struct EFTerm {
    int a;
    int c;
    std::vector<CycloNum> kpoly;  // coefficient of K^j, j < ell
  };
  std::vector<CycloNum> torus_binom_poly(long c, long t) const;

  const CycloField* field_;
  int ell_;
  std::vector<std::vector<std::vector<EFTerm>>> ef_;  // ef_[c][a]
  std::vector<CycloNum> zeta_pows_;                    // z^k, k < ell
};

}  // namespace qhyper
