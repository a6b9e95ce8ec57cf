// The diagonal subalgebra U^0_z = k[K]/(K^l - 1)[delta], delta = [K; l],
// its coalgebra structure and its characters (weights).
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhyper/cyclo.hpp"

namespace qhyper {

/// Character (r, alpha) of U^0_z: K -> z^r, delta -> alpha.
struct Weight {
  int r = 0;
  CycloNum alpha;

  bool operator==(const Weight& o) const { return r == o.r && alpha == o.alpha; }
  std::string to_string() const;
};

/// Integral weight m = m0 + l*m1 with 0 <= m0 < l (floor division).
Weight integral_weight(long m, int ell);
Weight weight_add(const Weight& a, const Weight& b, int ell);
Weight weight_neg(const Weight& a, int ell);

/// Tensor power of U^0_z; keys (i_1, j_1, ..., i_n, j_n) for K^i delta^j factors.
using TorusTensor = std::map<std::vector<int>, CycloNum>;

class TorusError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class TorusElement {
public:
  explicit TorusElement(const CycloField& f, int degree_bound = 6) : f_(&f), bound_(degree_bound) {}

  static TorusElement K_pow(const CycloField& f, long i, int bound = 6);
  static TorusElement delta(const CycloField& f, int bound = 6);
  static TorusElement scalar(const CycloField& f, const CycloNum& c, int bound = 6);
  /// e_m = (1/l) sum_k z^(-mk) K^k.
  static TorusElement idempotent(const CycloField& f, long m, int bound = 6);

  const CycloField& field() const { return *f_; }
  int ell() const { return f_->ell(); }
  int bound() const noexcept { return bound_; }
  const std::map<std::pair<int, int>, CycloNum>& terms() const noexcept { return t_; }
  void add(int i, int j, const CycloNum& c);
  bool is_zero() const { return t_.empty(); }

  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator*(const TorusElement& o) const;
  TorusElement scaled(const CycloNum& c) const;
  bool operator==(const TorusElement& o) const { return t_ == o.t_; }
  std::string to_string() const;

  TorusTensor as_tensor() const;

private:
  const CycloField* f_;
  int bound_;
  std::map<std::pair<int, int>, CycloNum> t_;
};

/// Applies the coproduct to tensor factor `pos` of t (t has n factors, result n+1).
TorusTensor coproduct_at(const TorusTensor& t, std::size_t pos, const CycloField& f, int bound);
TorusTensor coproduct(const TorusElement& x);
/// Applies the counit to factor `pos`.
TorusTensor counit_at(const TorusTensor& t, std::size_t pos);
TorusTensor tensor_of(const TorusElement& a, const TorusElement& b);
TorusTensor tensor_add(const TorusTensor& a, const TorusTensor& b, const CycloNum& scale = CycloNum(1L));
CycloNum counit(const TorusElement& x);

/// d = delta + (1/l) sum_{m=1}^{l-1} m e_m.
TorusElement primitive_d(const CycloField& f, int bound = 6);
/// [K; m] = [K; m0] * binom(delta, m1).
TorusElement binom_K(const CycloField& f, long m, int bound = 6);

CycloNum char_eval(const Weight& w, const TorusElement& t);
/// (chi_a (x) chi_b)(Delta t).
CycloNum char_convolve(const Weight& a, const Weight& b, const TorusElement& t);

}  // namespace qhyper
