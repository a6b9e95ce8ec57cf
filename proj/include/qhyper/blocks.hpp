// Blocks of u_z: the minimal polynomial of the Casimir, block idempotents,
// PIM decomposition, centers of u_z and of the truncated smash product, the
// nilradical, and the c-multiplication matrix on two-dimensional U-submodules.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhyper/frobenius.hpp"
#include "qhyper/modules.hpp"

namespace qhyper {

/// B-hat: 0, ..., (l-3)/2 followed by l-1.
std::vector<long> block_labels(int ell);
/// r' = l - 2 - r.
inline long partner(int ell, long r) { return ell - 2 - r; }
/// Weights of L(s) reduced mod l.
std::vector<int> simple_weights_mod(int ell, long s);

/// Phi(x) = (x - lambda_{l-1}) prod_{r in B} (x - lambda_r)^2.
CycloPoly casimir_minimal_polynomial(const Uzeta& u);
/// Largest proper divisors Phi/(x - lambda_s), s in B-hat.
std::vector<CycloPoly> maximal_proper_divisors(const Uzeta& u);
/// Every maximal proper divisor acts nonzero on the direct sum of the I(r)|u.
bool minimality_witness(const Uzeta& u);

/// F^a e_k E^c; lies in e_(k-2a) u_z e_(k-2c).
UzetaElement idem_monomial(const Uzeta& u, int a, int k, int c);

UzetaElement block_idempotent(const Uzeta& u, long r);

/// The left ideal u_z b for b with b = b e_j, as echelon rows per left weight.
std::map<int, std::vector<SparseVec>> left_ideal(const Uzeta& u, const UzetaElement& b);
/// The left ideal u_z b as a u_z-module (labels are left K-weights mod l).
ModuleRep left_ideal_module(const Uzeta& u, const UzetaElement& b, std::string name);

struct PimSummand {
  int j = 0;                      // idempotent e_j
  long type = 0;                  // P(type)
  int dim = 0;
  std::vector<SparseVec> basis;   // u_z eps_r e_j
};

struct BlockData {
  long r = 0;
  UzetaElement idempotent;
  int dim = 0;                    // dim eps_r u_z
  std::vector<PimSummand> pims;
  std::vector<long> types;        // (r, r') or (l-1)
  std::vector<std::vector<int>> cartan;  // cartan[s][t] = dim e_i eps u e_j, i of type s, j of type t
};

BlockData block_data(const Uzeta& u, long r, bool with_pims = true);

/// Basis of the center of u_z (brute-force commutant of E, F, K).
std::vector<SparseVec> center_uzeta(const Uzeta& u);
/// eps_r, eps_r (c - lambda_r), theta_r for r in B, and eps_(l-1).
std::vector<UzetaElement> center_family(const Uzeta& u);
UzetaElement theta(const Uzeta& u, long r);

struct Nilradical {
  std::vector<SparseVec> N;
  std::vector<SparseVec> N2;
  bool cube_zero = false;
};

Nilradical nilradical(const Uzeta& u);
/// Two-sided ideal generated by central elements: the span of u_z g.
std::vector<SparseVec> ideal_of_central(const Uzeta& u, const std::vector<UzetaElement>& gens);

struct SmashCenter {
  std::vector<SmashElement> basis;     // solved commutant
  std::vector<SmashElement> expected;  // eps # 1, M (x) c^i
  int dim = 0;
  bool matches_expected = false;
};

/// Central elements of eps_r u_z # U of U-degree <= N.
SmashCenter center_smash_truncated(const FrobeniusAction& fa, long r, int N);

struct CActionEntry {
  int n = 0;
  UElement a, b, c, d;
  bool decomposes = false;   // c^n t, c^n v lie in t # U + v # U
  bool b_is_bracket = false; // b_n = [f, a_n]
  bool c_is_omega_b = false;
  bool d_is_omega_a = false;
  bool a_in_kch = false;     // a_n = sum c^i phi_i(h), deg phi_i <= 1
  bool leading = false;      // phi_n = 1
  bool subleading = false;   // phi_(n-1) = 2nh + n(2n+1)
  std::vector<UElement> phi;
  bool ok() const {
    return decomposes && b_is_bracket && c_is_omega_b && d_is_omega_a && a_in_kch && leading && subleading;
  }
};

struct CActionReport {
  UzetaElement t, v;
  std::vector<CActionEntry> entries;
  bool ok() const;
};

/// Picks t with D_e t = 0, D_h t = t inside the block r and v = D_f t.
CActionReport verify_lemma4(const FrobeniusAction& fa, int nmax, long r = 0);

}  // namespace qhyper
