// Exact arithmetic in the cyclotomic field Q(z), z a primitive ell-th root of
// unity, and the q-integers built from it.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qhyper {

class CycloNum;

/// Q[x]/(Phi_ell(x)) for odd ell >= 3.  One shared instance per ell.
class CycloField {
public:
  /// Throws std::invalid_argument unless ell is odd and >= 3.
  static const CycloField& get(int ell);

  int ell() const noexcept { return ell_; }
  /// phi(ell), the number of stored coefficients.
  int degree() const noexcept { return degree_; }
  /// Coefficients of Phi_ell, lowest degree first.
  const std::vector<mpz_class>& modulus() const noexcept { return modulus_; }
  /// x^k reduced mod Phi_ell, for 0 <= k < power_table_size().
  const std::vector<mpz_class>& power(int k) const { return powers_.at(k); }
  int power_table_size() const noexcept { return static_cast<int>(powers_.size()); }

  /// 1/(z - z^-1), cached since every q-integer divides by it.
  const CycloNum& inv_qdiff() const { return *inv_qdiff_; }

  ~CycloField();
  CycloField(const CycloField&) = delete;
  CycloField& operator=(const CycloField&) = delete;

private:
  explicit CycloField(int ell);

  int ell_;
  int degree_;
  std::vector<mpz_class> modulus_;
  std::vector<std::vector<mpz_class>> powers_;
  std::unique_ptr<CycloNum> inv_qdiff_;
};

/// Element of Q(z), stored as (num_0 + num_1 x + ...)/den in lowest terms.
/// Rational constants may carry no field; mixing with a field element adopts it.
class CycloNum {
public:
  CycloNum() = default;
  CycloNum(long v);  // NOLINT(google-explicit-constructor)
  explicit CycloNum(const mpq_class& v);

  /// z^k for any integer k.
  static CycloNum zeta_pow(const CycloField& f, long k);
  /// Parses the text form, e.g. "1/3 - 2/3*z^2".  Throws std::invalid_argument.
  static CycloNum parse(const CycloField& f, std::string_view text);

  const CycloField* field() const noexcept { return field_; }
  bool is_zero() const noexcept { return num_.empty(); }
  bool is_one() const;
  bool is_rational() const noexcept { return num_.size() <= 1; }
  /// Only valid when is_rational().
  mpq_class rational() const;
  /// Coefficient of x^k as a rational (0 <= k < degree).
  mpq_class coeff(int k) const;
  const std::vector<mpz_class>& numerators() const noexcept { return num_; }
  const mpz_class& denominator() const noexcept { return den_; }

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);
  CycloNum operator-() const;

  /// Throws std::domain_error on zero.
  CycloNum inverse() const;
  /// Multiplication by z^k, cheaper than a general product.
  CycloNum mul_zeta_pow(long k) const;
  /// Same, usable on field-less rational values.
  CycloNum mul_zeta_pow(const CycloField& f, long k) const;
  CycloNum pow(long e) const;

  /// this += a * b without temporaries for the common case.
  void add_mul(const CycloNum& a, const CycloNum& b);

  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  std::string to_string() const;
  std::size_t hash() const;

private:
  void adopt(const CycloField* f);
  void normalize();
  void reduce_raw(std::vector<mpz_class>& poly) const;

  const CycloField* field_ = nullptr;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;

  friend class CycloField;
};

inline CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
inline CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
inline CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
inline CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
std::ostream& operator<<(std::ostream& os, const CycloNum& x);

/// [n] = (z^n - z^-n)/(z - z^-1).
CycloNum q_int(const CycloField& f, long n);
/// [n]! = [1][2]...[n]; n >= 0.
CycloNum q_factorial(const CycloField& f, long n);
/// Gaussian binomial [n; k] for any integer n and k >= 0 (zero for k < 0).
CycloNum gauss_binom(const CycloField& f, long n, long k);
/// Ordinary binomial C(n, k) for any integer n and k >= 0.
mpz_class binom_z(long n, long k);

}  // namespace qhyper
