#include "qhyper/uzeta.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qhyper {

namespace {

long mod_l(long k, long ell) {
  k %= ell;
  return k < 0 ? k + ell : k;
}

}  // namespace

// ---------------------------------------------------------------------------
// UzetaElement

CycloNum UzetaElement::coeff(int a, int b, int c) const { return v_.get(alg_->index(a, b, c)); }

UzetaElement& UzetaElement::operator+=(const UzetaElement& o) {
  if (!alg_) alg_ = o.alg_;
  v_ += o.v_;
  return *this;
}

UzetaElement& UzetaElement::operator-=(const UzetaElement& o) {
  if (!alg_) alg_ = o.alg_;
  v_ -= o.v_;
  return *this;
}

UzetaElement UzetaElement::operator-() const { return scaled(CycloNum(-1L)); }

UzetaElement UzetaElement::scaled(const CycloNum& c) const { return UzetaElement(*alg_, v_.scaled(c)); }

UzetaElement UzetaElement::pow(int e) const {
  UzetaElement r = alg_->one();
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string UzetaElement::to_string() const { return alg_ ? alg_->to_string(*this) : "0"; }

UzetaElement operator+(UzetaElement a, const UzetaElement& b) { return a += b; }
UzetaElement operator-(UzetaElement a, const UzetaElement& b) { return a -= b; }
UzetaElement operator*(const UzetaElement& a, const UzetaElement& b) { return a.algebra().multiply(a, b); }
UzetaElement operator*(const CycloNum& c, const UzetaElement& a) { return a.scaled(c); }

// ---------------------------------------------------------------------------
// Polynomials

CycloPoly poly_mul(const CycloPoly& a, const CycloPoly& b) {
  if (a.empty() || b.empty()) return {};
  CycloPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j].add_mul(a[i], b[j]);
  return r;
}

CycloPoly poly_add(const CycloPoly& a, const CycloPoly& b) {
  CycloPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

CycloPoly poly_derivative(const CycloPoly& a) {
  if (a.size() <= 1) return {};
  CycloPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * CycloNum(static_cast<long>(i));
  return r;
}

CycloNum poly_eval(const CycloPoly& p, const CycloNum& x) {
  CycloNum r;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

std::string poly_to_string(const CycloPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p[i].to_string() << ")";
    if (i > 0) os << "*x^" << i;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Uzeta

const Uzeta& Uzeta::get(int ell) {
  const CycloField& f = CycloField::get(ell);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Uzeta>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[ell];
  if (!slot) slot.reset(new Uzeta(f.ell()));
  return *slot;
}

Uzeta::Uzeta(int ell) : field_(&CycloField::get(ell)), ell_(ell) {
  for (int k = 0; k < ell; ++k) zeta_pows_.push_back(CycloNum::zeta_pow(*field_, k));
  std::vector<CycloNum> fact(ell);
  for (int s = 0; s < ell; ++s) fact[s] = q_factorial(*field_, s);
  ef_.assign(ell, std::vector<std::vector<EFTerm>>(ell));
  for (int c = 0; c < ell; ++c) {
    for (int a = 0; a < ell; ++a) {
      for (int t = 0; t <= std::min(a, c); ++t) {
        CycloNum scale = fact[c] * fact[a] / (fact[a - t] * fact[c - t]);
        std::vector<CycloNum> kp = torus_binom_poly(2 * t - a - c, t);
        for (auto& x : kp) x *= scale;
        ef_[c][a].push_back({a - t, c - t, std::move(kp)});
      }
    }
  }
}

std::vector<CycloNum> Uzeta::torus_binom_poly(long c, long t) const {
  if (t < 0 || t >= ell_) throw std::out_of_range("torus_binom: t must satisfy 0 <= t < ell");
  std::vector<CycloNum> p(ell_);
  p[0] = CycloNum::zeta_pow(*field_, 0);
  for (long s = 1; s <= t; ++s) {
    CycloNum den = (CycloNum::zeta_pow(*field_, s) - CycloNum::zeta_pow(*field_, -s)).inverse();
    CycloNum up = CycloNum::zeta_pow(*field_, c - s + 1) * den;
    CycloNum down = -CycloNum::zeta_pow(*field_, -(c - s + 1)) * den;
    std::vector<CycloNum> q(ell_);
    for (int j = 0; j < ell_; ++j) {
      if (p[j].is_zero()) continue;
      q[(j + 1) % ell_].add_mul(p[j], up);
      q[(j + ell_ - 1) % ell_].add_mul(p[j], down);
    }
    p = std::move(q);
  }
  return p;
}

UzetaElement Uzeta::scalar(const CycloNum& c) const { return monomial(0, 0, 0, c); }

UzetaElement Uzeta::monomial(int a, long b, int c, const CycloNum& coef) const {
  if (a < 0 || c < 0) throw std::invalid_argument("monomial: negative exponent");
  if (a >= ell_ || c >= ell_) return zero();
  return element(SparseVec::unit(index(a, static_cast<int>(mod_l(b, ell_)), c), coef));
}

UzetaElement Uzeta::divided_E(int s) const {
  return monomial(0, 0, s, q_factorial(*field_, s).inverse());
}

UzetaElement Uzeta::divided_F(int s) const {
  return monomial(s, 0, 0, q_factorial(*field_, s).inverse());
}

UzetaElement Uzeta::multiply(const UzetaElement& x, const UzetaElement& y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  std::vector<CycloNum> acc(dim());
  for (const auto& [i, alpha] : x.coords().entries()) {
    auto [a, b, c] = triple(i);
    for (const auto& [j, beta] : y.coords().entries()) {
      auto [a2, b2, c2] = triple(j);
      CycloNum ab = alpha * beta;
      for (const EFTerm& t : ef_[c][a2]) {
        if (a + t.a >= ell_ || t.c + c2 >= ell_) continue;
        // F^a K^b F^t.a = z^(-2 b t.a) F^(a+t.a) K^b ; E^t.c K^b2 = z^(-2 b2 t.c) K^b2 E^t.c
        long shift = -2L * b * t.a - 2L * b2 * t.c;
        CycloNum base = ab.mul_zeta_pow(*field_, shift);
        for (int k = 0; k < ell_; ++k) {
          if (t.kpoly[k].is_zero()) continue;
          int idx = index(a + t.a, (b + k + b2) % ell_, t.c + c2);
          acc[idx].add_mul(base, t.kpoly[k]);
        }
      }
    }
  }
  return element(SparseVec::from_dense(acc));
}

UzetaElement Uzeta::times_KE(const UzetaElement& x, long b, int c) const {
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, coef] : x.coords().entries()) {
    auto [a1, b1, c1] = triple(i);
    if (c1 + c >= ell_) continue;
    out.emplace_back(index(a1, static_cast<int>(mod_l(b1 + b, ell_)), c1 + c),
                     coef.mul_zeta_pow(*field_, -2L * b * c1));
  }
  return element(SparseVec::from_entries(std::move(out)));
}

UzetaElement Uzeta::FK_times(int a, long b, const UzetaElement& x) const {
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, coef] : x.coords().entries()) {
    auto [a1, b1, c1] = triple(i);
    if (a + a1 >= ell_) continue;
    out.emplace_back(index(a + a1, static_cast<int>(mod_l(b + b1, ell_)), c1),
                     coef.mul_zeta_pow(*field_, -2L * b * a1));
  }
  return element(SparseVec::from_entries(std::move(out)));
}

UzetaElement Uzeta::casimir() const {
  CycloNum q2 = field_->inv_qdiff() * field_->inv_qdiff();
  return F() * E() + (K(1).scaled(zeta_pows_[1]) + K(-1).scaled(CycloNum::zeta_pow(*field_, -1))).scaled(q2);
}

UzetaElement Uzeta::torus_binom(long c, long t) const {
  std::vector<CycloNum> p = torus_binom_poly(c, t);
  std::vector<SparseVec::Entry> e;
  for (int j = 0; j < ell_; ++j) e.emplace_back(index(0, j, 0), p[j]);
  return element(SparseVec::from_entries(std::move(e)));
}

UzetaElement Uzeta::idempotent_e(long m) const {
  std::vector<SparseVec::Entry> e;
  CycloNum inv_l = CycloNum(mpq_class(1, ell_));
  for (int j = 0; j < ell_; ++j) e.emplace_back(index(0, j, 0), CycloNum::zeta_pow(*field_, -m * j) * inv_l);
  return element(SparseVec::from_entries(std::move(e)));
}

UzetaElement Uzeta::omega(const UzetaElement& x) const {
  UzetaElement r = zero();
  for (const auto& [i, coef] : x.coords().entries()) {
    auto [a, b, c] = triple(i);
    r += (monomial(0, -b, a) * monomial(c, 0, 0)).scaled(coef.mul_zeta_pow(*field_, 2L * a * b));
  }
  return r;
}

UzetaElement Uzeta::lemma1_f() const {
  UzetaElement r = zero();
  for (int t = 1; t < ell_; ++t)
    r += divided_F(ell_ - t) * torus_binom(-2L * (ell_ - t), t) * divided_E(ell_ - t);
  return r;
}

UzetaElement Uzeta::eval_poly(const CycloPoly& p, const UzetaElement& x) const {
  UzetaElement r = zero();
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + scalar(p[i]);
  return r;
}

CycloNum Uzeta::casimir_eigenvalue(long r) const {
  CycloNum q2 = field_->inv_qdiff() * field_->inv_qdiff();
  return (CycloNum::zeta_pow(*field_, r + 1) + CycloNum::zeta_pow(*field_, -(r + 1))) * q2;
}

Matrix Uzeta::left_mult_matrix(const UzetaElement& x) const {
  Matrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.set_col(j, multiply(x, element(SparseVec::unit(j))).coords());
  return m;
}

Matrix Uzeta::right_mult_matrix(const UzetaElement& x) const {
  Matrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.set_col(j, multiply(element(SparseVec::unit(j)), x).coords());
  return m;
}

std::string Uzeta::to_string(const UzetaElement& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, coef] : x.coords().entries()) {
    auto [a, b, c] = triple(i);
    if (!first) os << " + ";
    first = false;
    os << "(" << coef.to_string() << ") * F^" << a << " K^" << b << " E^" << c;
  }
  return os.str();
}

bool Uzeta::verify_FsEs(int s) const {
  if (s < 0 || s >= ell_) throw std::out_of_range("verify_FsEs: need 0 <= s < ell");
  UzetaElement lhs = divided_F(s) * divided_E(s);
  CycloNum q2 = field_->inv_qdiff() * field_->inv_qdiff();
  UzetaElement c = casimir();
  UzetaElement prod = one();
  for (int i = 1; i <= s; ++i) {
    UzetaElement shift = K(1).scaled(CycloNum::zeta_pow(*field_, 2 * (i - 1) + 1)) +
                         K(-1).scaled(CycloNum::zeta_pow(*field_, -2 * (i - 1) - 1));
    prod = prod * (c - shift.scaled(q2));
  }
  CycloNum f = q_factorial(*field_, s);
  return lhs == prod.scaled((f * f).inverse());
}

// ---------------------------------------------------------------------------
// Parser for u_z text.  expr := term (('+'|'-') term)*;
// term := unary ('*'? unary)*; unary := ('-'|'+') unary | power;
// power := atom ('^' ['-'] int)?; atom := int | 'z' | 'E' | 'F' | 'K' | '(' expr ')'.

namespace {

class UParser {
public:
  UParser(const Uzeta& u, std::string_view s) : u_(u), s_(s) {}

  UzetaElement run() {
    UzetaElement v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse u_z element '" + std::string(s_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek_any(std::string_view chars) {
    skip();
    return pos_ < s_.size() && chars.find(s_[pos_]) != std::string_view::npos;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  UzetaElement expr() {
    UzetaElement v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  UzetaElement term() {
    UzetaElement v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        UzetaElement d = unary();
        if (d.coords().nnz() != 1 || d.coords().lead() != 0) fail("division only by scalars");
        v = v.scaled(d.coords().entries().front().second.inverse());
      } else if (peek_any("0123456789zEFK(")) {
        v = v * unary();
      } else {
        return v;
      }
    }
  }
  UzetaElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  UzetaElement power() {
    skip();
    std::size_t at = pos_;
    UzetaElement base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    long e = integer();
    if (neg) {
      // only K and scalars have inverses here
      std::string_view tok = s_.substr(at, 1);
      if (tok == "K") return u_.K(-e);
      const auto& entries = base.coords().entries();
      if (entries.size() == 1 && entries.front().first == 0)
        return u_.scalar(entries.front().second.pow(-e));
      fail("negative power of a non-invertible element");
    }
    return base.pow(static_cast<int>(e));
  }
  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  UzetaElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    switch (c) {
      case 'z': ++pos_; return u_.scalar(CycloNum::zeta_pow(u_.field(), 1));
      case 'E': ++pos_; return u_.E();
      case 'F': ++pos_; return u_.F();
      case 'K': ++pos_; return u_.K(1);
      case '(': {
        ++pos_;
        UzetaElement v = expr();
        if (!eat(')')) fail("expected ')'");
        return v;
      }
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return u_.scalar(CycloNum(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start))))));
    }
    fail("unexpected character");
  }

  const Uzeta& u_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

UzetaElement Uzeta::parse(std::string_view text) const { return UParser(*this, text).run(); }

}  // namespace qhyper
