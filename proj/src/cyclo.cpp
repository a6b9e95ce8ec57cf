#include "qhyper/cyclo.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qhyper {

namespace {

using Poly = std::vector<mpz_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisor is monic.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  Poly q(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    mpz_class c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(q);
  return q;
}

Poly cyclotomic(int n) {
  static std::map<int, Poly> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic(d));
  memo[n] = p;
  return p;
}

long mod_ell(long k, long ell) {
  k %= ell;
  return k < 0 ? k + ell : k;
}

}  // namespace

// ---------------------------------------------------------------------------
// CycloField

CycloField::CycloField(int ell) : ell_(ell) {
  modulus_ = cyclotomic(ell);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  // x^k mod Phi for k < ell; exponents are always reduced mod ell first.
  powers_.resize(ell);
  Poly cur(degree_);
  cur[0] = 1;
  for (int k = 0; k < ell; ++k) {
    powers_[k] = cur;
    // multiply by x
    mpz_class top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i) cur[i] -= top * modulus_[i];
  }
  for (auto& p : powers_) p.resize(degree_);
  CycloNum d = CycloNum::zeta_pow(*this, 1) - CycloNum::zeta_pow(*this, -1);
  inv_qdiff_ = std::make_unique<CycloNum>(d.inverse());
}

CycloField::~CycloField() = default;

const CycloField& CycloField::get(int ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("ell must be odd and >= 3, got " + std::to_string(ell));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[ell];
  if (!slot) slot.reset(new CycloField(ell));
  return *slot;
}

// ---------------------------------------------------------------------------
// CycloNum basics

CycloNum::CycloNum(long v) {
  if (v != 0) num_.push_back(mpz_class(v));
}

CycloNum::CycloNum(const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  if (c != 0) {
    num_.push_back(c.get_num());
    den_ = c.get_den();
  }
}

CycloNum CycloNum::zeta_pow(const CycloField& f, long k) {
  CycloNum r;
  r.field_ = &f;
  r.num_ = f.power(static_cast<int>(mod_ell(k, f.ell())));
  trim(r.num_);
  return r;
}

bool CycloNum::is_one() const { return num_.size() == 1 && num_[0] == 1 && den_ == 1; }

mpq_class CycloNum::rational() const {
  if (num_.size() > 1) throw std::logic_error("CycloNum::rational on irrational value");
  if (num_.empty()) return 0;
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

mpq_class CycloNum::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(num_.size())) return 0;
  mpq_class q(num_[k], den_);
  q.canonicalize();
  return q;
}

void CycloNum::adopt(const CycloField* f) {
  if (f == nullptr) return;
  if (field_ == nullptr) {
    field_ = f;
  } else if (field_ != f) {
    throw std::invalid_argument("CycloNum: mixing elements of different fields");
  }
}

void CycloNum::normalize() {
  trim(num_);
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// poly holds coefficients of x^k for k < ell (exponents already reduced mod ell).
void CycloNum::reduce_raw(Poly& poly) const {
  const int d = field_->degree();
  if (static_cast<int>(poly.size()) <= d) return;
  for (int k = static_cast<int>(poly.size()) - 1; k >= d; --k) {
    if (poly[k] == 0) continue;
    const Poly& pk = field_->power(k);
    for (int i = 0; i < d; ++i)
      if (pk[i] != 0) mpz_addmul(poly[i].get_mpz_t(), poly[k].get_mpz_t(), pk[i].get_mpz_t());
  }
  poly.resize(d);
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  adopt(o.field_);
  if (o.num_.empty()) return *this;
  if (num_.size() < o.num_.size()) num_.resize(o.num_.size());
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (auto& c : num_) c *= o.den_;
    for (std::size_t i = 0; i < o.num_.size(); ++i)
      mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  adopt(o.field_);
  if (num_.empty()) return *this;
  if (o.num_.empty()) {
    num_.clear();
    den_ = 1;
    return *this;
  }
  if (o.num_.size() == 1) {
    for (auto& c : num_) c *= o.num_[0];
    den_ *= o.den_;
    normalize();
    return *this;
  }
  if (num_.size() == 1) {
    mpz_class c = num_[0];
    num_ = o.num_;
    for (auto& x : num_) x *= c;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  const long ell = field_->ell();
  Poly prod(ell);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < o.num_.size(); ++j) {
      if (o.num_[j] == 0) continue;
      std::size_t k = (i + j) % ell;
      mpz_addmul(prod[k].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
  }
  reduce_raw(prod);
  num_ = std::move(prod);
  den_ *= o.den_;
  normalize();
  return *this;
}

void CycloNum::add_mul(const CycloNum& a, const CycloNum& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

CycloNum CycloNum::mul_zeta_pow(const CycloField& f, long k) const {
  if (field_ == &f) return mul_zeta_pow(k);
  CycloNum r = *this;
  r.adopt(&f);
  return r.mul_zeta_pow(k);
}

CycloNum CycloNum::mul_zeta_pow(long k) const {
  if (num_.empty()) return *this;
  if (field_ == nullptr) throw std::logic_error("CycloNum::mul_zeta_pow needs a field");
  const long ell = field_->ell();
  long s = mod_ell(k, ell);
  if (s == 0) return *this;
  CycloNum r;
  r.field_ = field_;
  Poly prod(ell);
  for (std::size_t i = 0; i < num_.size(); ++i) prod[(i + s) % ell] = num_[i];
  reduce_raw(prod);
  r.num_ = std::move(prod);
  r.den_ = den_;
  r.normalize();
  return r;
}

CycloNum CycloNum::inverse() const {
  if (num_.empty()) throw std::domain_error("CycloNum: inverse of zero");
  if (num_.size() == 1) {
    CycloNum r;
    r.field_ = field_;
    r.num_ = {den_};
    r.den_ = num_[0];
    r.normalize();
    return r;
  }
  // Solve (a * y) = 1 for y via the multiplication matrix of a.
  const int d = field_->degree();
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  for (int j = 0; j < d; ++j) {
    CycloNum col = mul_zeta_pow(j);
    for (int i = 0; i < d; ++i) m[i][j] = col.coeff(i);
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int p = c;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) throw std::domain_error("CycloNum: singular multiplication matrix");
    std::swap(m[p], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (int j = c; j <= d; ++j) m[c][j] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (int j = c; j <= d; ++j) m[i][j] -= f * m[c][j];
    }
  }
  mpz_class den = 1;
  for (int i = 0; i < d; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m[i][d].get_den_mpz_t());
  CycloNum r;
  r.field_ = field_;
  r.num_.resize(d);
  for (int i = 0; i < d; ++i) r.num_[i] = m[i][d].get_num() * (den / m[i][d].get_den());
  r.den_ = den;
  r.normalize();
  return r;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this *= o.inverse(); }

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result(1L);
  result.field_ = field_;
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool CycloNum::operator==(const CycloNum& o) const { return den_ == o.den_ && num_ == o.num_; }

std::size_t CycloNum::hash() const {
  std::size_t h = std::hash<long>()(mpz_get_si(den_.get_mpz_t()));
  for (const auto& c : num_) h = h * 1000003u ^ std::hash<long>()(mpz_get_si(c.get_mpz_t()));
  return h;
}

std::string CycloNum::to_string() const {
  if (num_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    mpq_class q(num_[k], den_);
    q.canonicalize();
    bool neg = q < 0;
    if (neg) q = -q;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << q.get_str();
      continue;
    }
    if (q != 1) os << q.get_str() << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
// unary := ('+'|'-') unary | power; power := atom ('^' ['-'] int)?;
// atom := integer | 'z' | '(' expr ')'.

namespace {

class Parser {
public:
  Parser(const CycloField& f, std::string_view s) : f_(f), s_(s) {}

  CycloNum run() {
    CycloNum v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse cyclotomic number '" + std::string(s_) +
                                "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  CycloNum expr() {
    CycloNum v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  CycloNum term() {
    CycloNum v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else return v;
    }
  }
  CycloNum unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  CycloNum power() {
    CycloNum base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    long e = integer();
    return base.pow(neg ? -e : e);
  }
  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  CycloNum atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == 'z') {
      ++pos_;
      return CycloNum::zeta_pow(f_, 1);
    }
    if (c == '(') {
      ++pos_;
      CycloNum v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return CycloNum(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    fail("unexpected character");
  }

  const CycloField& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycloNum CycloNum::parse(const CycloField& f, std::string_view text) {
  CycloNum v = Parser(f, text).run();
  v.adopt(&f);
  return v;
}

// ---------------------------------------------------------------------------
// q-combinatorics

CycloNum q_int(const CycloField& f, long n) {
  return (CycloNum::zeta_pow(f, n) - CycloNum::zeta_pow(f, -n)) * f.inv_qdiff();
}

CycloNum q_factorial(const CycloField& f, long n) {
  if (n < 0) throw std::invalid_argument("q_factorial of a negative integer");
  CycloNum r = CycloNum::zeta_pow(f, 0);
  for (long s = 1; s <= n && !r.is_zero(); ++s) r *= q_int(f, s);
  return r;
}

CycloNum gauss_binom(const CycloField& f, long n, long k) {
  if (k < 0) return CycloNum();
  if (k == 0) return CycloNum::zeta_pow(f, 0);
  if (n < 0) {
    CycloNum r = gauss_binom(f, -n + k - 1, k);
    return (k % 2) ? -r : r;
  }
  if (k > n) return CycloNum();
  // [m; j] = z^-j [m-1; j] + z^(m-j) [m-1; j-1]
  std::vector<CycloNum> row(k + 1);
  row[0] = CycloNum::zeta_pow(f, 0);
  for (long m = 1; m <= n; ++m) {
    for (long j = std::min(m, k); j >= 1; --j) {
      CycloNum next = row[j].mul_zeta_pow(-j);
      next += row[j - 1].mul_zeta_pow(m - j);
      row[j] = std::move(next);
    }
  }
  return row[k];
}

mpz_class binom_z(long n, long k) {
  if (k < 0) return 0;
  mpz_class r;
  mpz_class nn(n);
  mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace qhyper
