#include "qhyper/torus.hpp"

#include <sstream>

namespace qhyper {

namespace {

int mod_l(long k, int ell) {
  long r = k % ell;
  return static_cast<int>(r < 0 ? r + ell : r);
}

void tensor_add_term(TorusTensor& t, const std::vector<int>& key, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

// Factorwise product of two tensors with the same number of factors.
TorusTensor tensor_mul(const TorusTensor& a, const TorusTensor& b, int ell, int bound) {
  TorusTensor r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<int> k(ka.size());
      for (std::size_t p = 0; p < ka.size(); p += 2) {
        k[p] = (ka[p] + kb[p]) % ell;
        k[p + 1] = ka[p + 1] + kb[p + 1];
        if (k[p + 1] > bound) throw TorusError("delta-degree exceeds the configured bound");
      }
      tensor_add_term(r, k, ca * cb);
    }
  return r;
}

// Delta(K^i delta^j) as a two-factor tensor.
TorusTensor coproduct_mono(int i, int j, const CycloField& f, int bound) {
  const int l = f.ell();
  TorusTensor r{{{i, 0, i, 0}, CycloNum(1L)}};
  if (j == 0) return r;
  TorusTensor dd{{{0, 1, 0, 0}, CycloNum(1L)}, {{0, 0, 0, 1}, CycloNum(1L)}};
  // sum_{a+b >= l} e_a (x) e_b, expanded in K^p (x) K^q
  CycloNum inv_l2 = CycloNum(mpq_class(1, l * l));
  for (int a = 0; a < l; ++a)
    for (int b = l - a; b < l; ++b)
      for (int p = 0; p < l; ++p)
        for (int q = 0; q < l; ++q)
          tensor_add_term(dd, {p, 0, q, 0}, CycloNum::zeta_pow(f, -static_cast<long>(a) * p - static_cast<long>(b) * q) * inv_l2);
  for (int s = 0; s < j; ++s) r = tensor_mul(r, dd, l, bound);
  return r;
}

}  // namespace

std::string Weight::to_string() const { return "(" + std::to_string(r) + ", " + alpha.to_string() + ")"; }

Weight integral_weight(long m, int ell) {
  long m0 = m % ell;
  if (m0 < 0) m0 += ell;
  long m1 = (m - m0) / ell;
  return Weight{static_cast<int>(m0), CycloNum(m1)};
}

Weight weight_add(const Weight& a, const Weight& b, int ell) {
  if (a.r + b.r < ell) return Weight{a.r + b.r, a.alpha + b.alpha};
  return Weight{a.r + b.r - ell, a.alpha + b.alpha + CycloNum(1L)};
}

Weight weight_neg(const Weight& a, int ell) {
  if (a.r == 0) return Weight{0, -a.alpha};
  return Weight{ell - a.r, -a.alpha - CycloNum(1L)};
}

TorusElement TorusElement::K_pow(const CycloField& f, long i, int bound) {
  TorusElement t(f, bound);
  t.add(mod_l(i, f.ell()), 0, CycloNum(1L));
  return t;
}

TorusElement TorusElement::delta(const CycloField& f, int bound) {
  TorusElement t(f, bound);
  t.add(0, 1, CycloNum(1L));
  return t;
}

TorusElement TorusElement::scalar(const CycloField& f, const CycloNum& c, int bound) {
  TorusElement t(f, bound);
  t.add(0, 0, c);
  return t;
}

TorusElement TorusElement::idempotent(const CycloField& f, long m, int bound) {
  TorusElement t(f, bound);
  CycloNum inv_l(mpq_class(1, f.ell()));
  for (int k = 0; k < f.ell(); ++k) t.add(k, 0, CycloNum::zeta_pow(f, -m * k) * inv_l);
  return t;
}

void TorusElement::add(int i, int j, const CycloNum& c) {
  if (c.is_zero()) return;
  if (j > bound_) throw TorusError("delta-degree exceeds the configured bound");
  std::pair<int, int> key{mod_l(i, ell()), j};
  auto [it, inserted] = t_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  TorusElement r = *this;
  for (const auto& [k, c] : o.t_) r.add(k.first, k.second, c);
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + o.scaled(CycloNum(-1L)); }

TorusElement TorusElement::operator*(const TorusElement& o) const {
  TorusElement r(*f_, bound_);
  for (const auto& [k1, c1] : t_)
    for (const auto& [k2, c2] : o.t_) r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

TorusElement TorusElement::scaled(const CycloNum& c) const {
  TorusElement r(*f_, bound_);
  for (const auto& [k, x] : t_) r.add(k.first, k.second, x * c);
  return r;
}

std::string TorusElement::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ") K^" << k.first << " d^" << k.second;
  }
  return os.str();
}

TorusTensor TorusElement::as_tensor() const {
  TorusTensor r;
  for (const auto& [k, c] : t_) r[{k.first, k.second}] = c;
  return r;
}

TorusTensor coproduct_at(const TorusTensor& t, std::size_t pos, const CycloField& f, int bound) {
  TorusTensor r;
  for (const auto& [key, c] : t) {
    TorusTensor d = coproduct_mono(key[2 * pos], key[2 * pos + 1], f, bound);
    for (const auto& [dk, dc] : d) {
      std::vector<int> nk(key.begin(), key.begin() + 2 * pos);
      nk.insert(nk.end(), dk.begin(), dk.end());
      nk.insert(nk.end(), key.begin() + 2 * pos + 2, key.end());
      tensor_add_term(r, nk, c * dc);
    }
  }
  return r;
}

TorusTensor coproduct(const TorusElement& x) { return coproduct_at(x.as_tensor(), 0, x.field(), x.bound()); }

TorusTensor counit_at(const TorusTensor& t, std::size_t pos) {
  TorusTensor r;
  for (const auto& [key, c] : t) {
    if (key[2 * pos + 1] != 0) continue;  // counit(delta) = 0, counit(K) = 1
    std::vector<int> nk(key.begin(), key.begin() + 2 * pos);
    nk.insert(nk.end(), key.begin() + 2 * pos + 2, key.end());
    tensor_add_term(r, nk, c);
  }
  return r;
}

TorusTensor tensor_of(const TorusElement& a, const TorusElement& b) {
  TorusTensor r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) tensor_add_term(r, {ka.first, ka.second, kb.first, kb.second}, ca * cb);
  return r;
}

TorusTensor tensor_add(const TorusTensor& a, const TorusTensor& b, const CycloNum& scale) {
  TorusTensor r = a;
  for (const auto& [k, c] : b) tensor_add_term(r, k, c * scale);
  return r;
}

CycloNum counit(const TorusElement& x) {
  CycloNum r;
  for (const auto& [k, c] : x.terms())
    if (k.second == 0) r += c;
  return r;
}

TorusElement primitive_d(const CycloField& f, int bound) {
  TorusElement d = TorusElement::delta(f, bound);
  CycloNum inv_l(mpq_class(1, f.ell()));
  for (int m = 1; m < f.ell(); ++m) d = d + TorusElement::idempotent(f, m, bound).scaled(CycloNum(static_cast<long>(m)) * inv_l);
  return d;
}

TorusElement binom_K(const CycloField& f, long m, int bound) {
  if (m < 0) throw std::invalid_argument("binom_K: m must be >= 0");
  const int l = f.ell();
  long m0 = m % l, m1 = m / l;
  // [K; m0] = prod_{s=1}^{m0} (K z^(1-s) - K^-1 z^(s-1))/(z^s - z^-s)
  TorusElement r = TorusElement::scalar(f, CycloNum(1L), bound);
  for (long s = 1; s <= m0; ++s) {
    CycloNum den = (CycloNum::zeta_pow(f, s) - CycloNum::zeta_pow(f, -s)).inverse();
    TorusElement fac = TorusElement::K_pow(f, 1, bound).scaled(CycloNum::zeta_pow(f, 1 - s) * den) -
                       TorusElement::K_pow(f, -1, bound).scaled(CycloNum::zeta_pow(f, s - 1) * den);
    r = r * fac;
  }
  // binom(delta, m1) = delta (delta - 1) ... (delta - m1 + 1) / m1!
  TorusElement b = TorusElement::scalar(f, CycloNum(1L), bound);
  for (long s = 0; s < m1; ++s)
    b = (b * (TorusElement::delta(f, bound) - TorusElement::scalar(f, CycloNum(s), bound)))
            .scaled(CycloNum(mpq_class(1, s + 1)));
  return r * b;
}

CycloNum char_eval(const Weight& w, const TorusElement& t) {
  CycloNum r;
  for (const auto& [k, c] : t.terms()) r += c * CycloNum::zeta_pow(t.field(), static_cast<long>(w.r) * k.first) * w.alpha.pow(k.second);
  return r;
}

CycloNum char_convolve(const Weight& a, const Weight& b, const TorusElement& t) {
  CycloNum r;
  for (const auto& [k, c] : coproduct(t)) {
    CycloNum x = CycloNum::zeta_pow(t.field(), static_cast<long>(a.r) * k[0]) * a.alpha.pow(k[1]);
    CycloNum y = CycloNum::zeta_pow(t.field(), static_cast<long>(b.r) * k[2]) * b.alpha.pow(k[3]);
    r += c * x * y;
  }
  return r;
}

}  // namespace qhyper
