#include "qhyper/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhyper {

// ---------------------------------------------------------------------------
// SparseVec

SparseVec SparseVec::unit(int i, const CycloNum& c) {
  SparseVec v;
  if (!c.is_zero()) v.e_.emplace_back(i, c);
  return v;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v;
  for (auto& [i, c] : entries) {
    if (!v.e_.empty() && v.e_.back().first == i) {
      v.e_.back().second += c;
      if (v.e_.back().second.is_zero()) v.e_.pop_back();
    } else if (!c.is_zero()) {
      v.e_.emplace_back(i, std::move(c));
    }
  }
  return v;
}

SparseVec SparseVec::from_dense(const std::vector<CycloNum>& d) {
  SparseVec v;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) v.e_.emplace_back(static_cast<int>(i), d[i]);
  return v;
}

CycloNum SparseVec::get(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& a, int k) { return a.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return CycloNum();
}

void SparseVec::axpy(const CycloNum& a, const SparseVec& x) {
  if (a.is_zero() || x.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  auto i = e_.begin();
  auto j = x.e_.begin();
  while (i != e_.end() || j != x.e_.end()) {
    if (j == x.e_.end() || (i != e_.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == e_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      CycloNum s = std::move(i->second);
      s += a * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  e_ = std::move(out);
}

void SparseVec::scale(const CycloNum& a) {
  if (a.is_zero()) {
    e_.clear();
    return;
  }
  for (auto& [i, c] : e_) c *= a;
}

SparseVec SparseVec::scaled(const CycloNum& a) const {
  SparseVec v = *this;
  v.scale(a);
  return v;
}

SparseVec SparseVec::shifted(int offset) const {
  SparseVec v = *this;
  for (auto& [i, c] : v.e_) i += offset;
  return v;
}

std::vector<CycloNum> SparseVec::dense(int n) const {
  std::vector<CycloNum> d(n);
  for (const auto& [i, c] : e_) d.at(i) = c;
  return d;
}

void SparseAccum::add(int i, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m_.try_emplace(i, c);
  if (!inserted) it->second += c;
}

void SparseAccum::add(const SparseVec& v, const CycloNum& c) {
  for (const auto& [i, x] : v.entries()) add(i, x * c);
}

SparseVec SparseAccum::finish() {
  std::vector<SparseVec::Entry> e;
  e.reserve(m_.size());
  for (auto& [i, c] : m_)
    if (!c.is_zero()) e.emplace_back(i, std::move(c));
  m_.clear();
  return SparseVec::from_entries(std::move(e));
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.cols_data_[i] = SparseVec::unit(i);
  return m;
}

Matrix Matrix::diagonal(const std::vector<CycloNum>& d) {
  int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.cols_data_[i] = SparseVec::unit(i, d[i]);
  return m;
}

void Matrix::set_col(int j, SparseVec v) { cols_data_.at(j) = std::move(v); }

void Matrix::add(int i, int j, const CycloNum& c) {
  if (i < 0 || i >= rows_) throw std::out_of_range("Matrix::add row");
  cols_data_.at(j).axpy(CycloNum(1L), SparseVec::unit(i, c));
}

SparseVec Matrix::apply(const SparseVec& v) const {
  if (v.is_zero()) return v;
  SparseAccum acc;
  for (const auto& [j, c] : v.entries()) acc.add(cols_data_.at(j), c);
  return acc.finish();
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int j = 0; j < o.cols_; ++j) r.cols_data_[j] = apply(o.cols_data_[j]);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
  Matrix r = *this;
  for (int j = 0; j < cols_; ++j) r.cols_data_[j] += o.cols_data_[j];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
  Matrix r = *this;
  for (int j = 0; j < cols_; ++j) r.cols_data_[j] -= o.cols_data_[j];
  return r;
}

Matrix Matrix::scaled(const CycloNum& c) const {
  Matrix r = *this;
  for (auto& col : r.cols_data_) col.scale(c);
  return r;
}

Matrix Matrix::transpose() const {
  std::vector<std::vector<SparseVec::Entry>> rows(rows_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, c] : cols_data_[j].entries()) rows[i].emplace_back(j, c);
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) t.cols_data_[i] = SparseVec::from_entries(std::move(rows[i]));
  return t;
}

Matrix Matrix::pow(int e) const {
  Matrix r = identity(rows_);
  for (int i = 0; i < e; ++i) r = *this * r;
  return r;
}

SparseVec Matrix::row(int i) const {
  std::vector<SparseVec::Entry> e;
  for (int j = 0; j < cols_; ++j) {
    CycloNum c = cols_data_[j].get(i);
    if (!c.is_zero()) e.emplace_back(j, std::move(c));
  }
  return SparseVec::from_entries(std::move(e));
}

bool Matrix::is_zero() const {
  return std::all_of(cols_data_.begin(), cols_data_.end(), [](const SparseVec& c) { return c.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && cols_data_ == o.cols_data_;
}

std::vector<std::vector<CycloNum>> Matrix::dense() const {
  std::vector<std::vector<CycloNum>> d(rows_, std::vector<CycloNum>(cols_));
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, c] : cols_data_[j].entries()) d[i][j] = c;
  return d;
}

// ---------------------------------------------------------------------------
// Echelon

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.nnz()) {
    const int idx = v.entries()[pos].first;
    auto it = pivot_.find(idx);
    if (it == pivot_.end()) {
      ++pos;
      continue;
    }
    const CycloNum coef = v.entries()[pos].second;
    // Rows have no entries before their lead, so earlier positions survive.
    v.axpy(-coef, rows_[it->second]);
  }
  return v;
}

bool Echelon::add(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.is_zero()) return false;
  r.scale(r.entries().front().second.inverse());
  pivot_[r.lead()] = rows_.size();
  rows_.push_back(std::move(r));
  return true;
}

std::vector<SparseVec> Echelon::reduced_rows() const {
  std::vector<SparseVec> rows;
  rows.reserve(rows_.size());
  std::map<int, std::size_t> piv;
  for (const auto& [lead, idx] : pivot_) {
    piv[lead] = rows.size();
    rows.push_back(rows_[idx]);
  }
  // Eliminate each pivot column from rows with smaller leads, largest lead first.
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    const SparseVec& pr = rows[it->second];
    for (std::size_t k = 0; k < it->second; ++k) {
      CycloNum c = rows[k].get(it->first);
      if (!c.is_zero()) rows[k].axpy(-c, pr);
    }
  }
  return rows;
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int ncols) {
  Echelon ech;
  for (const auto& r : rows) ech.add(r);
  std::vector<SparseVec> rr = ech.reduced_rows();
  std::map<int, std::vector<SparseVec::Entry>> free_cols;
  for (int c = 0; c < ncols; ++c)
    if (!ech.is_pivot(c)) free_cols[c].emplace_back(c, CycloNum(1L));
  for (const auto& row : rr) {
    int p = row.lead();
    for (const auto& [c, v] : row.entries()) {
      if (c == p) continue;
      auto it = free_cols.find(c);
      if (it != free_cols.end()) it->second.emplace_back(p, -v);
    }
  }
  std::vector<SparseVec> out;
  out.reserve(free_cols.size());
  for (auto& [c, e] : free_cols) out.push_back(SparseVec::from_entries(std::move(e)));
  return out;
}

std::optional<SparseVec> solve(const std::vector<SparseVec>& rows, const std::vector<CycloNum>& rhs,
                               int ncols) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("solve: rhs length mismatch");
  Echelon ech;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec aug = rows[i];
    aug.axpy(CycloNum(1L), SparseVec::unit(ncols, -rhs[i]));
    ech.add(aug);
  }
  if (ech.is_pivot(ncols)) return std::nullopt;
  std::vector<SparseVec::Entry> x;
  for (const auto& row : ech.reduced_rows()) x.emplace_back(row.lead(), -row.get(ncols));
  return SparseVec::from_entries(std::move(x));
}

std::optional<std::vector<CycloNum>> coordinates(const std::vector<SparseVec>& basis,
                                                 const SparseVec& target) {
  // One equation per coordinate touched by the basis or the target.
  std::map<int, std::vector<SparseVec::Entry>> eqs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [i, c] : basis[j].entries()) eqs[i].emplace_back(static_cast<int>(j), c);
  for (const auto& [i, c] : target.entries()) eqs[i];
  std::vector<SparseVec> rows;
  std::vector<CycloNum> rhs;
  for (auto& [i, e] : eqs) {
    rows.push_back(SparseVec::from_entries(std::move(e)));
    rhs.push_back(target.get(i));
  }
  auto x = solve(rows, rhs, static_cast<int>(basis.size()));
  if (!x) return std::nullopt;
  return x->dense(static_cast<int>(basis.size()));
}

std::size_t rank(const std::vector<SparseVec>& vecs) {
  Echelon e;
  for (const auto& v : vecs) e.add(v);
  return e.dim();
}

bool span_contains(const std::vector<SparseVec>& span, const SparseVec& v) {
  Echelon e;
  for (const auto& s : span) e.add(s);
  return e.contains(v);
}

bool span_equal(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b) {
  Echelon ea, eb;
  for (const auto& v : a) ea.add(v);
  for (const auto& v : b) eb.add(v);
  if (ea.dim() != eb.dim()) return false;
  return std::all_of(b.begin(), b.end(), [&](const SparseVec& v) { return ea.contains(v); });
}

std::vector<SparseVec> span_intersect(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b,
                                      int n) {
  // Zassenhaus: rows (u | u) and (w | 0); rows with empty left half span the meet.
  Echelon e;
  for (const auto& u : a) e.add(u + u.shifted(n));
  for (const auto& w : b) e.add(w);
  std::vector<SparseVec> out;
  for (const auto& r : e.rows())
    if (r.lead() >= n) out.push_back(r.shifted(-n));
  return out;
}

std::vector<SparseVec> span_basis(const std::vector<SparseVec>& v) {
  Echelon e;
  for (const auto& x : v) e.add(x);
  return e.rows();
}

}  // namespace qhyper
