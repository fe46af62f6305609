#include "ghostkit/free_map.hpp"

#include <algorithm>

#include "ghostkit/error.hpp"

namespace ghostkit {

Vec zero_vec(const RingSpec& ring, std::size_t rank) { return Vec(rank, Poly(ring)); }

Vec unit_vec(const RingSpec& ring, std::size_t rank, std::size_t index) {
  Vec v = zero_vec(ring, rank);
  v.at(index) = Poly::from_int(ring, 1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) invalid_input("vector rank mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) invalid_input("vector rank mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& v, const Poly& c) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

FreeMap::FreeMap(const RingSpec& ring, std::size_t target_rank, std::size_t source_rank)
    : ring_(ring), rows_(target_rank), cols_(source_rank), entries_(target_rank * source_rank, Poly(ring)) {}

FreeMap FreeMap::identity(const RingSpec& ring, std::size_t rank) {
  return scalar(ring, rank, Poly::from_int(ring, 1));
}

FreeMap FreeMap::scalar(const RingSpec& ring, std::size_t rank, const Poly& c) {
  FreeMap m(ring, rank, rank);
  for (std::size_t i = 0; i < rank; ++i) m.at(i, i) = c;
  return m;
}

FreeMap FreeMap::from_rows(const RingSpec& ring, const std::vector<std::vector<Poly>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  FreeMap m(ring, rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) invalid_input("ragged matrix rows");
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!(rows[i][j].ring() == ring)) invalid_input("matrix entry over a different ring");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

FreeMap FreeMap::from_columns(const RingSpec& ring, std::size_t target_rank, const std::vector<Vec>& cols) {
  FreeMap m(ring, target_rank, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != target_rank) invalid_input("column of wrong length");
    for (std::size_t i = 0; i < target_rank; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec FreeMap::column(std::size_t col) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, col);
  return v;
}

std::vector<Vec> FreeMap::columns() const {
  std::vector<Vec> cs;
  cs.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
  return cs;
}

Vec FreeMap::apply(const Vec& v) const {
  if (v.size() != cols_) invalid_input("vector length does not match the map's source rank");
  Vec r = zero_vec(ring_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

bool FreeMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool FreeMap::is_homogeneous() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_homogeneous(); });
}

int FreeMap::max_degree() const {
  int d = -1;
  for (const auto& p : entries_) d = std::max(d, p.degree());
  return d;
}

FreeMap FreeMap::operator*(const FreeMap& other) const {
  if (cols_ != other.rows_) invalid_input("composing maps of incompatible ranks");
  FreeMap r(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        if (!other.at(k, j).is_zero()) r.at(i, j) += a * other.at(k, j);
    }
  return r;
}

FreeMap FreeMap::operator+(const FreeMap& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) invalid_input("adding maps of different shapes");
  FreeMap r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += other.entries_[k];
  return r;
}

FreeMap FreeMap::operator-(const FreeMap& other) const { return *this + (-other); }

FreeMap FreeMap::operator-() const {
  FreeMap r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

FreeMap FreeMap::scaled(const Poly& c) const {
  FreeMap r = *this;
  for (auto& e : r.entries_) e = e * c;
  return r;
}

FreeMap FreeMap::submatrix(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) invalid_input("submatrix out of range");
  FreeMap r(ring_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
  return r;
}

void FreeMap::place(const FreeMap& block, std::size_t row0, std::size_t col0) {
  if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_) invalid_input("block out of range");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) at(row0 + i, col0 + j) = block.at(i, j);
}

FreeMap hconcat(const FreeMap& a, const FreeMap& b) {
  if (a.target_rank() != b.target_rank()) invalid_input("hconcat of maps with different target ranks");
  FreeMap r(a.ring(), a.target_rank(), a.source_rank() + b.source_rank());
  r.place(a, 0, 0);
  r.place(b, 0, a.source_rank());
  return r;
}

FreeMap vconcat(const FreeMap& a, const FreeMap& b) {
  if (a.source_rank() != b.source_rank()) invalid_input("vconcat of maps with different source ranks");
  FreeMap r(a.ring(), a.target_rank() + b.target_rank(), a.source_rank());
  r.place(a, 0, 0);
  r.place(b, a.target_rank(), 0);
  return r;
}

FreeMap direct_sum(const FreeMap& a, const FreeMap& b) {
  FreeMap r(a.ring(), a.target_rank() + b.target_rank(), a.source_rank() + b.source_rank());
  r.place(a, 0, 0);
  r.place(b, a.target_rank(), a.source_rank());
  return r;
}

}  // namespace ghostkit
