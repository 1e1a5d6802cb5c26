#include "halg/linalg.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace halg {

Vec zeros(std::size_t n, const FieldSpec& f) {
  return Vec(n, Scalar::zero(f));
}

Vec basis_vec(std::size_t n, std::size_t i, const FieldSpec& f) {
  Vec v = zeros(n, f);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (any) os << " ";
    os << "[" << i << "]=" << v[i].str();
    any = true;
  }
  return any ? os.str() : "0";
}

LinearMap::LinearMap(std::size_t rows, std::size_t cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

LinearMap LinearMap::identity(std::size_t n, const FieldSpec& f) {
  LinearMap m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

LinearMap LinearMap::flip(std::size_t dim_a, std::size_t dim_b, const FieldSpec& f) {
  LinearMap m(dim_a * dim_b, dim_a * dim_b, f);
  for (std::size_t a = 0; a < dim_a; ++a) {
    for (std::size_t b = 0; b < dim_b; ++b) {
      m.set(b * dim_a + a, a * dim_b + b, Scalar::one(f));
    }
  }
  return m;
}

LinearMap LinearMap::from_columns(std::size_t rows, const std::vector<Vec>& cols,
                                  const FieldSpec& f) {
  LinearMap m(rows, cols.size(), f);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) {
      throw DimensionMismatch("column length " + std::to_string(cols[j].size()) +
                              " != " + std::to_string(rows));
    }
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

void LinearMap::set(std::size_t i, std::size_t j, const Scalar& v) {
  a_[i * cols_ + j] = v;
}

Vec LinearMap::col(std::size_t j) const {
  Vec v = zeros(rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec LinearMap::row(std::size_t i) const {
  Vec v = zeros(cols_, field_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec LinearMap::apply(const Vec& v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("apply: vector length " + std::to_string(v.size()) +
                            " != cols " + std::to_string(cols_));
  }
  Vec out = zeros(rows_, field_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& m = at(i, j);
      if (m.is_zero()) continue;
      out[i] += m * v[j];
    }
  }
  return out;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

bool LinearMap::operator==(const LinearMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (a_[k] != o.a_[k]) return false;
  }
  return true;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (f.cols() != g.rows()) {
    throw DimensionMismatch("compose: " + std::to_string(f.cols()) + " != " +
                            std::to_string(g.rows()));
  }
  if (!(f.field() == g.field())) throw FieldMismatch("compose across fields");
  LinearMap out(f.rows(), g.cols(), f.field());
  for (std::size_t k = 0; k < g.rows(); ++k) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Scalar& gkj = g.at(k, j);
      if (gkj.is_zero()) continue;
      for (std::size_t i = 0; i < f.rows(); ++i) {
        const Scalar& fik = f.at(i, k);
        if (fik.is_zero()) continue;
        out.set(i, j, out.at(i, j) + fik * gkj);
      }
    }
  }
  return out;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
  if (!(f.field() == g.field())) throw FieldMismatch("kron across fields");
  LinearMap out(f.rows() * g.rows(), f.cols() * g.cols(), f.field());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const Scalar& fik = f.at(i, k);
      if (fik.is_zero()) continue;
      for (std::size_t j = 0; j < g.rows(); ++j) {
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const Scalar& gjl = g.at(j, l);
          if (gjl.is_zero()) continue;
          out.set(i * g.rows() + j, k * g.cols() + l, fik * gjl);
        }
      }
    }
  }
  return out;
}

LinearMap add(const LinearMap& f, const LinearMap& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) {
    throw DimensionMismatch("add: shape mismatch");
  }
  LinearMap out(f.rows(), f.cols(), f.field());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      out.set(i, j, f.at(i, j) + g.at(i, j));
    }
  }
  return out;
}

LinearMap scale(const Scalar& s, const LinearMap& f) {
  LinearMap out(f.rows(), f.cols(), f.field());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out.set(i, j, s * f.at(i, j));
  }
  return out;
}

namespace {

// Reduced row echelon form of [A | B] in place; returns pivot columns of A.
struct Rref {
  std::vector<Vec> rows;  // each of length a_cols + b_cols
  std::vector<std::size_t> pivot_cols;
};

Rref rref_augmented(const LinearMap& A, const std::vector<Vec>& b_cols) {
  const FieldSpec f = A.field();
  const std::size_t n = A.rows(), m = A.cols(), extra = b_cols.size();
  Rref r;
  r.rows.assign(n, Vec());
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = zeros(m + extra, f);
    for (std::size_t j = 0; j < m; ++j) row[j] = A.at(i, j);
    for (std::size_t k = 0; k < extra; ++k) row[m + k] = b_cols[k][i];
    r.rows[i] = std::move(row);
  }
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m && lead < n; ++col) {
    std::size_t piv = lead;
    while (piv < n && r.rows[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(r.rows[lead], r.rows[piv]);
    Scalar inv = r.rows[lead][col].inv();
    for (auto& x : r.rows[lead]) x = x * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == lead || r.rows[i][col].is_zero()) continue;
      Scalar c = r.rows[i][col];
      // entries left of the pivot column are already zero in both rows
      for (std::size_t j = col; j < m + extra; ++j) {
        r.rows[i][j] = r.rows[i][j] - c * r.rows[lead][j];
      }
    }
    r.pivot_cols.push_back(col);
    ++lead;
  }
  return r;
}

}  // namespace

SolveResult solve(const LinearMap& A, const Vec& b) {
  if (b.size() != A.rows()) {
    throw DimensionMismatch("solve: rhs length " + std::to_string(b.size()) +
                            " != rows " + std::to_string(A.rows()));
  }
  const FieldSpec f = A.field();
  Rref r = rref_augmented(A, {b});
  const std::size_t m = A.cols();
  SolveResult out;
  // inconsistent iff some zero row of A part has nonzero rhs
  for (std::size_t i = r.pivot_cols.size(); i < r.rows.size(); ++i) {
    if (!r.rows[i][m].is_zero()) {
      out.consistent = false;
      return out;
    }
  }
  out.consistent = true;
  out.particular = zeros(m, f);
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
    out.particular[r.pivot_cols[k]] = r.rows[k][m];
  }
  std::vector<bool> is_pivot(m, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  for (std::size_t fc = 0; fc < m; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = zeros(m, f);
    v[fc] = Scalar::one(f);
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
      v[r.pivot_cols[k]] = -r.rows[k][fc];
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

MatrixSolveResult solve(const LinearMap& A, const LinearMap& B) {
  if (B.rows() != A.rows()) {
    throw DimensionMismatch("solve: rhs has " + std::to_string(B.rows()) +
                            " rows, matrix has " + std::to_string(A.rows()));
  }
  const FieldSpec f = A.field();
  std::vector<Vec> b_cols;
  for (std::size_t k = 0; k < B.cols(); ++k) b_cols.push_back(B.col(k));
  Rref r = rref_augmented(A, b_cols);
  const std::size_t m = A.cols();
  MatrixSolveResult out;
  for (std::size_t i = r.pivot_cols.size(); i < r.rows.size(); ++i) {
    for (std::size_t k = 0; k < B.cols(); ++k) {
      if (!r.rows[i][m + k].is_zero()) return out;
    }
  }
  out.consistent = true;
  out.solution = LinearMap(m, B.cols(), f);
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
    for (std::size_t c = 0; c < B.cols(); ++c) {
      out.solution.set(r.pivot_cols[k], c, r.rows[k][m + c]);
    }
  }
  std::vector<bool> is_pivot(m, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  for (std::size_t fc = 0; fc < m; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = zeros(m, f);
    v[fc] = Scalar::one(f);
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
      v[r.pivot_cols[k]] = -r.rows[k][fc];
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const LinearMap& A) {
  return rref_augmented(A, {}).pivot_cols.size();
}

LinearMap left_inverse_on_image(const LinearMap& f) {
  const std::size_t n = f.rows(), m = f.cols();
  const FieldSpec fs = f.field();
  // pivot coordinates of the column space, from the echelon form of f^T
  Rref r = rref_augmented(f.transpose(), {});
  if (r.pivot_cols.size() != m) {
    throw NotInjective("map of rank " + std::to_string(r.pivot_cols.size()) +
                       " with domain dimension " + std::to_string(m));
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  // invertible [f | complement basis]; complement coordinates are sent to 0
  LinearMap M(n, n, fs);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) M.set(i, j, f.at(i, j));
  }
  std::size_t j = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pivot[i]) M.set(i, j++, Scalar::one(fs));
  }
  // Gauss-Jordan inverse of M
  std::vector<Vec> id_cols;
  for (std::size_t k = 0; k < n; ++k) id_cols.push_back(basis_vec(n, k, fs));
  Rref inv = rref_augmented(M, id_cols);
  if (inv.pivot_cols.size() != n) {
    throw InternalInvariant("completed basis matrix is singular");
  }
  LinearMap g(m, n, fs);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) g.set(i, k, inv.rows[i][n + k]);
  }
  return g;
}

Subspace::Subspace(std::size_t ambient, const FieldSpec& f)
    : ambient_(ambient), field_(f) {}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    Scalar cc = c;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (rows_[k][j].is_zero()) continue;
      v[j] = v[j] - cc * rows_[k][j];
    }
  }
  return v;
}

bool Subspace::add(const Vec& vin) {
  if (vin.size() != ambient_) throw DimensionMismatch("subspace add");
  Vec v = reduce(vin);
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Scalar inv = v[p].inv();
  for (auto& x : v) x = x * inv;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = rows_[k][p];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (v[j].is_zero()) continue;
      rows_[k][j] = rows_[k][j] - c * v[j];
    }
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("subspace contains");
  return is_zero_vec(reduce(v));
}

Subspace span_closure(std::size_t ambient, const FieldSpec& f,
                      const std::vector<Vec>& seed,
                      const std::function<std::vector<Vec>(const Vec&)>& step) {
  Subspace s(ambient, f);
  std::queue<Vec> work;
  for (const Vec& v : seed) {
    if (s.add(v)) work.push(v);
  }
  while (!work.empty()) {
    Vec v = std::move(work.front());
    work.pop();
    for (Vec& u : step(v)) {
      if (s.add(u)) work.push(std::move(u));
    }
  }
  return s;
}

namespace {
std::size_t shape_product(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (auto d : shape) n *= d;
  return n;
}
}  // namespace

Tensor::Tensor(Vec data, std::vector<std::size_t> shape)
    : data_(std::move(data)), shape_(std::move(shape)) {
  if (data_.empty()) throw DimensionMismatch("empty tensor");
  field_ = data_[0].field();
  if (shape_product(shape_) != data_.size()) {
    throw DimensionMismatch("tensor shape does not match data length");
  }
}

Tensor Tensor::outer(const Tensor& a, const Tensor& b) {
  Vec out = zeros(a.data_.size() * b.data_.size(), a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (a.data_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.data_.size(); ++j) {
      if (b.data_[j].is_zero()) continue;
      out[i * b.data_.size() + j] = a.data_[i] * b.data_[j];
    }
  }
  std::vector<std::size_t> shape = a.shape_;
  shape.insert(shape.end(), b.shape_.begin(), b.shape_.end());
  return Tensor(std::move(out), std::move(shape));
}

Tensor Tensor::apply(const LinearMap& M, std::size_t mode) const {
  if (mode >= shape_.size() || shape_[mode] != M.cols()) {
    throw DimensionMismatch("tensor apply: mode shape mismatch");
  }
  const std::size_t c = M.cols(), r = M.rows();
  std::size_t outer = 1, inner = 1;
  for (std::size_t k = 0; k < mode; ++k) outer *= shape_[k];
  for (std::size_t k = mode + 1; k < shape_.size(); ++k) inner *= shape_[k];
  // nonzero entries per matrix column
  std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> colnz(c);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t j = 0; j < c; ++j) {
      const Scalar& m = M.at(a, j);
      if (!m.is_zero()) colnz[j].push_back({a, &m});
    }
  }
  Vec out = zeros(outer * r * inner, field_);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t j = 0; j < c; ++j) {
      if (colnz[j].empty()) continue;
      const std::size_t base_in = (o * c + j) * inner;
      for (std::size_t i = 0; i < inner; ++i) {
        const Scalar& x = data_[base_in + i];
        if (x.is_zero()) continue;
        for (const auto& [a, m] : colnz[j]) {
          out[(o * r + a) * inner + i] += (*m) * x;
        }
      }
    }
  }
  std::vector<std::size_t> shape = shape_;
  shape[mode] = r;
  return Tensor(std::move(out), std::move(shape));
}

Tensor Tensor::contract(const Vec& functional, std::size_t mode) const {
  if (mode >= shape_.size() || shape_[mode] != functional.size()) {
    throw DimensionMismatch("tensor contract: mode shape mismatch");
  }
  const std::size_t c = functional.size();
  std::size_t outer = 1, inner = 1;
  for (std::size_t k = 0; k < mode; ++k) outer *= shape_[k];
  for (std::size_t k = mode + 1; k < shape_.size(); ++k) inner *= shape_[k];
  Vec out = zeros(outer * inner, field_);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t j = 0; j < c; ++j) {
      if (functional[j].is_zero()) continue;
      const std::size_t base_in = (o * c + j) * inner;
      for (std::size_t i = 0; i < inner; ++i) {
        const Scalar& x = data_[base_in + i];
        if (x.is_zero()) continue;
        out[o * inner + i] += functional[j] * x;
      }
    }
  }
  std::vector<std::size_t> shape = shape_;
  shape.erase(shape.begin() + mode);
  if (shape.empty()) shape.push_back(1);  // scalar result kept 1-dim
  return Tensor(std::move(out), std::move(shape));
}

Tensor Tensor::swap_adjacent(std::size_t m) const {
  if (m + 1 >= shape_.size()) throw DimensionMismatch("swap_adjacent: bad mode");
  const std::size_t s0 = shape_[m], s1 = shape_[m + 1];
  std::size_t outer = 1, inner = 1;
  for (std::size_t k = 0; k < m; ++k) outer *= shape_[k];
  for (std::size_t k = m + 2; k < shape_.size(); ++k) inner *= shape_[k];
  Vec out = zeros(data_.size(), field_);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t a = 0; a < s0; ++a) {
      for (std::size_t b = 0; b < s1; ++b) {
        const std::size_t src = ((o * s0 + a) * s1 + b) * inner;
        const std::size_t dst = ((o * s1 + b) * s0 + a) * inner;
        for (std::size_t i = 0; i < inner; ++i) out[dst + i] = data_[src + i];
      }
    }
  }
  std::vector<std::size_t> shape = shape_;
  std::swap(shape[m], shape[m + 1]);
  return Tensor(std::move(out), std::move(shape));
}

Tensor Tensor::merged(std::size_t m) const {
  if (m + 1 >= shape_.size()) throw DimensionMismatch("merged: bad mode");
  std::vector<std::size_t> shape = shape_;
  shape[m] *= shape[m + 1];
  shape.erase(shape.begin() + m + 1);
  return Tensor(data_, std::move(shape));
}

Tensor Tensor::split(std::size_t m, std::size_t a, std::size_t b) const {
  if (m >= shape_.size() || shape_[m] != a * b) {
    throw DimensionMismatch("split: bad mode");
  }
  std::vector<std::size_t> shape = shape_;
  shape[m] = a;
  shape.insert(shape.begin() + m + 1, b);
  return Tensor(data_, std::move(shape));
}

Tensor Tensor::scaled(const Scalar& s) const {
  Vec out = data_;
  for (auto& x : out) x = x * s;
  return Tensor(std::move(out), shape_);
}

bool Tensor::operator==(const Tensor& o) const {
  if (shape_ != o.shape_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (data_[k] != o.data_[k]) return false;
  }
  return true;
}

}  // namespace halg
