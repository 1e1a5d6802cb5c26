#pragma once

#include <functional>
#include <string>
#include <vector>

#include "halg/scalar.hpp"

namespace halg {

using Vec = std::vector<Scalar>;

Vec zeros(std::size_t n, const FieldSpec& f);
Vec basis_vec(std::size_t n, std::size_t i, const FieldSpec& f);
bool is_zero_vec(const Vec& v);
std::string vec_str(const Vec& v);  // sparse "[i]=value" rendering

struct VectorSpace {
  std::size_t dim = 0;
  FieldSpec field;
  std::vector<std::string> labels;  // empty, or one unique label per basis vector

  std::string label(std::size_t i) const {
    return i < labels.size() ? labels[i] : std::to_string(i);
  }
};

/// Dense exact matrix; column j is the image of the j-th basis vector.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::size_t cols, const FieldSpec& f);

  static LinearMap identity(std::size_t n, const FieldSpec& f);
  /// Permutation sending pair index a*dim_b + b to b*dim_a + a.
  static LinearMap flip(std::size_t dim_a, std::size_t dim_b, const FieldSpec& f);
  static LinearMap from_columns(std::size_t rows, const std::vector<Vec>& cols,
                                const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v);

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  Vec apply(const Vec& v) const;
  LinearMap transpose() const;

  bool operator==(const LinearMap& o) const;
  bool operator!=(const LinearMap& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> a_;  // row-major
};

LinearMap compose(const LinearMap& f, const LinearMap& g);  // f after g
LinearMap kron(const LinearMap& f, const LinearMap& g);
LinearMap add(const LinearMap& f, const LinearMap& g);
LinearMap scale(const Scalar& s, const LinearMap& f);

struct SolveResult {
  bool consistent = false;
  Vec particular;             // one solution when consistent
  std::vector<Vec> nullspace; // basis of the homogeneous solutions
};

/// Exact Gaussian elimination; pivot = first nonzero entry in column order.
SolveResult solve(const LinearMap& A, const Vec& b);

struct MatrixSolveResult {
  bool consistent = false;
  LinearMap solution;          // one X with A·X = B when consistent
  std::vector<Vec> nullspace;  // homogeneous solutions, shared by all columns
};

/// Matrix right-hand side: solves A·X = B column by column in one sweep.
MatrixSolveResult solve(const LinearMap& A, const LinearMap& B);

std::size_t rank(const LinearMap& A);

/// For injective f returns g with g∘f = identity; g kills a fixed complement
/// of the image (pivot-free coordinates). Throws NotInjective otherwise.
LinearMap left_inverse_on_image(const LinearMap& f);

/// Row space in reduced echelon form; basis is canonical for the subspace.
class Subspace {
 public:
  Subspace(std::size_t ambient, const FieldSpec& f);

  bool add(const Vec& v);  // true if the dimension grew
  bool contains(const Vec& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec>& basis() const { return rows_; }

 private:
  std::size_t ambient_;
  FieldSpec field_;
  std::vector<Vec> rows_;            // reduced, ordered by pivot
  std::vector<std::size_t> pivots_;
  Vec reduce(Vec v) const;
};

/// Smallest subspace containing seed and closed under step (step must act
/// linearly). Iterates until the dimension stabilizes.
Subspace span_closure(std::size_t ambient, const FieldSpec& f,
                      const std::vector<Vec>& seed,
                      const std::function<std::vector<Vec>(const Vec&)>& step);

/// A vector viewed as a tensor with a row-major mode shape. Axiom checkers
/// evaluate identities basis element by basis element with mode products, so
/// Kronecker-product matrices never need to be materialized.
class Tensor {
 public:
  Tensor(Vec data, std::vector<std::size_t> shape);

  static Tensor outer(const Tensor& a, const Tensor& b);

  const Vec& data() const { return data_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  const FieldSpec& field() const { return field_; }

  /// Mode product: replaces the given mode (dim = M.cols()) by M.rows().
  Tensor apply(const LinearMap& M, std::size_t mode) const;
  /// Contract a mode against a functional (removes the mode).
  Tensor contract(const Vec& functional, std::size_t mode) const;
  /// Swap adjacent modes m and m+1.
  Tensor swap_adjacent(std::size_t m) const;
  /// Merge adjacent modes m, m+1 into one (free, row-major).
  Tensor merged(std::size_t m) const;
  /// Split mode m of size a*b into two modes (free).
  Tensor split(std::size_t m, std::size_t a, std::size_t b) const;
  Tensor scaled(const Scalar& s) const;

  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }
  std::string str() const { return vec_str(data_); }

 private:
  Vec data_;
  std::vector<std::size_t> shape_;
  FieldSpec field_;
};

}  // namespace halg
