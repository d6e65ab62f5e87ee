#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopftrace/scalar.hpp"

namespace hopftrace {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense matrix over an exact field, read as a linear map from a
/// `cols`-dimensional source to a `rows`-dimensional target.
///
/// Tensor-product legs are always flattened lexicographically with the LEFT
/// factor most significant: basis vector e_i ⊗ e_j of V ⊗ W sits at index
/// i * dim(W) + j. Every module in this project relies on that one
/// convention; kron() and flip() realize it.
class LinearMap {
 public:
  LinearMap() : rows_(0), cols_(0), field_{0} {}
  LinearMap(int rows, int cols, Field f);

  static LinearMap identity(int n, Field f);
  static LinearMap zero(int rows, int cols, Field f) { return LinearMap(rows, cols, f); }

  /// e_i ⊗ e_j  ↦  e_j ⊗ e_i  on a tensor square of dims (m, n).
  static LinearMap flip(int m, int n, Field f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return field_; }

  const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, Scalar v);
  void add_to(int r, int c, const Scalar& v);

  /// this ∘ g (apply g first). Inner dimensions must agree.
  LinearMap compose(const LinearMap& g) const;
  LinearMap operator*(const LinearMap& g) const { return compose(g); }

  /// Kronecker product under the global basis order: block f[i][j] · g.
  LinearMap kron(const LinearMap& g) const;

  LinearMap transpose() const;
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap scaled(const Scalar& c) const;

  bool operator==(const LinearMap& o) const;
  bool operator!=(const LinearMap& o) const { return !(*this == o); }
  bool is_zero() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  int rank() const;
  std::optional<LinearMap> inverse() const;  // square only

  /// First (row, col) where the two maps differ, for failure witnesses.
  static std::optional<std::pair<int, int>> first_difference(const LinearMap& a, const LinearMap& b);

  std::string shape_str() const;
  std::string str() const;  // small-matrix debug form

  /// Visits nonzero entries in row-major order.
  void for_each_nonzero(const std::function<void(int, int, const Scalar&)>& fn) const;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<Scalar> a_;
};

/// ev and coev of the canonical pairing on an n-dimensional space:
/// ev : V* ⊗ V → k sends e^i ⊗ e_j to δ_ij, coev : k → V ⊗ V* to Σ e_i ⊗ e^i.
LinearMap pairing_ev(int n, Field f);
LinearMap pairing_coev(int n, Field f);

/// Permutation matrix rearranging tensor legs: output leg t is input leg
/// perm[t]; dims lists the input leg dimensions in order.
LinearMap leg_permutation(const std::vector<int>& dims, const std::vector<int>& perm, Field f);

// Structured composites that avoid materializing large Kronecker factors.
// Tensor legs follow the global order, so these are pure index bookkeeping.

/// (id_k ⊗ f) ∘ g
LinearMap compose_idkron(int k, const LinearMap& f, const LinearMap& g);
/// (f ⊗ id_k) ∘ g
LinearMap compose_kronid(const LinearMap& f, int k, const LinearMap& g);
/// g ∘ (id_k ⊗ f)
LinearMap apply_to_idkron(const LinearMap& g, int k, const LinearMap& f);
/// g ∘ (f ⊗ id_k)
LinearMap apply_to_kronid(const LinearMap& g, const LinearMap& f, int k);
/// leg_permutation(dims, perm) ∘ g   (rows of g reindexed)
LinearMap permute_rows(const LinearMap& g, const std::vector<int>& dims,
                       const std::vector<int>& perm);
/// g ∘ leg_permutation(dims, perm)   (dims/perm describe the result's columns)
LinearMap permute_cols(const LinearMap& g, const std::vector<int>& dims,
                       const std::vector<int>& perm);

}  // namespace hopftrace
