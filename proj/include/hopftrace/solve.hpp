#pragma once

#include <map>
#include <vector>

#include "hopftrace/linear_map.hpp"

namespace hopftrace {

/// Basis of a subspace of k^ambient_dim. Basis vectors are linearly
/// independent and deterministically ordered.
struct SolutionSpace {
  int ambient_dim = 0;
  std::vector<std::vector<Scalar>> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  LinearMap basis_as_matrix(Field f) const;  // columns are basis vectors
};

/// Sparse homogeneous linear system accumulator. Rows are reduced into an
/// echelon as they arrive (first-nonzero pivot rule, fixed), so arbitrarily
/// many redundant equations can be streamed in cheaply.
class LinearSystem {
 public:
  LinearSystem(int unknowns, Field f) : unknowns_(unknowns), field_(f) {}

  using Term = std::pair<int, Scalar>;

  /// Adds one equation Σ c_i · x_i = 0. Terms need not be sorted or combined.
  void add_equation(std::vector<Term> terms);

  /// Adds every row of `m` as an equation over unknowns = columns of m.
  void add_matrix_rows(const LinearMap& m);

  int rank() const { return static_cast<int>(echelon_.size()); }
  int unknowns() const { return unknowns_; }

  /// Kernel basis: one vector per free column, ascending; deterministic.
  SolutionSpace kernel() const;

 private:
  int unknowns_;
  Field field_;
  std::map<int, std::vector<Term>> echelon_;  // pivot index -> row, leading coeff 1
};

/// Kernel of a linear map (solutions of m·x = 0).
SolutionSpace kernel_of(const LinearMap& m);

}  // namespace hopftrace
