#pragma once

#include <memory>
#include <vector>

#include "hopftrace/report.hpp"

namespace hopftrace {

/// Structure constants of a finite-dimensional associative unital algebra:
/// mul : A ⊗ A → A and unit : k → A in matrix form.
struct Algebra {
  int dim = 0;
  LinearMap mul;   // dim x dim^2
  LinearMap unit;  // dim x 1

  Field field() const { return mul.field(); }
  static Algebra make(int dim, LinearMap mul, LinearMap unit);
};

/// comul : C → C ⊗ C and counit : C → k.
struct Coalgebra {
  int dim = 0;
  LinearMap comul;   // dim^2 x dim
  LinearMap counit;  // 1 x dim

  Field field() const { return comul.field(); }
  static Coalgebra make(int dim, LinearMap comul, LinearMap counit);
};

struct HopfAlgebra {
  Algebra algebra;
  Coalgebra coalgebra;
  LinearMap antipode;  // dim x dim

  int dim() const { return algebra.dim; }
  Field field() const { return algebra.field(); }
  const LinearMap& mul() const { return algebra.mul; }
  const LinearMap& unit() const { return algebra.unit; }
  const LinearMap& comul() const { return coalgebra.comul; }
  const LinearMap& counit() const { return coalgebra.counit; }
  LinearMap id() const { return LinearMap::identity(dim(), field()); }

  bool operator==(const HopfAlgebra& o) const;

  static std::shared_ptr<const HopfAlgebra> make(Algebra a, Coalgebra c, LinearMap antipode);
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

CheckReport check_algebra(const Algebra& a);
CheckReport check_coalgebra(const Coalgebra& c);

/// Full Hopf axiom battery: algebra, coalgebra, bialgebra compatibility,
/// antipode axioms, antipode invertibility.
CheckReport check_hopf(const HopfAlgebra& h);

/// S^{-1}, by exact matrix inversion. Throws if S is singular, which cannot
/// happen for genuine finite-dimensional Hopf data.
LinearMap antipode_inverse(const HopfAlgebra& h);

/// H^opcop: both multiplication and comultiplication flipped; the antipode
/// map is unchanged.
HopfPtr op_cop(const HopfAlgebra& h);

/// All grouplike elements that are scalar multiples of distinguished basis
/// vectors (complete for the pointed zoo algebras used here).
std::vector<std::vector<Scalar>> grouplike_elements(const HopfAlgebra& h);

}  // namespace hopftrace
