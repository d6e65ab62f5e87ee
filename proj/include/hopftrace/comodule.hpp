#pragma once

#include "hopftrace/hopf.hpp"
#include "hopftrace/solve.hpp"

namespace hopftrace {

/// Left H-comodule: coaction δ : X → H ⊗ X, Sweedler x ↦ x_{(-1)} ⊗ x_{(0)}.
struct Comodule {
  HopfPtr over;
  int dim = 0;
  LinearMap coaction;  // (H.dim * dim) x dim

  Field field() const { return coaction.field(); }
  static Comodule make(HopfPtr h, int dim, LinearMap coaction);
  bool same_structure(const Comodule& o) const {
    return dim == o.dim && coaction == o.coaction;
  }
};

bool same_hopf(const HopfPtr& a, const HopfPtr& b);

CheckReport check_comodule(const Comodule& x);

Comodule trivial_comodule(HopfPtr h);
Comodule regular_comodule(HopfPtr h);
/// One-dimensional comodule spanned by a grouplike g: δ(v) = g ⊗ v.
Comodule grouplike_simple(HopfPtr h, const std::vector<Scalar>& grouplike);

Comodule tensor_comodule(const Comodule& x, const Comodule& y);

bool is_comodule_morphism(const Comodule& x, const Comodule& y, const LinearMap& f);

/// Dual object together with its (co)evaluation. For the right dual X^∨:
/// ev : X^∨ ⊗ X → k and coev : k → X ⊗ X^∨. For the left dual ∨X:
/// ev : X ⊗ ∨X → k and coev : k → ∨X ⊗ X.
struct DualData {
  Comodule object;
  LinearMap ev;
  LinearMap coev;
};

/// Right dual: coaction on X* is the unique one making the canonical ev and
/// coev comodule morphisms (forced; verified together with the zig-zag
/// identities at construction).
DualData right_dual(const Comodule& x);

/// Left dual: the coaction is the explicit composite
/// τ ∘ (id ⊗ S ⊗ ev) ∘ (id ⊗ δ_X ⊗ id) ∘ (coev ⊗ id); verified likewise.
DualData left_dual(const Comodule& x);

/// Transpose, as the dual morphism X^∨ ← Y^∨ of f : X → Y.
LinearMap dual_morphism(const LinearMap& f);

/// Y^∨ ⊗ X^∨ ≅ (X⊗Y)^∨, the pairing φ_y ⊗ φ_x ↦ [x⊗y ↦ φ_x(x)·φ_y(y)].
LinearMap dual_tensor_iso(const Comodule& x, const Comodule& y);

/// Basis of Hom_{comod H}(X, Y) as a solution space over the entries of the
/// intertwiner, via exact elimination.
SolutionSpace comodule_hom(const Comodule& x, const Comodule& y);
std::vector<LinearMap> comodule_hom_basis(const Comodule& x, const Comodule& y);

/// Uniqueness half of the right-dual derivation: the homogeneous system for
/// a coaction difference making ev and coev intertwine has only the zero
/// solution. Returns the offending dimension if not.
int right_dual_coaction_freedom(const Comodule& x);

}  // namespace hopftrace
