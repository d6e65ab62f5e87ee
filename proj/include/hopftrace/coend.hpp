#pragma once

#include "hopftrace/bicomodule.hpp"

namespace hopftrace {

/// H̃: the algebra underlying H with left coaction Δ and right coaction
/// (id ⊗ S^{-1}) ∘ Δ. A coend of X ↦ X ⊠ X^∨ over comod H.
BicomAlgPtr twisted_coend_algebra(HopfPtr h);

/// Ĥ: the algebra underlying H with bicoaction h ↦ h_{(1)} ⊗ h_{(2)} ⊗ S(h_{(3)}),
/// split as left coaction Δ and right coaction (id ⊗ S) ∘ Δ.
BicomAlgPtr hat_algebra(HopfPtr h);

/// Domain of the dinatural map at X: the bicomodule X ⊠ X^∨.
Bicomodule j_domain(const Comodule& x);

/// j_X : X ⊗ X^∨ → H̃, x ⊗ φ ↦ x_{(-1)} · φ(x_{(0)}); verified to be a
/// bicomodule morphism at construction.
LinearMap dinatural_j(const Comodule& x);

/// Dinaturality square of j at a comodule morphism f : X → Y:
/// j_X ∘ (id_X ⊗ f^∨) = j_Y ∘ (f ⊗ id_{Y^∨}) on X ⊗ Y^∨.
CheckItem check_dinaturality(const Comodule& x, const Comodule& y, const LinearMap& f,
                             const std::string& id = "dinaturality");

/// Multiplication law of the coend: μ_{H̃} ∘ (j_X ⊗ j_Y) ∘ reindex = j_{X⊗Y},
/// with the reindexing fixed by Y^∨ ⊗ X^∨ ≅ (X⊗Y)^∨.
CheckItem check_coend_multiplication(const Comodule& x, const Comodule& y);

/// A co-wedge: maps α_X : X ⊗ X^∨ → T for the comodules of a test family,
/// which must contain the regular comodule.
struct Cowedge {
  Bicomodule target;
  std::vector<Comodule> objects;
  std::vector<LinearMap> maps;
  int regular_index = 0;
};

struct CowedgeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FactorizeResult {
  LinearMap phi;            // H̃ → T with φ ∘ j_X = α_X for all X
  int solution_dim = 0;     // dimension of the (ψ, t) solution space; 1 = unique
};

/// Universal-property factorization: φ(h) := α_H(h ⊗ ε). Dinaturality of α is
/// checked first (CowedgeError otherwise); the postconditions φ∘j_X = α_X,
/// φ a bicomodule morphism, and uniqueness are all verified.
FactorizeResult cowedge_factorize(const Cowedge& alpha);

}  // namespace hopftrace
