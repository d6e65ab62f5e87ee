#pragma once

#include "hopftrace/comodule.hpp"

namespace hopftrace {

/// H-H^opcop-bicomodule: left coaction m ↦ m_{(-1)} ⊗ m_{(0)} and right
/// coaction m ↦ m_{(0)} ⊗ m_{(1)} with values in H^opcop (same carrier as H).
struct Bicomodule {
  HopfPtr over;
  int dim = 0;
  LinearMap left_coaction;   // (H.dim * dim) x dim
  LinearMap right_coaction;  // (dim * H.dim) x dim

  Field field() const { return left_coaction.field(); }
  static Bicomodule make(HopfPtr h, int dim, LinearMap left, LinearMap right);
};

CheckReport check_bicomodule(const Bicomodule& m);

Bicomodule trivial_bicomodule(HopfPtr h);

/// X ⊠ k: left coaction from X, trivial right coaction.
Bicomodule comodule_as_bicomodule(const Comodule& x);

/// X ⊠ W for left H-comodules X, W: the right H^opcop-coaction is W's
/// coaction flipped.
Bicomodule boxtimes(const Comodule& x, const Comodule& w);

/// Tensor product in bicomod: left coactions multiply in H, right coactions
/// in H^opcop (reversed product in H).
Bicomodule tensor_bicomodule(const Bicomodule& m, const Bicomodule& n);

bool is_bicomodule_morphism(const Bicomodule& src, const Bicomodule& tgt, const LinearMap& f);

/// Algebra object in bicomod: carrier plus mul/unit that intertwine both
/// coactions.
struct BicomoduleAlgebra {
  Bicomodule carrier;
  LinearMap mul;   // dim x dim^2
  LinearMap unit;  // dim x 1

  int dim() const { return carrier.dim; }
  Field field() const { return carrier.field(); }
};

using BicomAlgPtr = std::shared_ptr<const BicomoduleAlgebra>;

CheckReport check_bicomodule_algebra(const BicomoduleAlgebra& b);

BicomAlgPtr trivial_bicomodule_algebra(HopfPtr h);

/// Object of the module category over B: a bicomodule with a right B-action
/// that is associative, unital and a bicomodule morphism.
struct ModuleObject {
  Bicomodule carrier;
  BicomAlgPtr algebra;
  LinearMap action;  // dim x (dim * B.dim)

  int dim() const { return carrier.dim; }
  Field field() const { return carrier.field(); }
};

CheckReport check_module_object(const ModuleObject& m);

/// B acting on itself by multiplication.
ModuleObject algebra_as_module(BicomAlgPtr b);

/// X ▷ M: carrier X ⊗ M, coaction x_{(-1)}m_{(-1)} ⊗ x_{(0)} ⊗ m_{(0)} ⊗ m_{(1)},
/// B acting on the M factor.
ModuleObject left_act(const Comodule& x, const ModuleObject& m);

/// M ◁ X: carrier M ⊗ X, coaction m_{(-1)} ⊗ m_{(0)} ⊗ x_{(0)} ⊗ m_{(1)}x_{(-1)}
/// with the product m_{(1)}x_{(-1)} taken in H itself, B acting on M.
ModuleObject right_act(const ModuleObject& m, const Comodule& x);

bool is_module_object_morphism(const ModuleObject& src, const ModuleObject& tgt,
                               const LinearMap& f);

SolutionSpace module_object_hom(const ModuleObject& a, const ModuleObject& b);
std::vector<LinearMap> module_object_hom_basis(const ModuleObject& a, const ModuleObject& b);

}  // namespace hopftrace
