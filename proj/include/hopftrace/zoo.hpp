#pragma once

#include "hopftrace/trace.hpp"

namespace hopftrace {

/// Group algebra of Z/n: basis {g^i}, Δg = g⊗g, S(g) = g^{n-1}.
HopfPtr group_algebra(int n, Field f);

/// Functions on Z/n: indicator basis, pointwise product, Δ dual to the group
/// law.
HopfPtr function_algebra(int n, Field f);

/// Sweedler's four-dimensional Hopf algebra, basis {1, g, x, gx}:
/// g² = 1, x² = 0, xg = -gx, Δx = x⊗1 + g⊗x, S(x) = -gx. Needs char ≠ 2.
HopfPtr sweedler_h4(Field f);

/// Taft algebra of dimension n²: basis {g^i x^j} ordered with the x-degree
/// most significant, relations gⁿ = 1, xⁿ = 0, xg = q·gx for a primitive
/// n-th root of unity q in GF(p).
HopfPtr taft(int n, std::uint64_t q, Field f);

/// Named test fixtures attached to one zoo algebra: the comodule family
/// {trivial, regular, grouplike simples, regular⊗regular} (the tensor square
/// only at desk scale) and the bicomodule algebras {trivial, Ĥ, H̃}.
struct TestFamily {
  HopfPtr h;
  std::vector<std::pair<std::string, Comodule>> comodules;
  std::vector<std::pair<std::string, BicomAlgPtr>> algebras;

  const Comodule& comodule(const std::string& name) const;
  BicomAlgPtr algebra(const std::string& name) const;
  const Comodule& regular() const { return comodule("regular"); }
};

TestFamily standard_test_family(HopfPtr h);

/// Module-object test family over B: B acting on itself, plus X ▷ B for the
/// small comodules of the standard family, capped at desk scale.
std::vector<std::pair<std::string, ModuleObject>> module_test_family(
    const TestFamily& fam, const BicomAlgPtr& b, int max_dim = 64);

/// Everything in an acceptance run stays at desk scale; constructed carriers
/// are capped at this dimension.
inline constexpr int kDeskScaleCap = 256;

/// Parses zoo specifiers like "group_algebra(3)", "sweedler_h4",
/// "taft(3,2,7)", "function_algebra(2)"; `f` supplies the field for entries
/// that do not fix their own.
HopfPtr zoo_by_name(const std::string& spec, Field f);

}  // namespace hopftrace
