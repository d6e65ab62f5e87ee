#include "hopftrace/coend.hpp"

#include "hopftrace/intertwiner.hpp"

namespace hopftrace {

namespace {

Bicomodule twisted_carrier(HopfPtr h, const LinearMap& twist) {
  // h ↦ h_{(1)} ⊗ twist(h_{(2)}), already in carrier ⊗ H' leg order.
  LinearMap right = compose_idkron(h->dim(), twist, h->comul());
  return Bicomodule::make(h, h->dim(), h->comul(), std::move(right));
}

BicomAlgPtr algebra_on_twisted_carrier(HopfPtr h, const LinearMap& twist, const char* what) {
  Bicomodule carrier = twisted_carrier(h, twist);
  auto alg = std::make_shared<BicomoduleAlgebra>(
      BicomoduleAlgebra{std::move(carrier), h->mul(), h->unit()});
  CheckReport rep = check_bicomodule_algebra(*alg);
  if (!rep.passed()) {
    std::string why;
    for (const auto& it : rep.items)
      if (!it.pass) why += " " + it.id;
    throw std::logic_error(std::string(what) + " failed forced invariants:" + why);
  }
  return alg;
}

}  // namespace

BicomAlgPtr twisted_coend_algebra(HopfPtr h) {
  LinearMap sinv = antipode_inverse(*h);
  return algebra_on_twisted_carrier(std::move(h), sinv, "twisted coend algebra");
}

BicomAlgPtr hat_algebra(HopfPtr h) {
  LinearMap s = h->antipode;
  return algebra_on_twisted_carrier(std::move(h), s, "hat algebra");
}

Bicomodule j_domain(const Comodule& x) { return boxtimes(x, right_dual(x).object); }

LinearMap dinatural_j(const Comodule& x) {
  const auto& h = *x.over;
  int n = x.dim, hd = h.dim();
  LinearMap j(hd, n * n, x.field());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < hd; ++a) {
        const Scalar& c = x.coaction.at(a * n + k, i);
        if (!c.is_zero()) j.add_to(a, i * n + k, c);
      }
  LinearMap sinv = antipode_inverse(h);
  if (!is_bicomodule_morphism(j_domain(x), twisted_carrier(x.over, sinv), j))
    throw std::logic_error("dinatural j is not a bicomodule morphism (corrupt comodule data)");
  return j;
}

CheckItem check_dinaturality(const Comodule& x, const Comodule& y, const LinearMap& f,
                             const std::string& id) {
  if (!is_comodule_morphism(x, y, f))
    return {id, false, "given map is not a comodule morphism"};
  LinearMap jx = dinatural_j(x);
  LinearMap jy = dinatural_j(y);
  Field fl = x.field();
  LinearMap lhs = jx * LinearMap::identity(x.dim, fl).kron(dual_morphism(f));
  LinearMap rhs = jy * f.kron(LinearMap::identity(y.dim, fl));
  return check_maps_equal(id, lhs, rhs);
}

CheckItem check_coend_multiplication(const Comodule& x, const Comodule& y) {
  const auto& h = *x.over;
  int nx = x.dim, ny = y.dim;
  Comodule xy = tensor_comodule(x, y);
  LinearMap jxy = dinatural_j(xy);

  // μ ∘ (j_X ⊗ j_Y) with the columns reindexed along the identification
  // (X⊗Y) ⊗ (X⊗Y)^∨ ≅ (X ⊗ X^∨) ⊗ (Y ⊗ Y^∨), (X⊗Y)^∨ ≅ Y^∨ ⊗ X^∨.
  LinearMap lhs = h.mul() * dinatural_j(x).kron(dinatural_j(y));
  lhs = permute_cols(lhs, {nx, ny, nx, ny}, {0, 2, 1, 3});
  return check_maps_equal("coend-mul", lhs, jxy);
}

FactorizeResult cowedge_factorize(const Cowedge& alpha) {
  if (alpha.objects.size() != alpha.maps.size() || alpha.objects.empty())
    throw std::invalid_argument("cowedge: family shape mismatch");
  const Comodule& reg = alpha.objects[alpha.regular_index];
  HopfPtr h = reg.over;
  if (!(reg.coaction == h->comul()))
    throw std::invalid_argument("cowedge: family must contain the regular comodule");
  Field f = reg.field();
  int hd = h->dim();
  int td = alpha.target.dim;

  // Dinaturality of α over the computed Hom bases of the family.
  for (std::size_t a = 0; a < alpha.objects.size(); ++a)
    for (std::size_t b = 0; b < alpha.objects.size(); ++b) {
      const Comodule &X = alpha.objects[a], &Y = alpha.objects[b];
      for (const LinearMap& mor : comodule_hom_basis(X, Y)) {
        LinearMap lhs = alpha.maps[a] * LinearMap::identity(X.dim, f).kron(dual_morphism(mor));
        LinearMap rhs = alpha.maps[b] * mor.kron(LinearMap::identity(Y.dim, f));
        if (!(lhs == rhs)) throw CowedgeError("not a co-wedge: dinaturality fails");
      }
    }

  // φ(h) = α_H(h ⊗ ε).
  const LinearMap& alpha_reg = alpha.maps[alpha.regular_index];
  LinearMap phi(td, hd, f);
  for (int b = 0; b < hd; ++b)
    for (int j = 0; j < hd; ++j) {
      const Scalar& ej = h->counit().at(0, j);
      if (ej.is_zero()) continue;
      for (int i = 0; i < td; ++i) {
        const Scalar& v = alpha_reg.at(i, b * hd + j);
        if (!v.is_zero()) phi.add_to(i, b, ej * v);
      }
    }

  LinearMap sinv = antipode_inverse(*h);
  Bicomodule tilde = twisted_carrier(h, sinv);
  for (std::size_t a = 0; a < alpha.objects.size(); ++a) {
    if (!(phi * dinatural_j(alpha.objects[a]) == alpha.maps[a]))
      throw CowedgeError("factorization fails at family member " + std::to_string(a));
  }
  if (!is_bicomodule_morphism(tilde, alpha.target, phi))
    throw CowedgeError("factorization is not a bicomodule morphism");

  // Uniqueness: solutions (ψ, t) of { ψ a bicomodule morphism, ψ∘j_X = t·α_X }.
  int unknowns = td * hd + 1;
  int t_idx = td * hd;
  LinearSystem sys(unknowns, f);
  eqs::left_coaction_rows(sys, tilde.left_coaction, alpha.target.left_coaction, hd, hd, td);
  eqs::right_coaction_rows(sys, tilde.right_coaction, alpha.target.right_coaction, hd, hd, td);
  for (std::size_t a = 0; a < alpha.objects.size(); ++a) {
    LinearMap jx = dinatural_j(alpha.objects[a]);
    for (int i = 0; i < td; ++i)
      for (int c = 0; c < jx.cols(); ++c) {
        std::vector<LinearSystem::Term> terms;
        for (int r = 0; r < hd; ++r)
          if (!jx.at(r, c).is_zero()) terms.emplace_back(i * hd + r, jx.at(r, c));
        const Scalar& av = alpha.maps[a].at(i, c);
        if (!av.is_zero()) terms.emplace_back(t_idx, -av);
        if (!terms.empty()) sys.add_equation(std::move(terms));
      }
  }
  SolutionSpace sol = sys.kernel();

  return FactorizeResult{std::move(phi), sol.dim()};
}

}  // namespace hopftrace
