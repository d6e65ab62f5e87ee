#include "hopftrace/trace.hpp"

#include "hopftrace/intertwiner.hpp"

namespace hopftrace {

CheckReport check_hopf_bimodule(const HopfBimodule& n) {
  CheckReport rep;
  rep.subject = "hopf-bimodule";
  rep.merge(check_bicomodule(n.carrier), "carrier");
  Field f = n.field();
  const auto& a = *n.left_algebra;
  const auto& b = *n.right_algebra;
  LinearMap idm = LinearMap::identity(n.dim(), f);
  const LinearMap& rho = n.left_action;
  const LinearMap& act = n.right_action;

  rep.add(check_maps_equal("left-assoc", apply_to_kronid(rho, a.mul, n.dim()),
                           apply_to_idkron(rho, a.dim(), rho)));
  rep.add(check_maps_equal("left-unit", apply_to_kronid(rho, a.unit, n.dim()), idm));
  rep.add(check_maps_equal("right-assoc", apply_to_kronid(act, act, b.dim()),
                           apply_to_idkron(act, n.dim(), b.mul)));
  rep.add(check_maps_equal("right-unit", apply_to_idkron(act, n.dim(), b.unit), idm));
  rep.add(check_maps_equal("actions-commute", apply_to_kronid(act, rho, b.dim()),
                           apply_to_idkron(rho, a.dim(), act)));

  rep.add({"left-action-intertwines",
           is_bicomodule_morphism(tensor_bicomodule(a.carrier, n.carrier), n.carrier, rho),
           "left action is not a bicomodule morphism"});
  rep.add({"right-action-intertwines",
           is_bicomodule_morphism(tensor_bicomodule(n.carrier, b.carrier), n.carrier, act),
           "right action is not a bicomodule morphism"});
  for (auto& item : rep.items)
    if (item.pass) item.witness.clear();
  return rep;
}

HopfBimodule induce(const ModuleObject& m, BicomAlgPtr tilde) {
  Bicomodule carrier = tensor_bicomodule(tilde->carrier, m.carrier);
  LinearMap rho = tilde->mul.kron(LinearMap::identity(m.dim(), m.field()));
  LinearMap act = LinearMap::identity(tilde->dim(), m.field()).kron(m.action);
  return HopfBimodule{std::move(carrier), std::move(tilde), m.algebra, std::move(rho),
                      std::move(act)};
}

ModuleObject forget(const HopfBimodule& n) {
  return ModuleObject{n.carrier, n.right_algebra, n.right_action};
}

Balancing balancing(const ModuleObject& m, const Comodule& x) {
  const auto& h = *x.over;
  Field f = x.field();
  int hd = h.dim(), md = m.dim(), xd = x.dim;
  LinearMap idh = h.id();
  LinearMap idm = LinearMap::identity(md, f);
  LinearMap idx = LinearMap::identity(xd, f);

  // h ⊗ m ⊗ x ↦ h·S(x_{(-1)}) ⊗ x_{(0)} ⊗ m
  LinearMap beta = (h.mul() * idh.kron(h.antipode)).kron(idx.kron(idm)) *
                   idh.kron(x.coaction).kron(idm) *
                   idh.kron(LinearMap::flip(md, xd, f));

  // h ⊗ x ⊗ m ↦ h·x_{(-1)} ⊗ m ⊗ x_{(0)}
  LinearMap beta_inv = h.mul().kron(idm.kron(idx)) *
                       idh.kron(idh).kron(LinearMap::flip(xd, md, f)) *
                       idh.kron(x.coaction).kron(idm);
  return Balancing{std::move(beta), std::move(beta_inv)};
}

CheckReport check_balancing(const ModuleObject& m, const Comodule& x, BicomAlgPtr tilde) {
  CheckReport rep;
  rep.subject = "balancing";
  Balancing b = balancing(m, x);
  int d = b.beta.rows();
  LinearMap id = LinearMap::identity(d, x.field());
  rep.add(check_maps_equal("inverse-right", b.beta * b.beta_inv, id));
  rep.add(check_maps_equal("inverse-left", b.beta_inv * b.beta, id));
  HopfBimodule src = induce(right_act(m, x), tilde);
  HopfBimodule tgt = induce(left_act(x, m), tilde);
  rep.add({"hopf-bimodule-morphism", is_hopf_bimodule_morphism(src, tgt, b.beta),
           "beta fails to intertwine some action or coaction"});
  for (auto& item : rep.items)
    if (item.pass) item.witness.clear();
  return rep;
}

CheckReport check_balanced_axioms(const ModuleObject& m, const Comodule& x, const Comodule& y) {
  CheckReport rep;
  rep.subject = "balanced-axioms";
  // Square: β_{M, X⊗Y} agrees with β_{Y▷M, X} ∘ β_{M◁X, Y}; the bimodule
  // constraints relating the corner objects are identity reindexings here.
  LinearMap lhs = balancing(m, tensor_comodule(x, y)).beta;
  LinearMap first = balancing(right_act(m, x), y).beta;
  LinearMap second = balancing(left_act(y, m), x).beta;
  rep.add(check_maps_equal("coherence-square", second * first, lhs));

  Comodule triv = trivial_comodule(x.over);
  LinearMap beta_unit = balancing(m, triv).beta;
  rep.add(check_maps_equal("unit-triangle", beta_unit,
                           LinearMap::identity(beta_unit.rows(), x.field())));
  return rep;
}

LinearMap rho_to_gamma(const HopfBimodule& n, const Comodule& x) {
  // The composite (ρ ◁ id) ∘ (i_M(X) ◁ id) ∘ (id ◁ coev_{X^∨}) collapses to
  // γ(e_b ⊗ n) = Σ_a ρ(c_{ab} ⊗ n) ⊗ e''_a over the comatrix c of X.
  Field f = x.field();
  int md = n.dim(), xd = x.dim, hd = x.over->dim();
  const LinearMap& rho = n.left_action;
  LinearMap gamma(md * xd, xd * md, f);
  x.coaction.for_each_nonzero([&](int row, int b, const Scalar& c) {
    int t = row / xd, a = row % xd;
    for (int i = 0; i < md; ++i)
      for (int j = 0; j < md; ++j) {
        const Scalar& rv = rho.at(i, t * md + j);
        if (!rv.is_zero()) gamma.add_to(i * xd + a, b * md + j, c * rv);
      }
  });
  (void)hd;
  return gamma;
}

GammaToRhoResult gamma_to_rho(const CenterObject& c, BicomAlgPtr tilde) {
  const Comodule& reg = c.objects.at(c.regular_index);
  const auto& h = *reg.over;
  if (!(reg.coaction == h.comul()))
    throw std::invalid_argument("gamma_to_rho: family must contain the regular comodule");
  const LinearMap& gamma_reg = c.gammas.at(c.regular_index);
  Field f = reg.field();
  int md = c.base.dim();
  // ρ(h ⊗ m) = (id_M ⊗ ⟨-, ε⟩)(γ_M(H)(h ⊗ m)); the pairing against ε reads
  // off the counit coordinates of the double-dual leg.
  LinearMap rho = LinearMap::identity(md, f).kron(h.counit()) * gamma_reg;
  HopfBimodule n{c.base.carrier, tilde, c.base.algebra, std::move(rho), c.base.action};
  CheckReport checks = check_hopf_bimodule(n);
  checks.subject = "gamma-to-rho";
  return GammaToRhoResult{std::move(n), std::move(checks)};
}

CheckItem check_hexagon(const LinearMap& gamma_x, const LinearMap& gamma_y,
                        const LinearMap& gamma_xy, const Comodule& x, const Comodule& y,
                        int mdim) {
  Field f = x.field();
  LinearMap rhs = gamma_x.kron(LinearMap::identity(y.dim, f)) *
                  LinearMap::identity(x.dim, f).kron(gamma_y);
  return check_maps_equal("hexagon", rhs, gamma_xy);
}

namespace {

CheckReport yd_check_impl(const Comodule& x, const LinearMap& action, const LinearMap& twist,
                          const std::string& id) {
  CheckReport rep;
  rep.subject = id;
  const auto& h = *x.over;
  Field f = x.field();
  int hd = h.dim(), xd = x.dim;
  LinearMap idh = h.id();
  LinearMap idx = LinearMap::identity(xd, f);

  if (action.rows() != xd || action.cols() != hd * xd)
    throw DimensionError("module action: got " + action.shape_str());
  rep.add(check_maps_equal("precond-action-assoc", action * h.mul().kron(idx),
                           action * idh.kron(action)));
  rep.add(check_maps_equal("precond-action-unit", action * h.unit().kron(idx), idx));
  rep.merge(check_comodule(x), "precond");

  // twist(h₁·x₋₁) ⊗ h₂.x₀
  LinearMap lhs = permute_rows(h.comul().kron(x.coaction), {hd, hd, hd, xd}, {0, 2, 1, 3});
  lhs = (twist * h.mul()).kron(action) * lhs;
  // twist((h₁.x)₋₁)·h₂ ⊗ (h₁.x)₀
  LinearMap rhs = permute_rows(h.comul().kron(idx), {hd, hd, xd}, {0, 2, 1});
  rhs = compose_kronid(action, hd, rhs);
  rhs = compose_kronid(x.coaction, hd, rhs);
  rhs = permute_rows(rhs, {hd, xd, hd}, {0, 2, 1});
  rhs = (h.mul() * twist.kron(idh)).kron(idx) * rhs;
  rep.add(check_maps_equal(id, lhs, rhs));
  return rep;
}

}  // namespace

CheckReport twisted_yd_check(const Comodule& x, const LinearMap& action) {
  const auto& h = *x.over;
  return yd_check_impl(x, action, h.antipode * h.antipode, "twisted-yd");
}

CheckReport ordinary_yd_check(const Comodule& x, const LinearMap& action) {
  return yd_check_impl(x, action, x.over->id(), "ordinary-yd");
}

std::pair<Comodule, LinearMap> free_twisted_yd(HopfPtr h, const Comodule& v) {
  if (!same_hopf(h, v.over)) throw std::invalid_argument("free_twisted_yd: different Hopf algebras");
  Field f = h->field();
  int hd = h->dim(), vd = v.dim;
  LinearMap sinv = antipode_inverse(*h);
  LinearMap comul2 = compose_kronid(h->comul(), hd, h->comul());  // Δ²
  LinearMap t = comul2.kron(v.coaction);
  t = compose_idkron(hd * hd, sinv.kron(LinearMap::identity(hd * vd, f)), t);
  t = permute_rows(t, {hd, hd, hd, hd, vd}, {0, 3, 2, 1, 4});
  LinearMap mul3 = h->mul() * h->mul().kron(h->id());
  t = compose_kronid(mul3, hd * vd, t);
  LinearMap action = h->mul().kron(LinearMap::identity(vd, f));
  return {Comodule::make(h, hd * vd, std::move(t)), std::move(action)};
}

LinearMap adjoint_action(const HopfAlgebra& h) {
  Field f = h.field();
  int hd = h.dim();
  LinearMap mul3 = h.mul() * h.mul().kron(h.id());
  LinearMap t = permute_rows(h.comul().kron(h.id()), {hd, hd, hd}, {0, 2, 1});
  t = compose_idkron(hd * hd, h.antipode, t);
  (void)f;
  return mul3 * t;
}

ModuleObject yd_induction(const Comodule& x, BicomAlgPtr hat) {
  Bicomodule carrier = tensor_bicomodule(comodule_as_bicomodule(x), hat->carrier);
  LinearMap action = LinearMap::identity(x.dim, x.field()).kron(hat->mul);
  return ModuleObject{std::move(carrier), std::move(hat), std::move(action)};
}

bool is_hopf_bimodule_morphism(const HopfBimodule& src, const HopfBimodule& tgt,
                               const LinearMap& f) {
  if (!is_bicomodule_morphism(src.carrier, tgt.carrier, f)) return false;
  if (!(f * src.left_action == apply_to_idkron(tgt.left_action, src.left_algebra->dim(), f)))
    return false;
  return f * src.right_action == apply_to_kronid(tgt.right_action, f, src.right_algebra->dim());
}

SolutionSpace hom_hopf_bimodule(const HopfBimodule& a, const HopfBimodule& b) {
  if (!same_hopf(a.carrier.over, b.carrier.over))
    throw std::invalid_argument("hom_hopf_bimodule: different Hopf algebras");
  int hd = a.carrier.over->dim();
  LinearSystem sys(b.dim() * a.dim(), a.field());
  eqs::left_coaction_rows(sys, a.carrier.left_coaction, b.carrier.left_coaction, hd, a.dim(), b.dim());
  eqs::right_coaction_rows(sys, a.carrier.right_coaction, b.carrier.right_coaction, hd, a.dim(), b.dim());
  eqs::left_action_rows(sys, a.left_action, b.left_action, a.left_algebra->dim(), a.dim(), b.dim());
  eqs::right_action_rows(sys, a.right_action, b.right_action, a.right_algebra->dim(), a.dim(), b.dim());
  return sys.kernel();
}

std::vector<LinearMap> hom_hopf_bimodule_basis(const HopfBimodule& a, const HopfBimodule& b) {
  SolutionSpace sp = hom_hopf_bimodule(a, b);
  std::vector<LinearMap> out;
  out.reserve(sp.basis.size());
  for (const auto& v : sp.basis) {
    LinearMap m(b.dim(), a.dim(), a.field());
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        if (!v[i * a.dim() + j].is_zero()) m.set(i, j, v[i * a.dim() + j]);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace hopftrace
