#include "hopftrace/bicomodule.hpp"

#include "hopftrace/intertwiner.hpp"

namespace hopftrace {

Bicomodule Bicomodule::make(HopfPtr h, int dim, LinearMap left, LinearMap right) {
  int hd = h->dim();
  if (left.rows() != hd * dim || left.cols() != dim)
    throw DimensionError("left coaction: got " + left.shape_str());
  if (right.rows() != dim * hd || right.cols() != dim)
    throw DimensionError("right coaction: got " + right.shape_str());
  return Bicomodule{std::move(h), dim, std::move(left), std::move(right)};
}

CheckReport check_bicomodule(const Bicomodule& m) {
  CheckReport rep;
  rep.subject = "bicomodule";
  const auto& h = *m.over;
  Field f = m.field();
  int hd = h.dim();
  LinearMap idm = LinearMap::identity(m.dim, f);
  LinearMap comul_cop = permute_rows(h.comul(), {hd, hd}, {1, 0});

  rep.add(check_maps_equal("left-coassoc", compose_kronid(h.comul(), m.dim, m.left_coaction),
                           compose_idkron(hd, m.left_coaction, m.left_coaction)));
  rep.add(check_maps_equal("left-counit", compose_kronid(h.counit(), m.dim, m.left_coaction), idm));
  rep.add(check_maps_equal("right-coassoc", compose_kronid(m.right_coaction, hd, m.right_coaction),
                           compose_idkron(m.dim, comul_cop, m.right_coaction)));
  rep.add(check_maps_equal("right-counit", compose_idkron(m.dim, h.counit(), m.right_coaction), idm));
  rep.add(check_maps_equal("commutation", compose_idkron(hd, m.right_coaction, m.left_coaction),
                           compose_kronid(m.left_coaction, hd, m.right_coaction)));
  return rep;
}

Bicomodule trivial_bicomodule(HopfPtr h) {
  LinearMap left = h->unit();
  LinearMap right = h->unit();
  return Bicomodule::make(std::move(h), 1, std::move(left), std::move(right));
}

Bicomodule comodule_as_bicomodule(const Comodule& x) {
  LinearMap right = LinearMap::identity(x.dim, x.field()).kron(x.over->unit());
  return Bicomodule::make(x.over, x.dim, x.coaction, std::move(right));
}

Bicomodule boxtimes(const Comodule& x, const Comodule& w) {
  if (!same_hopf(x.over, w.over)) throw std::invalid_argument("boxtimes: different Hopf algebras");
  Field f = x.field();
  int hd = x.over->dim();
  LinearMap left = x.coaction.kron(LinearMap::identity(w.dim, f));
  LinearMap right = LinearMap::identity(x.dim, f).kron(LinearMap::flip(hd, w.dim, f) * w.coaction);
  return Bicomodule::make(x.over, x.dim * w.dim, std::move(left), std::move(right));
}

namespace {

// Left codiagonal coaction on A ⊗ B: a⊗b ↦ a_{(-1)}b_{(-1)} ⊗ a_{(0)} ⊗ b_{(0)},
// assembled by sparse iteration; the Kronecker intermediate is never formed.
LinearMap codiagonal_left(const HopfAlgebra& h, const LinearMap& da, int nda,
                          const LinearMap& db, int ndb) {
  int hd = h.dim();
  LinearMap out(hd * nda * ndb, nda * ndb, h.field());
  da.for_each_nonzero([&](int ar, int a0, const Scalar& av) {
    int a = ar / nda, ai = ar % nda;
    db.for_each_nonzero([&](int br, int b0, const Scalar& bv) {
      int b = br / ndb, bi = br % ndb;
      Scalar w = av * bv;
      for (int c = 0; c < hd; ++c) {
        const Scalar& mu = h.mul().at(c, a * hd + b);
        if (!mu.is_zero()) out.add_to((c * nda + ai) * ndb + bi, a0 * ndb + b0, mu * w);
      }
    });
  });
  return out;
}

// Right codiagonal in H^opcop: a⊗b ↦ a_{(0)} ⊗ b_{(0)} ⊗ b_{(1)}·a_{(1)} (product
// reversed in H).
LinearMap codiagonal_right_opcop(const HopfAlgebra& h, const LinearMap& da, int nda,
                                 const LinearMap& db, int ndb) {
  int hd = h.dim();
  LinearMap out(nda * ndb * hd, nda * ndb, h.field());
  da.for_each_nonzero([&](int ar, int a0, const Scalar& av) {
    int ai = ar / hd, a = ar % hd;
    db.for_each_nonzero([&](int br, int b0, const Scalar& bv) {
      int bi = br / hd, b = br % hd;
      Scalar w = av * bv;
      for (int c = 0; c < hd; ++c) {
        const Scalar& mu = h.mul().at(c, b * hd + a);
        if (!mu.is_zero()) out.add_to((ai * ndb + bi) * hd + c, a0 * ndb + b0, mu * w);
      }
    });
  });
  return out;
}

}  // namespace

Bicomodule tensor_bicomodule(const Bicomodule& m, const Bicomodule& n) {
  if (!same_hopf(m.over, n.over)) throw std::invalid_argument("tensor: different Hopf algebras");
  const auto& h = *m.over;
  return Bicomodule::make(m.over, m.dim * n.dim,
                          codiagonal_left(h, m.left_coaction, m.dim, n.left_coaction, n.dim),
                          codiagonal_right_opcop(h, m.right_coaction, m.dim, n.right_coaction, n.dim));
}

bool is_bicomodule_morphism(const Bicomodule& src, const Bicomodule& tgt, const LinearMap& f) {
  if (f.rows() != tgt.dim || f.cols() != src.dim) return false;
  int hd = src.over->dim();
  if (!(compose_idkron(hd, f, src.left_coaction) == tgt.left_coaction * f)) return false;
  return compose_kronid(f, hd, src.right_coaction) == tgt.right_coaction * f;
}

CheckReport check_bicomodule_algebra(const BicomoduleAlgebra& b) {
  CheckReport rep;
  rep.subject = "bicomodule-algebra";
  rep.merge(check_bicomodule(b.carrier), "carrier");
  rep.merge(check_algebra(Algebra{b.dim(), b.mul, b.unit}));
  Bicomodule sq = tensor_bicomodule(b.carrier, b.carrier);
  rep.add({"mul-intertwines", is_bicomodule_morphism(sq, b.carrier, b.mul),
           "multiplication is not a bicomodule morphism"});
  rep.add({"unit-intertwines",
           is_bicomodule_morphism(trivial_bicomodule(b.carrier.over), b.carrier, b.unit),
           "unit is not a bicomodule morphism"});
  // Witnesses carry ids only on failure; blank out pass witnesses.
  for (auto& item : rep.items)
    if (item.pass) item.witness.clear();
  return rep;
}

BicomAlgPtr trivial_bicomodule_algebra(HopfPtr h) {
  Field f = h->field();
  Bicomodule carrier = trivial_bicomodule(std::move(h));
  LinearMap mul = LinearMap::identity(1, f);
  LinearMap unit = LinearMap::identity(1, f);
  return std::make_shared<BicomoduleAlgebra>(
      BicomoduleAlgebra{std::move(carrier), std::move(mul), std::move(unit)});
}

CheckReport check_module_object(const ModuleObject& m) {
  CheckReport rep;
  rep.subject = "module-object";
  rep.merge(check_bicomodule(m.carrier), "carrier");
  const auto& b = *m.algebra;
  Field f = m.field();
  LinearMap idm = LinearMap::identity(m.dim(), f);
  rep.add(check_maps_equal("action-assoc", apply_to_kronid(m.action, m.action, b.dim()),
                           apply_to_idkron(m.action, m.dim(), b.mul)));
  rep.add(check_maps_equal("action-unit", apply_to_idkron(m.action, m.dim(), b.unit), idm));
  Bicomodule prod = tensor_bicomodule(m.carrier, b.carrier);
  rep.add({"action-intertwines", is_bicomodule_morphism(prod, m.carrier, m.action),
           "B-action is not a bicomodule morphism"});
  for (auto& item : rep.items)
    if (item.pass) item.witness.clear();
  return rep;
}

ModuleObject algebra_as_module(BicomAlgPtr b) {
  return ModuleObject{b->carrier, b, b->mul};
}

ModuleObject left_act(const Comodule& x, const ModuleObject& m) {
  if (!same_hopf(x.over, m.carrier.over))
    throw std::invalid_argument("left_act: different Hopf algebras");
  Bicomodule carrier = tensor_bicomodule(comodule_as_bicomodule(x), m.carrier);
  LinearMap action = LinearMap::identity(x.dim, x.field()).kron(m.action);
  return ModuleObject{std::move(carrier), m.algebra, std::move(action)};
}

ModuleObject right_act(const ModuleObject& m, const Comodule& x) {
  if (!same_hopf(x.over, m.carrier.over))
    throw std::invalid_argument("right_act: different Hopf algebras");
  const auto& h = *m.carrier.over;
  Field f = m.field();
  int hd = h.dim(), md = m.dim(), xd = x.dim;
  LinearMap idx = LinearMap::identity(xd, f);

  LinearMap left = m.carrier.left_coaction.kron(idx);
  // m ⊗ x ↦ m_{(0)} ⊗ x_{(0)} ⊗ m_{(1)}x_{(-1)}, product in H itself.
  LinearMap right(md * xd * hd, md * xd, f);
  m.carrier.right_coaction.for_each_nonzero([&](int mr, int m0, const Scalar& mv) {
    int mi = mr / hd, a = mr % hd;
    x.coaction.for_each_nonzero([&](int xr, int x0, const Scalar& xv) {
      int b = xr / xd, xi = xr % xd;
      Scalar w = mv * xv;
      for (int c = 0; c < hd; ++c) {
        const Scalar& mu = h.mul().at(c, a * hd + b);
        if (!mu.is_zero()) right.add_to((mi * xd + xi) * hd + c, m0 * xd + x0, mu * w);
      }
    });
  });
  Bicomodule carrier = Bicomodule::make(m.carrier.over, md * xd, std::move(left), std::move(right));

  int bd = m.algebra->dim();
  LinearMap action = permute_cols(m.action.kron(idx), {md, xd, bd}, {0, 2, 1});
  return ModuleObject{std::move(carrier), m.algebra, std::move(action)};
}

bool is_module_object_morphism(const ModuleObject& src, const ModuleObject& tgt,
                               const LinearMap& f) {
  if (!is_bicomodule_morphism(src.carrier, tgt.carrier, f)) return false;
  LinearMap idb = LinearMap::identity(src.algebra->dim(), src.field());
  return f * src.action == tgt.action * f.kron(idb);
}

SolutionSpace module_object_hom(const ModuleObject& a, const ModuleObject& b) {
  if (!same_hopf(a.carrier.over, b.carrier.over) ||
      !(a.algebra == b.algebra || (a.algebra && b.algebra && a.algebra->mul == b.algebra->mul &&
                                   a.algebra->unit == b.algebra->unit)))
    throw std::invalid_argument("module_object_hom: incompatible objects");
  int hd = a.carrier.over->dim();
  LinearSystem sys(b.dim() * a.dim(), a.field());
  eqs::left_coaction_rows(sys, a.carrier.left_coaction, b.carrier.left_coaction, hd, a.dim(), b.dim());
  eqs::right_coaction_rows(sys, a.carrier.right_coaction, b.carrier.right_coaction, hd, a.dim(), b.dim());
  eqs::right_action_rows(sys, a.action, b.action, a.algebra->dim(), a.dim(), b.dim());
  return sys.kernel();
}

std::vector<LinearMap> module_object_hom_basis(const ModuleObject& a, const ModuleObject& b) {
  SolutionSpace sp = module_object_hom(a, b);
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
