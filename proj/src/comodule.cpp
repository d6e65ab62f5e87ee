#include "hopftrace/comodule.hpp"

#include "hopftrace/intertwiner.hpp"

namespace hopftrace {

bool same_hopf(const HopfPtr& a, const HopfPtr& b) {
  return a == b || (a && b && *a == *b);
}

Comodule Comodule::make(HopfPtr h, int dim, LinearMap coaction) {
  if (coaction.rows() != h->dim() * dim || coaction.cols() != dim)
    throw DimensionError("coaction: expected " + std::to_string(h->dim() * dim) + "x" +
                         std::to_string(dim) + ", got " + coaction.shape_str());
  return Comodule{std::move(h), dim, std::move(coaction)};
}

CheckReport check_comodule(const Comodule& x) {
  CheckReport rep;
  rep.subject = "comodule";
  const auto& h = *x.over;
  Field f = x.field();
  LinearMap idx = LinearMap::identity(x.dim, f);
  rep.add(check_maps_equal("coassoc", compose_kronid(h.comul(), x.dim, x.coaction),
                           compose_idkron(h.dim(), x.coaction, x.coaction)));
  rep.add(check_maps_equal("counit", compose_kronid(h.counit(), x.dim, x.coaction), idx));
  return rep;
}

Comodule trivial_comodule(HopfPtr h) {
  LinearMap delta = h->unit();
  return Comodule::make(std::move(h), 1, std::move(delta));
}

Comodule regular_comodule(HopfPtr h) {
  LinearMap delta = h->comul();
  return Comodule::make(std::move(h), h->dim(), std::move(delta));
}

Comodule grouplike_simple(HopfPtr h, const std::vector<Scalar>& grouplike) {
  LinearMap delta(h->dim(), 1, h->field());
  for (int a = 0; a < h->dim(); ++a)
    if (!grouplike[a].is_zero()) delta.set(a, 0, grouplike[a]);
  return Comodule::make(std::move(h), 1, std::move(delta));
}

Comodule tensor_comodule(const Comodule& x, const Comodule& y) {
  if (!same_hopf(x.over, y.over)) throw std::invalid_argument("tensor: comodules over different Hopf algebras");
  const auto& h = *x.over;
  Field f = x.field();
  int hd = h.dim();
  (void)f;
  LinearMap out(hd * x.dim * y.dim, x.dim * y.dim, x.field());
  x.coaction.for_each_nonzero([&](int ar, int a0, const Scalar& av) {
    int a = ar / x.dim, ai = ar % x.dim;
    y.coaction.for_each_nonzero([&](int br, int b0, const Scalar& bv) {
      int b = br / y.dim, bi = br % y.dim;
      Scalar w = av * bv;
      for (int c = 0; c < hd; ++c) {
        const Scalar& mu = h.mul().at(c, a * hd + b);
        if (!mu.is_zero()) out.add_to((c * x.dim + ai) * y.dim + bi, a0 * y.dim + b0, mu * w);
      }
    });
  });
  return Comodule::make(x.over, x.dim * y.dim, std::move(out));
}

bool is_comodule_morphism(const Comodule& x, const Comodule& y, const LinearMap& f) {
  if (f.rows() != y.dim || f.cols() != x.dim) return false;
  return compose_idkron(x.over->dim(), f, x.coaction) == y.coaction * f;
}

namespace {

// Coaction on X* twisting the comatrix of X by `twist` (S or S^{-1}).
LinearMap dual_coaction(const Comodule& x, const LinearMap& twist) {
  int n = x.dim, hd = x.over->dim();
  LinearMap out(hd * n, n, x.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < hd; ++a) {
        const Scalar& c = x.coaction.at(a * n + i, j);
        if (c.is_zero()) continue;
        for (int b = 0; b < hd; ++b) {
          const Scalar& t = twist.at(b, a);
          if (!t.is_zero()) out.add_to(b * n + j, i, t * c);
        }
      }
  return out;
}

void assert_dual_consistent(const Comodule& x, const DualData& d, bool left) {
  Field f = x.field();
  int n = x.dim;
  LinearMap idn = LinearMap::identity(n, f);
  Comodule triv = trivial_comodule(x.over);
  const Comodule& primal = x;
  const Comodule& dual = d.object;
  // ev / coev must be intertwiners; the pairing legs depend on the side.
  bool ok;
  if (left) {
    ok = is_comodule_morphism(tensor_comodule(primal, dual), triv, d.ev) &&
         is_comodule_morphism(triv, tensor_comodule(dual, primal), d.coev) &&
         d.ev.kron(idn) * idn.kron(d.coev) == idn &&
         idn.kron(d.ev) * d.coev.kron(idn) == idn;
  } else {
    ok = is_comodule_morphism(tensor_comodule(dual, primal), triv, d.ev) &&
         is_comodule_morphism(triv, tensor_comodule(primal, dual), d.coev) &&
         idn.kron(d.ev) * d.coev.kron(idn) == idn &&
         d.ev.kron(idn) * idn.kron(d.coev) == idn;
  }
  if (!ok)
    throw std::logic_error(std::string(left ? "left" : "right") +
                           " dual construction inconsistent (ev/coev fail intertwining)");
}

}  // namespace

DualData right_dual(const Comodule& x) {
  LinearMap sinv = antipode_inverse(*x.over);
  DualData d{Comodule::make(x.over, x.dim, dual_coaction(x, sinv)),
             pairing_ev(x.dim, x.field()), pairing_coev(x.dim, x.field())};
  assert_dual_consistent(x, d, false);
  return d;
}

DualData left_dual(const Comodule& x) {
  Field f = x.field();
  int n = x.dim, hd = x.over->dim();
  LinearMap idn = LinearMap::identity(n, f);
  LinearMap ev = pairing_ev(n, f);    // X ⊗ ∨X → k
  LinearMap coev = pairing_coev(n, f);  // k → ∨X ⊗ X
  // τ ∘ (id ⊗ S ⊗ ev) ∘ (id ⊗ δ_X ⊗ id) ∘ (coev ⊗ id)
  LinearMap t = compose_idkron(n, x.coaction.kron(idn), coev.kron(idn));
  t = compose_idkron(n, x.over->antipode.kron(ev), t);
  t = permute_rows(t, {n, hd}, {1, 0});
  DualData d{Comodule::make(x.over, n, std::move(t)), std::move(ev), std::move(coev)};
  assert_dual_consistent(x, d, true);
  return d;
}

LinearMap dual_morphism(const LinearMap& f) { return f.transpose(); }

LinearMap dual_tensor_iso(const Comodule& x, const Comodule& y) {
  return LinearMap::flip(y.dim, x.dim, x.field());
}

SolutionSpace comodule_hom(const Comodule& x, const Comodule& y) {
  if (!same_hopf(x.over, y.over)) throw std::invalid_argument("hom: comodules over different Hopf algebras");
  LinearSystem sys(y.dim * x.dim, x.field());
  eqs::left_coaction_rows(sys, x.coaction, y.coaction, x.over->dim(), x.dim, y.dim);
  return sys.kernel();
}

std::vector<LinearMap> comodule_hom_basis(const Comodule& x, const Comodule& y) {
  SolutionSpace sp = comodule_hom(x, y);
  std::vector<LinearMap> out;
  out.reserve(sp.basis.size());
  for (const auto& v : sp.basis) {
    LinearMap m(y.dim, x.dim, x.field());
    for (int i = 0; i < y.dim; ++i)
      for (int j = 0; j < x.dim; ++j)
        if (!v[i * x.dim + j].is_zero()) m.set(i, j, v[i * x.dim + j]);
    out.push_back(std::move(m));
  }
  return out;
}

int right_dual_coaction_freedom(const Comodule& x) {
  int n = x.dim, hd = x.over->dim();
  Field f = x.field();
  const LinearMap& mu = x.over->mul();
  const LinearMap& D = x.coaction;
  LinearSystem sys(hd * n * n, f);
  auto uidx = [&](int a, int k, int i) { return (a * n + k) * n + i; };
  // Σ_k U_{ik} c_{kj} = 0 entrywise in H.
  for (int b = 0; b < hd; ++b)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<LinearSystem::Term> terms;
        for (int k = 0; k < n; ++k)
          for (int a2 = 0; a2 < hd; ++a2) {
            const Scalar& c = D.at(a2 * n + k, j);
            if (c.is_zero()) continue;
            for (int a1 = 0; a1 < hd; ++a1) {
              const Scalar& m = mu.at(b, a1 * hd + a2);
              if (!m.is_zero()) terms.emplace_back(uidx(a1, k, i), m * c);
            }
          }
        if (!terms.empty()) sys.add_equation(std::move(terms));
      }
  // Σ_j c_{ij} U_{jk} = 0 entrywise in H.
  for (int b = 0; b < hd; ++b)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        std::vector<LinearSystem::Term> terms;
        for (int j = 0; j < n; ++j)
          for (int a1 = 0; a1 < hd; ++a1) {
            const Scalar& c = D.at(a1 * n + i, j);
            if (c.is_zero()) continue;
            for (int a2 = 0; a2 < hd; ++a2) {
              const Scalar& m = mu.at(b, a1 * hd + a2);
              if (!m.is_zero()) terms.emplace_back(uidx(a2, k, j), m * c);
            }
          }
        if (!terms.empty()) sys.add_equation(std::move(terms));
      }
  return sys.kernel().dim();
}

}  // namespace hopftrace
