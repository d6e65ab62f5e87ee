#include "hopftrace/hopf.hpp"

namespace hopftrace {

namespace {

void require_shape(const LinearMap& m, int rows, int cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionError(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + m.shape_str());
}

}  // namespace

Algebra Algebra::make(int dim, LinearMap mul, LinearMap unit) {
  require_shape(mul, dim, dim * dim, "mul");
  require_shape(unit, dim, 1, "unit");
  return Algebra{dim, std::move(mul), std::move(unit)};
}

Coalgebra Coalgebra::make(int dim, LinearMap comul, LinearMap counit) {
  require_shape(comul, dim * dim, dim, "comul");
  require_shape(counit, 1, dim, "counit");
  return Coalgebra{dim, std::move(comul), std::move(counit)};
}

HopfPtr HopfAlgebra::make(Algebra a, Coalgebra c, LinearMap antipode) {
  if (a.dim != c.dim) throw DimensionError("algebra and coalgebra dims differ");
  require_shape(antipode, a.dim, a.dim, "antipode");
  if (!(a.field() == c.field()) || !(a.field() == antipode.field()))
    throw FieldError("mixed fields in Hopf data");
  return std::make_shared<HopfAlgebra>(
      HopfAlgebra{std::move(a), std::move(c), std::move(antipode)});
}

bool HopfAlgebra::operator==(const HopfAlgebra& o) const {
  return algebra.dim == o.algebra.dim && algebra.mul == o.algebra.mul &&
         algebra.unit == o.algebra.unit && coalgebra.comul == o.coalgebra.comul &&
         coalgebra.counit == o.coalgebra.counit && antipode == o.antipode;
}

CheckReport check_algebra(const Algebra& a) {
  CheckReport rep;
  rep.subject = "algebra";
  Field f = a.field();
  LinearMap id = LinearMap::identity(a.dim, f);
  rep.add(check_maps_equal("assoc", a.mul * a.mul.kron(id), a.mul * id.kron(a.mul)));
  rep.add(check_maps_equal("unit-left", a.mul * a.unit.kron(id), id));
  rep.add(check_maps_equal("unit-right", a.mul * id.kron(a.unit), id));
  return rep;
}

CheckReport check_coalgebra(const Coalgebra& c) {
  CheckReport rep;
  rep.subject = "coalgebra";
  Field f = c.field();
  LinearMap id = LinearMap::identity(c.dim, f);
  rep.add(check_maps_equal("coassoc", c.comul.kron(id) * c.comul, id.kron(c.comul) * c.comul));
  rep.add(check_maps_equal("counit-left", c.counit.kron(id) * c.comul, id));
  rep.add(check_maps_equal("counit-right", id.kron(c.counit) * c.comul, id));
  return rep;
}

CheckReport check_hopf(const HopfAlgebra& h) {
  CheckReport rep;
  rep.subject = "hopf";
  rep.merge(check_algebra(h.algebra));
  rep.merge(check_coalgebra(h.coalgebra));

  Field f = h.field();
  int n = h.dim();
  LinearMap id = h.id();
  const LinearMap &mu = h.mul(), &eta = h.unit(), &cm = h.comul(), &eps = h.counit();
  const LinearMap& S = h.antipode;

  // Δ and ε are algebra morphisms.
  LinearMap dd = permute_rows(cm.kron(cm), {n, n, n, n}, {0, 2, 1, 3});
  rep.add(check_maps_equal("bialg-comul-mul", cm * mu, mu.kron(mu) * dd));
  rep.add(check_maps_equal("bialg-comul-unit", cm * eta, eta.kron(eta)));
  rep.add(check_maps_equal("bialg-counit-mul", eps * mu, eps.kron(eps)));
  rep.add(check_maps_equal("bialg-counit-unit", eps * eta, LinearMap::identity(1, f)));

  LinearMap eta_eps = eta * eps;
  rep.add(check_maps_equal("antipode-left", mu * S.kron(id) * cm, eta_eps));
  rep.add(check_maps_equal("antipode-right", mu * id.kron(S) * cm, eta_eps));

  if (S.rank() != n)
    rep.add_fail("antipode-invertible", "rank " + std::to_string(S.rank()) + " < " + std::to_string(n));
  else
    rep.add_pass("antipode-invertible");
  return rep;
}

LinearMap antipode_inverse(const HopfAlgebra& h) {
  auto inv = h.antipode.inverse();
  if (!inv) throw std::runtime_error("antipode not invertible");
  return *inv;
}

HopfPtr op_cop(const HopfAlgebra& h) {
  Field f = h.field();
  int n = h.dim();
  LinearMap tau = LinearMap::flip(n, n, f);
  Algebra a = Algebra::make(n, h.mul() * tau, h.unit());
  Coalgebra c = Coalgebra::make(n, tau * h.comul(), h.counit());
  return HopfAlgebra::make(std::move(a), std::move(c), h.antipode);
}

std::vector<std::vector<Scalar>> grouplike_elements(const HopfAlgebra& h) {
  std::vector<std::vector<Scalar>> out;
  int n = h.dim();
  Field f = h.field();
  for (int i = 0; i < n; ++i) {
    // Candidate c·e_i is grouplike iff Δe_i = λ·e_i⊗e_i with λ·ε(e_i) = 1;
    // then c = λ = 1/ε(e_i).
    bool pure = true;
    Scalar lambda = Scalar::zero(f);
    for (int r = 0; r < n * n && pure; ++r) {
      const Scalar& v = h.comul().at(r, i);
      if (v.is_zero()) continue;
      if (r == i * n + i)
        lambda = v;
      else
        pure = false;
    }
    if (!pure || lambda.is_zero()) continue;
    Scalar mu = h.counit().at(0, i);
    if (mu.is_zero() || lambda * mu != Scalar::one(f)) continue;
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[i] = lambda;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hopftrace
