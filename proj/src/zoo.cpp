#include "hopftrace/zoo.hpp"

#include <sstream>

namespace hopftrace {

HopfPtr group_algebra(int n, Field f) {
  if (n <= 0) throw std::invalid_argument("group_algebra: order must be positive");
  Scalar one = Scalar::one(f);
  LinearMap mul(n, n * n, f), unit(n, 1, f), comul(n * n, n, f), counit(1, n, f), s(n, n, f);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mul.set((i + j) % n, i * n + j, one);
    comul.set(i * n + i, i, one);
    counit.set(0, i, one);
    s.set((n - i) % n, i, one);
  }
  unit.set(0, 0, one);
  return HopfAlgebra::make(Algebra::make(n, mul, unit), Coalgebra::make(n, comul, counit), s);
}

HopfPtr function_algebra(int n, Field f) {
  if (n <= 0) throw std::invalid_argument("function_algebra: order must be positive");
  Scalar one = Scalar::one(f);
  LinearMap mul(n, n * n, f), unit(n, 1, f), comul(n * n, n, f), counit(1, n, f), s(n, n, f);
  for (int i = 0; i < n; ++i) {
    mul.set(i, i * n + i, one);
    unit.set(i, 0, one);
    for (int j = 0; j < n; ++j) comul.set(i * n + j, (i + j) % n, one);
    s.set((n - i) % n, i, one);
  }
  counit.set(0, 0, one);
  return HopfAlgebra::make(Algebra::make(n, mul, unit), Coalgebra::make(n, comul, counit), s);
}

HopfPtr sweedler_h4(Field f) {
  if (f.prime == 2) throw std::invalid_argument("sweedler_h4: characteristic 2 not allowed");
  Scalar one = Scalar::one(f), neg = -one;
  // Basis order 1, g, x, gx.
  LinearMap mul(4, 16, f), unit(4, 1, f), comul(16, 4, f), counit(1, 4, f), s(4, 4, f);
  auto set_mul = [&](int a, int b, int c, Scalar v) { mul.set(c, a * 4 + b, v); };
  for (int b = 0; b < 4; ++b) set_mul(0, b, b, one);
  set_mul(1, 0, 1, one); set_mul(2, 0, 2, one); set_mul(3, 0, 3, one);
  set_mul(1, 1, 0, one); set_mul(1, 2, 3, one); set_mul(1, 3, 2, one);
  set_mul(2, 1, 3, neg);
  set_mul(3, 1, 2, neg);
  unit.set(0, 0, one);
  auto set_comul = [&](int a, int l, int r, Scalar v) { comul.set(l * 4 + r, a, v); };
  set_comul(0, 0, 0, one);
  set_comul(1, 1, 1, one);
  set_comul(2, 2, 0, one); set_comul(2, 1, 2, one);
  set_comul(3, 3, 1, one); set_comul(3, 0, 3, one);
  counit.set(0, 0, one);
  counit.set(0, 1, one);
  s.set(0, 0, one);
  s.set(1, 1, one);
  s.set(3, 2, neg);
  s.set(2, 3, one);
  return HopfAlgebra::make(Algebra::make(4, mul, unit), Coalgebra::make(4, comul, counit), s);
}

namespace {

Scalar q_int(int k, const Scalar& q, Field f) {
  Scalar acc = Scalar::zero(f), pw = Scalar::one(f);
  for (int t = 0; t < k; ++t) {
    acc += pw;
    pw *= q;
  }
  return acc;
}

Scalar q_binom(int m, int r, const Scalar& q, Field f) {
  Scalar num = Scalar::one(f), den = Scalar::one(f);
  for (int k = 1; k <= r; ++k) {
    num *= q_int(m - r + k, q, f);
    den *= q_int(k, q, f);
  }
  return num * den.inverse();
}

Scalar q_power(const Scalar& q, long e, int n, Field f) {
  long r = e % n;
  if (r < 0) r += n;
  Scalar acc = Scalar::one(f);
  for (long t = 0; t < r; ++t) acc *= q;
  return acc;
}

}  // namespace

HopfPtr taft(int n, std::uint64_t qres, Field f) {
  if (f.is_rational()) throw std::invalid_argument("taft: roots of unity are taken in GF(p)");
  if (n < 2) throw std::invalid_argument("taft: need n >= 2");
  Scalar q = Scalar::of_int(static_cast<long>(qres), f);
  // q must be a primitive n-th root of unity.
  Scalar pw = Scalar::one(f);
  for (int k = 1; k < n; ++k) {
    pw *= q;
    if (pw.is_one()) throw std::invalid_argument("taft: q^" + std::to_string(k) + " = 1, not primitive");
  }
  pw *= q;
  if (!pw.is_one()) throw std::invalid_argument("taft: q^n != 1");

  int d = n * n;
  auto idx = [n](int i, int j) { return j * n + i; };  // g^i x^j, x-degree major
  Scalar one = Scalar::one(f);
  LinearMap mul(d, d * d, f), unit(d, 1, f), comul(d * d, d, f), counit(1, d, f), s(d, d, f);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = idx(i, j);
      // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}
      for (int k = 0; k < n; ++k)
        for (int l = 0; l + j < n; ++l)
          mul.set(idx((i + k) % n, j + l), a * d + idx(k, l), q_power(q, static_cast<long>(j) * k, n, f));
      // Δ(g^i x^j) = Σ_r [j r]_q · g^{i+r} x^{j-r} ⊗ g^i x^r
      for (int r = 0; r <= j; ++r)
        comul.set(idx((i + r) % n, j - r) * d + idx(i, r), a, q_binom(j, r, q, f));
      counit.set(0, a, j == 0 ? one : Scalar::zero(f));
      // S(g^i x^j) = (-1)^j q^{-j(j-1)/2 - ij} g^{-i-j} x^j
      Scalar sign = (j % 2 == 0) ? one : -one;
      long e = -(static_cast<long>(j) * (j - 1) / 2) - static_cast<long>(i) * j;
      int gi = ((-i - j) % n + 2 * n) % n;
      s.set(idx(gi, j), a, sign * q_power(q, e, n, f));
    }
  unit.set(idx(0, 0), 0, one);
  return HopfAlgebra::make(Algebra::make(d, mul, unit), Coalgebra::make(d, comul, counit), s);
}

const Comodule& TestFamily::comodule(const std::string& name) const {
  for (const auto& [n, c] : comodules)
    if (n == name) return c;
  throw std::invalid_argument("no test comodule named '" + name + "'");
}

BicomAlgPtr TestFamily::algebra(const std::string& name) const {
  for (const auto& [n, a] : algebras)
    if (n == name) return a;
  throw std::invalid_argument("no test bicomodule algebra named '" + name + "'");
}

TestFamily standard_test_family(HopfPtr h) {
  TestFamily fam;
  fam.h = h;
  Comodule triv = trivial_comodule(h);
  Comodule reg = regular_comodule(h);
  fam.comodules.emplace_back("trivial", triv);
  fam.comodules.emplace_back("regular", reg);
  int k = 0;
  for (const auto& g : grouplike_elements(*h)) {
    Comodule s = grouplike_simple(h, g);
    if (s.coaction == triv.coaction) continue;  // e-degree simple is the trivial comodule
    fam.comodules.emplace_back("simple" + std::to_string(k++), std::move(s));
  }
  if (reg.dim <= 4)
    fam.comodules.emplace_back("regsq", tensor_comodule(reg, reg));
  fam.algebras.emplace_back("trivial", trivial_bicomodule_algebra(h));
  fam.algebras.emplace_back("hat", hat_algebra(h));
  fam.algebras.emplace_back("tilde", twisted_coend_algebra(h));
  return fam;
}

std::vector<std::pair<std::string, ModuleObject>> module_test_family(
    const TestFamily& fam, const BicomAlgPtr& b, int max_dim) {
  std::vector<std::pair<std::string, ModuleObject>> out;
  ModuleObject self = algebra_as_module(b);
  out.emplace_back("self", self);
  for (const auto& [name, x] : fam.comodules) {
    if (name == "trivial" || name == "regsq") continue;
    if (x.dim * b->dim() > max_dim) continue;
    out.emplace_back("act_" + name, left_act(x, self));
  }
  return out;
}

HopfPtr zoo_by_name(const std::string& spec, Field f) {
  std::string name = spec;
  std::vector<long> args;
  auto open = spec.find('(');
  if (open != std::string::npos) {
    if (spec.back() != ')') throw std::invalid_argument("bad zoo spec '" + spec + "'");
    name = spec.substr(0, open);
    std::stringstream ss(spec.substr(open + 1, spec.size() - open - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) args.push_back(std::stol(tok));
    }
  }
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw std::invalid_argument("zoo '" + name + "' expects " + std::to_string(k) + " argument(s)");
  };
  if (name == "group_algebra") {
    want(1);
    return group_algebra(static_cast<int>(args[0]), f);
  }
  if (name == "function_algebra") {
    want(1);
    return function_algebra(static_cast<int>(args[0]), f);
  }
  if (name == "sweedler_h4") {
    want(0);
    return sweedler_h4(f);
  }
  if (name == "taft") {
    want(3);
    return taft(static_cast<int>(args[0]), static_cast<std::uint64_t>(args[1]),
                Field::gf(static_cast<std::uint32_t>(args[2])));
  }
  throw std::invalid_argument("unknown zoo algebra '" + name + "'");
}

}  // namespace hopftrace
