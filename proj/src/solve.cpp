#include "hopftrace/solve.hpp"

#include <algorithm>

namespace hopftrace {

LinearMap SolutionSpace::basis_as_matrix(Field f) const {
  LinearMap m(ambient_dim, dim(), f);
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i < ambient_dim; ++i)
      if (!basis[j][i].is_zero()) m.set(i, j, basis[j][i]);
  return m;
}

namespace {

// Sorts by index and merges duplicate terms, dropping zeros.
void normalize(std::vector<LinearSystem::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    int idx = terms[i].first;
    Scalar acc = terms[i].second;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].first == idx) acc += terms[j++].second;
    if (!acc.is_zero()) terms[out++] = {idx, acc};
    i = j;
  }
  terms.resize(out);
}

// row -= coeff * other, both sorted; keeps the result sorted.
void axpy(std::vector<LinearSystem::Term>& row, const Scalar& coeff,
          const std::vector<LinearSystem::Term>& other) {
  std::vector<LinearSystem::Term> out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      Scalar v = -(coeff * other[j].second);
      if (!v.is_zero()) out.emplace_back(other[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = row[i].second - coeff * other[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i, ++j;
    }
  }
  row = std::move(out);
}

}  // namespace

void LinearSystem::add_equation(std::vector<Term> terms) {
  normalize(terms);
  while (!terms.empty()) {
    auto it = echelon_.find(terms.front().first);
    if (it == echelon_.end()) break;
    axpy(terms, terms.front().second, it->second);
  }
  if (terms.empty()) return;
  Scalar inv = terms.front().second.inverse();
  for (auto& t : terms) t.second *= inv;
  int pivot = terms.front().first;
  echelon_.emplace(pivot, std::move(terms));
}

void LinearSystem::add_matrix_rows(const LinearMap& m) {
  if (m.cols() != unknowns_) throw DimensionError("system row width mismatch");
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) terms.emplace_back(j, m.at(i, j));
    if (!terms.empty()) add_equation(std::move(terms));
  }
}

SolutionSpace LinearSystem::kernel() const {
  SolutionSpace out;
  out.ambient_dim = unknowns_;
  std::vector<bool> is_pivot(unknowns_, false);
  for (const auto& [p, _] : echelon_) is_pivot[p] = true;
  for (int f = 0; f < unknowns_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(unknowns_, Scalar::zero(field_));
    v[f] = Scalar::one(field_);
    // Back-substitute pivots from the bottom up.
    for (auto it = echelon_.rbegin(); it != echelon_.rend(); ++it) {
      Scalar acc = Scalar::zero(field_);
      for (const auto& [idx, c] : it->second)
        if (idx != it->first && !v[idx].is_zero()) acc += c * v[idx];
      v[it->first] = -acc;
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

SolutionSpace kernel_of(const LinearMap& m) {
  LinearSystem sys(m.cols(), m.field());
  sys.add_matrix_rows(m);
  return sys.kernel();
}

}  // namespace hopftrace
