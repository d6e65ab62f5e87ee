#include "hopftrace/intertwiner.hpp"

namespace hopftrace::eqs {

void left_coaction_rows(LinearSystem& sys, const LinearMap& da, const LinearMap& db,
                        int hdim, int na, int nb) {
  for (int a = 0; a < hdim; ++a)
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < na; ++j) {
        std::vector<LinearSystem::Term> terms;
        for (int r = 0; r < na; ++r) {
          const Scalar& c = da.at(a * na + r, j);
          if (!c.is_zero()) terms.emplace_back(i * na + r, c);
        }
        for (int s = 0; s < nb; ++s) {
          const Scalar& c = db.at(a * nb + i, s);
          if (!c.is_zero()) terms.emplace_back(s * na + j, -c);
        }
        if (!terms.empty()) sys.add_equation(std::move(terms));
      }
}

void right_coaction_rows(LinearSystem& sys, const LinearMap& da, const LinearMap& db,
                         int hdim, int na, int nb) {
  for (int c = 0; c < hdim; ++c)
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < na; ++j) {
        std::vector<LinearSystem::Term> terms;
        for (int r = 0; r < na; ++r) {
          const Scalar& v = da.at(r * hdim + c, j);
          if (!v.is_zero()) terms.emplace_back(i * na + r, v);
        }
        for (int s = 0; s < nb; ++s) {
          const Scalar& v = db.at(i * hdim + c, s);
          if (!v.is_zero()) terms.emplace_back(s * na + j, -v);
        }
        if (!terms.empty()) sys.add_equation(std::move(terms));
      }
}

void left_action_rows(LinearSystem& sys, const LinearMap& ra, const LinearMap& rb,
                      int ldim, int na, int nb) {
  for (int i = 0; i < nb; ++i)
    for (int al = 0; al < ldim; ++al)
      for (int j = 0; j < na; ++j) {
        std::vector<LinearSystem::Term> terms;
        for (int r = 0; r < na; ++r) {
          const Scalar& v = ra.at(r, al * na + j);
          if (!v.is_zero()) terms.emplace_back(i * na + r, v);
        }
        for (int s = 0; s < nb; ++s) {
          const Scalar& v = rb.at(i, al * nb + s);
          if (!v.is_zero()) terms.emplace_back(s * na + j, -v);
        }
        if (!terms.empty()) sys.add_equation(std::move(terms));
      }
}

void right_action_rows(LinearSystem& sys, const LinearMap& ra, const LinearMap& rb,
                       int rdim, int na, int nb) {
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < na; ++j)
      for (int be = 0; be < rdim; ++be) {
        std::vector<LinearSystem::Term> terms;
        for (int r = 0; r < na; ++r) {
          const Scalar& v = ra.at(r, j * rdim + be);
          if (!v.is_zero()) terms.emplace_back(i * na + r, v);
        }
        for (int s = 0; s < nb; ++s) {
          const Scalar& v = rb.at(i, s * rdim + be);
          if (!v.is_zero()) terms.emplace_back(s * na + j, -v);
        }
        if (!terms.empty()) sys.add_equation(std::move(terms));
      }
}

}  // namespace hopftrace::eqs
