#pragma once

#include "hopftrace/solve.hpp"

namespace hopftrace::eqs {

// Row builders for intertwiner systems. Unknowns are the entries of a map
// T : A -> B (nb x na), vectorized row-major: T[i][r] at index i*na + r.

/// (id_H ⊗ T) ∘ da = db ∘ T   for left coactions da : A -> H⊗A, db : B -> H⊗B.
void left_coaction_rows(LinearSystem& sys, const LinearMap& da, const LinearMap& db,
                        int hdim, int na, int nb);

/// (T ⊗ id_H) ∘ da = db ∘ T   for right coactions da : A -> A⊗H, db : B -> B⊗H.
void right_coaction_rows(LinearSystem& sys, const LinearMap& da, const LinearMap& db,
                         int hdim, int na, int nb);

/// T ∘ ra = rb ∘ (id_L ⊗ T)   for left actions ra : L⊗A -> A, rb : L⊗B -> B.
void left_action_rows(LinearSystem& sys, const LinearMap& ra, const LinearMap& rb,
                      int ldim, int na, int nb);

/// T ∘ ra = rb ∘ (T ⊗ id_R)   for right actions ra : A⊗R -> A, rb : B⊗R -> B.
void right_action_rows(LinearSystem& sys, const LinearMap& ra, const LinearMap& rb,
                       int rdim, int na, int nb);

}  // namespace hopftrace::eqs
