#pragma once

// The extremal families H1 and H2 and the trivial stars, materialized by
// filtering L_{n,r,k} with their membership predicates.

#include "signedfam/core.hpp"

namespace signedfam {

/// H1(n,r,k,ell,t): F with (M_t ⊆ F and |F ∩ M_ell| >= t+1) or
/// (M_t ⊄ F and |F ∩ M_ell| = ell-1).
/// RangeError unless r >= t+1 and t+2 <= ell <= min(r+1, n).
Family build_h1(const Params& params, int ell);

/// H2(n,r,k,c,t): F with (M_t ⊆ F and |F ∩ M_r| >= t+1), or
/// (F ∩ M_r = M_t and M_c \ M_r ⊆ F), or
/// (M_t ⊄ F, |F ∩ M_r| = r-1 and |F ∩ (M_c \ M_r)| = 1).
/// RangeError unless r >= t+2, n >= r+2 and r+2 <= c <= min(2r-t, n).
Family build_h2(const Params& params, int c);

/// Second branch of H2 alone.
Family build_h2_tail(const Params& params, int c);

/// All members of L_{n,r,k} containing s. RangeError unless |s| = t.
Family build_star(const Params& params, const SignedSet& s);

} // namespace signedfam
