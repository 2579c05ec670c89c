#pragma once

#include "qmc/swap.hpp"

#include <string>
#include <vector>

namespace qmc {

// Rewrites every word with the monomial relations of the presentation:
// s^2 = 1, a q a = (q conjugated by a), disjoint generators sorted, and each
// overlapping adjacent pair replaced by the grlex-smallest word for the same
// 3-cycle. Each step lowers the word in grlex, so the loop terminates. The
// triangle relation is not used here; gb_reduce and expand_in_basis give full
// normal forms.
SwapPolynomial reduce_rewrite(const SwapPolynomial& p);
Word reduce_word(Word w);

}  // namespace qmc
