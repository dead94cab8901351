#pragma once

#include <optional>
#include <vector>

#include "effap/interval.hpp"

namespace effap {

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;

BigInt max_norm(const IntVec& v);
bool lex_less(const IntVec& a, const IntVec& b);
// negate so the first nonzero entry is positive
IntVec sign_normalized(IntVec v);

// Primitive integer basis of { x : mat * x = 0 }, mat M x N over Z.
IntMat kernel_basis(const IntMat& mat, size_t ncols);

// In-place LLL (delta = 3/4) on row vectors with exact rational Gram-Schmidt.
void lll_reduce(IntMat& basis);

// Complete enumeration of lattice vectors with 2-norm^2 <= radius2; returns
// the nonzero vector minimal by (max-norm, lex) after sign normalization.
// Throws ResourceExhausted past node_budget.
std::optional<IntVec> enumerate_shortest(const IntMat& basis, const Rat& radius2,
                                         std::uint64_t node_budget = 20000000);

// Nonzero lattice vector with max-norm <= bound, minimal by (max-norm, lex);
// nullopt is a *proof* that none exists. Basis should be LLL-reduced.
std::optional<IntVec> smallest_within_maxnorm(const IntMat& basis, const Rat& bound,
                                              std::uint64_t node_budget = 20000000);

// Direct oracle: exhaustive box scan for a nonzero annihilator of mat with
// max-norm <= bound; minimal by (max-norm, lex). Requires the scan to fit the
// budget ((2*bound+1)^N <= budget).
std::optional<IntVec> box_search_annihilator(const IntMat& mat, size_t ncols, long bound,
                                             std::uint64_t budget = 50000000);

}  // namespace effap
