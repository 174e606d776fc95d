// Closed subsets of positive roots relative to a standard parabolic, relative
// closure, the ordered decomposition of the complement, block shuffles that
// keep the complement positive, and shape equivalence.
#pragma once

#include "lgc/weyl.hpp"

#include <optional>

namespace lgc {

struct RelClosedSet {
    StdParabolic P;
    std::set<Root> X;  // contains R(P)+, closed relative to P
};

std::vector<Root> positive_roots(int n);

// Checks the three defining conditions (containment of R(P)+, closure of the
// complement under root addition, W(P)-stability of the complement) and
// asserts full closedness of X itself; throws naming the failing condition.
RelClosedSet validate(const StdParabolic& P, const std::set<Root>& X);

// Smallest closed set relative to P containing S0.X and alpha.
RelClosedSet rel_closure(const RelClosedSet& S0, const Root& alpha);

// Ordered roots alpha_1..alpha_m, each of maximal height in the remaining
// complement, with R+ = X disjoint-union of the W(P)-orbits of the alpha_i;
// the partition property is verified on return.
std::vector<Root> orderw_decompose(const RelClosedSet& S0);

// All block shuffles w of P with w(X \ R(P)+) consisting of positive roots.
std::vector<Perm> w_set(const RelClosedSet& S0);

// First w in w_set(S1) (sorted) with ^w(S1.P) = S2.P and w(S1.X) = S2.X.
std::optional<Perm> good_equivalent(const RelClosedSet& S1, const RelClosedSet& S2);

// Every X making (P, X) a valid relatively closed set (exhaustive; for tests
// and the CLI at small rank).
std::vector<std::set<Root>> all_rel_closed(const StdParabolic& P);

}  // namespace lgc
