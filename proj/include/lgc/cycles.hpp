// Characteristic cycles of monomial quotient modules over
// R = F[y_0..y_{f-1}, z_0..z_{f-1}] modulo (y_j z_j): minimal primes,
// localization multiplicities, additivity, and the monomial dual.
#pragma once

#include "lgc/serre.hpp"

#include <map>
#include <set>
#include <vector>

namespace lgc {

// The minimal prime (y_i : i in J, z_j : j not in J) of R/(y_j z_j).
struct MinPrime {
    std::set<int> J;
    friend auto operator<=>(const MinPrime&, const MinPrime&) = default;
};

// Formal direct sum of cyclic pieces R/a with integer multiplicities; each a
// is generated by one monomial t_j in {y_j, z_j, y_j z_j} per coordinate.
struct MonModule {
    int f = 0;
    std::map<MonIdeal, long> pieces;
};

using Cycle = std::map<MinPrime, long>;

long mult_at(const MonModule& M, const MinPrime& q);

// Independent oracle: localization length computed by monomial-ideal
// membership of the product of the complement variables.
long mult_at_oracle(const MonIdeal& a, const MinPrime& q);

Cycle char_cycle(const MonModule& M);  // f <= 20

// Dual of R/a: again R/a, with the per-coordinate character twist of the
// generator t' = prod(y_j z_j / t_j): +1 where t_j = z_j (a y-factor), -1
// where t_j = y_j, 0 where t_j = y_j z_j.
struct DualData {
    MonIdeal ideal;
    std::vector<int> twist;
};

DualData dual_module(const MonIdeal& a);

bool additivity_check(const MonModule& M1, const MonModule& M, const MonModule& M2);

Cycle add_cycles(const Cycle& a, const Cycle& b);

}  // namespace lgc
