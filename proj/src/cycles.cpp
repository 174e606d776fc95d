#include "lgc/cycles.hpp"

#include <stdexcept>

namespace lgc {

namespace {

long cyclic_mult(const MonIdeal& a, const MinPrime& q) {
    for (std::size_t j = 0; j < a.gens.size(); ++j) {
        if (a.gens[j] == Gen::Y && !q.J.count((int)j)) return 0;
        if (a.gens[j] == Gen::Z && q.J.count((int)j)) return 0;
    }
    return 1;  // localization of R/a at q is the residue field
}

}  // namespace

long mult_at(const MonModule& M, const MinPrime& q) {
    long total = 0;
    for (const auto& [a, mult] : M.pieces) {
        if ((int)a.gens.size() != M.f) throw std::invalid_argument("mult_at: length mismatch");
        if (mult < 0) throw std::invalid_argument("mult_at: negative multiplicity");
        total += mult * cyclic_mult(a, q);
    }
    return total;
}

long mult_at_oracle(const MonIdeal& a, const MinPrime& q) {
    // The variables outside q become units; R/a localizes to zero iff some
    // generator divides the product u of those unit variables (monomial
    // membership after saturation; u is square-free, so u^k adds nothing).
    for (std::size_t j = 0; j < a.gens.size(); ++j) {
        // u contains z_j for j in J and y_j for j not in J.
        bool has_y = !q.J.count((int)j), has_z = q.J.count((int)j);
        bool divides = (a.gens[j] == Gen::Y && has_y) || (a.gens[j] == Gen::Z && has_z);
        if (divides) return 0;
    }
    return 1;
}

Cycle char_cycle(const MonModule& M) {
    if (M.f > 20) throw std::invalid_argument("char_cycle: f too large");
    Cycle out;
    for (unsigned long mask = 0; mask < (1ul << M.f); ++mask) {
        MinPrime q;
        for (int j = 0; j < M.f; ++j)
            if (mask & (1ul << j)) q.J.insert(j);
        long m = mult_at(M, q);
        if (m) out[q] = m;
    }
    return out;
}

DualData dual_module(const MonIdeal& a) {
    DualData out;
    out.ideal = a;
    for (Gen g : a.gens) out.twist.push_back(g == Gen::Z ? 1 : g == Gen::Y ? -1 : 0);
    return out;
}

Cycle add_cycles(const Cycle& a, const Cycle& b) {
    Cycle out = a;
    for (const auto& [q, m] : b) out[q] += m;
    return out;
}

bool additivity_check(const MonModule& M1, const MonModule& M, const MonModule& M2) {
    if (M1.f != M.f || M2.f != M.f) throw std::invalid_argument("additivity_check: f mismatch");
    MonModule sum;
    sum.f = M.f;
    sum.pieces = M1.pieces;
    for (const auto& [a, m] : M2.pieces) sum.pieces[a] += m;
    if (sum.pieces != M.pieces) throw std::invalid_argument("additivity_check: not a direct sum");
    return char_cycle(M) == add_cycles(char_cycle(M1), char_cycle(M2));
}

}  // namespace lgc
