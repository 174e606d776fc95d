#include "lgc/conjugacy.hpp"

#include <algorithm>
#include <sstream>

namespace lgc {

namespace {

// Sum of two positive roots when it is again a root.
std::optional<Root> root_sum(const Root& a, const Root& b) {
    if (a.j == b.i) return Root{a.i, b.j};
    if (b.j == a.i) return Root{b.i, a.j};
    return std::nullopt;
}

// W(P)-orbit of a root: both endpoints move freely within their blocks.
std::set<Root> levi_orbit(const StdParabolic& P, const Root& a) {
    std::set<Root> out;
    int bi = P.block_of[a.i - 1], bj = P.block_of[a.j - 1];
    for (int i = 1; i <= P.n; ++i)
        for (int j = 1; j <= P.n; ++j)
            if (i != j && P.block_of[i - 1] == bi && P.block_of[j - 1] == bj)
                out.insert(Root{i, j});
    return out;
}

}  // namespace

std::vector<Root> positive_roots(int n) {
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(Root{i, j});
    return out;
}

RelClosedSet validate(const StdParabolic& P, const std::set<Root>& X) {
    for (const Root& a : X)
        if (!a.positive() || a.j > P.n)
            throw std::invalid_argument("validate: X must consist of positive roots of rank n");
    for (const Root& a : P.positive_levi_roots())
        if (!X.count(a))
            throw std::invalid_argument("validate: R(P)+ not contained in X, missing " +
                                        to_string(a));
    std::set<Root> comp;
    for (const Root& a : X)
        if (!P.in_levi(a)) comp.insert(a);
    for (const Root& a : comp)
        for (const Root& b : comp)
            if (auto c = root_sum(a, b); c && !comp.count(*c))
                throw std::invalid_argument("validate: complement not closed under addition: " +
                                            to_string(a) + " + " + to_string(b));
    for (const Perm& w : P.levi_generators())
        for (const Root& a : comp)
            if (!comp.count(apply_perm(w, a)))
                throw std::invalid_argument("validate: complement not W(P)-stable at " +
                                            to_string(a));
    // Full closedness of X (holds automatically for GL_n block parabolics).
    for (const Root& a : X)
        for (const Root& b : X)
            if (auto c = root_sum(a, b); c && !X.count(*c))
                throw std::logic_error("validate: X itself not closed at " + to_string(a) + " + " +
                                       to_string(b));
    return RelClosedSet{P, X};
}

RelClosedSet rel_closure(const RelClosedSet& S0, const Root& alpha) {
    const StdParabolic& P = S0.P;
    std::set<Root> comp;
    for (const Root& a : S0.X)
        if (!P.in_levi(a)) comp.insert(a);
    comp.insert(alpha);
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<Root> add;
        for (const Root& a : comp)
            for (const Root& o : levi_orbit(P, a))
                if (!comp.count(o)) add.insert(o);
        for (const Root& a : comp)
            for (const Root& b : comp)
                if (auto c = root_sum(a, b); c && !comp.count(*c) && !P.in_levi(*c))
                    add.insert(*c);
        if (!add.empty()) {
            comp.insert(add.begin(), add.end());
            grew = true;
        }
    }
    std::set<Root> X;
    for (const Root& a : P.positive_levi_roots()) X.insert(a);
    X.insert(comp.begin(), comp.end());
    return validate(P, X);
}

std::vector<Root> orderw_decompose(const RelClosedSet& S0) {
    const StdParabolic& P = S0.P;
    auto all = positive_roots(P.n);
    std::set<Root> cur = S0.X;
    std::vector<Root> alphas;
    std::vector<std::set<Root>> parts;
    int prev_height = P.n;  // heights must be weakly decreasing
    for (;;) {
        std::optional<Root> best;
        for (const Root& a : all)
            if (!cur.count(a))
                if (!best || a.height() > best->height() ||
                    (a.height() == best->height() && a < *best))
                    best = a;
        if (!best) break;
        if (best->height() > prev_height)
            throw std::logic_error("orderw_decompose: heights not weakly decreasing");
        prev_height = best->height();
        RelClosedSet next = rel_closure(RelClosedSet{P, cur}, *best);
        std::set<Root> added;
        for (const Root& a : next.X)
            if (!cur.count(a)) added.insert(a);
        if (added != levi_orbit(P, *best))
            throw std::logic_error("orderw_decompose: step is not a single W(P)-orbit");
        parts.push_back(added);
        alphas.push_back(*best);
        cur = next.X;
    }
    // Partition property: R+ = X disjoint-union of the orbit parts.
    std::size_t total = S0.X.size();
    for (const auto& part : parts) total += part.size();
    if (total != all.size()) throw std::logic_error("orderw_decompose: not a partition");
    return alphas;
}

std::vector<Perm> w_set(const RelClosedSet& S0) {
    std::vector<Perm> out;
    for (const Perm& w : S0.P.all_block_shuffles()) {
        bool ok = true;
        for (const Root& a : S0.X)
            if (!S0.P.in_levi(a) && !apply_perm(w, a).positive()) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

std::optional<Perm> good_equivalent(const RelClosedSet& S1, const RelClosedSet& S2) {
    if (S1.P.n != S2.P.n) throw std::invalid_argument("good_equivalent: rank mismatch");
    for (const Perm& w : w_set(S1)) {
        if (!(S1.P.conjugate(w) == S2.P)) continue;
        std::set<Root> img;
        for (const Root& a : S1.X) img.insert(apply_perm(w, a));
        if (img == S2.X) return w;
    }
    return std::nullopt;
}

std::vector<std::set<Root>> all_rel_closed(const StdParabolic& P) {
    std::vector<Root> comp_candidates;
    for (const Root& a : positive_roots(P.n))
        if (!P.in_levi(a)) comp_candidates.push_back(a);
    std::set<Root> base;
    for (const Root& a : P.positive_levi_roots()) base.insert(a);
    std::vector<std::set<Root>> out;
    for (std::size_t mask = 0; mask < (1u << comp_candidates.size()); ++mask) {
        std::set<Root> X = base;
        for (std::size_t k = 0; k < comp_candidates.size(); ++k)
            if (mask & (1u << k)) X.insert(comp_candidates[k]);
        try {
            validate(P, X);
            out.push_back(std::move(X));
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

}  // namespace lgc
