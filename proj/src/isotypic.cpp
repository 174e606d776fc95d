#include "lgc/isotypic.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace lgc {

namespace {

Int binomial(int n, int k) {
    Int r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
    return r;
}

Int weight_cap() {
    if (const char* s = std::getenv("LGC_MAX_WEIGHTS")) return Int(std::string(s));
    return Int(10000000);
}

// Multiset convolution (Minkowski sum with multiplicities).
std::map<Weight, Int> convolve(const std::map<Weight, Int>& a, const std::map<Weight, Int>& b) {
    std::map<Weight, Int> out;
    for (const auto& [u, mu] : a)
        for (const auto& [v, mv] : b) out[add_weights(u, v)] += mu * mv;
    return out;
}

}  // namespace

TensorWeightSystem build_system(int n, int f) {
    if (n < 1 || f < 1) throw std::invalid_argument("build_system requires n >= 1, f >= 1");
    Int total = 1;
    for (int i = 1; i <= n - 1; ++i) total *= binomial(n, i);
    Int full = 1;
    for (int e = 0; e < f; ++e) full *= total;
    if (full > weight_cap()) throw std::runtime_error("build_system: weight count exceeds cap");

    // One embedding: convolution of the exterior-power weight sets.
    std::map<Weight, Int> emb;
    emb[Weight(n, 0)] = 1;
    for (int i = 1; i <= n - 1; ++i) {
        std::map<Weight, Int> ext;
        std::vector<int> mask(n, 0);
        std::fill(mask.begin(), mask.begin() + i, 1);
        std::sort(mask.begin(), mask.end());
        do {
            Weight w(n);
            for (int k = 0; k < n; ++k) w[k] = mask[k];
            ext[w] += 1;
        } while (std::next_permutation(mask.begin(), mask.end()));
        emb = convolve(emb, ext);
    }

    TensorWeightSystem sys;
    sys.n = n;
    sys.f = f;
    sys.weights[Weight(n, 0)] = 1;
    for (int e = 0; e < f; ++e) sys.weights = convolve(sys.weights, emb);
    for (const auto& [w, m] : sys.weights) sys.dim += m;
    if (sys.dim != full) throw std::logic_error("build_system: dimension mismatch");
    return sys;
}

std::vector<Int> blocksums_of(const Weight& lam, const StdParabolic& P) {
    if ((int)lam.size() != P.n) throw std::invalid_argument("rank mismatch");
    std::vector<Int> out(P.d(), 0);
    for (int k = 0; k < P.n; ++k) out[P.block_of[k]] += lam[k];
    return out;
}

std::vector<IsotypicComponent> components(const TensorWeightSystem& sys, const StdParabolic& P) {
    if (P.n != sys.n) throw std::invalid_argument("rank mismatch");
    std::map<std::vector<Int>, IsotypicComponent> grouped;
    for (const auto& [w, m] : sys.weights) {
        auto bs = blocksums_of(w, P);
        auto& C = grouped[bs];
        if (C.weights.empty()) {
            C.n = sys.n;
            C.f = sys.f;
            C.P = P;
            C.blocksums = bs;
        }
        C.weights[w] += m;
        C.dim += m;
    }
    std::vector<IsotypicComponent> out;
    for (auto& [bs, C] : grouped) out.push_back(std::move(C));
    return out;
}

ComponentParabolic parabolic_of(const IsotypicComponent& C) {
    if (C.weights.empty()) throw std::invalid_argument("empty component");
    const StdParabolic& P = C.P;
    ComponentParabolic out;
    out.lambda_prime.resize(P.n);
    for (int k = 0; k < P.n; ++k)
        out.lambda_prime[k] = Rat(C.blocksums[P.block_of[k]]) / P.blocks[P.block_of[k]];

    RationalWeight ftheta = to_rational(scale(theta_G(C.n), C.f));
    std::optional<StdParabolic> PC;
    for (const Perm& w : P.all_block_shuffles()) {
        RationalWeight wl = apply_perm(w, out.lambda_prime);
        if (!is_dominant(wl)) continue;
        std::set<int> s = support(sub_weights(ftheta, wl));
        StdParabolic Pw = P.conjugate(w);
        s.insert(Pw.simple.begin(), Pw.simple.end());
        StdParabolic cand(C.n, s);
        if (PC && !(*PC == cand))
            throw std::logic_error("parabolic_of: P(C) depends on the witness");
        PC = cand;
        out.W.push_back(w);
    }
    if (!PC) throw std::logic_error("parabolic_of: no dominant block shuffle");
    out.PC = *PC;
    return out;
}

IsotypicComponent w_dot(const TensorWeightSystem& sys, const IsotypicComponent& C, const Perm& w) {
    ComponentParabolic pc = parabolic_of(C);
    pc.PC.conjugate(w);  // throws unless w(S(P(C))) is a set of simple roots

    Weight ftheta = scale(theta_G(C.n), C.f);
    const Weight& lam = C.weights.begin()->first;
    std::optional<std::vector<Int>> bs;
    for (const Perm& wC : pc.W) {
        Weight mu = add_weights(sub_weights(lam, apply_perm(wC.inverse(), ftheta)),
                                apply_perm(wC.then(w).inverse(), ftheta));
        auto b = blocksums_of(mu, C.P);
        if (bs && *bs != b) throw std::logic_error("w_dot: result depends on the witness");
        bs = b;
    }
    for (const auto& D : components(sys, C.P))
        if (D.blocksums == *bs) {
            if (!(parabolic_of(D).PC == pc.PC.conjugate(w)))
                throw std::logic_error("w_dot: P(w.C) != conjugate of P(C)");
            return D;
        }
    throw std::logic_error("w_dot: shifted character does not occur");
}

Decomposition decompose(const TensorWeightSystem& sys, const IsotypicComponent& C,
                        const Perm& wC) {
    ComponentParabolic pc = parabolic_of(C);
    if (std::find(pc.W.begin(), pc.W.end(), wC) == pc.W.end())
        throw std::invalid_argument("decompose: wC not in W(C)");
    const StdParabolic& PC = pc.PC;

    Weight shift = scale(theta_upper(PC), C.f);
    std::map<Weight, Int> M;
    for (const auto& [lam, m] : C.weights) M[sub_weights(apply_perm(wC, lam), shift)] += m;

    StdParabolic Pw = C.P.conjugate(wC);  // refines PC

    Decomposition out;
    out.PC = PC;
    Int prod_dims = 1;
    const Weight& sample = M.begin()->first;
    for (int b = 0; b < PC.d(); ++b) {
        int s = PC.block_start(b), len = PC.blocks[b];
        // Sub-parabolic inside this block given by the blocks of ^{wC}P.
        std::vector<int> sub;
        for (int k = s; k < s + len;) {
            int blk = Pw.block_of[k], run = 0;
            while (k < s + len && Pw.block_of[k] == blk) ++k, ++run;
            sub.push_back(run);
        }
        StdParabolic Q = StdParabolic::from_blocks(sub);
        Weight v(sample.begin() + s, sample.begin() + s + len);

        TensorWeightSystem bsys = build_system(len, C.f);
        auto target = blocksums_of(v, Q);
        std::optional<IsotypicComponent> factor;
        for (auto& D : components(bsys, Q))
            if (D.blocksums == target) factor = std::move(D);
        if (!factor) throw std::logic_error("decompose: block factor is not a component");
        prod_dims *= factor->dim;
        out.factors.push_back(factor->weights);
        Int e = C.n;
        for (int t = 0; t <= b; ++t) e -= PC.blocks[t];
        out.twists.push_back(e * C.f);
    }

    // Outer-product verification: pointwise products match and totals agree.
    Int total = 0;
    for (const auto& [mu, m] : M) {
        Int prod = 1;
        for (int b = 0; b < PC.d(); ++b) {
            int s = PC.block_start(b), len = PC.blocks[b];
            Weight v(mu.begin() + s, mu.begin() + s + len);
            auto it = out.factors[b].find(v);
            prod *= (it == out.factors[b].end()) ? Int(0) : it->second;
        }
        if (prod != m) throw std::logic_error("decompose: outer-product mismatch");
        total += m;
    }
    if (total != prod_dims) throw std::logic_error("decompose: dimension mismatch");
    return out;
}

ConstituentGraph good_lattice(const TensorWeightSystem& sys, const StdParabolic& P,
                              const std::set<Root>& X) {
    ConstituentGraph g;
    g.n = sys.n;
    g.f = sys.f;
    g.P = P;
    auto comps = components(sys, P);
    std::map<std::vector<Int>, int> index;
    Weight ftheta = scale(theta_G(sys.n), sys.f);
    auto socle_bs = blocksums_of(ftheta, P);
    for (const auto& C : comps) {
        ComponentParabolic pc = parabolic_of(C);
        GraphVertex v;
        v.blocksums = C.blocksums;
        v.dim = C.dim;
        v.PC = pc.PC;
        v.levi_blocks = pc.PC.blocks;
        Int e = sys.n;
        for (int b : pc.PC.blocks) {
            e -= b;
            v.twists.push_back(e);
        }
        v.tag = pc.PC.simple.size() == (std::size_t)(sys.n - 1) ? "SS"
                : pc.PC.simple.empty()                          ? "PS"
                                                                : "PI";
        v.socle = (C.blocksums == socle_bs);
        index[C.blocksums] = (int)g.vertices.size();
        g.vertices.push_back(std::move(v));
    }

    for (const Root& a : X) {
        if (!a.positive()) throw std::invalid_argument("good_lattice: X must be positive roots");
        if (P.in_levi(a)) continue;
        std::vector<Int> delta(P.d(), 0);
        delta[P.block_of[a.i - 1]] += 1;
        delta[P.block_of[a.j - 1]] -= 1;
        for (const auto& [bs, src] : index) {
            std::vector<Int> tgt(bs);
            for (int b = 0; b < P.d(); ++b) tgt[b] += delta[b];
            auto it = index.find(tgt);
            if (it != index.end()) g.raw_edges.emplace_back(src, it->second);
        }
    }
    std::sort(g.raw_edges.begin(), g.raw_edges.end());
    g.raw_edges.erase(std::unique(g.raw_edges.begin(), g.raw_edges.end()), g.raw_edges.end());

    // Reachability; the shift strictly decreases sum(i * blocksums_i), so the
    // graph is acyclic.
    int V = (int)g.vertices.size();
    std::vector<std::vector<bool>> reach(V, std::vector<bool>(V, false));
    for (auto [u, v] : g.raw_edges) reach[u][v] = true;
    for (int k = 0; k < V; ++k)
        for (int u = 0; u < V; ++u)
            if (reach[u][k])
                for (int v = 0; v < V; ++v)
                    if (reach[k][v]) reach[u][v] = true;
    for (int u = 0; u < V; ++u)
        if (reach[u][u]) throw std::logic_error("good_lattice: cycle detected");

    for (auto [u, v] : g.raw_edges) {
        bool covering = true;
        for (int w = 0; w < V && covering; ++w)
            if (w != v && reach[u][w] && reach[w][v]) covering = false;
        if (covering) g.edges.emplace_back(u, v);
    }
    return g;
}

std::vector<std::vector<int>> up_closed_sets(const ConstituentGraph& g, std::size_t cap) {
    int V = (int)g.vertices.size();
    std::vector<std::vector<int>> succ(V);
    for (auto [u, v] : g.edges) succ[u].push_back(v);
    std::vector<std::vector<int>> out;
    std::vector<bool> in(V, false);
    // Recurse in a topological-friendly order: decide each vertex in turn;
    // a vertex may be included only if all its successors already are.
    // Process vertices sorted by descending reachability depth via plain
    // recursion with a validity check at the end of each branch.
    std::vector<int> chosen;
    auto valid = [&]() {
        for (int u = 0; u < V; ++u)
            if (in[u])
                for (int v : succ[u])
                    if (!in[v]) return false;
        return true;
    };
    // V is small in every use; enumerate subsets with pruning on full masks.
    std::function<void(int)> rec = [&](int k) {
        if (out.size() > cap) throw std::runtime_error("up_closed_sets: cap exceeded");
        if (k == V) {
            if (valid()) out.push_back(chosen);
            return;
        }
        rec(k + 1);
        in[k] = true;
        chosen.push_back(k);
        rec(k + 1);
        chosen.pop_back();
        in[k] = false;
    };
    rec(0);
    return out;
}

std::vector<std::vector<Int>> filtration_chain(const TensorWeightSystem& sys,
                                               const StdParabolic& P,
                                               const std::vector<Int>& from, const Root& alpha) {
    std::set<std::vector<Int>> occurring;
    for (const auto& C : components(sys, P)) occurring.insert(C.blocksums);
    if (!occurring.count(from)) throw std::invalid_argument("filtration_chain: unknown component");
    std::vector<Int> delta(P.d(), 0);
    delta[P.block_of[alpha.i - 1]] += 1;
    delta[P.block_of[alpha.j - 1]] -= 1;
    std::vector<std::vector<Int>> chain{from};
    for (;;) {
        std::vector<Int> next(chain.back());
        for (int b = 0; b < P.d(); ++b) next[b] += delta[b];
        if (!occurring.count(next)) break;
        chain.push_back(next);
    }
    return chain;
}

}  // namespace lgc
