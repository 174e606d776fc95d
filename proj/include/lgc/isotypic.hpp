// Isotypic components of the f-fold tensor system over GL_n: the parabolic
// P(C) and witness set W(C) of a component, the shift w.C, the outer-product
// decomposition, and the constituent graph attached to a relatively closed
// set of positive roots.
#pragma once

#include "lgc/weyl.hpp"

#include <map>
#include <optional>
#include <utility>

namespace lgc {

// Weight multiset of (tensor over f embeddings of) Lambda^1(Std) x ... x
// Lambda^{n-1}(Std).
struct TensorWeightSystem {
    int n = 0, f = 0;
    std::map<Weight, Int> weights;  // weight -> multiplicity
    Int dim = 0;
};

// Throws if (prod C(n,i))^f exceeds the cap (env LGC_MAX_WEIGHTS, default 1e7).
TensorWeightSystem build_system(int n, int f);

std::vector<Int> blocksums_of(const Weight& lam, const StdParabolic& P);

struct IsotypicComponent {
    int n = 0, f = 0;
    StdParabolic P;
    std::vector<Int> blocksums;      // the central character on block scalars
    std::map<Weight, Int> weights;   // sub-multiset with that restriction
    Int dim = 0;
};

// Grouped by blocksums, sorted lexicographically; disjoint exhaustive cover.
std::vector<IsotypicComponent> components(const TensorWeightSystem& sys, const StdParabolic& P);

struct ComponentParabolic {
    RationalWeight lambda_prime;  // block-average of any lift of the blocksums
    std::vector<Perm> W;          // all block shuffles w with w(lambda') dominant
    StdParabolic PC;              // support(f.theta_G - w(lambda')) union w(S(P))
};

ComponentParabolic parabolic_of(const IsotypicComponent& C);

// Requires w(S(P(C))) contained in S; returns the component whose blocksums
// are those of lam - f.wC^{-1}(theta_G) + f.(w o wC)^{-1}(theta_G), checked
// independent of the choice of wC in W(C).
IsotypicComponent w_dot(const TensorWeightSystem& sys, const IsotypicComponent& C, const Perm& w);

struct Decomposition {
    StdParabolic PC;
    // Per P(C)-block: the weight multiset of the block-level isotypic factor.
    std::vector<std::map<Weight, Int>> factors;
    // Per P(C)-block: f * (n - n_1 - ... - n_i), the determinant twist.
    std::vector<Int> twists;
};

// Verifies that the multiset {wC(lam) - f.theta^{P(C)}} is the outer product
// of block-level isotypic components; throws on factorization failure.
Decomposition decompose(const TensorWeightSystem& sys, const IsotypicComponent& C, const Perm& wC);

struct GraphVertex {
    std::vector<Int> blocksums;
    Int dim = 0;
    StdParabolic PC;
    std::vector<int> levi_blocks;  // blocks of P(C)
    std::vector<Int> twists;       // e_i = n - n_1 - ... - n_i per block
    std::string tag;               // "SS" (P(C)=G), "PS" (P(C)=B), "PI"
    bool socle = false;            // component of f.theta_G
};

struct ConstituentGraph {
    int n = 0, f = 0;
    StdParabolic P;
    std::vector<GraphVertex> vertices;           // sorted by blocksums
    std::vector<std::pair<int, int>> edges;      // covering (Hasse) edges
    std::vector<std::pair<int, int>> raw_edges;  // all declared shift edges
};

// X must contain R(P)+ and be closed relative to P (validated by the caller
// via the conjugacy module); edges shift blocksums by the restriction of a
// root of X outside R(P)+.
ConstituentGraph good_lattice(const TensorWeightSystem& sys, const StdParabolic& P,
                              const std::set<Root>& X);

// All up-closed vertex sets under reachability (the good-subobject lattice),
// each sorted; throws if the count exceeds cap.
std::vector<std::vector<int>> up_closed_sets(const ConstituentGraph& g, std::size_t cap = 1u << 20);

// The one-root filtration chain: components reached from `from` by repeatedly
// adding the restriction of alpha, while they occur.
std::vector<std::vector<Int>> filtration_chain(const TensorWeightSystem& sys,
                                               const StdParabolic& P,
                                               const std::vector<Int>& from, const Root& alpha);

}  // namespace lgc
