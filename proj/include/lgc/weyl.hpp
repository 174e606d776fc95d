// Root datum of GL_n: weights in the e_i basis, roots e_i - e_j, standard
// parabolics, block shuffles, and the distinguished characters theta_G,
// theta_P, theta^P.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Integer weight: coefficient vector on e_1..e_n.
using Weight = std::vector<Int>;
// Weight in X(T) tensor Q.
using RationalWeight = std::vector<Rat>;

// e_i - e_j, 1-based indices, i != j. Positive iff i < j.
struct Root {
    int i, j;
    bool positive() const { return i < j; }
    int height() const { return j - i; }  // for positive roots
    friend auto operator<=>(const Root&, const Root&) = default;
};

// Permutation of {0..n-1}; img[k] is the image of position k.
// Acts on weights by (w.lam)[w(k)] = lam[k], on roots by e_i -> e_{w(i)}.
struct Perm {
    std::vector<int> img;
    int n() const { return (int)img.size(); }
    int operator()(int k) const { return img[k]; }
    static Perm identity(int n);
    Perm inverse() const;
    Perm then(const Perm& second) const;  // apply *this first, then second
    bool is_identity() const;
    friend auto operator<=>(const Perm&, const Perm&) = default;
};

Weight apply_perm(const Perm& w, const Weight& lam);
RationalWeight apply_perm(const Perm& w, const RationalWeight& lam);
Root apply_perm(const Perm& w, const Root& a);

// Standard parabolic of GL_n given by a subset of simple roots
// alpha_k = e_k - e_{k+1}, k in {1..n-1}. Block sizes are derived.
struct StdParabolic {
    int n = 0;
    std::set<int> simple;          // subset of {1..n-1}
    std::vector<int> blocks;       // cached block sizes n_1..n_d
    std::vector<int> block_of;     // cached: block index (0-based) per position 0..n-1

    StdParabolic() = default;
    StdParabolic(int n_, std::set<int> simple_);
    static StdParabolic from_blocks(const std::vector<int>& sizes);
    static StdParabolic borel(int n) { return StdParabolic(n, {}); }
    static StdParabolic full(int n);

    int d() const { return (int)blocks.size(); }
    int block_start(int b) const;                 // 0-based start position
    bool contains(const StdParabolic& other) const;  // other subset of *this
    std::vector<Root> positive_levi_roots() const;   // R(P)^+
    bool in_levi(const Root& a) const;            // a in R(P)^+ (a positive)
    // The unique w in S_n shuffling the blocks into the given order while
    // preserving internal order; order[t] = index of the block placed t-th.
    Perm block_shuffle(const std::vector<int>& order) const;
    // All block shuffles (d! permutations w with w(S(P)) subset of S).
    std::vector<Perm> all_block_shuffles() const;
    // Block sizes after shuffling.
    StdParabolic shuffled(const std::vector<int>& order) const;
    // ^wP for a permutation with w(S(P)) subset of S.
    StdParabolic conjugate(const Perm& w) const;
    // Generators of W(P): adjacent transpositions inside blocks.
    std::vector<Perm> levi_generators() const;

    friend auto operator<=>(const StdParabolic& a, const StdParabolic& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.simple <=> b.simple;
    }
    friend bool operator==(const StdParabolic& a, const StdParabolic& b) {
        return a.n == b.n && a.simple == b.simple;
    }
};

// ---- basic operations ------------------------------------------------------

Rat pairing(const RationalWeight& lam, const Root& a);
Int pairing(const Weight& lam, const Root& a);
bool is_dominant(const RationalWeight& lam);
bool is_dominant(const Weight& lam);

// lam = sum n_k alpha_k + residue; n_k = partial sums. Returns the n-1
// coefficients (index k-1 <-> alpha_k) and the residue (total sum).
std::pair<std::vector<Rat>, Rat> simple_coords(const RationalWeight& lam);
// Simple roots alpha_k with nonzero coefficient; requires residue 0.
std::set<int> support(const RationalWeight& lam);

RationalWeight to_rational(const Weight& lam);
RationalWeight weyl_average(const Weight& lam, const StdParabolic& P);
RationalWeight weyl_average(const RationalWeight& lam, const StdParabolic& P);

Weight theta_G(int n);
Weight theta_P(const StdParabolic& P);
Weight theta_upper(const StdParabolic& P);  // theta^P = theta_G - theta_P

RationalWeight sub_weights(const RationalWeight& a, const RationalWeight& b);
RationalWeight add_weights(const RationalWeight& a, const RationalWeight& b);
Weight sub_weights(const Weight& a, const Weight& b);
Weight add_weights(const Weight& a, const Weight& b);
Weight scale(const Weight& a, const Int& c);

std::string to_string(const Weight& lam);
std::string to_string(const RationalWeight& lam);
std::string to_string(const Root& a);
std::string to_string(const Perm& w);

}  // namespace lgc
