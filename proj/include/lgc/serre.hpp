// Serre-weight combinatorics for GL_2 over an unramified extension of degree
// f: the weight sets D and P per residual kind, attached monomial ideals,
// the duality involution, lengths, and delta-orbits with their exponents.
#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgc {

enum class Kind { Irreducible, Split, Nonsplit };

struct RhoKind {
    Kind kind = Kind::Split;
    int f = 1;
    long p = 0;          // 0 = symbolic only; required for numeric evaluation
    std::set<int> Jrho;  // used by Nonsplit only
};

// Affine form eps*x + c, with the convention that the numeric value at x = r
// is eps*r + c + (eps < 0 ? p : 0).
struct AffineForm {
    int eps = 1;
    long c = 0;
    friend auto operator<=>(const AffineForm&, const AffineForm&) = default;
};

struct SerreTuple {
    std::vector<AffineForm> forms;
    friend auto operator<=>(const SerreTuple&, const SerreTuple&) = default;
};

enum class Gen { Y, Z, YZ };

struct MonIdeal {
    std::vector<Gen> gens;  // generator t_j per coordinate
    friend auto operator<=>(const MonIdeal&, const MonIdeal&) = default;
};

std::string to_string(const AffineForm& a);
std::string to_string(const SerreTuple& t);
std::string to_string(const MonIdeal& a);

long eval_form(const AffineForm& a, long r, long p);

// Default generic evaluation points r_j = 2f + j; checks the genericity
// window for the kind and throws if p is too small.
std::vector<long> default_points(const RhoKind& k);

struct DTuple {
    std::set<int> J;  // subset of {0..f-1} indexing the tuple
    SerreTuple t;
};

// The 2^f-element set D (for Nonsplit: the reduced set it lifts from).
std::vector<DTuple> build_D(const RhoKind& k);

// All lifts of build_D: Z-coordinates lift two ways, YZ-coordinates are
// fixed; duplicates removed; sorted.
std::vector<SerreTuple> build_P(const RhoKind& k);

MonIdeal ideal_of(const SerreTuple& t, const RhoKind& k);

std::set<int> yz_positions(const MonIdeal& a);  // the set A(lambda)

SerreTuple dual_tuple(const SerreTuple& t, const RhoKind& k);

// Count of coordinates with eps = -1; asserted equal to the menu-based count
// for semisimple kinds.
int length_of(const SerreTuple& t, const RhoKind& k);

struct DeltaOrbit {
    std::vector<std::set<int>> Js;            // J-sets along the cycle
    std::vector<SerreTuple> sigma;            // sigma_1..sigma_n
    int m = 0;                                // |J^max|, constant on the orbit
    std::vector<std::set<int>> Jmax;          // J^max(sigma_i)
    std::vector<std::vector<long>> s_coords;  // s_j^{(i+1)} for j in Jmax[i], ascending j
    std::vector<long> s;                      // s_i per step (p-1 when n = 1)
};

std::set<int> delta_J(const std::set<int>& J, const RhoKind& k);

// Partition of D into delta-cycles; semisimple kinds only, numeric p needed.
std::vector<DeltaOrbit> delta_orbits(const RhoKind& k);

// Exponent of Y_j in the cycling operator at step i: s_j^{(i+1)} on J^max,
// p-1 off it.
std::vector<long> xdelta_exponents(const DeltaOrbit& orbit, int i, const RhoKind& k);

}  // namespace lgc
