// Exact arithmetic in F_q (q = p^f), the group algebra of its additive group,
// and the power-series identities relating the Y-generators, theta-sums,
// trace-zero sums, and the one-variable X/Y expansions.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgc {

// F_{p^f} with a deterministic irreducible modulus (lowest coefficient vector
// in base-p order). Elements are integers in [0, q) whose base-p digits are
// the polynomial coefficients.
class Fq {
  public:
    long p;
    int f;
    long q;
    std::vector<long> g;  // x^f = -(g[0] + g[1] x + ... + g[f-1] x^{f-1})

    Fq(long p_, int f_);

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long pow(long a, long long e) const;  // e >= 0; a != 0 if e is reduced mod q-1 by caller
    long inv(long a) const;
    long frob(long a) const { return pow(a, p); }
    long frob_i(long a, int i) const;
    long trace_fp(long a) const;  // in [0, p)
    long from_fp(long c) const;   // canonical embedding of F_p

  private:
    std::vector<long> to_digits(long a) const;
    long from_digits(const std::vector<long>& d) const;
};

// Z/p^M[u]/(lift of the Fq modulus): just enough Witt-style arithmetic for
// Teichmueller representatives and their traces.
class Zq {
  public:
    long p;
    int f;
    int M;
    long pM;
    std::vector<long> g;  // lifted modulus digits in [0, p)

    Zq(const Fq& F, int M_);

    using Elt = std::vector<long>;  // length f, coefficients in [0, pM)
    Elt from_fq(const Fq& F, long a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt pow(const Elt& a, long long e) const;
    Elt teichmuller(const Fq& F, long a) const;
    long trace_teichmuller(const Fq& F, long a) const;  // integer mod p^M
};

// Element of F[(F_q, +)], coefficients in F_q indexed by group elements.
struct GroupAlg {
    std::vector<long> c;  // length q
};

GroupAlg ga_delta(const Fq& F, long a);
GroupAlg ga_add(const Fq& F, const GroupAlg& A, const GroupAlg& B);
GroupAlg ga_scale(const Fq& F, long t, const GroupAlg& A);
GroupAlg ga_mul(const Fq& F, const GroupAlg& A, const GroupAlg& B);  // convolution
GroupAlg ga_pow(const Fq& F, const GroupAlg& A, long e);
// Conjugation action of diag(lambda~, mu~): [a] -> [t a] with t = lambda/mu.
GroupAlg ga_act(const Fq& F, long t, const GroupAlg& A);

GroupAlg y_element(const Fq& F, int i);
GroupAlg theta(const Fq& F, long i);                       // sum of lambda^i [lambda], 0^0 = 1
GroupAlg theta_closed(const Fq& F, long i);                // (-1)^{f-1} (prod i_j!) Y^{p-1-i_j}
GroupAlg trace_zero_sum(const Fq& F);                      // f > 1
GroupAlg trace_zero_sum_closed(const Fq& F);               // the two-term closed form

// Truncated model of the group algebra of N_0/N_1^p: polynomials in T (degree
// < f(p-1)) and Z_1..Z_{f-1} (degrees < p), coefficients in F_q, graded by
// total degree with everything of degree >= f(p-1) discarded on comparison.
struct NPoly {
    std::vector<long> c;  // dense, index = t * p^{f-1} + sum v_i p^{i-1}
};

// Verifies that the sum over N_1/pN_1 equals
// (-1)^{f-1} prod_{j != j0} (Y_j - Y_{j0})^{p-1} in the model, and returns the
// common truncated value. Requires p not dividing f.
NPoly nsum(const Fq& F, int j0);

struct XYSeries {
    std::vector<long> y_of_x;  // Y as a series in X, length N
    std::vector<long> x_of_y;  // the compositional inverse
    std::vector<long> h_y;     // image of Y_0 under the one-variable trace map
};

// Expands to precision N (default 3p) and verifies: Y = -X + O(X^2), the two
// expansions compose to the identity, and h(Y_i) = Y + O(X^p) for every i.
XYSeries xy_series(const Fq& F, int N = 0);

}  // namespace lgc
