// Tame characters and tensor induction, finite-precision power-series
// arithmetic over F_p, and the explicit cyclic phi/Gamma modules attached to
// delta-orbits, together with the rank-1 twist and predicted V-multisets.
#pragma once

#include "lgc/serre.hpp"
#include "lgc/weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace lgc {

// omega_{level}^exponent times an unramified character recorded as formal
// exponents on named Frobenius values.
struct TameChar {
    long p = 0;
    int f = 1;      // degree of the base field over Q_p
    int level = 1;  // f (allowed) or 2f (rejected by tensor induction)
    Int exponent;   // reduced mod p^level - 1
    std::map<std::string, Int> unram;

    friend bool operator==(const TameChar& a, const TameChar& b) = default;
};

TameChar make_tame(long p, int f, int level, Int exponent,
                   std::map<std::string, Int> unram = {});
TameChar tame_mul(const TameChar& a, const TameChar& b);
TameChar tame_pow(const TameChar& a, const Int& e);
TameChar sigma_twist(const TameChar& a);  // exponent multiplied by p

// omega_f^a -> omega^{a mod p-1}; unramified part raised to (p^f-1)/(p-1).
// Rejects level-2f inputs.
TameChar tensor_induce(const TameChar& chi);

// Product chi_1^{n-1} chi_2^{n-2} ... chi_{n-1}, tensor-induced.
TameChar predict_V_PS(const std::vector<TameChar>& chi);

// The C(f, f-i)-element multiset of level-f characters, 0 < i < f.
std::vector<TameChar> predict_V_SS(const TameChar& chi1, const TameChar& chi2, int i);

// omega^{f * (1^2 + 2^2 + ... + (n-1)^2)}.
TameChar delta_G(int n, int f, long p);

// Sum_{j<n} j^2 = sum_i sum_{j<n_i} j^2
//              + sum_i n_i (n - n_1 - .. - n_i)(n - 1 - n_1 - .. - n_{i-1}).
bool composition_identity(const std::vector<int>& blocks);

// ---- power series over F_p -------------------------------------------------

using Series = std::vector<long>;  // coefficients of X^0..X^{N-1}

Series ps_mul(const Series& a, const Series& b, long p);
Series ps_add(const Series& a, const Series& b, long p);
Series ps_scale(long t, const Series& a, long p);
Series ps_inv(const Series& a, long p);           // unit constant term required
Series ps_int_pow(const Series& a, long e, long p);  // e may be negative (unit a)
Series ps_subst_xq(const Series& a, long q0);     // X -> X^{q0}, truncated

// (1+X)^gamma from the base-p digit list of gamma; digits beyond the window
// are irrelevant.
Series one_plus_x_gamma(const std::vector<long>& digits, long p, int N);
// ((1+X)^gamma - 1)/X, a unit with constant term gamma mod p.
Series gamma_unit(const std::vector<long>& digits, long p, int N);

// ---- cyclic modules --------------------------------------------------------

// Free module with phi(e_i) = mu_inv[i] X^{phi_exp[i]} e_{i+1 (cyclic)} and a
// diagonal action of each listed group element.
struct CyclicModule {
    long p = 0;
    int n = 0;
    int N = 0;  // series window
    std::vector<long> mu_inv;
    std::vector<long> phi_exp;
    struct GammaAction {
        std::vector<long> digits;
        std::vector<Series> diag;  // g_i(X), units
    };
    std::vector<GammaAction> gammas;
};

bool is_etale(const CyclicModule& M);
// Verifies gamma(phi(e_i)) = phi(gamma(e_i)) for every listed gamma, within
// the window; throws on failure.
void check_commutation(const CyclicModule& M);

// The module of an orbit: phi-exponents s_i, diagonal gamma-series solved
// from the commutation relation with g_1(0) = gammabar^m (solvable because
// sum s_i = 0 mod p-1).
CyclicModule build_MD(const std::vector<long>& s, int m, long p,
                      const std::vector<std::vector<long>>& gamma_digits, int N,
                      const std::vector<long>& mu_inv = {});

// Rank-1 module: phi(e) = X^{-(p-1) sum (r_j+1)} e,
// gamma(e) = (gammabar X / ((1+X)^gamma - 1))^{sum (r_j+1)} e.
CyclicModule build_N(const std::vector<long>& r, long p,
                     const std::vector<std::vector<long>>& gamma_digits, int N);

// Tensor with a rank-1 module and rescale the basis by X^b.
CyclicModule tensor_rank1(const CyclicModule& M, const CyclicModule& N1, long b);

// Full bookkeeping of the twist: starts from exponents s_i + (p-1)(f-m),
// tensors with build_N(r), changes basis by X^{m + sum r_j}, and checks that
// the resulting phi-exponents are exactly the s_i.
CyclicModule twist_N(const std::vector<long>& s, int m, int f, const std::vector<long>& r,
                     long p, const std::vector<std::vector<long>>& gamma_digits, int N);

}  // namespace lgc
