#include "lgc/phigamma.hpp"

#include <algorithm>
#include <numeric>

namespace lgc {

namespace {

Int mod_reduce(Int a, const Int& m) {
    a %= m;
    if (a < 0) a += m;
    return a;
}

Int level_modulus(long p, int level) {
    Int m = 1;
    for (int i = 0; i < level; ++i) m *= p;
    return m - 1;
}

}  // namespace

TameChar make_tame(long p, int f, int level, Int exponent, std::map<std::string, Int> unram) {
    if (level != f && level != 2 * f) throw std::invalid_argument("make_tame: bad level");
    TameChar c;
    c.p = p;
    c.f = f;
    c.level = level;
    c.exponent = mod_reduce(std::move(exponent), level_modulus(p, level));
    for (auto& [k, v] : unram)
        if (v != 0) c.unram[k] = v;
    return c;
}

TameChar tame_mul(const TameChar& a, const TameChar& b) {
    if (a.p != b.p || a.f != b.f || a.level != b.level)
        throw std::invalid_argument("tame_mul: mismatched characters");
    std::map<std::string, Int> u = a.unram;
    for (const auto& [k, v] : b.unram) u[k] += v;
    return make_tame(a.p, a.f, a.level, a.exponent + b.exponent, std::move(u));
}

TameChar tame_pow(const TameChar& a, const Int& e) {
    std::map<std::string, Int> u;
    for (const auto& [k, v] : a.unram) u[k] = v * e;
    return make_tame(a.p, a.f, a.level, a.exponent * e, std::move(u));
}

TameChar sigma_twist(const TameChar& a) {
    return make_tame(a.p, a.f, a.level, a.exponent * a.p, a.unram);
}

TameChar tensor_induce(const TameChar& chi) {
    if (chi.level != chi.f)
        throw std::invalid_argument("tensor_induce: level-2f characters must be paired first");
    Int norm = (level_modulus(chi.p, chi.f)) / (chi.p - 1);  // 1 + p + ... + p^{f-1}
    std::map<std::string, Int> u;
    for (const auto& [k, v] : chi.unram) u[k] = v * norm;
    return make_tame(chi.p, 1, 1, chi.exponent, std::move(u));
}

TameChar predict_V_PS(const std::vector<TameChar>& chi) {
    if (chi.empty()) throw std::invalid_argument("predict_V_PS: empty input");
    int n = (int)chi.size();
    TameChar prod = tame_pow(chi[0], Int(n - 1));
    for (int k = 2; k <= n; ++k) prod = tame_mul(prod, tame_pow(chi[k - 1], Int(n - k)));
    return tensor_induce(prod);
}

std::vector<TameChar> predict_V_SS(const TameChar& chi1, const TameChar& chi2, int i) {
    if (chi1.p != chi2.p || chi1.f != chi2.f || chi1.level != chi1.f || chi2.level != chi2.f)
        throw std::invalid_argument("predict_V_SS: mismatched characters");
    int f = chi1.f;
    if (i <= 0 || i >= f) throw std::invalid_argument("predict_V_SS: need 0 < i < f");
    std::vector<TameChar> out;
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
        if (__builtin_popcount(mask) != f - i) continue;
        Int e = 0;
        Int ppow = 1;
        for (int s = 0; s < f; ++s) {
            e += ppow * ((mask >> s) & 1 ? chi1.exponent : chi2.exponent);
            ppow *= chi1.p;
        }
        std::map<std::string, Int> u;
        for (const auto& [k, v] : chi1.unram) u[k] += v * (f - i);
        for (const auto& [k, v] : chi2.unram) u[k] += v * i;
        out.push_back(make_tame(chi1.p, f, f, e, std::move(u)));
    }
    return out;
}

TameChar delta_G(int n, int f, long p) {
    Int e = 0;
    for (int j = 1; j < n; ++j) e += Int(j) * j;
    return make_tame(p, 1, 1, e * f);
}

bool composition_identity(const std::vector<int>& blocks) {
    long long n = std::accumulate(blocks.begin(), blocks.end(), 0LL);
    auto sq_sum = [](long long m) {
        long long s = 0;
        for (long long j = 1; j < m; ++j) s += j * j;
        return s;
    };
    long long lhs = sq_sum(n);
    long long rhs = 0, partial = 0;
    for (int ni : blocks) {
        long long before = partial;
        partial += ni;
        rhs += sq_sum(ni) + (long long)ni * (n - partial) * (n - 1 - before);
    }
    return lhs == rhs;
}

// ---- power series over F_p -------------------------------------------------

Series ps_mul(const Series& a, const Series& b, long p) {
    int N = (int)std::min(a.size(), b.size());
    Series r(N, 0);
    for (int i = 0; i < N; ++i)
        if (a[i])
            for (int j = 0; i + j < N; ++j)
                if (b[j]) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

Series ps_add(const Series& a, const Series& b, long p) {
    int N = (int)std::min(a.size(), b.size());
    Series r(N);
    for (int i = 0; i < N; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

Series ps_scale(long t, const Series& a, long p) {
    Series r(a.size());
    t = ((t % p) + p) % p;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t % p;
    return r;
}

Series ps_inv(const Series& a, long p) {
    if (a.empty() || a[0] == 0) throw std::invalid_argument("ps_inv: not a unit");
    int N = (int)a.size();
    long c0inv = 1;
    for (long u = 1; u < p; ++u)
        if (a[0] * u % p == 1) c0inv = u;
    Series r(N, 0);
    r[0] = c0inv;
    for (int k = 1; k < N; ++k) {
        long s = 0;
        for (int j = 1; j <= k; ++j) s = (s + a[j] * r[k - j]) % p;
        r[k] = (p - s) * c0inv % p;
    }
    return r;
}

Series ps_int_pow(const Series& a, long e, long p) {
    Series base = e < 0 ? ps_inv(a, p) : a;
    long k = e < 0 ? -e : e;
    Series r(a.size(), 0);
    r[0] = 1;
    while (k > 0) {
        if (k & 1) r = ps_mul(r, base, p);
        base = ps_mul(base, base, p);
        k >>= 1;
    }
    return r;
}

Series ps_subst_xq(const Series& a, long q0) {
    Series r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && i * q0 < a.size()) r[i * q0] = a[i];
    return r;
}

Series one_plus_x_gamma(const std::vector<long>& digits, long p, int N) {
    Series r(N, 0);
    r[0] = 1;
    long long pk = 1;
    for (std::size_t k = 0; k < digits.size() && pk < N; ++k, pk *= p) {
        Series base(N, 0);
        base[0] = 1;
        base[(std::size_t)pk] = 1;
        for (long u = 0; u < digits[k] % p; ++u) r = ps_mul(r, base, p);
    }
    return r;
}

Series gamma_unit(const std::vector<long>& digits, long p, int N) {
    Series g = one_plus_x_gamma(digits, p, N + 1);
    Series r(N, 0);
    for (int i = 0; i < N; ++i) r[i] = g[i + 1];  // ((1+X)^gamma - 1)/X
    if (r[0] == 0) throw std::invalid_argument("gamma_unit: gamma is not a unit");
    return r;
}

// ---- cyclic modules --------------------------------------------------------

bool is_etale(const CyclicModule& M) {
    for (long m : M.mu_inv)
        if (m % M.p == 0) return false;
    return true;
}

void check_commutation(const CyclicModule& M) {
    for (const auto& ga : M.gammas) {
        // w(X) = ((1+X)^gamma - 1)/X, so gamma(X)^a = X^a w(X)^a.
        Series w = gamma_unit(ga.digits, M.p, M.N);
        for (int i = 0; i < M.n; ++i) {
            int j = (i + 1) % M.n;
            // gamma(phi(e_i)) has unit part w^{a_i} g_j; phi(gamma(e_i)) has
            // unit part g_i(X^p); the monomial X^{a_i} is common.
            Series lhs = ps_mul(ps_int_pow(w, M.phi_exp[i], M.p), ga.diag[j], M.p);
            Series rhs = ps_subst_xq(ga.diag[i], M.p);
            int cmp = (int)std::min(lhs.size(), rhs.size());
            for (int k = 0; k < cmp; ++k)
                if (lhs[k] != rhs[k])
                    throw std::logic_error("check_commutation: gamma and phi do not commute");
        }
    }
}

CyclicModule build_MD(const std::vector<long>& s, int m, long p,
                      const std::vector<std::vector<long>>& gamma_digits, int N,
                      const std::vector<long>& mu_inv) {
    CyclicModule M;
    M.p = p;
    M.n = (int)s.size();
    M.N = N;
    M.phi_exp = s;
    M.mu_inv = mu_inv.empty() ? std::vector<long>(M.n, 1) : mu_inv;
    if ((int)M.mu_inv.size() != M.n) throw std::invalid_argument("build_MD: mu size mismatch");
    for (long mu : M.mu_inv)
        if (mu % p == 0) throw std::invalid_argument("build_MD: mu_i must be a unit");
    long ssum = std::accumulate(s.begin(), s.end(), 0L);
    if (ssum % (p - 1) != 0)
        throw std::invalid_argument("build_MD: sum of s_i must vanish mod p-1");

    for (const auto& digits : gamma_digits) {
        Series w = gamma_unit(digits, p, N);
        Series u = ps_inv(w, p);  // X / ((1+X)^gamma - 1)
        long gbar = digits.empty() ? 0 : digits[0] % p;

        // g_{i+1}(X) = g_i(X^p) u(X)^{s_i}; around the cycle this forces
        // g_1(X) = g_1(X^{p^n}) V(X).
        Series V(N, 0);
        V[0] = 1;
        long long q0 = 1;
        for (int i = M.n - 1; i >= 0; --i) {
            V = ps_mul(V, ps_int_pow(ps_subst_xq(u, q0), s[i], p), p);
            q0 *= p;
        }
        Series g1(N, 0);
        long g0 = 1;
        for (int t = 0; t < m; ++t) g0 = g0 * gbar % p;
        g1[0] = g0;
        for (int it = 0;; ++it) {
            if (it > N + 2) throw std::logic_error("build_MD: fixed point did not stabilize");
            Series next = ps_mul(ps_subst_xq(g1, q0), V, p);  // q0 = p^n here
            if (next[0] != g0) throw std::logic_error("build_MD: inconsistent constant term");
            if (next == g1) break;
            g1 = next;
        }
        CyclicModule::GammaAction ga;
        ga.digits = digits;
        ga.diag.resize(M.n);
        ga.diag[0] = g1;
        for (int i = 0; i + 1 < M.n; ++i)
            ga.diag[i + 1] = ps_mul(ps_subst_xq(ga.diag[i], p), ps_int_pow(u, s[i], p), p);
        M.gammas.push_back(std::move(ga));
    }
    check_commutation(M);
    return M;
}

CyclicModule build_N(const std::vector<long>& r, long p,
                     const std::vector<std::vector<long>>& gamma_digits, int N) {
    CyclicModule M;
    M.p = p;
    M.n = 1;
    M.N = N;
    M.mu_inv = {1};
    long A = 0;
    for (long rj : r) A += rj + 1;
    M.phi_exp = {-(p - 1) * A};
    for (const auto& digits : gamma_digits) {
        Series u = ps_inv(gamma_unit(digits, p, N), p);
        long gbar = digits.empty() ? 0 : digits[0] % p;
        CyclicModule::GammaAction ga;
        ga.digits = digits;
        ga.diag = {ps_int_pow(ps_scale(gbar, u, p), A, p)};
        M.gammas.push_back(std::move(ga));
    }
    check_commutation(M);
    return M;
}

CyclicModule tensor_rank1(const CyclicModule& M, const CyclicModule& N1, long b) {
    if (N1.n != 1 || M.p != N1.p || M.gammas.size() != N1.gammas.size())
        throw std::invalid_argument("tensor_rank1: incompatible modules");
    CyclicModule T;
    T.p = M.p;
    T.n = M.n;
    T.N = std::min(M.N, N1.N);
    T.mu_inv.resize(M.n);
    T.phi_exp.resize(M.n);
    for (int i = 0; i < M.n; ++i) {
        T.mu_inv[i] = M.mu_inv[i] * N1.mu_inv[0] % M.p;
        // e_i' = X^b (x_i tensor e): phi picks up (p-1) b.
        T.phi_exp[i] = M.phi_exp[i] + N1.phi_exp[0] + (M.p - 1) * b;
    }
    for (std::size_t k = 0; k < M.gammas.size(); ++k) {
        if (M.gammas[k].digits != N1.gammas[k].digits)
            throw std::invalid_argument("tensor_rank1: gamma lists differ");
        Series w = gamma_unit(M.gammas[k].digits, M.p, T.N);
        CyclicModule::GammaAction ga;
        ga.digits = M.gammas[k].digits;
        for (int i = 0; i < M.n; ++i) {
            Series d = ps_mul(M.gammas[k].diag[i], N1.gammas[k].diag[0], M.p);
            d.resize(T.N);
            // gamma(X^b v) = X^b w(X)^b gamma(v).
            ga.diag.push_back(ps_mul(d, ps_int_pow(w, b, M.p), M.p));
        }
        T.gammas.push_back(std::move(ga));
    }
    check_commutation(T);
    return T;
}

CyclicModule twist_N(const std::vector<long>& s, int m, int f, const std::vector<long>& r,
                     long p, const std::vector<std::vector<long>>& gamma_digits, int N) {
    std::vector<long> dual_exp(s);
    for (long& e : dual_exp) e += (p - 1) * (f - m);
    CyclicModule MD = build_MD(dual_exp, m, p, gamma_digits, N);
    CyclicModule N1 = build_N(r, p, gamma_digits, N);
    long b = m;
    for (long rj : r) b += rj;
    CyclicModule T = tensor_rank1(MD, N1, b);
    for (int i = 0; i < T.n; ++i)
        if (T.phi_exp[i] != s[i])
            throw std::logic_error("twist_N: phi-exponents do not reduce to s_i");
    return T;
}

}  // namespace lgc
