#include "lgc/fq.hpp"

#include <algorithm>
#include <numeric>

namespace lgc {

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

// Polynomial arithmetic over Z/m (m = p or p^M), modulo a monic g of degree f
// with x^f = -(g[0] + ... + g[f-1] x^{f-1}).
std::vector<long> poly_mulmod(const std::vector<long>& a, const std::vector<long>& b,
                              const std::vector<long>& g, long m) {
    int f = (int)g.size();
    std::vector<long> t(2 * f - 1, 0);
    for (int i = 0; i < f; ++i)
        if (a[i])
            for (int j = 0; j < f; ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % m;
    for (int d = 2 * f - 2; d >= f; --d) {
        long c = t[d];
        if (!c) continue;
        t[d] = 0;
        for (int j = 0; j < f; ++j) t[d - f + j] = ((t[d - f + j] - c * g[j]) % m + m) % m;
    }
    t.resize(f);
    return t;
}

std::vector<long> poly_powmod(std::vector<long> a, long long e, const std::vector<long>& g,
                              long m) {
    int f = (int)g.size();
    std::vector<long> r(f, 0);
    r[0] = 1 % m;
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, a, g, m);
        a = poly_mulmod(a, a, g, m);
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const std::vector<long>& g, long p) {
    int f = (int)g.size();
    std::vector<long> x(f, 0);
    if (f == 1) return true;  // linear
    x[1] = 1;
    // x^{p^f} == x, and x^{p^{f/l}} != x for prime divisors l of f.
    auto frob_pow = [&](int k) {
        std::vector<long> r = x;
        for (int t = 0; t < k; ++t) r = poly_powmod(r, p, g, p);
        return r;
    };
    if (frob_pow(f) != x) return false;
    for (int l = 2; l <= f; ++l)
        if (f % l == 0) {
            bool prime = true;
            for (int d = 2; d < l; ++d)
                if (l % d == 0) prime = false;
            if (prime && frob_pow(f / l) == x) return false;
        }
    return true;
}

}  // namespace

Fq::Fq(long p_, int f_) : p(p_), f(f_) {
    if (p < 2 || f < 1) throw std::invalid_argument("Fq: bad parameters");
    q = ipow(p, f);
    // Lowest coefficient vector (read as a base-p number) giving an
    // irreducible monic modulus.
    for (long code = 0;; ++code) {
        if (code >= q) throw std::logic_error("Fq: no irreducible modulus found");
        std::vector<long> cand(f);
        long t = code;
        for (int i = 0; i < f; ++i) {
            cand[i] = t % p;
            t /= p;
        }
        if (is_irreducible(cand, p)) {
            g = cand;
            break;
        }
    }
}

std::vector<long> Fq::to_digits(long a) const {
    std::vector<long> d(f);
    for (int i = 0; i < f; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

long Fq::from_digits(const std::vector<long>& d) const {
    long a = 0;
    for (int i = f - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

long Fq::add(long a, long b) const {
    auto da = to_digits(a), db = to_digits(b);
    for (int i = 0; i < f; ++i) da[i] = (da[i] + db[i]) % p;
    return from_digits(da);
}

long Fq::sub(long a, long b) const { return add(a, neg(b)); }

long Fq::neg(long a) const {
    auto d = to_digits(a);
    for (long& x : d) x = (p - x) % p;
    return from_digits(d);
}

long Fq::mul(long a, long b) const {
    return from_digits(poly_mulmod(to_digits(a), to_digits(b), g, p));
}

long Fq::pow(long a, long long e) const {
    if (e < 0) throw std::invalid_argument("Fq::pow: negative exponent");
    return from_digits(poly_powmod(to_digits(a), e, g, p));
}

long Fq::inv(long a) const {
    if (a == 0) throw std::invalid_argument("Fq::inv: zero");
    return pow(a, q - 2);
}

long Fq::frob_i(long a, int i) const {
    long r = a;
    for (int t = 0; t < ((i % f) + f) % f; ++t) r = frob(r);
    return r;
}

long Fq::trace_fp(long a) const {
    long s = 0;
    for (int i = 0; i < f; ++i) s = add(s, frob_i(a, i));
    // A trace lies in the prime field: all digits above the constant vanish.
    if (s >= p) throw std::logic_error("Fq::trace_fp: trace not in F_p");
    return s;
}

long Fq::from_fp(long c) const { return ((c % p) + p) % p; }

Zq::Zq(const Fq& F, int M_) : p(F.p), f(F.f), M(M_) {
    pM = 1;
    for (int i = 0; i < M; ++i) pM *= p;
    g = F.g;  // lift coefficients verbatim
}

Zq::Elt Zq::from_fq(const Fq& F, long a) const {
    Elt d(f);
    for (int i = 0; i < f; ++i) {
        d[i] = a % F.p;
        a /= F.p;
    }
    return d;
}

Zq::Elt Zq::mul(const Elt& a, const Elt& b) const { return poly_mulmod(a, b, g, pM); }

Zq::Elt Zq::add(const Elt& a, const Elt& b) const {
    Elt r(f);
    for (int i = 0; i < f; ++i) r[i] = (a[i] + b[i]) % pM;
    return r;
}

Zq::Elt Zq::pow(const Elt& a, long long e) const { return poly_powmod(a, e, g, pM); }

Zq::Elt Zq::teichmuller(const Fq& F, long a) const {
    Elt x = from_fq(F, a);
    long long pf = 1;
    for (int i = 0; i < f; ++i) pf *= p;
    for (int it = 0; it < M + 1; ++it) x = pow(x, pf);
    return x;
}

long Zq::trace_teichmuller(const Fq& F, long a) const {
    Elt t = teichmuller(F, a);
    Elt s(f, 0);
    Elt cur = t;
    for (int i = 0; i < f; ++i) {
        s = add(s, cur);
        cur = pow(cur, p);
    }
    for (int i = 1; i < f; ++i)
        if (s[i] != 0) throw std::logic_error("Zq: Teichmuller trace not a constant");
    return s[0];
}

GroupAlg ga_delta(const Fq& F, long a) {
    GroupAlg A;
    A.c.assign(F.q, 0);
    A.c[a] = 1;
    return A;
}

GroupAlg ga_add(const Fq& F, const GroupAlg& A, const GroupAlg& B) {
    GroupAlg R;
    R.c.resize(F.q);
    for (long i = 0; i < F.q; ++i) R.c[i] = F.add(A.c[i], B.c[i]);
    return R;
}

GroupAlg ga_scale(const Fq& F, long t, const GroupAlg& A) {
    GroupAlg R;
    R.c.resize(F.q);
    for (long i = 0; i < F.q; ++i) R.c[i] = F.mul(t, A.c[i]);
    return R;
}

GroupAlg ga_mul(const Fq& F, const GroupAlg& A, const GroupAlg& B) {
    GroupAlg R;
    R.c.assign(F.q, 0);
    for (long a = 0; a < F.q; ++a) {
        if (!A.c[a]) continue;
        for (long b = 0; b < F.q; ++b) {
            if (!B.c[b]) continue;
            long s = F.add(a, b);
            R.c[s] = F.add(R.c[s], F.mul(A.c[a], B.c[b]));
        }
    }
    return R;
}

GroupAlg ga_pow(const Fq& F, const GroupAlg& A, long e) {
    GroupAlg R = ga_delta(F, 0);
    for (long t = 0; t < e; ++t) R = ga_mul(F, R, A);
    return R;
}

GroupAlg ga_act(const Fq& F, long t, const GroupAlg& A) {
    GroupAlg R;
    R.c.assign(F.q, 0);
    for (long a = 0; a < F.q; ++a)
        if (A.c[a]) R.c[F.mul(t, a)] = A.c[a];
    return R;
}

GroupAlg y_element(const Fq& F, int i) {
    GroupAlg Y;
    Y.c.assign(F.q, 0);
    long pi = 1;
    for (int t = 0; t < i; ++t) pi *= F.p;
    for (long a = 1; a < F.q; ++a) Y.c[a] = F.pow(F.inv(a), pi);
    return Y;
}

GroupAlg theta(const Fq& F, long i) {
    if (i < 0 || i > F.q - 1) throw std::invalid_argument("theta: exponent out of range");
    GroupAlg T;
    T.c.resize(F.q);
    for (long a = 0; a < F.q; ++a) T.c[a] = (i == 0) ? 1 : F.pow(a, i);
    return T;
}

GroupAlg theta_closed(const Fq& F, long i) {
    if (i < 0 || i >= F.q - 1) throw std::invalid_argument("theta_closed: need 0 <= i < q-1");
    long coeff = 1;
    GroupAlg R = ga_delta(F, 0);
    long t = i;
    for (int j = 0; j < F.f; ++j) {
        long ij = t % F.p;
        t /= F.p;
        long fact = 1;
        for (long u = 2; u <= ij; ++u) fact = (fact * u) % F.p;
        coeff = (coeff * fact) % F.p;
        R = ga_mul(F, R, ga_pow(F, y_element(F, j), F.p - 1 - ij));
    }
    if (F.f % 2 == 0) coeff = (F.p - coeff) % F.p;  // (-1)^{f-1}
    return ga_scale(F, F.from_fp(coeff), R);
}

GroupAlg trace_zero_sum(const Fq& F) {
    if (F.f <= 1) throw std::invalid_argument("trace_zero_sum: requires f > 1");
    GroupAlg R;
    R.c.assign(F.q, 0);
    for (long a = 0; a < F.q; ++a)
        if (F.trace_fp(a) == 0) R.c[a] = 1;
    return R;
}

GroupAlg trace_zero_sum_closed(const Fq& F) {
    if (F.f <= 1) throw std::invalid_argument("trace_zero_sum_closed: requires f > 1");
    std::vector<GroupAlg> Y;
    for (int j = 0; j < F.f; ++j) Y.push_back(y_element(F, j));
    GroupAlg total;
    total.c.assign(F.q, 0);
    // Full monomial Y^{p-1,...,p-1}.
    GroupAlg full = ga_delta(F, 0);
    for (int j = 0; j < F.f; ++j) full = ga_mul(F, full, ga_pow(F, Y[j], F.p - 1));
    total = ga_add(F, total, full);
    // All exponent vectors with entries in [0, p-1] of total weight (p-1)(f-1).
    long target = (long)(F.p - 1) * (F.f - 1);
    std::vector<long> e(F.f, 0);
    for (;;) {
        long sum = std::accumulate(e.begin(), e.end(), 0L);
        if (sum == target) {
            GroupAlg mono = ga_delta(F, 0);
            for (int j = 0; j < F.f; ++j) mono = ga_mul(F, mono, ga_pow(F, Y[j], e[j]));
            total = ga_add(F, total, mono);
        }
        int k = 0;
        while (k < F.f && e[k] == F.p - 1) e[k++] = 0;
        if (k == F.f) break;
        ++e[k];
    }
    if (F.f % 2 == 0) total = ga_scale(F, F.from_fp(F.p - 1), total);  // (-1)^{f-1}
    return total;
}

// ---- model of F[N_0/N_1^p] ------------------------------------------------

namespace {

struct NModel {
    const Fq& F;
    int D;       // T-degree bound = f(p-1)
    long zdim;   // p^{f-1}
    NModel(const Fq& F_) : F(F_), D(F_.f * ((int)F_.p - 1)) {
        zdim = 1;
        for (int i = 1; i < F.f; ++i) zdim *= F.p;
    }
    NPoly zero() const {
        NPoly r;
        r.c.assign((std::size_t)D * zdim, 0);
        return r;
    }
    NPoly one() const {
        NPoly r = zero();
        r.c[0] = 1;
        return r;
    }
    long zdeg(long zi) const {
        long s = 0;
        while (zi) {
            s += zi % F.p;
            zi /= F.p;
        }
        return s;
    }
    NPoly mul(const NPoly& a, const NPoly& b) const {
        NPoly r = zero();
        for (int ta = 0; ta < D; ++ta)
            for (long za = 0; za < zdim; ++za) {
                long ca = a.c[(std::size_t)ta * zdim + za];
                if (!ca) continue;
                for (int tb = 0; tb + ta < D; ++tb)
                    for (long zb = 0; zb < zdim; ++zb) {
                        long cb = b.c[(std::size_t)tb * zdim + zb];
                        if (!cb) continue;
                        // Z-exponents add with Z_i^p = 0.
                        long zc = 0, mul10 = 1;
                        bool dead = false;
                        long xa = za, xb = zb;
                        for (int i = 1; i < F.f; ++i) {
                            long s = xa % F.p + xb % F.p;
                            if (s >= F.p) {
                                dead = true;
                                break;
                            }
                            zc += s * mul10;
                            mul10 *= F.p;
                            xa /= F.p;
                            xb /= F.p;
                        }
                        if (dead) continue;
                        std::size_t idx = (std::size_t)(ta + tb) * zdim + zc;
                        r.c[idx] = F.add(r.c[idx], F.mul(ca, cb));
                    }
            }
        return r;
    }
    NPoly add(const NPoly& a, const NPoly& b) const {
        NPoly r = zero();
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.c[i], b.c[i]);
        return r;
    }
    NPoly scale(long t, const NPoly& a) const {
        NPoly r = zero();
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.mul(t, a.c[i]);
        return r;
    }
    NPoly pow(const NPoly& a, long e) const {
        NPoly r = one();
        for (long t = 0; t < e; ++t) r = mul(r, a);
        return r;
    }
    // (1+T)^t for a p-adic integer t given mod p^M, via its base-p digits.
    NPoly one_plus_T_pow(long t) const {
        NPoly r = one();
        long pk = 1;
        while (pk < D) {
            long d = t % F.p;
            t /= F.p;
            // (1 + T^{pk})^d
            NPoly base = zero();
            base.c[0] = 1;
            if (pk < D) base.c[(std::size_t)pk * zdim] = 1;
            for (long u = 0; u < d; ++u) r = mul(r, base);
            pk *= F.p;
        }
        return r;
    }
    NPoly one_plus_Z_pow(int i, long v) const {  // i in 1..f-1
        NPoly base = zero();
        base.c[0] = 1;
        long step = 1;
        for (int t = 1; t < i; ++t) step *= F.p;
        base.c[(std::size_t)0 * zdim + step] = 1;
        return pow(base, v);
    }
    // Discard monomials of total degree >= f(p-1).
    void truncate_total(NPoly& a) const {
        for (int t = 0; t < D; ++t)
            for (long z = 0; z < zdim; ++z)
                if (t + zdeg(z) >= D) a.c[(std::size_t)t * zdim + z] = 0;
    }
};

}  // namespace

NPoly nsum(const Fq& F, int j0) {
    if (j0 < 0 || j0 >= F.f) throw std::invalid_argument("nsum: bad j0");
    if (F.f % F.p == 0) throw std::invalid_argument("nsum: requires p not dividing f");
    NModel R(F);
    if (F.f == 1) {
        // Both sides are the empty product: the scalar 1.
        return R.one();
    }
    Zq W(F, 8);

    // Basis of ker(trace) over F_p.
    std::vector<long> basis;
    {
        std::vector<std::vector<long>> rows;  // echelon rows (digit vectors)
        for (long a = 1; a < F.q && (int)basis.size() < F.f - 1; ++a) {
            if (F.trace_fp(a) != 0) continue;
            // Reduce digits of a against current echelon rows.
            std::vector<long> d(F.f);
            long t = a;
            for (int i = 0; i < F.f; ++i) {
                d[i] = t % F.p;
                t /= F.p;
            }
            for (const auto& r : rows) {
                int piv = 0;
                while (!r[piv]) ++piv;
                if (d[piv]) {
                    long rinv = 1;
                    for (long u = 1; u < F.p; ++u)
                        if (r[piv] * u % F.p == 1) rinv = u;
                    long factor = d[piv] * rinv % F.p;
                    for (int i = 0; i < F.f; ++i) d[i] = ((d[i] - factor * r[i]) % F.p + F.p) % F.p;
                }
            }
            bool zero = std::all_of(d.begin(), d.end(), [](long x) { return x == 0; });
            if (!zero) {
                rows.push_back(d);
                basis.push_back(a);
            }
        }
        if ((int)basis.size() != F.f - 1) throw std::logic_error("nsum: kernel basis not found");
    }

    // Coordinates of a trace-zero element in that basis, by Gaussian
    // elimination on the digit matrix.
    auto coords = [&](long a) {
        int n = F.f, m = F.f - 1;
        std::vector<std::vector<long>> A(n, std::vector<long>(m + 1, 0));
        for (int j = 0; j < m; ++j) {
            long t = basis[j];
            for (int i = 0; i < n; ++i) {
                A[i][j] = t % F.p;
                t /= F.p;
            }
        }
        long t = a;
        for (int i = 0; i < n; ++i) {
            A[i][m] = t % F.p;
            t /= F.p;
        }
        std::vector<long> sol(m, 0);
        int row = 0;
        std::vector<int> pivcol;
        for (int col = 0; col < m && row < n; ++col) {
            int pr = -1;
            for (int i = row; i < n; ++i)
                if (A[i][col]) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            std::swap(A[row], A[pr]);
            long inv = 1;
            for (long u = 1; u < F.p; ++u)
                if (A[row][col] * u % F.p == 1) inv = u;
            for (int jj = 0; jj <= m; ++jj) A[row][jj] = A[row][jj] * inv % F.p;
            for (int i = 0; i < n; ++i)
                if (i != row && A[i][col]) {
                    long fct = A[i][col];
                    for (int jj = 0; jj <= m; ++jj)
                        A[i][jj] = ((A[i][jj] - fct * A[row][jj]) % F.p + F.p) % F.p;
                }
            pivcol.push_back(col);
            ++row;
        }
        for (int i = 0; i < (int)pivcol.size(); ++i) sol[pivcol[i]] = A[i][m];
        return sol;
    };

    long finv_fp = 1;
    for (long u = 1; u < F.p; ++u)
        if ((F.f % F.p) * u % F.p == 1) finv_fp = u;

    // Images of the Y_j in the model.
    auto y_image = [&](int j) {
        NPoly acc = R.zero();
        long pj = 1;
        for (int t = 0; t < j; ++t) pj *= F.p;
        for (long a = 1; a < F.q; ++a) {
            long tr = W.trace_teichmuller(F, a);
            NPoly term = R.one_plus_T_pow(tr);
            // Trace-zero part of a and its kernel coordinates.
            long proj = F.from_fp(F.trace_fp(a) * finv_fp % F.p);
            long aprime = F.sub(a, proj);
            auto v = coords(aprime);
            for (int i = 1; i < F.f; ++i) term = R.mul(term, R.one_plus_Z_pow(i, v[i - 1]));
            acc = R.add(acc, R.scale(F.pow(F.inv(a), pj), term));
        }
        return acc;
    };

    // LHS: sum over N_1/pN_1, i.e. over all kernel-coordinate vectors.
    NPoly lhs = R.one();
    for (int i = 1; i < F.f; ++i) {
        NPoly s = R.zero();
        for (long v = 0; v < F.p; ++v) s = R.add(s, R.one_plus_Z_pow(i, v));
        lhs = R.mul(lhs, s);
    }

    // RHS: (-1)^{f-1} prod_{j != j0} (Y_j - Y_{j0})^{p-1}.
    NPoly yj0 = y_image(j0);
    NPoly rhs = R.one();
    for (int j = 0; j < F.f; ++j) {
        if (j == j0) continue;
        NPoly diff = R.add(y_image(j), R.scale(F.from_fp(F.p - 1), yj0));
        rhs = R.mul(rhs, R.pow(diff, F.p - 1));
    }
    if (F.f % 2 == 0) rhs = R.scale(F.from_fp(F.p - 1), rhs);

    R.truncate_total(lhs);
    R.truncate_total(rhs);
    if (lhs.c != rhs.c) throw std::logic_error("nsum: model identity fails");
    return lhs;
}

XYSeries xy_series(const Fq& F, int N) {
    if (N == 0) N = 3 * (int)F.p;
    if (N < 2) throw std::invalid_argument("xy_series: precision too small");
    const long p = F.p;
    auto smul = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> r(N, 0);
        for (int i = 0; i < N; ++i)
            if (a[i])
                for (int j = 0; j + i < N; ++j)
                    if (b[j]) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        return r;
    };
    auto sadd = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> r(N);
        for (int i = 0; i < N; ++i) r[i] = F.add(a[i], b[i]);
        return r;
    };
    auto sscale = [&](long t, const std::vector<long>& a) {
        std::vector<long> r(N);
        for (int i = 0; i < N; ++i) r[i] = F.mul(t, a[i]);
        return r;
    };

    // (1+X)^t for a p-adic digit expansion of t (mod p^M, M big enough).
    auto one_plus_x_pow = [&](long long t) {
        std::vector<long> r(N, 0);
        r[0] = 1;
        long long pk = 1;
        while (pk < N) {
            long d = (long)(t % p);
            t /= p;
            std::vector<long> base(N, 0);
            base[0] = 1;
            if (pk < N) base[(int)pk] = 1;
            for (long u = 0; u < d; ++u) r = smul(r, base);
            pk *= p;
        }
        return r;
    };

    XYSeries out;

    // One-variable quotient: Y = sum over F_p^x of a^{-1} (1+X)^{teich(a)}.
    {
        Fq Fp(p, 1);
        Zq Wp(Fp, 8);
        std::vector<long> y(N, 0);
        for (long a = 1; a < p; ++a) {
            long t = Wp.trace_teichmuller(Fp, a);
            long ainv = 1;
            for (long u = 1; u < p; ++u)
                if (a * u % p == 1) ainv = u;
            y = sadd(y, sscale(F.from_fp(ainv), one_plus_x_pow(t)));
        }
        out.y_of_x = y;
    }
    if (out.y_of_x[0] != 0 || out.y_of_x[1] != F.from_fp(p - 1))
        throw std::logic_error("xy_series: Y != -X + O(X^2)");

    // Compositional inverse by coefficient matching.
    {
        std::vector<std::vector<long>> ypow(N);
        ypow[0] = std::vector<long>(N, 0);
        ypow[0][0] = 1;
        for (int m = 1; m < N; ++m) ypow[m] = smul(ypow[m - 1], out.y_of_x);
        std::vector<long> gcoef(N, 0);  // x_of_y coefficients
        std::vector<long> acc(N, 0);    // sum of gcoef[m] * ypow[m]
        for (int k = 1; k < N; ++k) {
            // Coefficient of X^k must be delta_{k,1}; only m <= k contribute,
            // and the m = k term contributes gcoef[k] * (-1)^k.
            long want = (k == 1) ? 1 : 0;
            long have = acc[k];
            long lead = ypow[k][k];  // = (-1)^k, a unit
            long diff = F.sub(F.from_fp(want), have);
            // gcoef[k] = diff / lead in F_p.
            long leadinv = 1;
            for (long u = 1; u < p; ++u)
                if (lead * u % p == 1) leadinv = u;
            gcoef[k] = F.mul(diff, F.from_fp(leadinv));
            acc = sadd(acc, sscale(gcoef[k], ypow[k]));
        }
        out.x_of_y = gcoef;
        // Verify the composition is the identity.
        std::vector<long> idt(N, 0);
        idt[1] = 1;
        if (acc != idt) throw std::logic_error("xy_series: composition is not the identity");
        if (gcoef[1] != F.from_fp(p - 1))
            throw std::logic_error("xy_series: X != -Y + O(Y^2)");
    }

    // h(Y_i) = sum over F_q^x of a^{-p^i} (1+X)^{Tr teich(a)} = Y + O(X^p).
    {
        Zq W(F, 8);
        for (int i = 0; i < F.f; ++i) {
            long pi = 1;
            for (int t = 0; t < i; ++t) pi *= p;
            std::vector<long> h(N, 0);
            for (long a = 1; a < F.q; ++a) {
                long tr = W.trace_teichmuller(F, a);
                h = sadd(h, sscale(F.pow(F.inv(a), pi), one_plus_x_pow(tr)));
            }
            for (int k = 0; k < std::min<int>(N, (int)p); ++k)
                if (h[k] != out.y_of_x[k])
                    throw std::logic_error("xy_series: h(Y_i) != Y mod X^p");
            if (i == 0) out.h_y = h;
        }
    }
    return out;
}

}  // namespace lgc
