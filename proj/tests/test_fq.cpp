// Finite-field arithmetic, Teichmueller lifts, and the group-algebra
// identities, checked against convolution brute force.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgc/fq.hpp"

using namespace lgc;

TEST_CASE("field axioms sampled over F_9 and F_25") {
    for (auto [p, f] : {std::pair<long, int>{3, 2}, {5, 2}}) {
        Fq F(p, f);
        CHECK(F.q == p * p);
        for (long a = 0; a < F.q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) {
                CHECK(F.mul(a, F.inv(a)) == 1);
                CHECK(F.pow(a, F.q - 1) == 1);
            }
            for (long b = 0; b < F.q; ++b) {
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (long c = 0; c < F.q; ++c) {
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    if (c > 2) break;  // keep the cube small
                }
            }
        }
    }
}

TEST_CASE("frobenius and trace") {
    Fq F(5, 3);
    for (long a = 0; a < F.q; a += 7) {
        CHECK(F.frob(a) == F.pow(a, 5));
        CHECK(F.frob_i(a, 3) == a);  // full cycle
        long tr = F.trace_fp(a);
        CHECK(tr >= 0);
        CHECK(tr < 5);
        // Trace is the digit sum of a + a^p + a^{p^2}, which lands in F_p.
        long s = F.add(a, F.add(F.frob_i(a, 1), F.frob_i(a, 2)));
        CHECK(s == F.from_fp(tr));
    }
    // Additivity of the trace.
    for (long a = 0; a < F.q; a += 11)
        for (long b = 0; b < F.q; b += 13)
            CHECK(F.trace_fp(F.add(a, b)) == (F.trace_fp(a) + F.trace_fp(b)) % 5);
}

TEST_CASE("teichmueller representatives") {
    Fq F(5, 2);
    Zq W(F, 4);
    for (long a = 1; a < F.q; ++a) {
        auto t = W.teichmuller(F, a);
        // (q-1)-st power is 1.
        auto one = W.pow(t, F.q - 1);
        CHECK(one[0] == 1);
        for (int i = 1; i < F.f; ++i) CHECK(one[i] == 0);
        // Reduction mod p recovers a.
        std::vector<long> red(F.f);
        for (int i = 0; i < F.f; ++i) red[i] = t[i] % 5;
        long back = 0;
        for (int i = F.f - 1; i >= 0; --i) back = back * 5 + red[i];
        CHECK(back == a);
    }
    // Teichmueller traces are constant polynomials (asserted internally).
    for (long a = 0; a < F.q; ++a) W.trace_teichmuller(F, a);
}

TEST_CASE("group algebra convolution") {
    Fq F(3, 2);
    GroupAlg d1 = ga_delta(F, F.from_fp(1));
    GroupAlg d2 = ga_delta(F, F.from_fp(2));
    GroupAlg s = ga_mul(F, d1, d2);  // [1] * [2] = [1+2] = [0]
    CHECK(s.c == ga_delta(F, 0).c);
    // Conjugation rescales the support.
    GroupAlg a = ga_act(F, 2, d1);
    CHECK(a.c == ga_delta(F, 2).c);
}

TEST_CASE("theta closed form at selected exponents") {
    Fq F(5, 2);
    for (long i : {0L, 1L, 4L, 5L, 6L, 12L, 19L, 23L})
        CHECK(theta(F, i).c == theta_closed(F, i).c);
    // theta_{q-1-p^i} = Y_i.
    CHECK(theta(F, F.q - 1 - 1).c == y_element(F, 0).c);
    CHECK(theta(F, F.q - 1 - 5).c == y_element(F, 1).c);
}

TEST_CASE("trace-zero sum closed form") {
    for (auto [p, f] : {std::pair<long, int>{3, 2}, {5, 2}}) {
        Fq F(p, f);
        CHECK(trace_zero_sum(F).c == trace_zero_sum_closed(F).c);
    }
}

TEST_CASE("nilpotent-model sum identity") {
    // nsum verifies its own identity internally and throws on failure.
    Fq F(5, 2);
    for (int j0 = 0; j0 < 2; ++j0) CHECK_NOTHROW(nsum(F, j0));
    Fq F3(3, 2);
    CHECK_NOTHROW(nsum(F3, 0));
    // p | f is rejected.
    Fq Fbad(3, 3);
    CHECK_THROWS(nsum(Fbad, 0));
}

TEST_CASE("X/Y series inversion and the kernel identity") {
    for (auto [p, f] : {std::pair<long, int>{5, 1}, {5, 2}, {7, 2}}) {
        Fq F(p, f);
        XYSeries s = xy_series(F);
        CHECK(s.y_of_x[0] == 0);
        CHECK(s.y_of_x[1] == p - 1);  // Y = -X + O(X^2)
        CHECK(s.x_of_y[1] == p - 1);
        CHECK((int)s.y_of_x.size() == 3 * p);
    }
}
