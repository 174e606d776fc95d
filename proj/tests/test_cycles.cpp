// Characteristic cycles of monomial quotients: multiplicities against the
// divisibility oracle, masses, duality, and additivity.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgc/cycles.hpp"

#include <random>

using namespace lgc;

static MonIdeal ideal(std::vector<Gen> g) { return MonIdeal{std::move(g)}; }

static std::vector<MonIdeal> all_ideals(int f) {
    std::vector<MonIdeal> out{MonIdeal{}};
    for (int j = 0; j < f; ++j) {
        std::vector<MonIdeal> next;
        for (const auto& a : out)
            for (Gen g : {Gen::Y, Gen::Z, Gen::YZ}) {
                MonIdeal b = a;
                b.gens.push_back(g);
                next.push_back(std::move(b));
            }
        out = std::move(next);
    }
    return out;
}

static std::vector<MinPrime> all_primes(int f) {
    std::vector<MinPrime> out;
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
        MinPrime q;
        for (int j = 0; j < f; ++j)
            if (mask & (1u << j)) q.J.insert(j);
        out.push_back(std::move(q));
    }
    return out;
}

TEST_CASE("closed-form multiplicity agrees with the divisibility oracle") {
    for (int f = 1; f <= 3; ++f)
        for (const auto& a : all_ideals(f))
            for (const auto& q : all_primes(f)) {
                MonModule M{f, {{a, 1}}};
                CHECK(mult_at(M, q) == mult_at_oracle(a, q));
            }
}

TEST_CASE("mass of a cyclic module is 2^{|A|}") {
    for (int f = 1; f <= 3; ++f)
        for (const auto& a : all_ideals(f)) {
            MonModule M{f, {{a, 1}}};
            long mass = 0;
            for (const auto& [q, m] : char_cycle(M)) mass += m;
            CHECK(mass == (1L << yz_positions(a).size()));
        }
}

TEST_CASE("whole ring localizes to length one everywhere") {
    // All generators y_j z_j: the quotient is the full ring R-bar.
    MonModule M{2, {{ideal({Gen::YZ, Gen::YZ}), 1}}};
    for (const auto& q : all_primes(2)) CHECK(mult_at(M, q) == 1);
}

TEST_CASE("dual module: ideal preserved, twist by generator ratio") {
    DualData d = dual_module(ideal({Gen::Y, Gen::Z, Gen::YZ}));
    CHECK(d.ideal == ideal({Gen::Y, Gen::Z, Gen::YZ}));
    CHECK(d.twist == std::vector<int>{-1, 1, 0});
    // Involutive and cycle-preserving for every ideal.
    for (const auto& a : all_ideals(3)) {
        DualData dd = dual_module(a);
        CHECK(dd.ideal == a);
        MonModule M{3, {{a, 1}}};
        MonModule Mdual{3, {{dd.ideal, 1}}};
        CHECK(char_cycle(M) == char_cycle(Mdual));
    }
}

TEST_CASE("fixture: R/(z_*) + R/(y_*)") {
    MonModule M{2, {{ideal({Gen::Z, Gen::Z}), 1}, {ideal({Gen::Y, Gen::Y}), 1}}};
    auto cyc = char_cycle(M);
    // Each summand meets exactly one minimal prime.
    CHECK(cyc.size() == 2);
    CHECK(cyc[MinPrime{{}}] == 1);        // z-prime supports R/(z_*)
    CHECK(cyc[MinPrime{{0, 1}}] == 1);    // y-prime supports R/(y_*)
}

TEST_CASE("fixture: R/(y_0, z_1) sits at one prime") {
    MonModule M{2, {{ideal({Gen::Y, Gen::Z}), 1}}};
    auto cyc = char_cycle(M);
    CHECK(cyc.size() == 1);
    CHECK(cyc[MinPrime{{0}}] == 1);
}

TEST_CASE("fixture: two copies of R/(y_0 z_0) have mass 4") {
    MonModule M{1, {{ideal({Gen::YZ}), 2}}};
    auto cyc = char_cycle(M);
    long mass = 0;
    for (const auto& [q, m] : cyc) mass += m;
    CHECK(mass == 4);
    CHECK(cyc[MinPrime{{}}] == 2);
    CHECK(cyc[MinPrime{{0}}] == 2);
}

TEST_CASE("additivity on random declared direct sums") {
    std::mt19937 rng(20240817);
    auto ids = all_ideals(3);
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    std::uniform_int_distribution<long> cnt(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        MonModule M1{3, {}}, M2{3, {}};
        for (int t = 0; t < 4; ++t) {
            long c1 = cnt(rng), c2 = cnt(rng);
            if (c1) M1.pieces[ids[pick(rng)]] += c1;
            if (c2) M2.pieces[ids[pick(rng)]] += c2;
        }
        MonModule M{3, M1.pieces};
        for (const auto& [a, m] : M2.pieces) M.pieces[a] += m;
        CHECK(additivity_check(M1, M, M2));
        CHECK(char_cycle(M) == add_cycles(char_cycle(M1), char_cycle(M2)));
        // A corrupted sum must be rejected.
        MonModule bad = M;
        bad.pieces[ids[pick(rng)]] += 1;
        CHECK_THROWS(additivity_check(M1, bad, M2));
    }
}
