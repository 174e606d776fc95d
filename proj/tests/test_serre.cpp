// GL_2 weight combinatorics: the sets D and P, ideals, duality, lengths, and
// delta-orbits with their exponents.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgc/serre.hpp"

#include <algorithm>

using namespace lgc;

static RhoKind RK(Kind k, int f, long p, std::set<int> J = {}) {
    return RhoKind{k, f, p, std::move(J)};
}

TEST_CASE("affine form evaluation and printing") {
    CHECK(eval_form({1, 2}, 10, 29) == 12);
    CHECK(eval_form({-1, -3}, 10, 29) == 16);  // p-3-x
    CHECK(to_string(AffineForm{1, 0}) == "x");
    CHECK(to_string(AffineForm{-1, -2}) == "p-2-x");
    CHECK(to_string(AffineForm{1, 1}) == "x+1");
}

TEST_CASE("default points and the genericity window") {
    auto r = default_points(RK(Kind::Split, 3, 29));
    CHECK(r == std::vector<long>{6, 7, 8});
    CHECK_THROWS(default_points(RK(Kind::Split, 6, 29)));  // p < 5f+1
}

TEST_CASE("split D, f = 2") {
    auto D = build_D(RK(Kind::Split, 2, 29));
    REQUIRE(D.size() == 4);
    std::set<std::string> got;
    for (const auto& d : D) got.insert(to_string(d.t));
    CHECK(got == std::set<std::string>{"(x,x)", "(p-2-x,x+1)", "(x+1,p-2-x)",
                                       "(p-3-x,p-3-x)"});
    for (const auto& d : D)
        CHECK(length_of(d.t, RK(Kind::Split, 2, 29)) == (int)d.J.size());
}

TEST_CASE("split P, f = 2: the ten lifted tuples") {
    RhoKind k = RK(Kind::Split, 2, 29);
    auto P = build_P(k);
    REQUIRE(P.size() == 10);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& t : P) got.insert({to_string(t), to_string(ideal_of(t, k))});
    std::set<std::pair<std::string, std::string>> expect{
        {"(p-3-x,p-3-x)", "(z0,z1)"},   {"(p-3-x,p-1-x)", "(z0,y1)"},
        {"(p-2-x,x+1)", "(y0z0,y1z1)"}, {"(p-1-x,p-3-x)", "(y0,z1)"},
        {"(p-1-x,p-1-x)", "(y0,y1)"},   {"(x,x)", "(z0,z1)"},
        {"(x,x+2)", "(z0,y1)"},         {"(x+1,p-2-x)", "(y0z0,y1z1)"},
        {"(x+2,x)", "(y0,z1)"},         {"(x+2,x+2)", "(y0,y1)"}};
    CHECK(got == expect);
}

TEST_CASE("irreducible D, f = 1: the two-element orbit") {
    RhoKind k = RK(Kind::Irreducible, 1, 29);
    auto D = build_D(k);
    REQUIRE(D.size() == 2);
    std::set<std::string> got;
    for (const auto& d : D) got.insert(to_string(d.t));
    CHECK(got == std::set<std::string>{"(x)", "(p-1-x)"});
    CHECK(delta_J({}, k) == std::set<int>{0});
    CHECK(delta_J({0}, k) == std::set<int>{});
}

TEST_CASE("nonsplit P lies on the yz-axis off J_rho") {
    RhoKind k = RK(Kind::Nonsplit, 2, 29, {0});
    auto P = build_P(k);
    REQUIRE(P.size() == 6);
    for (const auto& t : P) {
        auto a = ideal_of(t, k);
        CHECK(a.gens[1] == Gen::YZ);  // coordinate 1 is outside J_rho
    }
    CHECK_THROWS(delta_orbits(k));
}

TEST_CASE("dual tuple is an involution preserving the ideal") {
    for (Kind kind : {Kind::Split, Kind::Irreducible}) {
        for (int f = 1; f <= 3; ++f) {
            RhoKind k = RK(kind, f, 31);
            for (const auto& t : build_P(k)) {
                SerreTuple s = dual_tuple(t, k);
                CHECK(ideal_of(s, k) == ideal_of(t, k));
                CHECK(dual_tuple(s, k) == t);
            }
            for (const auto& d : build_D(k)) {
                SerreTuple s = dual_tuple(d.t, k);
                CHECK(length_of(s, k) == f - length_of(d.t, k));
            }
        }
    }
}

TEST_CASE("split delta-orbits, f = 2") {
    RhoKind k = RK(Kind::Split, 2, 29);
    auto orbs = delta_orbits(k);
    REQUIRE(orbs.size() == 3);
    std::multiset<std::pair<int, std::vector<long>>> got;
    for (const auto& o : orbs) got.insert({o.m, o.s});
    std::multiset<std::pair<int, std::vector<long>>> expect{
        {0, {28}}, {0, {28}}, {2, {27, 29}}};
    CHECK(got == expect);
}

TEST_CASE("delta-orbit invariants, both semisimple kinds, f <= 4") {
    for (Kind kind : {Kind::Split, Kind::Irreducible}) {
        for (int f = 1; f <= 4; ++f) {
            RhoKind k = RK(kind, f, 37);
            auto orbs = delta_orbits(k);
            std::size_t total = 0;
            for (const auto& o : orbs) {
                total += o.Js.size();
                long sum = 0;
                for (long s : o.s) sum += s;
                CHECK(sum % (k.p - 1) == 0);
                for (std::size_t i = 0; i < o.Js.size(); ++i) {
                    CHECK((int)o.Jmax[i].size() == o.m);
                    auto e = xdelta_exponents(o, (int)i, k);
                    for (long x : e) {
                        CHECK(x >= 0);
                        CHECK(x <= k.p - 1);
                    }
                }
            }
            CHECK(total == (1u << f));
        }
    }
}

TEST_CASE("irreducible f = 2 orbit is a 4-cycle") {
    RhoKind k = RK(Kind::Irreducible, 2, 29);
    auto orbs = delta_orbits(k);
    REQUIRE(orbs.size() == 1);
    CHECK(orbs[0].Js.size() == 4);
    CHECK(orbs[0].m == 1);
}
