// Isotypic components of the tensor system: frozen component tables, the
// shift action, the outer-product decomposition, and the constituent graphs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgc/isotypic.hpp"

#include <algorithm>
#include <map>

using namespace lgc;

static std::vector<Int> BS(std::vector<long> v) { return std::vector<Int>(v.begin(), v.end()); }

TEST_CASE("system dimensions") {
    CHECK(build_system(2, 1).dim == 2);
    CHECK(build_system(2, 3).dim == 8);
    CHECK(build_system(3, 1).dim == 9);    // C(3,1) * C(3,2)
    CHECK(build_system(4, 1).dim == 96);   // 4 * 6 * 4
    CHECK(build_system(3, 2).dim == 81);
}

TEST_CASE("components of GL_2, any f: binomial multiplicities") {
    for (int f = 1; f <= 6; ++f) {
        auto sys = build_system(2, f);
        auto comps = components(sys, StdParabolic::borel(2));
        CHECK((int)comps.size() == f + 1);
        for (int i = 0; i <= f; ++i) {
            CHECK(comps[i].blocksums == BS({i, f - i}));  // sorted lex
            Int b = 1;
            for (int t = 0; t < i; ++t) b = b * (f - t) / (t + 1);
            CHECK(comps[i].dim == b);
        }
    }
}

TEST_CASE("GL_2 component parabolic data") {
    for (int f = 1; f <= 6; ++f) {
        auto sys = build_system(2, f);
        for (const auto& C : components(sys, StdParabolic::borel(2))) {
            // blocksums (j, f-j) corresponds to lambda_i with i = f - j.
            long i = (long)(f - C.blocksums[0]);
            auto pc = parabolic_of(C);
            CHECK(pc.lambda_prime == RationalWeight{Rat(f - i), Rat(i)});
            bool border = (i == 0 || i == f);
            CHECK(pc.PC.blocks == (border ? std::vector<int>{1, 1} : std::vector<int>{2}));
            std::vector<Perm> expect;
            if (2 * i <= f) expect.push_back(Perm::identity(2));
            if (2 * i >= f) expect.push_back(Perm{{1, 0}});
            CHECK(pc.W == expect);
        }
    }
}

TEST_CASE("GL_3 component parabolic data, f = 1, P = GL_2 x GL_1") {
    auto sys = build_system(3, 1);
    StdParabolic P = StdParabolic::from_blocks({2, 1});
    auto comps = components(sys, P);
    REQUIRE(comps.size() == 3);
    std::map<std::vector<Int>, ComponentParabolic> pc;
    for (const auto& C : comps) pc[C.blocksums] = parabolic_of(C);
    Perm cyc{{1, 2, 0}};

    CHECK(pc[BS({3, 0})].lambda_prime == RationalWeight{Rat(3, 2), Rat(3, 2), Rat(0)});
    CHECK(pc[BS({3, 0})].W == std::vector<Perm>{Perm::identity(3)});
    CHECK(pc[BS({3, 0})].PC.blocks == std::vector<int>{2, 1});

    CHECK(pc[BS({2, 1})].lambda_prime == RationalWeight{Rat(1), Rat(1), Rat(1)});
    CHECK(pc[BS({2, 1})].W == std::vector<Perm>{Perm::identity(3), cyc});
    CHECK(pc[BS({2, 1})].PC.blocks == std::vector<int>{3});

    CHECK(pc[BS({1, 2})].lambda_prime == RationalWeight{Rat(1, 2), Rat(1, 2), Rat(2)});
    CHECK(pc[BS({1, 2})].W == std::vector<Perm>{cyc});
    CHECK(pc[BS({1, 2})].PC.blocks == std::vector<int>{1, 2});

    auto full = components(sys, StdParabolic::borel(3));
    CHECK(full.size() == 7);
    for (const auto& C : full) {
        auto p = parabolic_of(C);
        if (C.blocksums == BS({1, 1, 1})) CHECK(p.W.size() == 6);
    }
}

TEST_CASE("shift action on the worked GL_3 example") {
    auto sys = build_system(3, 1);
    StdParabolic P = StdParabolic::from_blocks({2, 1});
    auto comps = components(sys, P);
    const IsotypicComponent* C0 = nullptr;
    for (const auto& C : comps)
        if (C.blocksums == BS({3, 0})) C0 = &C;
    REQUIRE(C0);
    IsotypicComponent C2 = w_dot(sys, *C0, Perm{{1, 2, 0}});
    CHECK(C2.blocksums == BS({1, 2}));
    // Identity acts trivially.
    CHECK(w_dot(sys, *C0, Perm::identity(3)).blocksums == C0->blocksums);
}

TEST_CASE("outer-product decomposition") {
    auto sys = build_system(3, 1);
    StdParabolic P = StdParabolic::from_blocks({2, 1});
    for (const auto& C : components(sys, P)) {
        auto pc = parabolic_of(C);
        for (const auto& wC : pc.W) {
            Decomposition D = decompose(sys, C, wC);
            Int prod = 1;
            for (const auto& fac : D.factors) {
                Int s = 0;
                for (const auto& [w, m] : fac) s += m;
                prod *= s;
            }
            CHECK(prod == C.dim);
            // Twists are f * (n - partial block sums).
            Int rem = 3;
            for (std::size_t i = 0; i < D.twists.size(); ++i) {
                rem -= D.PC.blocks[i];
                CHECK(D.twists[i] == rem);
            }
        }
    }
}

TEST_CASE("chain graph for GL_2") {
    for (int f = 1; f <= 6; ++f) {
        auto sys = build_system(2, f);
        StdParabolic B = StdParabolic::borel(2);
        std::set<Root> X{{1, 2}};
        auto g = good_lattice(sys, B, X);
        REQUIRE((int)g.vertices.size() == f + 1);
        REQUIRE((int)g.edges.size() == f);
        for (int i = 0; i < f; ++i) CHECK(g.edges[i] == std::pair<int, int>(i, i + 1));
        CHECK(g.vertices.back().socle);  // f.theta_G has blocksums (f, 0)
        CHECK(g.vertices.back().blocksums == BS({f, 0}));
        // X = R(B)+ = {}: no edges at all.
        auto g0 = good_lattice(sys, B, {});
        CHECK(g0.edges.empty());
        CHECK(g0.vertices.size() == (std::size_t)f + 1);
        // The up-closed sets of a chain: one per cut point.
        CHECK(up_closed_sets(g).size() == (std::size_t)f + 2);
    }
}

TEST_CASE("diamond graph for GL_3, f = 1, Borel") {
    auto sys = build_system(3, 1);
    StdParabolic B = StdParabolic::borel(3);
    std::set<Root> X{{1, 2}, {1, 3}, {2, 3}};
    auto g = good_lattice(sys, B, X);
    REQUIRE(g.vertices.size() == 7);
    REQUIRE(g.edges.size() == 8);
    int ss = 0, ps = 0;
    for (const auto& v : g.vertices) {
        if (v.tag == "SS") ++ss;
        if (v.tag == "PS") ++ps;
        if (v.blocksums == BS({1, 1, 1})) CHECK(v.tag == "SS");
    }
    CHECK(ss == 1);
    CHECK(ps == 6);
    std::vector<std::pair<int, int>> expect{{0, 1}, {0, 2}, {1, 3}, {2, 3},
                                            {3, 4}, {3, 5}, {4, 6}, {5, 6}};
    CHECK(g.edges == expect);
}

TEST_CASE("frozen graph for GL_4, P = P_{2,1,1}, X = R+") {
    auto sys = build_system(4, 1);
    StdParabolic P = StdParabolic::from_blocks({2, 1, 1});
    std::set<Root> X;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) X.insert({i, j});
    auto g = good_lattice(sys, P, X);
    REQUIRE(g.vertices.size() == 14);
    std::vector<std::vector<Int>> zch;
    for (const auto& v : g.vertices) zch.push_back(v.blocksums);
    std::vector<std::vector<Int>> expect_z{
        BS({1, 2, 3}), BS({1, 3, 2}), BS({2, 1, 3}), BS({2, 2, 2}), BS({2, 3, 1}),
        BS({3, 0, 3}), BS({3, 1, 2}), BS({3, 2, 1}), BS({3, 3, 0}), BS({4, 0, 2}),
        BS({4, 1, 1}), BS({4, 2, 0}), BS({5, 0, 1}), BS({5, 1, 0})};
    CHECK(zch == expect_z);
    std::vector<std::pair<int, int>> expect_e{
        {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {4, 7}, {5, 6}, {6, 7},
        {6, 9}, {7, 8}, {7, 10}, {8, 11}, {9, 10}, {10, 11}, {10, 12}, {11, 13}, {12, 13}};
    CHECK(g.edges == expect_e);
    std::vector<std::string> tags;
    for (const auto& v : g.vertices) tags.push_back(v.tag);
    int ss = (int)std::count(tags.begin(), tags.end(), "SS");
    CHECK(ss == 4);
}

TEST_CASE("frozen graph for GL_4, P = P_{1,2,1}, mixed X") {
    auto sys = build_system(4, 1);
    StdParabolic P = StdParabolic::from_blocks({1, 2, 1});
    std::set<Root> X{{2, 3}, {1, 2}, {1, 3}, {1, 4}};
    auto g = good_lattice(sys, P, X);
    REQUIRE(g.vertices.size() == 14);
    std::vector<std::pair<int, int>> expect_e{
        {0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 8}, {4, 9},
        {5, 9}, {5, 10}, {6, 10}, {7, 11}, {8, 11}, {8, 12}, {9, 12}, {9, 13}, {10, 13}};
    CHECK(g.edges == expect_e);
    // Same Levi-tag multiset as the X = R+ graph on P_{2,1,1}.
    std::multiset<std::string> tagset;
    for (const auto& v : g.vertices) {
        std::string t = v.tag;
        if (t == "PI")
            for (int b : v.levi_blocks) t += "," + std::to_string(b);
        tagset.insert(t);
    }
    std::multiset<std::string> expect{"SS", "SS", "SS", "SS",
                                      "PI,2,1,1", "PI,2,1,1", "PI,1,2,1", "PI,1,2,1",
                                      "PI,1,1,2", "PI,1,1,2", "PI,3,1", "PI,3,1",
                                      "PI,1,3", "PI,1,3"};
    CHECK(tagset == expect);
}

TEST_CASE("filtration chain walks the GL_2 chain") {
    auto sys = build_system(2, 3);
    StdParabolic B = StdParabolic::borel(2);
    auto chain = filtration_chain(sys, B, BS({0, 3}), Root{1, 2});
    std::vector<std::vector<Int>> expect{BS({0, 3}), BS({1, 2}), BS({2, 1}), BS({3, 0})};
    CHECK(chain == expect);
}
