// Relatively closed subsets of positive roots: validation, closure, the
// ordered decomposition of the complement, and shape equivalence.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgc/conjugacy.hpp"

using namespace lgc;

TEST_CASE("positive roots") {
    CHECK(positive_roots(2).size() == 1);
    CHECK(positive_roots(4).size() == 6);
    for (const Root& a : positive_roots(5)) CHECK(a.positive());
}

TEST_CASE("validate accepts the extremes and rejects a non-closed complement") {
    StdParabolic P = StdParabolic::from_blocks({2, 1});
    std::set<Root> levi{{1, 2}};
    std::set<Root> all{{1, 2}, {1, 3}, {2, 3}};
    CHECK_NOTHROW(validate(P, levi));
    CHECK_NOTHROW(validate(P, all));
    // Missing R(P)+ entirely.
    CHECK_THROWS(validate(P, std::set<Root>{}));
    // The part outside the Levi, {e_2-e_3}, is not W(P)-stable (s_1 moves it
    // to e_1-e_3).
    CHECK_THROWS(validate(P, std::set<Root>{{1, 2}, {2, 3}}));
    // Borel, n=3: X = {e_1-e_3} alone is valid (no sums, W(B) trivial), while
    // {e_1-e_2, e_2-e_3} misses the sum e_1-e_3.
    CHECK_NOTHROW(validate(StdParabolic::borel(3), std::set<Root>{{1, 3}}));
    CHECK_THROWS(validate(StdParabolic::borel(3), std::set<Root>{{1, 2}, {2, 3}}));
}

TEST_CASE("relative closure of one root") {
    // n=3, M_P = GL_2 x GL_1, X = R(P)+, alpha = e_1 - e_3: the W(P)-orbit of
    // alpha is {e_1-e_3, e_2-e_3}, so the closure is all of R+.
    StdParabolic P = StdParabolic::from_blocks({2, 1});
    RelClosedSet S0 = validate(P, {{1, 2}});
    RelClosedSet S1 = rel_closure(S0, Root{1, 3});
    CHECK(S1.X == std::set<Root>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("ordered decomposition of the complement") {
    CHECK(orderw_decompose(validate(StdParabolic::borel(2), {{1, 2}})).empty());
    CHECK(orderw_decompose(validate(StdParabolic::borel(2), {})) ==
          std::vector<Root>{Root{1, 2}});
    // n=3, GL_2 x GL_1, X = R(P)+: a single step of maximal height 2.
    auto dec = orderw_decompose(validate(StdParabolic::from_blocks({2, 1}), {{1, 2}}));
    REQUIRE(dec.size() == 1);
    CHECK(dec[0] == Root{1, 3});
    // Borel n=4, X = {}: heights are weakly decreasing.
    auto dec4 = orderw_decompose(validate(StdParabolic::borel(4), {}));
    for (std::size_t i = 1; i < dec4.size(); ++i)
        CHECK(dec4[i - 1].height() >= dec4[i].height());
}

TEST_CASE("w_set on the three reference shapes") {
    // X = R(P)+ -> all block shuffles; X = R+ -> identity only.
    StdParabolic P = StdParabolic::from_blocks({1, 2, 1});
    std::set<Root> levi{{2, 3}};
    std::set<Root> all;
    for (const Root& a : positive_roots(4)) all.insert(a);
    CHECK(w_set(validate(P, levi)).size() == 6);
    CHECK(w_set(validate(P, all)) == std::vector<Perm>{Perm::identity(4)});
    // The mixed shape: block 1 into blocks 2 and 3.
    std::set<Root> mixed{{2, 3}, {1, 2}, {1, 3}, {1, 4}};
    auto ws = w_set(validate(P, mixed));
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == Perm::identity(4));
    CHECK(ws[1] == Perm{{0, 2, 3, 1}});  // s_{e_2-e_3} s_{e_3-e_4}
}

TEST_CASE("good equivalence") {
    StdParabolic P = StdParabolic::from_blocks({2, 1});
    auto S = validate(P, {{1, 2}});
    auto w = good_equivalent(S, S);
    REQUIRE(w.has_value());
    CHECK(w->is_identity());
    // GL_2 x GL_1 vs GL_1 x GL_2 with the levi shapes are equivalent by the
    // block swap.
    StdParabolic Q = StdParabolic::from_blocks({1, 2});
    auto T = validate(Q, {{2, 3}});
    auto v = good_equivalent(S, T);
    REQUIRE(v.has_value());
    CHECK(S.P.conjugate(*v) == T.P);
    // Full X vs levi X are never equivalent.
    auto Sfull = validate(P, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(!good_equivalent(Sfull, S).has_value());
}

TEST_CASE("frozen counts of relatively closed sets") {
    auto count = [](std::vector<int> blocks) {
        return all_rel_closed(StdParabolic::from_blocks(blocks)).size();
    };
    CHECK(count({1, 1}) == 2);
    CHECK(count({2}) == 1);
    CHECK(count({1, 1, 1}) == 7);
    CHECK(count({2, 1}) == 2);
    CHECK(count({1, 2}) == 2);
    CHECK(count({3}) == 1);
    CHECK(count({1, 1, 1, 1}) == 40);
    CHECK(count({2, 1, 1}) == 7);
    CHECK(count({1, 2, 1}) == 7);
    CHECK(count({1, 1, 2}) == 7);
    CHECK(count({2, 2}) == 2);
    CHECK(count({3, 1}) == 2);
    CHECK(count({1, 3}) == 2);
    CHECK(count({4}) == 1);
}
