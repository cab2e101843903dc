#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ck/errors.hpp"
#include "ck/keypoly.hpp"
#include "ck/scalarprod.hpp"

#include "helpers.hpp"

#include <numeric>

using namespace ck;
using ckt::P;

TEST_CASE("index parsing") {
    KeyIndex idx = parse_key_index("BC:-1,2:hat");
    CHECK(idx.type == GroupType::BC);
    CHECK(idx.v == VectorZ{-1, 2});
    CHECK(idx.hatted);
    CHECK(to_string(idx) == "BC:-1,2:hat");
    CHECK_THROWS_AS(parse_key_index("Q:1"), std::domain_error);
    CHECK_THROWS_AS(parse_key_index("A:one"), std::domain_error);
}

TEST_CASE("dominant monomials start both families") {
    auto vs = make_vars(2);
    KeyTable keys(vs);
    CHECK(keys.key(GroupType::A, {2, 1}) == P(vs, "x1^2*x2"));
    CHECK(keys.key(GroupType::A, {2, 1}, true) == P(vs, "x1^2*x2"));
}

TEST_CASE("one raising step") {
    auto vs = make_vars(2);
    KeyTable keys(vs);
    CHECK(keys.key(GroupType::A, {0, 1}) == P(vs, "x1 + x2"));
    CHECK(keys.key(GroupType::A, {0, 1}, true) == P(vs, "x2"));
}

TEST_CASE("symplectic rank one") {
    auto vs = make_vars(1);
    KeyTable keys(vs);
    CHECK(keys.key(GroupType::C, {-1}) == P(vs, "x1 + x1^-1"));
}

TEST_CASE("interpolating family keeps beta") {
    auto vs = make_vars(1, false, {"beta"});
    KeyTable keys(vs);
    CHECK(keys.key(GroupType::BC, {-1}) == P(vs, "x1 + beta + x1^-1"));
    CHECK(keys.key(GroupType::BC, {-1}).substitute("beta", Rat(0)) == P(vs, "x1 + x1^-1"));
}

TEST_CASE("invalid indices") {
    auto vs2 = make_vars(2);
    KeyTable keys(vs2);
    CHECK_THROWS_AS(keys.key(GroupType::A, {-1, 0}), std::domain_error);
    CHECK_THROWS_AS(keys.key(GroupType::D, {1, -1}), std::domain_error);
    CHECK_THROWS_AS(keys.key(GroupType::A, {1, 2, 3}), std::domain_error);
}

TEST_CASE("index enumeration") {
    CHECK(enumerate_indices(GroupType::A, 2, 1, IndexConstraint::Nonneg) ==
          std::vector<VectorZ>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(enumerate_indices(GroupType::D, 2, 2, IndexConstraint::LastZero) ==
          std::vector<VectorZ>{{0, 0}, {1, 0}, {2, 0}});
    // stars and bars
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 4; ++d) {
            long expect = 1; // binomial(n + d, n)
            for (int k = 1; k <= n; ++k) expect = expect * (d + k) / k;
            CHECK(static_cast<long>(
                      enumerate_indices(GroupType::A, n, d, IndexConstraint::Nonneg).size()) ==
                  expect);
        }
    // the type D window drops the parity-obstructed vectors
    auto dwin = enumerate_indices(GroupType::D, 2, 2);
    for (const auto& v : dwin) CHECK(valid_key_index(GroupType::D, v));
    CHECK(std::find(dwin.begin(), dwin.end(), VectorZ{1, -1}) == dwin.end());
    CHECK(std::find(dwin.begin(), dwin.end(), VectorZ{-1, -1}) != dwin.end());
}

TEST_CASE("raising path independence") {
    for (GroupType type : {GroupType::C, GroupType::D}) {
        auto vs = make_vars(2);
        KeyTable fwd(vs, 'x', false), bwd(vs, 'x', true);
        for (const auto& v : enumerate_indices(type, 2, 3)) {
            CHECK(fwd.key(type, v) == bwd.key(type, v));
            CHECK(fwd.key(type, v, true) == bwd.key(type, v, true));
        }
    }
}

TEST_CASE("pi stability") {
    auto vs = make_vars(3);
    KeyTable keys(vs);
    for (const auto& v : enumerate_indices(GroupType::C, 3, 3)) {
        LaurentPoly k = keys.key(GroupType::C, v);
        for (int i = 1; i < 3; ++i) {
            LaurentPoly image = apply_divdiff(k, DivDiff::pi(i));
            if (v[i - 1] > v[i]) {
                VectorZ w = act_vector(GroupType::C, Generator::s(i), v);
                CHECK(image == keys.key(GroupType::C, w));
            } else {
                CHECK(image == k);
            }
        }
    }
}

TEST_CASE("triangularity in the dominance order") {
    for (GroupType type : {GroupType::A, GroupType::C, GroupType::D}) {
        auto vs = make_vars(2);
        Block xb = vs->block("x");
        KeyTable keys(vs);
        for (const auto& v : enumerate_indices(type, 2, 3)) {
            LaurentPoly k = keys.key(type, v);
            bool saw_leading = false;
            for (const auto& [e, c] : k.terms()) {
                VectorZ u{e[xb.pos[0]], e[xb.pos[1]]};
                if (u == v) {
                    saw_leading = true;
                    CHECK(c == 1);
                } else {
                    CHECK(dominance_leq(v, u));
                }
            }
            CHECK(saw_leading);
        }
    }
}

TEST_CASE("homogeneity on the nonnegative orthant") {
    auto vs = make_vars(3);
    Block xb = vs->block("x");
    KeyTable keys(vs);
    for (const auto& v : enumerate_indices(GroupType::A, 3, 4, IndexConstraint::Nonneg)) {
        int deg = std::accumulate(v.begin(), v.end(), 0);
        for (bool hat : {false, true}) {
            LaurentPoly k = keys.key(GroupType::A, v, hat);
            for (const auto& [e, c] : k.terms()) {
                int d = 0;
                for (int p : xb.pos) d += e[p];
                CHECK(d == deg);
            }
        }
    }
}

TEST_CASE("all types coincide on the nonnegative orthant") {
    auto vs = make_vars(2, false, {"beta"});
    KeyTable keys(vs);
    for (const auto& v : enumerate_indices(GroupType::A, 2, 3, IndexConstraint::Nonneg)) {
        LaurentPoly a = keys.key(GroupType::A, v);
        CHECK(keys.key(GroupType::C, v) == a);
        CHECK(keys.key(GroupType::BC, v) == a);
        CHECK(keys.key(GroupType::D, v) == a);
    }
}
