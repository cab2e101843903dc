#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ck/characters.hpp"
#include "ck/divdiff.hpp"
#include "ck/verify.hpp"

#include "helpers.hpp"

using namespace ck;
using ckt::P;

TEST_CASE("rho vectors") {
    CHECK(rho_vector(GroupType::A, 3) == VectorZ{2, 1, 0});
    CHECK(rho_vector(GroupType::C, 3) == VectorZ{3, 2, 1});
    CHECK(rho_vector(GroupType::B, 2) == VectorZ{3, 1}); // 3/2, 1/2 on the unit-2 lattice
}

TEST_CASE("denominators, smallest cases") {
    auto vs2 = make_vars(2);
    CHECK(weyl_denominator(GroupType::A, 2, DenominatorForm::Product) == P(vs2, "x1 - x2"));
    auto vs1 = make_vars(1);
    CHECK(weyl_denominator(GroupType::C, 1, DenominatorForm::Product) == P(vs1, "x1 - x1^-1"));
    CHECK(weyl_denominator(GroupType::D, 2, DenominatorForm::Product) ==
          P(vs2, "(x1 - x2)*(1 - x1^-1*x2^-1)"));
    CHECK(weyl_denominator(GroupType::B, 1, DenominatorForm::Sum).varset()->unit() == 2);
}

TEST_CASE("sum form equals product form") { CHECK(check_eq69(3).pass); }

TEST_CASE("characters, smallest cases") {
    auto vs2 = make_vars(2);
    CHECK(character(GroupType::A, {1, 0}, 2) == P(vs2, "x1 + x2"));
    auto vs1 = make_vars(1);
    CHECK(character(GroupType::C, {1}, 1) == P(vs1, "x1 + x1^-1"));
    CHECK(character(GroupType::B, {1}, 1) == P(vs1, "x1 + 1 + x1^-1"));
    CHECK(character(GroupType::D, {1}, 2) == P(vs2, "x1 + x2 + x1^-1 + x2^-1"));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(character(GroupType::A, {1, 2}, 2), std::domain_error);
    CHECK_THROWS_AS(character(GroupType::A, {1, 1, 1}, 2), std::domain_error);
    CHECK_THROWS_AS(character(GroupType::D, {1, 1}, 2), std::domain_error);
    CHECK_THROWS_AS(character(GroupType::BC, {1}, 1), std::domain_error);
}

TEST_CASE("schur oracle") {
    auto vs = make_vars(2);
    CHECK(schur_oracle({1, 1}, 2) == P(vs, "x1*x2"));
    CHECK(schur_oracle({2}, 2) == P(vs, "x1^2 + x1*x2 + x2^2"));
    CHECK(schur_oracle({}, 2).is_constant(Rat(1)));
    CHECK(schur_oracle({1, 1, 1}, 2).is_zero());
}

TEST_CASE("oracle equivalence sweep") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<Partition> lambdas;
        Partition p;
        auto gen = [&](auto&& self, int budget, int hi) -> void {
            lambdas.push_back(p);
            if (static_cast<int>(p.size()) == n) return;
            for (int e = std::min(budget, hi); e >= 1; --e) {
                p.push_back(e);
                self(self, budget - e, e);
                p.pop_back();
            }
        };
        gen(gen, 4, 4);
        for (const auto& lam : lambdas)
            CHECK(character(GroupType::A, lam, n) == schur_oracle(lam, n));
    }
}

TEST_CASE("characters are group invariant") {
    int n = 2;
    auto vs = make_vars(n);
    Block xb = vs->block("x");
    LaurentPoly sp = character(GroupType::C, {2, 1}, n);
    for (int i = 1; i < n; ++i)
        CHECK(act_poly(GroupType::C, Generator::s(i), sp, xb) == sp);
    CHECK(act_poly(GroupType::C, Generator::s(n), sp, xb) == sp);
    LaurentPoly od = character(GroupType::D, {2}, n);
    CHECK(act_poly(GroupType::D, Generator::tau(n), od, xb) == od);
}

TEST_CASE("characters agree with the maximal divided difference") {
    CHECK(check_eq1013(GroupType::A, 2, 3).pass);
    CHECK(check_eq1013(GroupType::C, 2, 3).pass);
    CHECK(check_eq1013(GroupType::B, 2, 3).pass);
    CHECK(check_eq1013(GroupType::D, 2, 3).pass);
}

TEST_CASE("odd symplectic specialization is group fixed") {
    // the interpolating family through the full maximal word, at beta = -1
    int n = 2;
    auto vs = make_vars(n, false, {"beta"});
    Block xb = vs->block("x");
    OpWord maxword =
        opword_from_generators(GroupType::BC, n, max_element_word(GroupType::BC, n), 'x');
    for (Partition lam : {Partition{1, 0}, Partition{2, 1}}) {
        Exp e(vs->size(), 0);
        for (size_t i = 0; i < lam.size(); ++i) e[xb.pos[i]] = lam[i];
        LaurentPoly top = LaurentPoly::monomial(vs, e, Rat(1));
        LaurentPoly image = apply_opword(top, maxword).substitute("beta", Rat(-1));
        for (int i = 1; i < n; ++i)
            CHECK(act_poly(GroupType::BC, Generator::s(i), image, xb) == image);
        CHECK(act_poly(GroupType::BC, Generator::s(n), image, xb) == image);
    }
}

TEST_CASE("transplant moves blocks") {
    auto local = make_vars(2);
    auto target = make_vars(2, true);
    LaurentPoly f = P(local, "x1 + x2^-1");
    LaurentPoly g = transplant(f, local->block("x"), target, target->block("y"));
    CHECK(g == P(target, "y1 + y2^-1"));
    Block y1_only{{target->index_of("y1")}};
    CHECK_THROWS_AS(transplant(P(local, "x1"), Block{{1}}, target, y1_only), std::domain_error);
}
