#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "algpres/error.hpp"
#include "algpres/splitting.hpp"
#include "bimodule_oracle.hpp"

using namespace algpres;
using namespace testsupport;

namespace {

BimoduleData trivial(FieldRef f, std::size_t n) {
    BimoduleData m;
    m.left_algebra = build::ground(f);
    m.right_algebra = build::ground(f);
    m.dim = n;
    m.left_action = {Matrix::identity(f, n)};
    m.right_action = {Matrix::identity(f, n)};
    return m;
}

// Column vectors Q^2 as an M_2(Q)-Q bimodule.
BimoduleData column_space() {
    FieldRef f = Field::rationals();
    BimoduleData m;
    m.left_algebra = build::matrix_algebra(f, 2);  // E11 E12 E21 E22
    m.right_algebra = build::ground(f);
    m.dim = 2;
    for (std::size_t k = 0; k < 4; ++k) {
        Matrix a(f, 2, 2);
        a.at(k / 2, k % 2) = f->one();
        m.left_action.push_back(a);
    }
    m.right_action = {Matrix::identity(f, 2)};
    return m;
}

} // namespace

TEST_CASE("bimodule rank on small examples") {
    FieldRef f = Field::rationals();
    CHECK(bimodule_min_generators(trivial(f, 0)).rank == 0);
    auto two = bimodule_min_generators(trivial(f, 2));
    CHECK(two.rank == 2);
    CHECK(two.generators_verified);

    auto col = column_space();
    auto r = bimodule_min_generators(col);
    CHECK(r.rank == 1);
    // Oracle: every nonzero coordinate vector generates on its own.
    auto acts = enveloping_action(col);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(oracle_closure(acts, SubspaceBasis::span(f, 2, {unit_vec(f, 2, i)})).dim() == 2);
    CHECK(r.seed_ranks.size() == 8);
}

TEST_CASE("module axioms are checked") {
    auto col = column_space();
    col.right_action[0].at(0, 0) = Field::rationals()->from_int(2);
    CHECK(module_failure(col).has_value());
    try {
        bimodule_min_generators(col);
        FAIL("expected NotAModule");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "NotAModule");
    }
}

TEST_CASE("bimodule rank matches the exhaustive oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        FieldRef f = Field::prime(trial % 2 ? 3 : 2);
        auto m = random_bimodule(f, rng, trial % 2 ? 4 : 6);
        REQUIRE(module_failure(m) == std::nullopt);
        auto r = bimodule_min_generators(m, trial);
        CHECK(r.exhaustive);
        std::size_t expected = oracle_rank(m);
        CHECK(r.rank == expected);
        auto sampled = bimodule_min_generators(m, trial, 0);
        CHECK_FALSE(sampled.exhaustive);
        CHECK(sampled.rank == expected);
    }
}

TEST_CASE("splitting of semisimple and upper-triangular algebras") {
    FieldRef f = Field::rationals();
    auto ss = build::direct_sum(build::matrix_algebra(f, 2), build::ground(f));
    auto s0 = build_splitting(ss);
    CHECK(s0.lifted_subalgebra == SubspaceBasis::whole(f, 5));
    CHECK(verify_splitting(s0).all_pass());
    for (const auto& p : graded_radical_bimodule(s0, 1)) CHECK(p.module.dim == 0);

    auto ut = build::upper_triangular(f, 2);
    auto diag = std::vector<Vec>{unit_vec(f, 3, 0), unit_vec(f, 3, 2)};
    auto s1 = build_splitting(ut, {std::nullopt, diag, std::nullopt});
    auto rep = verify_splitting(s1);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.witness);
    REQUIRE(s1.vertex_count() == 2);
    auto pieces = graded_radical_bimodule(s1, 1);
    REQUIRE(pieces.size() == 4);
    // Vertex order follows the idempotents: E11 first, then E22.
    for (const auto& p : pieces) CHECK(p.module.dim == (p.source == 0 && p.target == 1 ? 1u : 0u));
    for (const auto& p : pieces) CHECK(module_failure(p.module) == std::nullopt);
}

TEST_CASE("graded pieces add up to the radical layers") {
    FieldRef f = Field::rationals();
    for (const auto& a : {build::upper_triangular(f, 3), build::block_triangular(f, 2),
                          build::polynomial_quotient(f, {f->zero(), f->zero(), f->zero(), f->one()})}) {
        auto s = build_splitting(a);
        CHECK(verify_splitting(s).all_pass());
        auto powers = ideal_powers(a, s.radical.basis);
        for (std::size_t l = 1; l <= powers.size(); ++l) {
            std::size_t total = 0;
            for (const auto& p : graded_radical_bimodule(s, l)) total += p.module.dim;
            std::size_t below = l < powers.size() ? powers[l].dim() : 0;
            CHECK(total == powers[l - 1].dim() - below);
        }
    }
}

TEST_CASE("broken splittings are rejected or reported") {
    FieldRef f = Field::rationals();
    auto ut = build::upper_triangular(f, 2);
    try {
        build_splitting(ut, {std::nullopt, std::vector<Vec>{unit_vec(f, 3, 0), unit_vec(f, 3, 1)}, std::nullopt});
        FAIL("expected SplittingInvalid");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "SplittingInvalid");
    }
    // E11 + E12 and E22 span a complement but not a subalgebra.
    Vec skew{f->one(), f->one(), f->zero()};
    auto s = build_splitting(ut, {std::nullopt, std::vector<Vec>{skew, unit_vec(f, 3, 2)}, std::nullopt});
    auto rep = verify_splitting(s);
    CHECK_FALSE(rep.all_pass());
    CHECK_FALSE(rep.find("lifted subalgebra is a unital subalgebra")->pass);
}
