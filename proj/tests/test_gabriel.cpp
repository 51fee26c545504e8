#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "algpres/builders.hpp"
#include "algpres/error.hpp"
#include "algpres/gabriel.hpp"

using namespace algpres;

namespace {

FieldRef Q() { return Field::rationals(); }

Poly monomial(FieldRef f, std::size_t d) {
    Poly p(d + 1, f->zero());
    p[d] = f->one();
    return p;
}

// Q[x, y]/(x^2, y^2) on 1, x, y, xy.
FDAlgebra exterior_like() {
    FieldRef f = Q();
    return FDAlgebra::from_products(
        f, {"1", "x", "y", "xy"},
        [&](std::size_t i, std::size_t j) {
            // Bit 0 is x, bit 1 is y.
            Vec v = zero_vec(f, 4);
            if ((i & j) == 0) v[i | j] = f->one();
            return v;
        },
        unit_vec(f, 4, 0));
}

void require_all_pass(const Report& r) {
    for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.witness);
    CHECK(r.checks.size() == 6);
}

std::string error_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const AlgebraError& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("pseudo presentations of elementary algebras") {
    FieldRef f = Q();
    auto ut = build::upper_triangular(f, 2);
    auto p = presentation_pseudo(build_splitting(ut));
    require_all_pass(p.report);
    CHECK(p.quiver().vertex_count() == 2);
    REQUIRE(p.quiver().arrow_count() == 1);
    CHECK(p.relations.empty());
    CHECK(p.path_algebra().dim() == 3);
    CHECK(p.admissible);

    auto cubic = build::polynomial_quotient(f, monomial(f, 3));
    auto pc = presentation_pseudo(build_splitting(cubic));
    require_all_pass(pc.report);
    CHECK(pc.truncation == 3);
    CHECK(pc.quiver().arrow_count() == 1);
    CHECK(pc.relations.empty());

    // One step past the Loewy length the truncation no longer hides a^3.
    auto pc4 = presentation_pseudo(build_splitting(cubic), {0, 4});
    require_all_pass(pc4.report);
    REQUIRE(pc4.relations.size() == 1);
    auto path = pc4.path_algebra();
    for (std::size_t i = 0; i < path.dim(); ++i)
        CHECK(pc4.relations[0].element[i].is_zero() == (path.arrow_count(i) != 3));
}

TEST_CASE("relations of a commutative local algebra") {
    auto a = exterior_like();
    auto p = presentation_pseudo(build_splitting(a));
    require_all_pass(p.report);
    CHECK(p.quiver().arrow_count() == 2);
    CHECK(p.truncation == 3);
    CHECK(p.admissible);
    // The kernel in degree 2 is 3-dimensional: x^2, y^2 and the commutator.
    auto path = p.path_algebra();
    CHECK(path.dim() == 7);
    std::vector<Vec> gens;
    for (const auto& r : p.relations) gens.push_back(r.element);
    CHECK(ideal_generated(path, gens).dim() == 3);

    // Dropping a relation leaves a quotient that is too big.
    Presentation broken = p;
    broken.relations.pop_back();
    auto rep = verify_presentation(broken);
    CHECK_FALSE(rep.find("quotient is isomorphic to the algebra")->pass);
    CHECK(rep.find("quotient is isomorphic to the algebra")->witness.find("dim") != std::string::npos);
    CHECK_FALSE(rep.find("relations generate the kernel")->pass);

    // Killing a generator drops the rank of the evaluation map.
    Presentation flat = p;
    flat.generators.arrows[0] = zero_vec(Q(), a.dim());
    CHECK_FALSE(verify_presentation(flat).find("evaluation map is a surjective unital homomorphism")->pass);
}

TEST_CASE("semisimple and non-elementary algebras") {
    FieldRef f = Q();
    auto ss = build::direct_sum(build::matrix_algebra(f, 2), build::ground(f));
    auto p = presentation_pseudo(build_splitting(ss));
    require_all_pass(p.report);
    CHECK(p.quiver().arrow_count() == 0);
    CHECK(p.relations.empty());
    CHECK(p.path_algebra().dim() == 5);

    auto block = build::block_triangular(f, 2);
    auto split = build_splitting(block);
    auto pb = presentation_pseudo(split);
    require_all_pass(pb.report);
    CHECK(pb.ranks == std::vector<std::size_t>{0, 1, 0, 0});
    // Pseudo words a|b|c are tensored over k, so degree 1 has a kernel.
    CHECK_FALSE(pb.admissible);

    auto pg = presentation_generalized_2nilpotent(split);
    require_all_pass(pg.report);
    CHECK(pg.quiver() == pb.quiver());
    CHECK(pg.path_algebra().dim() == 4 + 4 + 16);
}

TEST_CASE("square-zero pipeline") {
    FieldRef f = Q();
    auto ut = build::upper_triangular(f, 2);
    auto split = build_splitting(ut);
    auto pg = presentation_generalized_2nilpotent(split);
    require_all_pass(pg.report);
    CHECK(pg.relations.empty());
    CHECK(pg.quiver() == presentation_pseudo(split).quiver());

    auto dual = build::polynomial_quotient(f, monomial(f, 2));
    auto pd = presentation_generalized_2nilpotent(build_splitting(dual));
    require_all_pass(pd.report);
    CHECK(pd.quiver().arrow_count() == 1);
    CHECK(pd.relations.empty());

    auto cubic = build::polynomial_quotient(f, monomial(f, 3));
    CHECK(error_code([&] { presentation_generalized_2nilpotent(build_splitting(cubic)); }) == "RadicalNotSquareZero");
}

TEST_CASE("generalized evaluation after iota is the pseudo evaluation") {
    FieldRef f = Q();
    for (const auto& a : {build::block_triangular(f, 2), build::upper_triangular(f, 2)}) {
        auto split = build_splitting(a);
        auto pp = presentation_pseudo(split, {0, 2});
        auto pg = presentation_generalized_2nilpotent(split);
        auto pse = pp.path_algebra();
        auto gen = pg.path_algebra();
        Matrix phi_p = evaluation_matrix(pse, a, pp.lifts, pp.generators);
        Matrix phi_g = evaluation_matrix(gen, a, pg.lifts, pg.generators);
        CHECK(phi_g * iota(pse, gen) == phi_p);
    }
}

TEST_CASE("prime field with a claimed radical") {
    FieldRef f5 = Field::prime(5);
    auto ut = build::upper_triangular(f5, 3);
    // E12, E13, E23 sit at indices 1, 2, 4.
    SubspaceBasis r = SubspaceBasis::span(f5, 6, {unit_vec(f5, 6, 1), unit_vec(f5, 6, 2), unit_vec(f5, 6, 4)});
    auto split = build_splitting(ut, {r, std::nullopt, std::nullopt});
    auto p = presentation_pseudo(split, {0, 4});
    require_all_pass(p.report);
    CHECK(p.quiver().arrow_count() == 2);
    CHECK(p.relations.empty());
}

TEST_CASE("pipeline preconditions") {
    FieldRef f = Q();
    auto cubic = build::polynomial_quotient(f, monomial(f, 3));
    CHECK(error_code([&] { presentation_pseudo(build_splitting(cubic), {0, 2}); }) == "PreconditionFailed");

    auto ut = build::upper_triangular(f, 2);
    Vec skew{f->one(), f->one(), f->zero()};
    auto bad = build_splitting(ut, {std::nullopt, std::vector<Vec>{skew, unit_vec(f, 3, 2)}, std::nullopt});
    CHECK(error_code([&] { presentation_pseudo(bad); }) == "SplittingInvalid");
}

TEST_CASE("twisted example over F2(t)") {
    auto a = twisted_example_algebra();
    CHECK(a.dim() == 8);
    auto rep = twisted_example_suite();
    REQUIRE(rep.checks.size() == 8);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.witness);
}
