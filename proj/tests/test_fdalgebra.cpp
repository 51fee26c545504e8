#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "algpres/builders.hpp"
#include "algpres/error.hpp"
#include "algpres/fdalgebra.hpp"
#include "support.hpp"

using namespace algpres;
using namespace testsupport;

namespace {

FieldRef Q() { return Field::rationals(); }

Poly pol(FieldRef f, std::vector<std::string> cs) {
    Poly p;
    for (auto& c : cs) p.push_back(f->parse(c));
    return p;
}

bool nilpotent(const FDAlgebra& a, const Vec& x) { return is_zero_vec(a.power(x, a.dim())); }

// rad A = {x : a*x nilpotent for every a}, by enumeration over a small prime field.
SubspaceBasis radical_oracle(const FDAlgebra& alg) {
    auto all = all_vectors(alg.field(), alg.dim());
    SubspaceBasis out(alg.field(), alg.dim());
    for (const auto& x : all) {
        bool ok = true;
        for (const auto& a : all)
            if (!nilpotent(alg, alg.multiply(a, x))) {
                ok = false;
                break;
            }
        if (ok) out.insert(x);
    }
    return out;
}

void check_idempotents(const FDAlgebra& alg, const std::vector<SimpleComponent>& comps) {
    Vec total = zero_vec(alg.field(), alg.dim());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const Vec& e = comps[c].idempotent;
        total = add_vec(total, e);
        for (std::size_t i = 0; i < alg.dim(); ++i)
            CHECK(alg.multiply(alg.basis_vector(i), e) == alg.multiply(e, alg.basis_vector(i)));
        for (std::size_t d = 0; d < comps.size(); ++d) {
            Vec p = alg.multiply(e, comps[d].idempotent);
            if (c == d) CHECK(p == e);
            else CHECK(is_zero_vec(p));
        }
        CHECK(comps[c].algebra.associativity_failure() == std::nullopt);
    }
    CHECK(total == alg.one());
}

} // namespace

TEST_CASE("algebra construction rejects a non-identity and finds associativity failures") {
    FieldRef f = Q();
    auto ut = build::upper_triangular(f, 2);
    CHECK(ut.dim() == 3);
    CHECK(ut.associativity_failure() == std::nullopt);
    CHECK_FALSE(ut.is_commutative());

    std::vector<SparseVec> table;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) table.push_back(ut.basis_product(i, j));
    try {
        FDAlgebra bad(f, ut.labels(), table, unit_vec(f, 3, 0));
        FAIL("expected NotUnital");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "NotUnital");
    }

    // 1, x, y with x*x = y, x*y = 0, y*x = 1: (x*x)*x = 1 but x*(x*x) = 0.
    auto tri = build::polynomial_quotient(f, pol(f, {"0", "0", "0", "1"}));
    std::vector<SparseVec> t3;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) t3.push_back(tri.basis_product(i, j));
    t3[1 * 3 + 2] = {};
    t3[2 * 3 + 1] = to_sparse(Vec{f->one(), f->zero(), f->zero()});
    FDAlgebra broken(f, tri.labels(), t3, unit_vec(f, 3, 0));
    CHECK(broken.associativity_failure().has_value());
}

TEST_CASE("radical: small examples") {
    FieldRef f = Q();
    auto ut = build::upper_triangular(f, 2);  // E11, E12, E22
    auto r = radical(ut);
    CHECK(r.basis == SubspaceBasis::span(f, 3, {unit_vec(f, 3, 1)}));
    CHECK(r.method == "trace-form");

    // Brute force over coordinate subspaces: among those that are ideals,
    // nilpotent ones are contained in span{E12}.
    for (unsigned mask = 1; mask < 8; ++mask) {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < 3; ++i)
            if (mask & (1u << i)) gens.push_back(unit_vec(f, 3, i));
        auto s = SubspaceBasis::span(f, 3, gens);
        if (ideal_failure(ut, s)) continue;
        bool nil = true;
        for (const auto& v : gens) nil = nil && nilpotent(ut, v);
        if (nil) CHECK(r.basis.contains(s));
    }

    FieldRef f5 = Field::prime(5);
    auto m2 = build::matrix_algebra(f5, 2);
    CHECK(radical(m2).basis.is_zero());

    auto dual = build::polynomial_quotient(f, pol(f, {"0", "0", "1"}));
    CHECK(radical(dual).basis == SubspaceBasis::span(f, 2, {unit_vec(f, 2, 1)}));
}

TEST_CASE("radical agrees with the nilpotent-element oracle over small prime fields") {
    FieldRef f5 = Field::prime(5);
    FieldRef f3 = Field::prime(3);
    FieldRef f2 = Field::prime(2);
    std::vector<FDAlgebra> algs{
        build::upper_triangular(f5, 2),
        build::polynomial_quotient(f3, pol(f3, {"0", "0", "1"})),
        build::polynomial_quotient(f2, pol(f2, {"1", "0", "1"})),        // (x+1)^2
        build::polynomial_quotient(f2, pol(f2, {"0", "1", "1", "1"})),   // x(x^2+x+1)
        build::direct_sum(build::polynomial_quotient(f2, pol(f2, {"0", "0", "1"})), build::ground(f2)),
    };
    for (const auto& a : algs) {
        auto r = radical(a);
        CHECK(r.basis == radical_oracle(a));
    }
}

TEST_CASE("radical in small characteristic needs a claim for noncommutative algebras") {
    FieldRef f2 = Field::prime(2);
    auto ut = build::upper_triangular(f2, 3);  // dim 6 > char
    try {
        radical(ut);
        FAIL("expected SmallCharacteristicNeedsClaim");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "SmallCharacteristicNeedsClaim");
    }
    // E12, E13, E23 in label order E11 E12 E13 E22 E23 E33.
    auto good = SubspaceBasis::span(f2, 6, {unit_vec(f2, 6, 1), unit_vec(f2, 6, 2), unit_vec(f2, 6, 4)});
    auto r = radical(ut, good);
    CHECK(r.method == "claimed");
    CHECK(r.basis == radical_oracle(ut));

    auto not_ideal = SubspaceBasis::span(f2, 6, {unit_vec(f2, 6, 1)});
    auto too_small = SubspaceBasis::span(f2, 6, {unit_vec(f2, 6, 2)});
    auto not_nil = SubspaceBasis::span(f2, 6, {unit_vec(f2, 6, 0), unit_vec(f2, 6, 1), unit_vec(f2, 6, 2)});
    for (const auto& bad : {not_ideal, too_small, not_nil}) {
        try {
            radical(ut, bad);
            FAIL("expected ClaimRejected");
        } catch (const AlgebraError& e) {
            CHECK(e.code() == "ClaimRejected");
        }
    }
}

TEST_CASE("Frobenius route over a function field") {
    FieldRef k = f2t();
    auto field_ext = build::polynomial_quotient(k, pol(k, {"t", "0", "1"}));  // k[x]/(x^2 - t), a field
    auto r = radical(field_ext);
    CHECK(r.method == "frobenius");
    CHECK(r.basis.is_zero());
    CHECK(semisimplicity(field_ext).semisimple);

    auto dual = build::polynomial_quotient(k, pol(k, {"0", "0", "1"}));
    CHECK(radical(dual).basis == SubspaceBasis::span(k, 2, {unit_vec(k, 2, 1)}));

    // x^2 + t^2 = (x + t)^2 in characteristic 2: radical spanned by x + t.
    auto sq = build::polynomial_quotient(k, pol(k, {"t^2", "0", "1"}));
    CHECK(radical(sq).basis == SubspaceBasis::span(k, 2, {Vec{k->parse("t"), k->one()}}));
}

TEST_CASE("loewy length") {
    FieldRef f = Q();
    auto m2 = build::matrix_algebra(f, 2);
    CHECK(loewy_length(m2, radical(m2).basis) == 1);
    auto cube = build::polynomial_quotient(f, pol(f, {"0", "0", "0", "1"}));
    CHECK(loewy_length(cube, radical(cube).basis) == 3);
    auto ut3 = build::upper_triangular(f, 3);
    CHECK(loewy_length(ut3, radical(ut3).basis) == 3);
}

TEST_CASE("quotients") {
    FieldRef f = Q();
    auto ut = build::upper_triangular(f, 2);
    auto same = quotient_algebra(ut, SubspaceBasis(f, 3));
    CHECK(same.algebra == ut);
    CHECK(quotient_algebra(ut, SubspaceBasis::whole(f, 3)).algebra.dim() == 0);

    auto q = quotient_algebra(ut, radical(ut).basis);
    CHECK(q.algebra.dim() == 2);
    CHECK(q.algebra.is_commutative());
    CHECK(q.reps == std::vector<std::size_t>{0, 2});
    // Q x Q: both coset basis vectors are idempotent and orthogonal.
    CHECK(q.algebra.multiply(unit_vec(f, 2, 0), unit_vec(f, 2, 0)) == unit_vec(f, 2, 0));
    CHECK(is_zero_vec(q.algebra.multiply(unit_vec(f, 2, 0), unit_vec(f, 2, 1))));
    // The projection is multiplicative and unital.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(q.projection.apply(ut.multiply(ut.basis_vector(i), ut.basis_vector(j))) ==
                  q.algebra.multiply(q.projection.column(i), q.projection.column(j)));
    CHECK(q.projection.apply(ut.one()) == q.algebra.one());

    try {
        quotient_algebra(ut, SubspaceBasis::span(f, 3, {unit_vec(f, 3, 0)}));
        FAIL("expected NotAnIdeal");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "NotAnIdeal");
    }
}

TEST_CASE("center") {
    FieldRef f = Q();
    auto cube = build::polynomial_quotient(f, pol(f, {"0", "0", "0", "1"}));
    CHECK(center(cube) == SubspaceBasis::whole(f, 3));
    auto m2 = build::matrix_algebra(f, 2);
    CHECK(center(m2) == SubspaceBasis::span(f, 4, {m2.one()}));
    auto ut = build::upper_triangular(f, 3);
    CHECK(center(ut) == SubspaceBasis::span(f, 6, {ut.one()}));
}

TEST_CASE("semisimple decomposition") {
    FieldRef f = Q();
    auto a = build::direct_sum(build::matrix_algebra(f, 2), build::ground(f));
    auto comps = semisimple_decompose(a);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].algebra.dim() == 4);
    CHECK(comps[1].algebra.dim() == 1);
    check_idempotents(a, comps);
    for (const auto& c : comps) CHECK(c.simplicity == Simplicity::Verified);

    auto m3 = build::matrix_algebra(f, 3);
    auto one = semisimple_decompose(m3);
    REQUIRE(one.size() == 1);
    CHECK(one[0].idempotent == m3.one());

    auto split = build::polynomial_quotient(f, pol(f, {"-1", "0", "1"}));
    auto halves = semisimple_decompose(split);
    REQUIRE(halves.size() == 2);
    std::vector<Vec> expected{Vec{f->parse("1/2"), f->parse("1/2")}, Vec{f->parse("1/2"), f->parse("-1/2")}};
    CHECK(((halves[0].idempotent == expected[0] && halves[1].idempotent == expected[1]) ||
           (halves[0].idempotent == expected[1] && halves[1].idempotent == expected[0])));
    check_idempotents(split, halves);

    auto three = build::polynomial_quotient(f, pol(f, {"0", "-1", "0", "1"}));  // x^3 - x
    auto parts = semisimple_decompose(three);
    CHECK(parts.size() == 3);
    check_idempotents(three, parts);

    auto gauss = build::polynomial_quotient(f, pol(f, {"1", "0", "1"}));
    auto g = semisimple_decompose(gauss);
    REQUIRE(g.size() == 1);
    CHECK(g[0].simplicity == Simplicity::Verified);

    try {
        semisimple_decompose(build::upper_triangular(f, 2));
        FAIL("expected NotSemisimple");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "NotSemisimple");
    }
}

TEST_CASE("decomposition over finite and function fields") {
    FieldRef f5 = Field::prime(5);
    auto a = build::direct_sum(build::matrix_algebra(f5, 2), build::direct_sum(build::ground(f5), build::ground(f5)));
    auto comps = semisimple_decompose(a);
    CHECK(comps.size() == 3);
    check_idempotents(a, comps);

    FieldRef k = f2t();
    auto fext = build::polynomial_quotient(k, pol(k, {"t", "0", "1"}));
    auto s = simplicity_of(fext);
    CHECK(s.simple);
    CHECK(s.status == Simplicity::Verified);
    auto both = semisimple_decompose(build::direct_sum(fext, fext));
    CHECK(both.size() == 2);
}

TEST_CASE("radical of a tensor product with an opposite algebra") {
    FieldRef f = Q();
    auto ut = build::upper_triangular(f, 2);
    auto dual = build::polynomial_quotient(f, pol(f, {"0", "0", "1"}));
    auto e = tensor_with_opposite(ut, dual);
    CHECK(e.associativity_failure() == std::nullopt);
    CHECK(tensor_radical(ut, radical(ut).basis, dual, radical(dual).basis) == radical(e).basis);

    // Inseparable case: F (x) F over F_2(t) with F = k(sqrt t) is F[y]/(y - x)^2.
    FieldRef k = f2t();
    auto fext = build::polynomial_quotient(k, pol(k, {"t", "0", "1"}));
    auto ff = tensor_with_opposite(fext, fext);
    auto zero = SubspaceBasis(k, 2);
    auto r = tensor_radical(fext, zero, fext, zero);
    CHECK(r.dim() == 2);
    CHECK(r == radical(ff).basis);
}
