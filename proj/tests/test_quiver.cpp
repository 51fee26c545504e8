#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "algpres/builders.hpp"
#include "algpres/error.hpp"
#include "algpres/quiver.hpp"
#include "bimodule_oracle.hpp"

#include <algorithm>
#include <tuple>

using namespace algpres;
using namespace testsupport;

namespace {

Quiver kronecker() {
    Quiver q({"1", "2"});
    q.add_arrow(0, 1, "a");
    q.add_arrow(0, 1, "b");
    return q;
}

// Sum of the entries of N^len for the adjacency matrix N.
std::uint64_t walk_count(const Quiver& q, std::size_t len) {
    std::size_t n = q.vertex_count();
    std::vector<std::uint64_t> counts(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) counts[i * n + i] = 1;
    for (std::size_t step = 0; step < len; ++step) {
        std::vector<std::uint64_t> next(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) next[i * n + j] += counts[i * n + k] * q.arrows_between(k, j);
        counts = next;
    }
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

} // namespace

TEST_CASE("dot output") {
    CHECK(to_dot(Quiver{}) == "digraph { }");
    Quiver one({"1", "2"});
    one.add_arrow(0, 1, "a");
    CHECK(to_dot(one).find("v1 -> v2 [label=\"a\"]") != std::string::npos);
    CHECK(to_dot(one).find("v1 [label=\"1\"]") != std::string::npos);
    Quiver loop({"x"});
    loop.add_arrow(0, 0, "l");
    CHECK(to_dot(loop).find("v1 -> v1") != std::string::npos);
    CHECK(to_dot(loop) == to_dot(loop));
}

TEST_CASE("quiver validation and equality") {
    Quiver q({"1"});
    CHECK_THROWS_AS(q.add_arrow(0, 1, "bad"), AlgebraError);
    CHECK(kronecker() == kronecker());
    Quiver other({"1", "2"});
    other.add_arrow(1, 0, "a");
    other.add_arrow(0, 1, "b");
    CHECK_FALSE(other == kronecker());
    CHECK(kronecker().arrows_between(0, 1) == 2);
    CHECK(kronecker().arrows_from(1).empty());
}

TEST_CASE("path enumeration") {
    Quiver point({"1"});
    CHECK(enumerate_paths(point, 5).size() == 1);

    Quiver loop({"1"});
    loop.add_arrow(0, 0, "l");
    auto lp = enumerate_paths(loop, 3);
    REQUIRE(lp.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(lp[k].arrows == std::vector<std::size_t>(k, 0));

    auto kp = enumerate_paths(kronecker(), 2);
    REQUIRE(kp.size() == 4);
    CHECK(kp[0].length() == 0);
    CHECK(kp[2].arrows == std::vector<std::size_t>{0});
    CHECK(kp[3].arrows == std::vector<std::size_t>{1});

    // Counts per length match powers of the adjacency matrix.
    Quiver mixed({"1", "2", "3"});
    mixed.add_arrow(0, 1, "a");
    mixed.add_arrow(1, 0, "b");
    mixed.add_arrow(1, 2, "c");
    mixed.add_arrow(2, 2, "d");
    mixed.add_arrow(0, 2, "e");
    auto mp = enumerate_paths(mixed, 5);
    for (std::size_t len = 0; len <= 5; ++len) {
        auto got = std::count_if(mp.begin(), mp.end(), [&](const QuiverPath& p) { return p.length() == len; });
        CHECK(static_cast<std::uint64_t>(got) == walk_count(mixed, len));
    }
    for (std::size_t i = 1; i < mp.size(); ++i) {
        const auto &a = mp[i - 1], &b = mp[i];
        bool ordered = a.length() < b.length() ||
                       (a.length() == b.length() && std::tie(a.start, a.arrows) < std::tie(b.start, b.arrows));
        CHECK(ordered);
        for (std::size_t k = 1; k < b.arrows.size(); ++k)
            CHECK(mixed.arrow(b.arrows[k - 1]).target == mixed.arrow(b.arrows[k]).source);
    }
}

TEST_CASE("quiver of small algebras") {
    FieldRef f = Field::rationals();

    auto ss = quiver_of_algebra(build_splitting(build::direct_sum(build::matrix_algebra(f, 2), build::ground(f))));
    CHECK(ss.quiver.vertex_count() == 2);
    CHECK(ss.quiver.arrow_count() == 0);

    auto ut = build::upper_triangular(f, 2);
    auto split = build_splitting(ut, {std::nullopt, std::vector<Vec>{unit_vec(f, 3, 0), unit_vec(f, 3, 2)}, std::nullopt});
    auto uq = quiver_of_algebra(split);
    REQUIRE(uq.quiver.arrow_count() == 1);
    CHECK(uq.quiver.arrow(0).source == 0);
    CHECK(uq.quiver.arrow(0).target == 1);
    CHECK(uq.ranks == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 0}});
    // The witness is E12 up to a scalar and generates the radical.
    CHECK(uq.witnesses[0][0].is_zero());
    CHECK(uq.witnesses[0][2].is_zero());
    CHECK_FALSE(uq.witnesses[0][1].is_zero());

    auto dual = build::polynomial_quotient(f, {f->zero(), f->zero(), f->one()});
    auto dq = quiver_of_algebra(build_splitting(dual));
    REQUIRE(dq.quiver.arrow_count() == 1);
    CHECK(dq.quiver.arrow(0).source == dq.quiver.arrow(0).target);

    // Each rank agrees with the exhaustive oracle over F3, where it is cheap.
    FieldRef f3 = Field::prime(3);
    auto block = build::block_triangular(f3, 1);
    auto bsplit = build_splitting(block, {SubspaceBasis::span(f3, 3, {unit_vec(f3, 3, 1)}), std::nullopt, std::nullopt});
    auto bq = quiver_of_algebra(bsplit);
    for (const auto& piece : graded_radical_bimodule(bsplit, 1))
        CHECK(bq.ranks[piece.source][piece.target] == oracle_rank(piece.module));
    CHECK(bq.quiver.arrow_count() == 1);
}

TEST_CASE("block triangular algebra has a single arrow") {
    FieldRef f = Field::rationals();
    auto aq = quiver_of_algebra(build_splitting(build::block_triangular(f, 2)));
    REQUIRE(aq.quiver.vertex_count() == 2);
    CHECK(aq.ranks == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 0}});
}

TEST_CASE("semisimple algebras have no arrows") {
    FieldRef f = Field::rationals();
    for (const auto& a : {build::matrix_algebra(f, 3), build::polynomial_quotient(f, {f->from_int(-1), f->zero(), f->one()}),
                          build::direct_sum(build::ground(f), build::ground(f))}) {
        auto q = quiver_of_algebra(build_splitting(a));
        CHECK(q.quiver.arrow_count() == 0);
    }
}
