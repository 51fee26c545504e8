#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "algpres/builders.hpp"
#include "algpres/error.hpp"
#include "algpres/io.hpp"

#include "support.hpp"

using namespace algpres;

namespace {

std::string error_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const AlgebraError& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("fields and scalars round-trip") {
    FieldRef q = Field::rationals();
    FieldRef f7 = Field::prime(7);
    FieldRef ft = Field::rational_functions(Field::prime(2), "t");
    FieldRef ext = Field::extension(ft, {ft->parse("t"), ft->zero(), ft->one()}, "s");
    std::mt19937_64 rng(3);
    for (FieldRef f : {q, f7, ft, ext}) {
        auto j = io::Json::parse(io::field_to_json(f).dump());
        CHECK(io::field_from_json(j) == f);
        Vec v = testsupport::random_vec(f, 5, rng);
        CHECK(io::vec_from_json(f, io::Json::parse(io::vec_to_json(v).dump()), 5) == v);
    }
    CHECK(error_code([] { io::field_from_json(io::Json{{"kind", "R"}}); }) == "ParseError");
    CHECK(error_code([&] { io::vec_from_json(q, io::Json::array({"1"}), 2); }) == "ParseError");
}

TEST_CASE("algebras round-trip") {
    FieldRef f = Field::prime(5);
    for (const auto& a : {build::upper_triangular(f, 3), build::block_triangular(Field::rationals(), 2)}) {
        auto back = io::algebra_from_json(io::Json::parse(io::algebra_to_json(a).dump()));
        CHECK(back == a);
        CHECK(back.labels() == a.labels());
    }
    io::Json bad = io::algebra_to_json(build::upper_triangular(f, 2));
    bad["products"][0][0] = 9;
    CHECK(error_code([&] { io::algebra_from_json(bad); }) == "ParseError");
}

TEST_CASE("specs carry splitting hints") {
    FieldRef f = Field::prime(5);
    io::AlgebraSpec s{"ut3", build::upper_triangular(f, 3), {}};
    s.hints.claimed_radical = SubspaceBasis::span(f, 6, {unit_vec(f, 6, 1), unit_vec(f, 6, 2), unit_vec(f, 6, 4)});
    auto back = io::spec_from_json(io::spec_to_json(s));
    CHECK(back.name == "ut3");
    REQUIRE(back.hints.claimed_radical);
    CHECK(*back.hints.claimed_radical == *s.hints.claimed_radical);
    CHECK_FALSE(back.hints.lifted_subalgebra);
}

TEST_CASE("presentations round-trip and re-verify") {
    FieldRef f = Field::rationals();
    auto block = build::block_triangular(f, 2);
    auto split = build_splitting(block);
    for (const auto& p : {presentation_pseudo(split, {0, 3}), presentation_generalized_2nilpotent(split)}) {
        auto j = io::presentation_to_json(p);
        auto back = io::presentation_from_json(io::Json::parse(j.dump()));
        CHECK(back.flavor == p.flavor);
        CHECK(back.quiver() == p.quiver());
        CHECK(back.relations.size() == p.relations.size());
        for (std::size_t i = 0; i < p.relations.size(); ++i) CHECK(back.relations[i].element == p.relations[i].element);
        CHECK(verify_presentation(back).all_pass());
        CHECK(j["report"]["all_pass"].get<bool>());
    }

    auto j = io::presentation_to_json(presentation_pseudo(split, {0, 3}));
    j["relations"][0]["terms"][0]["word"]["arrows"] = io::Json::array({0, 0, 0, 0, 0});
    CHECK(error_code([&] { io::presentation_from_json(j); }) == "ParseError");
}
