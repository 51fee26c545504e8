#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "algpres/error.hpp"
#include "algpres/poly.hpp"
#include "support.hpp"

using namespace algpres;
using namespace testsupport;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<FieldRef> sample_fields() {
    FieldRef q = Field::rationals();
    FieldRef f5 = Field::prime(5);
    FieldRef f4 = Field::extension(Field::prime(2),
                                   {Field::prime(2)->one(), Field::prime(2)->one(), Field::prime(2)->one()}, "w");
    FieldRef qi = Field::extension(q, {q->one(), q->zero(), q->one()}, "i");
    FieldRef f3t = Field::rational_functions(Field::prime(3), "t");
    return {q, f5, f4, qi, f2t(), f3t, f2_sqrt_t()};
}

} // namespace

TEST_CASE("characteristic two cancels repeated fractions") {
    FieldRef k = f2t();
    Scalar a = k->parse("1/t");
    CHECK((a + a).is_zero());
    CHECK((a + a) == k->zero());
}

TEST_CASE("rational arithmetic lands in lowest terms") {
    FieldRef q = Field::rationals();
    Scalar r = q->parse("2/6") * q->parse("3/1");
    CHECK(r == q->one());
    CHECK(r.str() == "1");
    CHECK(q->parse("2/6").str() == "1/3");
}

TEST_CASE("square root of t squares to t") {
    FieldRef F = f2_sqrt_t();
    Scalar x = F->generator();
    CHECK(x * x == F->lift(F->base()->parse("t")));
    CHECK((x * x).str() == "[t,0]");
}

TEST_CASE("mixed fields and division by zero are rejected") {
    FieldRef q = Field::rationals();
    FieldRef f5 = Field::prime(5);
    try {
        (void)(q->one() + f5->one());
        FAIL("expected MixedFields");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "MixedFields");
    }
    try {
        (void)(q->one() / q->zero());
        FAIL("expected DivisionByZero");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "DivisionByZero");
    }
    CHECK_THROWS_AS(f2t()->parse("1/(t+t)"), AlgebraError);
}

TEST_CASE("descriptors are interned") {
    CHECK(Field::prime(7) == Field::prime(7));
    CHECK(f2_sqrt_t() == f2_sqrt_t());
    CHECK(Field::prime(7) != Field::prime(11));
    CHECK(f2_sqrt_t()->depth() == 3);
}

TEST_CASE("primality matches trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
    CHECK(is_prime(1000000007ULL));
    CHECK_FALSE(is_prime(1000000007ULL * 3));
    CHECK_THROWS_AS(Field::prime(9), AlgebraError);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (FieldRef f : sample_fields()) {
        INFO(f->key());
        for (int i = 0; i < 1000; ++i) {
            Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a - a == f->zero());
            if (!a.is_zero()) REQUIRE(a * a.inverse() == f->one());
            if (!b.is_zero()) REQUIRE((a / b) * b == a);
        }
    }
}

TEST_CASE("printing is canonical and parses back") {
    std::mt19937_64 rng(5);
    for (FieldRef f : sample_fields()) {
        INFO(f->key());
        for (int i = 0; i < 300; ++i) {
            Scalar a = random_scalar(f, rng);
            Scalar back = f->parse(a.str());
            REQUIRE(back == a);
            REQUIRE(back.str() == a.str());
        }
    }
}

TEST_CASE("coefficient syntax") {
    FieldRef k = f2t();
    CHECK(k->parse("(t+1)/t").str() == "(t+1)/t");
    CHECK(k->parse("t^2/t").str() == "t");
    FieldRef q = Field::rationals();
    FieldRef qt = Field::rational_functions(q, "s");
    CHECK(qt->parse("(s^2-1)/(s-1)").str() == "s+1");
    CHECK(qt->parse("-3/7*s").str() == "-3/7*s");
    FieldRef F = f2_sqrt_t();
    CHECK(F->parse("[1,1/t]") == F->one() + F->lift(k->parse("1/t")) * F->generator());
    CHECK(F->parse("x*x+1").str() == "[t+1,0]");
    CHECK_THROWS_AS(F->parse("y"), AlgebraError);
    CHECK_THROWS_AS(F->parse("[1,2,3]"), AlgebraError);
}

TEST_CASE("derivation on the quadratic extension") {
    FieldRef F = f2_sqrt_t();
    FieldRef k = F->base();
    SUBCASE("coordinate extraction") {
        CHECK(derivation_delta(F->parse("[1,1/t]")) == k->parse("1/t"));
        CHECK(derivation_delta(F->lift(k->parse("(t+1)/t^3"))).is_zero());
        Scalar x = F->generator();
        CHECK(derivation_delta(x * x).is_zero());
        Scalar leibniz = F->lift(derivation_delta(x)) * x + x * F->lift(derivation_delta(x));
        CHECK(leibniz.is_zero());
    }
    SUBCASE("linearity and Leibniz on random pairs") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 200; ++i) {
            Scalar f = random_scalar(F, rng), g = random_scalar(F, rng);
            Scalar c = random_scalar(k, rng);
            REQUIRE(derivation_delta(f + F->lift(c) * g) == derivation_delta(f) + c * derivation_delta(g));
            // delta(fg) = delta(f) g + f delta(g), read as an identity in F.
            Scalar lhs = F->lift(derivation_delta(f * g));
            Scalar rhs = F->lift(derivation_delta(f)) * g + f * F->lift(derivation_delta(g));
            REQUIRE(lhs == rhs);
        }
    }
    SUBCASE("wrong field") {
        try {
            (void)derivation_delta(Field::rationals()->one());
            FAIL("expected WrongField");
        } catch (const AlgebraError& e) {
            CHECK(e.code() == "WrongField");
        }
    }
}

TEST_CASE("perfectness guarantee") {
    CHECK(is_perfect_guarantee(Field::rationals()));
    CHECK(is_perfect_guarantee(Field::prime(5)));
    CHECK_FALSE(is_perfect_guarantee(f2t()));
    CHECK_FALSE(is_perfect_guarantee(f2_sqrt_t()));
}

TEST_CASE("extension minimal polynomials are checked") {
    FieldRef q = Field::rationals();
    CHECK_THROWS_AS(Field::extension(q, {q->from_int(-1), q->zero(), q->one()}, "u"), AlgebraError);
    FieldRef f2 = Field::prime(2);
    CHECK_THROWS_AS(Field::extension(f2, {f2->one(), f2->zero(), f2->one()}, "u"), AlgebraError);
    FieldRef q4 = Field::extension(q, {q->from_int(2), q->zero(), q->zero(), q->zero(), q->one()}, "r");
    CHECK(q4->assumptions().size() == 1);
    CHECK(f2_sqrt_t()->assumptions().empty());
    FieldRef k = f2t();
    // t^2 has the square root t, so x^2 - t^2 must be rejected.
    CHECK_THROWS_AS(Field::extension(k, {k->parse("t^2"), k->zero(), k->one()}, "u"), AlgebraError);
}

TEST_CASE("root search") {
    FieldRef q = Field::rationals();
    // (2x-3)(x+5)(x^2+1)
    Poly p = poly::mul(q, poly::mul(q, {q->from_int(-3), q->from_int(2)}, {q->from_int(5), q->one()}),
                       {q->one(), q->zero(), q->one()});
    auto r = poly::roots(q, p);
    REQUIRE(r);
    CHECK(r->size() == 2);
    FieldRef k = f2t();
    // (y - (t+1)/t) * (y^2 + y + t) has exactly one root in F2(t).
    Poly a{k->parse("(t+1)/t"), k->one()};
    Poly b{k->parse("t"), k->one(), k->one()};
    auto rk = poly::roots(k, poly::mul(k, a, b));
    REQUIRE(rk);
    REQUIRE(rk->size() == 1);
    CHECK(rk->front() == k->parse("(t+1)/t"));
    FieldRef F = f2_sqrt_t();
    auto none = poly::roots(F, {F->one(), F->zero(), F->one()});
    CHECK_FALSE(none.has_value());
}

TEST_CASE("polynomial gcd") {
    FieldRef f = Field::prime(7);
    Poly a = poly::mul(f, {f->from_int(1), f->one()}, {f->from_int(3), f->one()});
    Poly b = poly::mul(f, {f->from_int(1), f->one()}, {f->from_int(4), f->one()});
    Poly g = poly::gcd(f, a, b);
    CHECK(poly::to_string(g, "y") == "y+1");
    auto [g2, u, v] = poly::ext_gcd(f, a, b);
    CHECK(poly::add(f, poly::mul(f, u, a), poly::mul(f, v, b)) == g2);
}
