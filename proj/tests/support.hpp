#pragma once

#include "algpres/field.hpp"
#include "algpres/linalg.hpp"

#include <random>

namespace testsupport {

using namespace algpres;

inline Scalar random_scalar(FieldRef f, std::mt19937_64& rng, int size = 3) {
    std::uniform_int_distribution<int> small(-size, size);
    switch (f->kind()) {
    case FieldKind::Rationals: {
        int den = 0;
        while (den == 0) den = small(rng);
        return f->from_rational(mpq_class(small(rng), den < 0 ? -den : den));
    }
    case FieldKind::Prime: return f->from_int(static_cast<long long>(rng() % f->characteristic()));
    case FieldKind::RationalFunction: {
        FieldRef b = f->base();
        Poly num, den;
        int dn = static_cast<int>(rng() % 3), dd = static_cast<int>(rng() % 3);
        for (int i = 0; i <= dn; ++i) num.push_back(random_scalar(b, rng, size));
        for (int i = 0; i <= dd; ++i) den.push_back(random_scalar(b, rng, size));
        den.back() = b->one();
        return f->make_fraction(num, den);
    }
    case FieldKind::Extension: {
        Poly c;
        for (std::size_t i = 0; i < f->degree(); ++i) c.push_back(random_scalar(f->base(), rng, size));
        return f->make_coords(c);
    }
    }
    return {};
}

inline Vec random_vec(FieldRef f, std::size_t n, std::mt19937_64& rng, double density = 1.0) {
    Vec v(n, f->zero());
    std::uniform_real_distribution<double> u(0, 1);
    for (auto& x : v)
        if (u(rng) < density) x = random_scalar(f, rng);
    return v;
}

// Every vector of F_p^n, for brute-force oracles.
inline std::vector<Vec> all_vectors(FieldRef f, std::size_t n) {
    std::uint64_t p = f->characteristic(), total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    std::vector<Vec> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec v;
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(f->element(r % p));
            r /= p;
        }
        out.push_back(v);
    }
    return out;
}

inline FieldRef f2t() { return Field::rational_functions(Field::prime(2), "t"); }

inline FieldRef f2_sqrt_t() {
    FieldRef k = f2t();
    return Field::extension(k, {k->parse("t"), k->zero(), k->one()}, "x");
}

} // namespace testsupport
