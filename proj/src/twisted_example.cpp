#include "algpres/error.hpp"
#include "algpres/gabriel.hpp"

#include <array>

// Coordinates over k = F2(t): an element (x, y, (a, b)) of F + F + E, with
// F = k(s), s^2 = t, is stored as the k-coordinates of x, y, a, b in the
// basis {1, s}.
namespace algpres {

namespace {

FieldRef base_field() { return Field::rational_functions(Field::prime(2), "t"); }

struct Fel {
    Scalar p, q;  // p + q*s
};

Fel fmul(const Fel& u, const Fel& v, const Scalar& t) { return {u.p * v.p + t * u.q * v.q, u.p * v.q + u.q * v.p}; }
Fel fadd(const Fel& u, const Fel& v) { return {u.p + v.p, u.q + v.q}; }
// The k-derivation of F with s -> 1.
Fel delta(const Fel& u, FieldRef k) { return {u.q, k->zero()}; }

Fel part(const Vec& x, std::size_t slot) { return {x[2 * slot], x[2 * slot + 1]}; }

Vec pack(const Fel& x, const Fel& y, const Fel& a, const Fel& b) {
    return {x.p, x.q, y.p, y.q, a.p, a.q, b.p, b.q};
}

// (x, y, e)(x', y', e') = (xx', xy' + yx', x.e' + (yy', 0) + e.x') with
// f.(a, b) = (fa, fb) and (a, b).f = (af + b delta(f), bf).
Vec product(FieldRef k, const Vec& u, const Vec& v) {
    Scalar t = k->parse("t");
    Fel x = part(u, 0), y = part(u, 1), a = part(u, 2), b = part(u, 3);
    Fel x2 = part(v, 0), y2 = part(v, 1), a2 = part(v, 2), b2 = part(v, 3);
    Fel nx = fmul(x, x2, t);
    Fel ny = fadd(fmul(x, y2, t), fmul(y, x2, t));
    Fel na = fadd(fadd(fmul(x, a2, t), fmul(y, y2, t)), fadd(fmul(a, x2, t), fmul(b, delta(x2, k), t)));
    Fel nb = fadd(fmul(x, b2, t), fmul(b, x2, t));
    return pack(nx, ny, na, nb);
}

SubspaceBasis coordinate_span(FieldRef k, std::initializer_list<std::size_t> idx) {
    SubspaceBasis s(k, 8);
    for (auto i : idx) s.insert(unit_vec(k, 8, i));
    return s;
}

} // namespace

FDAlgebra twisted_example_algebra() {
    FieldRef k = base_field();
    std::vector<std::string> labels{"(1,0,0)",     "(s,0,0)",     "(0,1,0)",     "(0,s,0)",
                                    "(0,0,(1,0))", "(0,0,(s,0))", "(0,0,(0,1))", "(0,0,(0,s))"};
    return FDAlgebra::from_products(
        k, labels, [&](std::size_t i, std::size_t j) { return product(k, unit_vec(k, 8, i), unit_vec(k, 8, j)); },
        unit_vec(k, 8, 0));
}

Report twisted_example_suite() {
    Report rep;
    rep.title = "split algebra over F2(t) with no tensor-algebra surjection";
    FieldRef k = base_field();
    Scalar t = k->parse("t");
    FDAlgebra a;
    try {
        a = twisted_example_algebra();
    } catch (const AlgebraError& e) {
        rep.add("algebra is associative and unital", false, e.what());
        return rep;
    }
    auto assoc = a.associativity_failure();
    rep.add("algebra is associative and unital", !assoc && a.dim() == 8,
            assoc ? *assoc : "dim_k A = " + std::to_string(a.dim()));

    // S = {(x, 0, 0)} and F -> S, x -> (x, 0, 0).
    SubspaceBasis s = coordinate_span(k, {0, 1});
    bool s_ok = s.contains(a.one());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Fel u{i == 0 ? k->one() : k->zero(), i == 1 ? k->one() : k->zero()};
            Fel v{j == 0 ? k->one() : k->zero(), j == 1 ? k->one() : k->zero()};
            Fel uv = fmul(u, v, t);
            Vec expect = zero_vec(k, 8);
            expect[0] = uv.p;
            expect[1] = uv.q;
            s_ok = s_ok && a.multiply(a.basis_vector(i), a.basis_vector(j)) == expect;
        }
    rep.add("S is a subalgebra isomorphic to F", s_ok, "dim_k S = 2");

    // r = {(0, y, e)}.
    SubspaceBasis r = coordinate_span(k, {2, 3, 4, 5, 6, 7});
    SubspaceBasis theta_f = coordinate_span(k, {4, 5});
    std::string why;
    if (auto bad = ideal_failure(a, r)) why = "r is not an ideal: " + *bad;
    std::vector<SubspaceBasis> powers;
    if (why.empty()) {
        powers = ideal_powers(a, r, 10);
        if (powers.size() != 3) why = "r^" + std::to_string(powers.size()) + " is the first zero power";
        else if (powers[1] != theta_f) why = "r^2 differs from theta(F)";
    }
    if (why.empty() && (subspace_intersection(s, r).dim() != 0 || s.dim() + r.dim() != 8)) why = "A != S + r";
    if (why.empty()) {
        try {
            radical(a, r);
        } catch (const AlgebraError& e) {
            why = std::string("r is not the radical: ") + e.what();
        }
    }
    rep.add("r is the radical, r^2 = theta(F) != 0, r^3 = 0, A = S + r", why.empty(),
            why.empty() ? "dim r = 6, dim r^2 = 2" : why);

    // pi(0, y, (a, b)) = (y, b) identifies r/r^2 with F + F, actions on both sides by multiplication.
    auto pi = [&](const Vec& m) { return std::array<Fel, 2>{part(m, 1), part(m, 3)}; };
    bool pi_ok = true;
    for (std::size_t si = 0; si < 2; ++si) {
        Fel f{si == 0 ? k->one() : k->zero(), si == 1 ? k->one() : k->zero()};
        for (std::size_t m = 2; m < 8; ++m) {
            auto pm = pi(a.basis_vector(m));
            auto left = pi(a.multiply(a.basis_vector(si), a.basis_vector(m)));
            auto right = pi(a.multiply(a.basis_vector(m), a.basis_vector(si)));
            for (std::size_t c = 0; c < 2; ++c) {
                Fel l = fmul(f, pm[c], t), rr = fmul(pm[c], f, t);
                pi_ok = pi_ok && left[c].p == l.p && left[c].q == l.q && right[c].p == rr.p && right[c].q == rr.q;
            }
        }
    }
    // Kernel of pi on r is r^2 and pi is onto F + F.
    Matrix pim(k, 4, 8);
    for (std::size_t m = 0; m < 8; ++m) {
        auto pm = pi(a.basis_vector(m));
        pim.at(0, m) = pm[0].p;
        pim.at(1, m) = pm[0].q;
        pim.at(2, m) = pm[1].p;
        pim.at(3, m) = pm[1].q;
    }
    SubspaceBasis ker_on_r = subspace_intersection(kernel(pim), r);
    pi_ok = pi_ok && ker_on_r == theta_f && rank(pim) == 4;
    rep.add("r/r^2 is isomorphic to F + F as an F-bimodule", pi_ok, "rank of r/r^2 over F + F is 1 per summand");

    // psi: E -> F, k-linear with 8 unknowns psi[c][m] (c in {p, q}, m in E's k-basis),
    // subject to psi(theta(z)) = z, psi(f.e) = f psi(e), psi(e.f) = psi(e) f.
    auto e_vec = [&](std::size_t m) {
        Vec v = zero_vec(k, 8);
        v[4 + m] = k->one();
        return v;
    };
    std::vector<Vec> rows;
    Vec rhs;
    // Linear form of psi(e) component c as a row over the unknowns.
    auto psi_row = [&](const Vec& e, std::size_t c) {
        Vec row = zero_vec(k, 8);
        for (std::size_t m = 0; m < 4; ++m) row[c * 4 + m] = e[4 + m];
        return row;
    };
    for (std::size_t zi = 0; zi < 2; ++zi) {
        Vec th = e_vec(zi);
        for (std::size_t c = 0; c < 2; ++c) {
            rows.push_back(psi_row(th, c));
            rhs.push_back(c == zi ? k->one() : k->zero());
        }
    }
    for (std::size_t si = 0; si < 2; ++si) {
        Fel f{si == 0 ? k->one() : k->zero(), si == 1 ? k->one() : k->zero()};
        for (std::size_t m = 0; m < 4; ++m) {
            Vec e = e_vec(m);
            Vec fe = a.multiply(a.basis_vector(si), e), ef = a.multiply(e, a.basis_vector(si));
            // f * psi(e) and psi(e) * f as linear forms: (f p, f q) with F multiplication.
            Vec pe = psi_row(e, 0), qe = psi_row(e, 1);
            auto times_f = [&](std::size_t c) {
                // (f.p + f.q s)(pe + qe s): component 0 = fp*pe + t fq*qe, component 1 = fp*qe + fq*pe.
                Vec out = zero_vec(k, 8);
                if (c == 0) {
                    axpy(out, f.p, pe);
                    axpy(out, t * f.q, qe);
                } else {
                    axpy(out, f.p, qe);
                    axpy(out, f.q, pe);
                }
                return out;
            };
            for (std::size_t c = 0; c < 2; ++c) {
                rows.push_back(sub_vec(psi_row(fe, c), times_f(c)));
                rhs.push_back(k->zero());
                rows.push_back(sub_vec(psi_row(ef, c), times_f(c)));
                rhs.push_back(k->zero());
            }
        }
    }
    auto sol = solve(Matrix::from_rows(k, 8, rows), rhs);
    rep.add("the extension 0 -> F -> E -> F -> 0 has no bimodule splitting", !sol,
            sol ? "found a splitting" : std::to_string(rows.size()) + " equations in 8 unknowns are inconsistent");

    // Z(A) inside {delta(x) = 0}.
    SubspaceBasis z = center(a);
    bool z_ok = true;
    for (const auto& v : z.vectors()) z_ok = z_ok && v[1].is_zero();
    rep.add("the center lies in {(x, y, e) : delta(x) = 0}", z_ok, "dim_k Z(A) = " + std::to_string(z.dim()));

    Matrix dm(k, 1, 2);
    dm.at(0, 1) = k->one();
    std::size_t kd = kernel(dm).dim();
    rep.add("dim_k ker delta = 1 < 2 = dim_k F", kd == 1, "dim_k ker delta = " + std::to_string(kd));

    bool all = true;
    for (const auto& c : rep.checks) all = all && c.pass;
    rep.add("no surjection from the tensor algebra of A/r on r/r^2 onto A", all,
            all ? "A splits over r, yet the extension does not split and the center is too small"
                : "an earlier step failed");
    return rep;
}

} // namespace algpres
