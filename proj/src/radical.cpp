#include "algpres/error.hpp"
#include "algpres/fdalgebra.hpp"
#include "algpres/poly.hpp"

namespace algpres {

namespace {

bool trace_route_applies(const FDAlgebra& alg) {
    std::uint64_t p = alg.field()->characteristic();
    return p == 0 || p > alg.dim();
}

// Gram matrix of (x, y) -> tr(L_{xy}) on the basis.
Matrix trace_form(const FDAlgebra& alg) {
    FieldRef f = alg.field();
    std::size_t n = alg.dim();
    Vec traces;
    traces.reserve(n);
    for (std::size_t k = 0; k < n; ++k) traces.push_back(alg.left_trace(alg.basis_vector(k)));
    Matrix t(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& e : alg.basis_product(i, j)) t.at(i, j) += e.value * traces[e.index];
    return t;
}

// q-th roots in a function field over a finite field F_Q with q a power of Q:
// f = sum_{l<q} t^l * root_l^q.
std::vector<Scalar> frobenius_components(FieldRef k, const Scalar& f, std::uint64_t q) {
    FieldRef b = k->base();
    std::vector<Scalar> out(q, k->zero());
    if (f.is_zero()) return out;
    const auto& fr = f.fraction();
    Poly den = fr.den.empty() ? Poly{b->one()} : fr.den;
    Poly h = fr.num;
    Poly dpow{b->one()};
    for (std::uint64_t i = 0; i + 1 < q; ++i) dpow = poly::mul(b, dpow, den);
    h = poly::mul(b, h, dpow);
    for (std::uint64_t l = 0; l < q; ++l) {
        Poly g;
        for (std::size_t n = l; n < h.size(); n += q) g.push_back(h[n]);
        poly::trim(g);
        if (!g.empty()) out[l] = k->make_fraction(g, den);
    }
    return out;
}

// Nilradical of a commutative algebra over a field where Frobenius gives a
// linear criterion; nullopt when the field is not of that kind.
std::optional<SubspaceBasis> frobenius_nilradical(const FDAlgebra& alg) {
    FieldRef f = alg.field();
    std::size_t n = alg.dim();
    if (f->characteristic() == 0) return std::nullopt;
    if (f->is_finite()) {
        std::uint64_t card = *f->cardinality();
        std::uint64_t q = card;
        while (q < n) q *= card;
        std::vector<Vec> cols;
        for (std::size_t i = 0; i < n; ++i) cols.push_back(alg.power(alg.basis_vector(i), q));
        return kernel(Matrix::from_columns(f, n, cols));
    }
    if (f->kind() == FieldKind::RationalFunction && f->base()->is_finite()) {
        std::uint64_t card = *f->base()->cardinality();
        std::uint64_t q = card;
        while (q < n) q *= card;
        if (q > 4096) return std::nullopt;
        // sum_i c_i^q x_i^q = sum_l t^l (sum_i c_i root_{ijl})^q, so x is
        // nilpotent iff sum_i c_i root_{ijl} = 0 for every j and l.
        Matrix m(f, n * q, n);
        for (std::size_t i = 0; i < n; ++i) {
            Vec img = alg.power(alg.basis_vector(i), q);
            for (std::size_t j = 0; j < n; ++j) {
                auto parts = frobenius_components(f, img[j], q);
                for (std::uint64_t l = 0; l < q; ++l) m.at(j * q + l, i) = parts[l];
            }
        }
        return kernel(m);
    }
    return std::nullopt;
}

void verify_nil_ideal(const FDAlgebra& alg, const SubspaceBasis& r, const std::string& code) {
    if (auto why = ideal_failure(alg, r)) fail(code, "not an ideal: " + *why);
    try {
        ideal_powers(alg, r, alg.dim() + 1);
    } catch (const AlgebraError&) {
        fail(code, "not nilpotent");
    }
}

} // namespace

SemisimplicityResult semisimplicity(const FDAlgebra& alg) {
    if (alg.dim() == 0) return {true, Certainty::Proven, "zero algebra"};
    if (trace_route_applies(alg)) {
        bool ok = kernel(trace_form(alg)).is_zero();
        return {ok, Certainty::Proven, ok ? "trace form nondegenerate" : "trace form degenerate"};
    }
    if (alg.is_commutative()) {
        if (auto nil = frobenius_nilradical(alg)) {
            bool ok = nil->is_zero();
            return {ok, Certainty::Proven, ok ? "no nilpotent elements (Frobenius kernel)" : "nilpotent elements"};
        }
    }
    if (kernel(trace_form(alg)).is_zero()) return {true, Certainty::Proven, "trace form nondegenerate"};
    // A nonzero nilpotent ideal disproves semisimplicity; try those generated
    // by basis vectors, commutators and basis products.
    std::size_t n = alg.dim();
    std::vector<Vec> probes;
    for (std::size_t i = 0; i < n; ++i) probes.push_back(alg.basis_vector(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec xy = to_dense(alg.field(), n, alg.basis_product(i, j));
            probes.push_back(xy);
            if (i < j) probes.push_back(sub_vec(xy, to_dense(alg.field(), n, alg.basis_product(j, i))));
        }
    for (const auto& v : probes) {
        if (is_zero_vec(v) || !is_zero_vec(alg.power(v, n))) continue;
        SubspaceBasis ideal = ideal_closure(alg, {v});
        try {
            ideal_powers(alg, ideal, n + 1);
            return {false, Certainty::Proven, "nonzero nilpotent ideal found"};
        } catch (const AlgebraError&) {
        }
    }
    return {true, Certainty::Assumed, "semisimplicity not verifiable in characteristic " +
                                          std::to_string(alg.field()->characteristic()) + "; assumed"};
}

RadicalResult radical(const FDAlgebra& alg, const std::optional<SubspaceBasis>& claimed) {
    FieldRef f = alg.field();
    std::size_t n = alg.dim();
    if (claimed) {
        if (claimed->ambient() != n || claimed->field() != f)
            fail("ClaimRejected", "claimed radical lives in a different space");
        verify_nil_ideal(alg, *claimed, "ClaimRejected");
        auto quo = quotient_algebra(alg, *claimed);
        auto ss = semisimplicity(quo.algebra);
        if (!ss.semisimple) fail("ClaimRejected", "quotient by the claimed radical is not semisimple");
        RadicalResult out{*claimed, "claimed", {}};
        if (ss.certainty == Certainty::Assumed) out.notes.push_back(ss.reason);
        return out;
    }
    RadicalResult out;
    if (trace_route_applies(alg)) {
        out.basis = kernel(trace_form(alg));
        out.method = "trace-form";
    } else if (auto nil = alg.is_commutative() ? frobenius_nilradical(alg) : std::nullopt) {
        out.basis = *nil;
        out.method = "frobenius";
    } else {
        fail("SmallCharacteristicNeedsClaim",
             "characteristic " + std::to_string(f->characteristic()) + " is at most the dimension " +
                 std::to_string(n) + "; supply a claimed radical");
    }
    verify_nil_ideal(alg, out.basis, "InternalError");
    auto ss = semisimplicity(quotient_algebra(alg, out.basis).algebra);
    if (!ss.semisimple) fail("InternalError", "quotient by the computed radical is not semisimple");
    if (ss.certainty == Certainty::Assumed) out.notes.push_back(ss.reason);
    return out;
}

SubspaceBasis tensor_radical(const FDAlgebra& a, const SubspaceBasis& rad_a, const FDAlgebra& b,
                             const SubspaceBasis& rad_b) {
    FieldRef f = a.field();
    std::size_t da = a.dim(), db = b.dim(), n = da * db;
    auto embed = [&](const Vec& u, const Vec& v) {
        Vec out = zero_vec(f, n);
        for (std::size_t i = 0; i < da; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < db; ++j)
                if (!v[j].is_zero()) out[i * db + j] = u[i] * v[j];
        }
        return out;
    };
    SubspaceBasis out(f, n);
    for (const auto& u : rad_a.vectors())
        for (std::size_t j = 0; j < db; ++j) out.insert(embed(u, b.basis_vector(j)));
    for (std::size_t i = 0; i < da; ++i)
        for (const auto& v : rad_b.vectors()) out.insert(embed(a.basis_vector(i), v));

    // Over perfect fields the tensor product of semisimple algebras is
    // semisimple, so the kernel of the projection is the whole radical.
    if (f->characteristic() == 0 || f->is_finite()) return out;

    auto qa = quotient_algebra(a, rad_a);
    auto qb = quotient_algebra(b, rad_b);
    FDAlgebra bar = tensor_with_opposite(qa.algebra, qb.algebra);
    std::size_t qdb = qb.algebra.dim();
    auto za = center(qa.algebra).vectors();
    auto zb = center(qb.algebra).vectors();
    std::vector<Vec> zbasis;
    for (const auto& u : za)
        for (const auto& v : zb) {
            Vec w = zero_vec(f, bar.dim());
            for (std::size_t i = 0; i < u.size(); ++i)
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (!u[i].is_zero() && !v[j].is_zero()) w[i * qdb + j] = u[i] * v[j];
            zbasis.push_back(w);
        }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < zbasis.size(); ++i) labels.push_back("z" + std::to_string(i));
    RelativeCoordinates zc(SubspaceBasis(f, bar.dim()), zbasis);
    FDAlgebra zalg = restrict_to(bar, zbasis, labels, zc.require(bar.one()));
    auto nil = frobenius_nilradical(zalg);
    if (!nil)
        fail("SmallCharacteristicNeedsClaim", "cannot compute the radical of a tensor product over " + f->key());
    // rad of the semisimple tensor product is generated by the central nilradical.
    std::vector<Vec> central;
    for (const auto& c : nil->vectors()) {
        Vec w = zero_vec(f, bar.dim());
        for (std::size_t k = 0; k < c.size(); ++k) axpy(w, c[k], zbasis[k]);
        central.push_back(w);
    }
    SubspaceBasis rad_bar(f, bar.dim());
    for (const auto& c : central)
        for (std::size_t i = 0; i < bar.dim(); ++i) rad_bar.insert(bar.multiply(bar.basis_vector(i), c));
    for (const auto& v : rad_bar.vectors()) {
        Vec lifted = zero_vec(f, n);
        for (std::size_t i = 0; i < qa.reps.size(); ++i)
            for (std::size_t j = 0; j < qb.reps.size(); ++j) lifted[qa.reps[i] * db + qb.reps[j]] = v[i * qdb + j];
        out.insert(lifted);
    }
    return out;
}

} // namespace algpres
