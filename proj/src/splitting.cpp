#include "algpres/splitting.hpp"

#include "algpres/error.hpp"

namespace algpres {

namespace {

bool is_subalgebra(const FDAlgebra& alg, const SubspaceBasis& b) {
    if (!b.contains(alg.one())) return false;
    return b.contains(product_space(alg, b, b));
}

} // namespace

SplittingData build_splitting(const FDAlgebra& alg, const SplittingInput& input) {
    FieldRef f = alg.field();
    SplittingData s;
    s.algebra = alg;
    s.radical = radical(alg, input.claimed_radical);
    s.quotient = quotient_algebra(alg, s.radical.basis);
    auto comps = semisimple_decompose(s.quotient.algebra, input.claimed_idempotents);
    std::size_t q = s.quotient.algebra.dim();

    std::vector<Vec> bvecs;
    bool automatic = !input.lifted_subalgebra;
    if (input.lifted_subalgebra) {
        bvecs = *input.lifted_subalgebra;
        for (const auto& v : bvecs)
            if (v.size() != alg.dim()) fail("SplittingInvalid", "lifted subalgebra vector has the wrong length");
    } else {
        for (std::size_t r : s.quotient.reps) bvecs.push_back(alg.basis_vector(r));
    }
    s.lifted_subalgebra = SubspaceBasis::span(f, alg.dim(), bvecs);
    const SubspaceBasis& b = s.lifted_subalgebra;
    if (b.dim() != q)
        fail("SplittingInvalid", "complement has dimension " + std::to_string(b.dim()) + ", expected " +
                                     std::to_string(q));
    if (!subspace_intersection(b, s.radical.basis).is_zero())
        fail("SplittingInvalid", "complement meets the radical");
    if (automatic && !is_subalgebra(alg, b))
        fail("SplittingRequired", "the coset representatives do not span a subalgebra; supply a splitting");
    if (automatic && !s.radical.basis.is_zero())
        s.notes.push_back("complement spanned by the coset representative coordinates");

    auto bbasis = b.vectors();
    std::vector<Vec> images;
    for (const auto& v : bbasis) images.push_back(s.quotient.projection.apply(v));
    Matrix p = Matrix::from_columns(f, q, images);
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < q; ++k) {
        auto c = solve(p, unit_vec(f, q, k));
        if (!c) fail("SplittingInvalid", "projection is not bijective on the complement");
        Vec lifted = zero_vec(f, alg.dim());
        for (std::size_t i = 0; i < bbasis.size(); ++i) axpy(lifted, (*c)[i], bbasis[i]);
        cols.push_back(std::move(lifted));
    }
    s.section = Matrix::from_columns(f, alg.dim(), cols);

    for (auto& c : comps) {
        LiftedComponent lc;
        for (const auto& v : c.basis) lc.lifted.push_back(s.section.apply(v));
        lc.quotient = std::move(c);
        s.components.push_back(std::move(lc));
    }
    for (const auto& n : s.radical.notes) s.notes.push_back(n);
    return s;
}

Report verify_splitting(const SplittingData& s) {
    Report rep;
    rep.title = "splitting";
    const FDAlgebra& a = s.algebra;
    FieldRef f = a.field();
    const SubspaceBasis& r = s.radical.basis;

    auto ideal_why = ideal_failure(a, r);
    rep.add("radical is a two-sided ideal", !ideal_why, ideal_why.value_or(""));
    bool nil = true;
    try {
        ideal_powers(a, r, a.dim() + 1);
    } catch (const AlgebraError& e) {
        nil = false;
    }
    rep.add("radical is nilpotent", nil, nil ? "" : "powers of the radical do not vanish");

    const FDAlgebra& qa = s.quotient.algebra;
    auto ss = semisimplicity(qa);
    rep.add("quotient by the radical is semisimple", ss.semisimple, ss.reason);
    if (ss.certainty == Certainty::Assumed) rep.notes.push_back(ss.reason);

    const SubspaceBasis& b = s.lifted_subalgebra;
    bool direct = b.dim() + r.dim() == a.dim() && subspace_intersection(b, r).is_zero();
    rep.add("algebra is the direct sum of the lifted subalgebra and the radical", direct,
            direct ? "" : "dim B = " + std::to_string(b.dim()) + ", dim r = " + std::to_string(r.dim()));

    bool unital = b.contains(a.one());
    bool closed = unital && b.contains(product_space(a, b, b));
    rep.add("lifted subalgebra is a unital subalgebra", closed,
            closed ? "" : unital ? "B*B leaves B" : "B does not contain 1");

    std::size_t dims = 0;
    std::string orth_witness, comp_witness, eta_witness, simple_witness;
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        const auto& ci = s.components[i];
        const auto& qi = ci.quotient;
        dims += ci.lifted.size();
        SubspaceBasis bi = SubspaceBasis::span(f, a.dim(), ci.lifted);
        if (bi.dim() != ci.lifted.size() && eta_witness.empty())
            eta_witness = "component " + std::to_string(i + 1) + " lift is not injective";
        for (std::size_t x = 0; x < ci.lifted.size(); ++x) {
            if (s.quotient.projection.apply(ci.lifted[x]) != qi.basis[x] && eta_witness.empty())
                eta_witness = "projection of lifted basis vector " + std::to_string(x) + " of component " +
                              std::to_string(i + 1) + " is wrong";
            if (a.multiply(ci.lifted[0], ci.lifted[x]) != ci.lifted[x] && comp_witness.empty())
                comp_witness = "unit of component " + std::to_string(i + 1) + " does not act as identity";
            for (std::size_t y = 0; y < ci.lifted.size(); ++y) {
                Vec prod = a.multiply(ci.lifted[x], ci.lifted[y]);
                Vec expect = zero_vec(f, a.dim());
                for (const auto& e : qi.algebra.basis_product(x, y)) axpy(expect, e.value, ci.lifted[e.index]);
                if (prod != expect && eta_witness.empty())
                    eta_witness = "lift of component " + std::to_string(i + 1) + " is not multiplicative on (" +
                                  std::to_string(x) + ", " + std::to_string(y) + ")";
            }
        }
        for (std::size_t j = 0; j < s.components.size(); ++j) {
            if (i == j) continue;
            for (const auto& u : ci.lifted)
                for (const auto& v : s.components[j].lifted)
                    if (!is_zero_vec(a.multiply(u, v)) && orth_witness.empty())
                        orth_witness = "B_" + std::to_string(i + 1) + " * B_" + std::to_string(j + 1) + " != 0";
        }
        auto simple = simplicity_of(qi.algebra);
        if (!simple.simple && simple_witness.empty())
            simple_witness = "component " + std::to_string(i + 1) + " is not simple";
        if (simple.simple && simple.status != Simplicity::Verified)
            rep.notes.push_back("component " + std::to_string(i + 1) + " simple (" + to_string(simple.status) + ")");
    }
    if (dims != qa.dim()) comp_witness = "component dimensions do not add up to dim A/r";
    rep.add("components are pairwise orthogonal", orth_witness.empty(), orth_witness);
    rep.add("components are unital and fill the quotient", comp_witness.empty(), comp_witness);
    rep.add("components are simple", simple_witness.empty(), simple_witness);
    rep.add("projection is bijective and multiplicative on each component", eta_witness.empty(), eta_witness);

    bool section_ok = s.section.rows() == a.dim() && s.section.cols() == qa.dim() &&
                      s.quotient.projection * s.section == Matrix::identity(f, qa.dim());
    rep.add("projection after lifting is the identity on the quotient", section_ok);
    for (const auto& n : s.notes) rep.notes.push_back(n);
    return rep;
}

std::vector<GradedPiece> graded_radical_bimodule(const SplittingData& s, std::size_t l) {
    if (l == 0) fail("InvalidArgument", "graded pieces start at degree 1");
    const FDAlgebra& a = s.algebra;
    FieldRef f = a.field();
    auto powers = ideal_powers(a, s.radical.basis);
    auto power = [&](std::size_t t) { return t - 1 < powers.size() ? powers[t - 1] : SubspaceBasis(f, a.dim()); };
    SubspaceBasis top = power(l), below = power(l + 1);
    auto top_vecs = top.vectors();

    std::vector<GradedPiece> out;
    std::size_t n = s.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ci = s.components[i];
            const auto& cj = s.components[j];
            SubspaceBasis w = below;
            for (const auto& v : top_vecs) w.insert(a.multiply(a.multiply(s.lifted_unit(i), v), s.lifted_unit(j)));
            GradedPiece piece;
            piece.source = i;
            piece.target = j;
            piece.carrier = quotient_basis(w, below).vectors();
            RelativeCoordinates rc(below, piece.carrier);
            BimoduleData& m = piece.module;
            m.left_algebra = ci.quotient.algebra;
            m.right_algebra = cj.quotient.algebra;
            m.dim = piece.carrier.size();
            m.left_radical = SubspaceBasis(f, m.left_algebra.dim());
            m.right_radical = SubspaceBasis(f, m.right_algebra.dim());
            for (const auto& x : ci.lifted) {
                std::vector<Vec> cols;
                for (const auto& c : piece.carrier) cols.push_back(rc.require(a.multiply(x, c)));
                m.left_action.push_back(Matrix::from_columns(f, m.dim, cols));
            }
            for (const auto& y : cj.lifted) {
                std::vector<Vec> cols;
                for (const auto& c : piece.carrier) cols.push_back(rc.require(a.multiply(c, y)));
                m.right_action.push_back(Matrix::from_columns(f, m.dim, cols));
            }
            out.push_back(std::move(piece));
        }
    return out;
}

} // namespace algpres
