#include "algpres/error.hpp"
#include "algpres/fdalgebra.hpp"
#include "algpres/poly.hpp"

#include <algorithm>
#include <deque>

namespace algpres {

std::string to_string(Simplicity s) {
    switch (s) {
    case Simplicity::Verified: return "verified";
    case Simplicity::Heuristic: return "verified heuristically";
    case Simplicity::Asserted: return "asserted";
    }
    return "?";
}

Poly minimal_polynomial(const FDAlgebra& alg, const Vec& a, const Vec& unit) {
    FieldRef f = alg.field();
    std::vector<Vec> powers{unit};
    // Stop at the first power that depends on the earlier ones.
    for (std::size_t k = 1; k <= alg.dim() + 1; ++k) {
        Vec next = alg.multiply(powers.back(), a);
        Matrix m = Matrix::from_columns(f, alg.dim(), powers);
        if (auto sol = solve(m, next)) {
            Poly mu;
            for (const auto& c : *sol) mu.push_back(-c);
            mu.push_back(f->one());
            return mu;
        }
        powers.push_back(std::move(next));
    }
    fail("InternalError", "minimal polynomial search did not terminate");
}

namespace {

Vec evaluate_poly(const FDAlgebra& alg, const Poly& p, const Vec& a, const Vec& unit) {
    FieldRef f = alg.field();
    Vec acc = zero_vec(f, alg.dim());
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = alg.multiply(acc, a);
        axpy(acc, p[k], unit);
    }
    return acc;
}

struct BlockVerdict {
    std::optional<Vec> split;   // a central idempotent strictly inside the block
    Simplicity status = Simplicity::Verified;
    bool decided = true;        // false when root search was unavailable
    std::string note;
};

// Looks for a proper central idempotent inside the block with unit e.
BlockVerdict analyse_block(const FDAlgebra& alg, const std::vector<Vec>& center_basis, const Vec& e) {
    FieldRef f = alg.field();
    SubspaceBasis ez(f, alg.dim());
    for (const auto& z : center_basis) ez.insert(alg.multiply(e, z));
    std::size_t d = ez.dim();
    if (d <= 1) return {std::nullopt, Simplicity::Verified, true, "center of the block is the ground field"};

    std::vector<Vec> candidates = ez.vectors();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) candidates.push_back(add_vec(candidates[i], candidates[j]));

    bool all_supported = true;
    for (const auto& c : candidates) {
        Poly mu = minimal_polynomial(alg, c, e);
        std::size_t deg = mu.size() - 1;
        if (deg <= 1) continue;
        auto rts = poly::roots(f, mu);
        if (!rts) {
            all_supported = false;
            continue;
        }
        if (!rts->empty()) {
            Poly lin{-(*rts)[0], f->one()};
            Poly g = poly::divmod(f, mu, lin).first;
            auto [one, u, v] = poly::ext_gcd(f, lin, g);
            if (poly::degree(one) != 0) fail("NotSemisimple", "central element with a repeated eigenvalue");
            Vec idem = alg.multiply(evaluate_poly(alg, v, c, e), evaluate_poly(alg, g, c, e));
            return {idem, Simplicity::Verified, true, ""};
        }
        if (deg == d && deg <= 3)
            return {std::nullopt, Simplicity::Verified, true,
                    "center is a field: minimal polynomial " + poly::to_string(mu, "X") + " is irreducible"};
    }
    if (all_supported)
        return {std::nullopt, Simplicity::Heuristic, true, "no central idempotent found by root search"};
    return {std::nullopt, Simplicity::Asserted, false, "root search unavailable over " + f->key()};
}

bool is_central(const FDAlgebra& alg, const Vec& v) {
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        Vec x = alg.basis_vector(i);
        if (alg.multiply(x, v) != alg.multiply(v, x)) return false;
    }
    return true;
}

void check_idempotent_system(const FDAlgebra& alg, const std::vector<Vec>& idems, const std::string& code) {
    Vec total = zero_vec(alg.field(), alg.dim());
    for (std::size_t i = 0; i < idems.size(); ++i) {
        const Vec& e = idems[i];
        if (is_zero_vec(e)) fail(code, "zero idempotent");
        if (!is_central(alg, e)) fail(code, "idempotent " + std::to_string(i) + " is not central");
        for (std::size_t j = 0; j < idems.size(); ++j) {
            Vec p = alg.multiply(e, idems[j]);
            if (i == j ? p != e : !is_zero_vec(p))
                fail(code, "idempotents " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal");
        }
        total = add_vec(total, e);
    }
    if (total != alg.one()) fail(code, "idempotents do not sum to 1");
}

SimpleComponent make_component(const FDAlgebra& alg, const Vec& e, std::size_t index) {
    FieldRef f = alg.field();
    SubspaceBasis block(f, alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) block.insert(alg.multiply(e, alg.basis_vector(i)));
    SubspaceBasis unit_span = SubspaceBasis::span(f, alg.dim(), {e});
    std::vector<Vec> basis{e};
    for (const auto& v : quotient_basis(block, unit_span).vectors()) basis.push_back(v);
    std::vector<std::string> labels;
    std::string tag = std::to_string(index + 1);
    labels.push_back("e" + tag);
    for (std::size_t i = 1; i < basis.size(); ++i) labels.push_back("b" + tag + "_" + std::to_string(i));
    SimpleComponent comp;
    comp.idempotent = e;
    comp.algebra = restrict_to(alg, basis, std::move(labels), unit_vec(f, basis.size(), 0));
    comp.basis = std::move(basis);
    return comp;
}

std::size_t leading_index(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

} // namespace

std::vector<SimpleComponent> semisimple_decompose(const FDAlgebra& alg,
                                                  const std::optional<std::vector<Vec>>& claimed_idempotents) {
    auto ss = semisimplicity(alg);
    if (!ss.semisimple) fail("NotSemisimple", ss.reason);
    if (alg.dim() == 0) return {};
    auto zbasis = center(alg).vectors();

    struct Done {
        Vec e;
        BlockVerdict verdict;
    };
    auto run = [&](std::vector<Vec> start) {
        std::deque<Vec> work(start.begin(), start.end());
        std::vector<Done> done;
        while (!work.empty()) {
            Vec e = std::move(work.front());
            work.pop_front();
            BlockVerdict v = analyse_block(alg, zbasis, e);
            if (v.split) {
                Vec rest = sub_vec(e, *v.split);
                work.push_back(*v.split);
                work.push_back(rest);
            } else {
                done.push_back({std::move(e), std::move(v)});
            }
        }
        return done;
    };

    std::vector<Done> blocks = run({alg.one()});
    bool stalled = std::any_of(blocks.begin(), blocks.end(), [](const Done& d) { return !d.verdict.decided; });
    if (stalled) {
        if (!claimed_idempotents) {
            for (const auto& d : blocks)
                if (!d.verdict.decided)
                    fail("SplittingStalled", "cannot decide whether a block splits (" + d.verdict.note +
                                                 "); supply claimed idempotents");
        }
        check_idempotent_system(alg, *claimed_idempotents, "ClaimRejected");
        blocks = run(*claimed_idempotents);
    }

    std::vector<Vec> idems;
    for (const auto& d : blocks) idems.push_back(d.e);
    check_idempotent_system(alg, idems, "InternalError");

    std::sort(blocks.begin(), blocks.end(), [](const Done& a, const Done& b) {
        std::size_t ia = leading_index(a.e), ib = leading_index(b.e);
        if (ia != ib) return ia < ib;
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i].str() < b.e[i].str();
        return false;
    });

    std::vector<SimpleComponent> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        SimpleComponent c = make_component(alg, blocks[i].e, i);
        c.simplicity = blocks[i].verdict.status;
        c.note = blocks[i].verdict.note;
        if (!blocks[i].verdict.decided) c.note += "; simplicity taken from the claimed idempotents";
        out.push_back(std::move(c));
    }
    return out;
}

SimplicityReport simplicity_of(const FDAlgebra& alg) {
    if (alg.dim() == 0) return {false, Simplicity::Verified, "zero algebra"};
    BlockVerdict v = analyse_block(alg, center(alg).vectors(), alg.one());
    if (v.split) return {false, Simplicity::Verified, "proper central idempotent found"};
    return {true, v.status, v.note};
}

} // namespace algpres
