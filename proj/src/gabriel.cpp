#include "algpres/gabriel.hpp"

#include "algpres/error.hpp"

#include <algorithm>

namespace algpres {

Vec evaluate_word(const FDAlgebra& target, const std::vector<std::vector<Vec>>& lifts, const GeneratorAssignment& gens,
                  const Quiver& quiver, const PathWord& w) {
    if (gens.arrows.size() != quiver.arrow_count())
        fail("IncompleteAssignment", "expected one generator per arrow");
    if (w.start >= lifts.size()) fail("IncompleteAssignment", "no lifted component for a vertex");
    bool pseudo = !w.left.empty();
    std::size_t v = w.start;
    Vec acc = lifts[v].at(w.junction[0]);
    for (std::size_t k = 0; k < w.length(); ++k) {
        const Arrow& a = quiver.arrow(w.arrows[k]);
        if (pseudo) acc = target.multiply(acc, lifts[a.source].at(w.left[k]));
        acc = target.multiply(acc, gens.arrows[a.id]);
        if (pseudo) acc = target.multiply(acc, lifts[a.target].at(w.right[k]));
        v = a.target;
        if (w.junction[k + 1] != 0) acc = target.multiply(acc, lifts[v].at(w.junction[k + 1]));
    }
    return acc;
}

Matrix evaluation_matrix(const TruncatedPathAlgebra& path, const FDAlgebra& target,
                         const std::vector<std::vector<Vec>>& lifts, const GeneratorAssignment& gens) {
    std::vector<Vec> cols;
    cols.reserve(path.dim());
    for (const auto& w : path.words())
        cols.push_back(evaluate_word(target, lifts, gens, path.family().quiver, w));
    return Matrix::from_columns(target.field(), target.dim(), cols);
}

TruncatedPathAlgebra Presentation::path_algebra() const {
    return TruncatedPathAlgebra::build(flavor, family, truncation);
}

namespace {

// Kernel rows split by endpoints, kept greedily while they enlarge the ideal.
std::vector<Relation> choose_relations(const TruncatedPathAlgebra& path, const SubspaceBasis& kernel_space) {
    FieldRef f = path.algebra().field();
    std::vector<Relation> kept;
    SubspaceBasis ideal(f, path.dim());
    for (const auto& v : kernel_space.vectors()) {
        if (ideal.dim() == kernel_space.dim()) break;
        for (auto& r : split_into_relations(path, v)) {
            if (ideal.contains(r.element)) continue;
            extend_generated(path, ideal, {r.element});
            kept.push_back(std::move(r));
        }
    }
    // A second pass in reverse order drops relations that later ones generate.
    std::vector<Relation> pruned;
    SubspaceBasis again(f, path.dim());
    for (std::size_t k = kept.size(); k-- > 0;) {
        if (again.contains(kept[k].element)) continue;
        extend_generated(path, again, {kept[k].element});
        pruned.push_back(std::move(kept[k]));
    }
    std::reverse(pruned.begin(), pruned.end());
    return pruned;
}

Presentation run_pipeline(const SplittingData& split, Flavor flavor, std::size_t truncation, std::uint64_t seed,
                          std::size_t rl) {
    const FDAlgebra& a = split.algebra;
    AlgebraQuiver aq = quiver_of_algebra(split, seed);

    Presentation p;
    p.flavor = flavor;
    p.truncation = truncation;
    p.loewy_length = rl;
    p.algebra = a;
    p.radical = split.radical.basis;
    p.family.quiver = aq.quiver;
    for (const auto& c : split.components) {
        p.family.algebras.push_back(c.quotient.algebra);
        p.family.simplicity.push_back(c.quotient.simplicity);
        p.lifts.push_back(c.lifted);
    }
    for (const auto& row : aq.ranks) p.ranks.insert(p.ranks.end(), row.begin(), row.end());
    for (const auto& arrow : aq.quiver.arrows()) {
        const Vec& w = aq.witnesses[arrow.id];
        p.generators.arrows.push_back(
            a.multiply(a.multiply(split.lifted_unit(arrow.source), w), split.lifted_unit(arrow.target)));
    }
    p.notes = aq.notes;
    for (const auto& n : split.notes) p.notes.push_back(n);

    TruncatedPathAlgebra path = p.path_algebra();
    Matrix phi = evaluation_matrix(path, a, p.lifts, p.generators);
    SubspaceBasis img = image(phi);
    if (img.dim() != a.dim()) {
        std::string missing;
        for (std::size_t i = 0; i < a.dim() && missing.empty(); ++i)
            if (!img.contains(a.basis_vector(i))) missing = a.labels()[i];
        fail("NotSurjective", "evaluation image has dim " + std::to_string(img.dim()) + " < " +
                                  std::to_string(a.dim()) + "; misses " + missing);
    }
    SubspaceBasis kern = kernel(phi);
    p.relations = choose_relations(path, kern);
    p.admissible = path.arrow_ideal_power(2).contains(kern);
    p.report = verify_presentation(p);
    return p;
}

std::size_t checked_loewy_length(const SplittingData& split) {
    if (auto fails = verify_splitting(split); !fails.all_pass())
        for (const auto& c : fails.checks)
            if (!c.pass) fail("SplittingInvalid", c.name + ": " + c.witness);
    return loewy_length(split.algebra, split.radical.basis);
}

} // namespace

Presentation presentation_pseudo(const SplittingData& split, const PresentationOptions& opts) {
    std::size_t rl = checked_loewy_length(split);
    std::size_t s = opts.truncation.value_or(rl);
    if (s < rl || s == 0)
        fail("PreconditionFailed", "truncation " + std::to_string(s) + " is below the Loewy length " +
                                       std::to_string(rl));
    return run_pipeline(split, Flavor::Pseudo, s, opts.seed, rl);
}

Presentation presentation_generalized_2nilpotent(const SplittingData& split, const PresentationOptions& opts) {
    std::size_t rl = checked_loewy_length(split);
    if (rl > 2) fail("RadicalNotSquareZero", "r^2 != 0 (Loewy length " + std::to_string(rl) + ")");
    std::size_t s = opts.truncation.value_or(2);
    if (s < 2) fail("PreconditionFailed", "the square-zero pipeline needs truncation at least 2");
    return run_pipeline(split, Flavor::Generalized, s, opts.seed, rl);
}

namespace {

const char* kHomName = "evaluation map is a surjective unital homomorphism";
const char* kKernelName = "relations generate the kernel";
const char* kPseudoSandwich = "relation ideal lies between J^rl and J";
const char* kSquareZeroSandwich = "relation ideal lies between J^2 and J^2 + (J meet ker)";
const char* kIsoName = "quotient is isomorphic to the algebra";
const char* kRadicalName = "radical of the quotient is the image of J";
const char* kQuiverName = "quotient has the same quiver and components";

std::string sandwich_name(Flavor f) { return f == Flavor::Pseudo ? kPseudoSandwich : kSquareZeroSandwich; }

void fail_all(Report& rep, Flavor flavor, const std::string& why) {
    for (std::string name : {std::string(kHomName), std::string(kKernelName), sandwich_name(flavor),
                             std::string(kIsoName), std::string(kRadicalName), std::string(kQuiverName)})
        rep.add(name, false, why);
}

// Check 1: multiplicative on every basis pair, unital, onto, and graded.
void check_homomorphism(Report& rep, const Presentation& p, const TruncatedPathAlgebra& path, const Matrix& phi) {
    const FDAlgebra& a = p.algebra;
    FieldRef f = a.field();
    std::size_t n = path.dim();
    std::vector<Vec> cols;
    std::vector<bool> zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        cols.push_back(phi.column(i));
        zero[i] = is_zero_vec(cols[i]);
    }
    auto apply_sparse = [&](const SparseVec& x) {
        Vec out = zero_vec(f, a.dim());
        for (const auto& e : x) axpy(out, e.value, cols[e.index]);
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = apply_sparse(path.algebra().basis_product(i, j));
            bool ok = zero[i] || zero[j] ? is_zero_vec(lhs) : lhs == a.multiply(cols[i], cols[j]);
            if (!ok) {
                rep.add(kHomName, false, "not multiplicative on " + path.render_word(i) + " * " + path.render_word(j));
                return;
            }
        }
    if (phi.apply(path.algebra().one()) != a.one()) {
        rep.add(kHomName, false, "identity is not sent to the identity");
        return;
    }
    std::size_t r = rank(phi);
    if (r != a.dim()) {
        rep.add(kHomName, false, "image has dim " + std::to_string(r) + " < " + std::to_string(a.dim()));
        return;
    }
    auto powers = ideal_powers(a, p.radical);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t t = path.arrow_count(i);
        if (t == 0 || zero[i]) continue;
        if (t > powers.size() || !powers[t - 1].contains(cols[i])) {
            rep.add(kHomName, false, path.render_word(i) + " does not land in r^" + std::to_string(t));
            return;
        }
    }
    rep.add(kHomName, true, "rank " + std::to_string(r));
}

struct CheckedQuotient {
    QuotientResult quo;
    SubspaceBasis image_j;
    bool ok = false;
};

} // namespace

Report verify_presentation(const Presentation& p) {
    Report rep;
    rep.title = to_string(p.flavor) + " presentation";
    std::optional<TruncatedPathAlgebra> built;
    try {
        built = p.path_algebra();
        if (p.lifts.size() != p.family.algebras.size()) fail("IncompleteAssignment", "one lift per vertex expected");
        for (std::size_t v = 0; v < p.lifts.size(); ++v)
            if (p.lifts[v].size() != p.family.algebras[v].dim())
                fail("IncompleteAssignment", "lift of vertex " + std::to_string(v + 1) + " has the wrong size");
    } catch (const AlgebraError& e) {
        fail_all(rep, p.flavor, e.code() + ": " + e.what());
        return rep;
    }
    const TruncatedPathAlgebra& path = *built;
    const FDAlgebra& a = p.algebra;
    FieldRef f = a.field();
    Matrix phi;
    try {
        phi = evaluation_matrix(path, a, p.lifts, p.generators);
    } catch (const AlgebraError& e) {
        fail_all(rep, p.flavor, e.code() + ": " + e.what());
        return rep;
    }

    check_homomorphism(rep, p, path, phi);

    // Check 2.
    SubspaceBasis kern = kernel(phi);
    std::vector<Vec> gens;
    std::string bad_relation;
    for (std::size_t k = 0; k < p.relations.size(); ++k) {
        const auto& r = p.relations[k];
        if (r.element.size() != path.dim() || r.start >= p.quiver().vertex_count() ||
            r.end >= p.quiver().vertex_count()) {
            bad_relation = "relation " + std::to_string(k + 1) + " is malformed";
            break;
        }
        Vec sandwich = path.algebra().multiply(path.vertex_unit(r.start),
                                               path.algebra().multiply(r.element, path.vertex_unit(r.end)));
        if (sandwich != r.element) {
            bad_relation = "relation " + std::to_string(k + 1) + " does not run from one vertex to one vertex";
            break;
        }
        gens.push_back(r.element);
    }
    if (!bad_relation.empty()) {
        rep.add(kKernelName, false, bad_relation);
        gens.clear();
        for (const auto& r : p.relations)
            if (r.element.size() == path.dim()) gens.push_back(r.element);
    }
    SubspaceBasis ideal = ideal_generated(path, gens);
    if (bad_relation.empty()) {
        bool ok = ideal == kern;
        rep.add(kKernelName, ok,
                ok ? std::to_string(p.relations.size()) + " relations, kernel dim " + std::to_string(kern.dim())
                   : "ideal dim " + std::to_string(ideal.dim()) + ", kernel dim " + std::to_string(kern.dim()) +
                         (kern.contains(ideal) ? "" : "; ideal leaves the kernel"));
    }

    // Check 3.
    SubspaceBasis j1 = path.arrow_ideal_power(1), j2 = path.arrow_ideal_power(2);
    if (p.flavor == Flavor::Pseudo) {
        bool lower = ideal.contains(path.arrow_ideal_power(p.loewy_length));
        bool upper = j1.contains(ideal);
        rep.add(kPseudoSandwich, lower && upper,
                !lower ? "J^" + std::to_string(p.loewy_length) + " is not inside the ideal"
                : !upper ? "the ideal has a component of arrow count 0"
                         : "J^" + std::to_string(p.loewy_length) + " in truncation " + std::to_string(p.truncation));
    } else {
        // Kernel of the evaluation restricted to the length-1 words.
        std::vector<std::size_t> ones;
        for (std::size_t i = 0; i < path.dim(); ++i)
            if (path.arrow_count(i) == 1) ones.push_back(i);
        std::vector<Vec> cols;
        for (auto i : ones) cols.push_back(phi.column(i));
        SubspaceBasis upper_space = j2;
        for (const auto& v : kernel(Matrix::from_columns(f, a.dim(), cols)).vectors()) {
            Vec w = zero_vec(f, path.dim());
            for (std::size_t k = 0; k < ones.size(); ++k) w[ones[k]] = v[k];
            upper_space.insert(w);
        }
        bool lower = ideal.contains(j2);
        bool upper = upper_space.contains(ideal);
        rep.add(kSquareZeroSandwich, lower && upper,
                !lower ? "J^2 is not inside the ideal"
                : !upper ? "the ideal leaves J^2 + (J meet ker)"
                         : "upper bound dim " + std::to_string(upper_space.dim()));
    }
    if (j2.contains(ideal)) rep.notes.push_back("relation ideal lies in J^2 (admissible)");
    else rep.notes.push_back("relation ideal is not inside J^2");

    // Check 4.
    CheckedQuotient cq;
    try {
        cq.quo = quotient_algebra(path.algebra(), ideal, path.generator_indices());
        cq.image_j = SubspaceBasis(f, cq.quo.algebra.dim());
        for (const auto& v : j1.vectors()) cq.image_j.insert(cq.quo.projection.apply(v));
        bool killed = true;
        for (const auto& v : ideal.vectors()) killed = killed && is_zero_vec(phi.apply(v));
        std::string why;
        if (cq.quo.algebra.dim() != a.dim())
            why = "quotient has dim " + std::to_string(cq.quo.algebra.dim()) + ", algebra has dim " +
                  std::to_string(a.dim());
        else if (!killed)
            why = "the ideal is not killed by the evaluation map";
        Matrix psi;
        if (why.empty()) {
            std::vector<Vec> cols;
            for (auto r : cq.quo.reps) cols.push_back(phi.column(r));
            psi = Matrix::from_columns(f, a.dim(), cols);
            if (rank(psi) != a.dim()) why = "induced map is not bijective";
        }
        std::size_t qd = cq.quo.algebra.dim();
        for (std::size_t i = 0; why.empty() && i < qd; ++i)
            for (std::size_t j = 0; why.empty() && j < qd; ++j) {
                Vec lhs = psi.apply(to_dense(f, qd, cq.quo.algebra.basis_product(i, j)));
                if (lhs != a.multiply(psi.column(i), psi.column(j)))
                    why = "induced map is not multiplicative on " + cq.quo.algebra.labels()[i] + " * " +
                          cq.quo.algebra.labels()[j];
            }
        cq.ok = why.empty();
        rep.add(kIsoName, cq.ok, cq.ok ? "dim " + std::to_string(a.dim()) : why);
    } catch (const AlgebraError& e) {
        rep.add(kIsoName, false, e.code() + ": " + e.what());
    }

    // Check 5.
    if (!bad_relation.empty()) {
        rep.add(kRadicalName, false, bad_relation);
    } else try {
        std::size_t lower = p.flavor == Flavor::Pseudo ? p.loewy_length : 2;
        Report sub = radical_of_quotient_check(path, p.relations, std::min(lower, p.truncation));
        const Check& c = sub.checks.front();
        rep.add(kRadicalName, c.pass, c.witness);
        for (const auto& n : sub.notes) rep.notes.push_back(n);
    } catch (const AlgebraError& e) {
        rep.add(kRadicalName, false, e.code() + ": " + e.what());
    }

    // Check 6: rebuild the quiver of the quotient from its own splitting.
    if (!cq.ok) {
        rep.add(kQuiverName, false, "no isomorphic quotient to compare");
        return rep;
    }
    try {
        const FDAlgebra& qa = cq.quo.algebra;
        std::size_t qd = qa.dim();
        std::vector<Vec> b;
        for (std::size_t i = 0; i < path.dim(); ++i)
            if (path.arrow_count(i) == 0) b.push_back(cq.quo.projection.column(i));
        SplittingData qs = build_splitting(qa, {cq.image_j, b, std::nullopt});
        AlgebraQuiver qq = quiver_of_algebra(qs);
        std::size_t s = p.quiver().vertex_count();
        std::string why;
        if (qs.vertex_count() != s) why = "quotient has " + std::to_string(qs.vertex_count()) + " components";
        std::vector<std::size_t> match(s, s);
        for (std::size_t v = 0; why.empty() && v < s; ++v) {
            Vec ev = cq.quo.projection.apply(path.vertex_unit(v));
            for (std::size_t c = 0; c < s; ++c)
                if (qs.lifted_unit(c) == ev) match[v] = c;
            if (match[v] == s) why = "vertex " + p.quiver().vertices()[v] + " matches no component";
        }
        for (std::size_t i = 0; why.empty() && i < s; ++i)
            for (std::size_t j = 0; why.empty() && j < s; ++j)
                if (qq.ranks[match[i]][match[j]] != p.quiver().arrows_between(i, j))
                    why = "arrow count " + std::to_string(i + 1) + "->" + std::to_string(j + 1) + " is " +
                          std::to_string(qq.ranks[match[i]][match[j]]);
        // Component isomorphisms: vertex algebra -> lifted component of the quotient.
        for (std::size_t v = 0; why.empty() && v < s; ++v) {
            const FDAlgebra& av = p.family.algebras[v];
            const auto& comp = qs.components[match[v]];
            Matrix basis = Matrix::from_columns(f, qd, comp.lifted);
            std::vector<Vec> cols;
            for (std::size_t k = 0; k < av.dim(); ++k) {
                PathWord w{static_cast<std::uint32_t>(v), {}, {static_cast<std::uint32_t>(k)}, {}, {}};
                auto x = solve(basis, cq.quo.projection.column(*path.index_of(w)));
                if (!x) {
                    why = "vertex " + p.quiver().vertices()[v] + " leaves its component";
                    break;
                }
                cols.push_back(*x);
            }
            if (!why.empty()) break;
            const FDAlgebra& ca = comp.quotient.algebra;
            if (ca.dim() != av.dim()) {
                why = "component of vertex " + p.quiver().vertices()[v] + " has the wrong dimension";
                break;
            }
            Matrix iso = Matrix::from_columns(f, ca.dim(), cols);
            if (rank(iso) != av.dim()) why = "component map of vertex " + p.quiver().vertices()[v] + " is singular";
            for (std::size_t x = 0; why.empty() && x < av.dim(); ++x)
                for (std::size_t y = 0; why.empty() && y < av.dim(); ++y)
                    if (iso.apply(to_dense(f, av.dim(), av.basis_product(x, y))) !=
                        ca.multiply(iso.column(x), iso.column(y)))
                        why = "component map of vertex " + p.quiver().vertices()[v] + " is not multiplicative";
        }
        rep.add(kQuiverName, why.empty(),
                why.empty() ? std::to_string(s) + " vertices, " + std::to_string(qq.quiver.arrow_count()) + " arrows"
                            : why);
    } catch (const AlgebraError& e) {
        rep.add(kQuiverName, false, e.code() + ": " + e.what());
    }
    return rep;
}

} // namespace algpres
