#include "algpres/pathalg.hpp"

#include "algpres/builders.hpp"
#include "algpres/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace algpres {

FieldRef VertexAlgebraFamily::field() const {
    return algebras.empty() ? nullptr : algebras.front().field();
}

void VertexAlgebraFamily::validate() const {
    if (algebras.size() != quiver.vertex_count())
        fail("InvalidFamily", "expected one algebra per vertex, got " + std::to_string(algebras.size()) + " for " +
                                  std::to_string(quiver.vertex_count()) + " vertices");
    if (!simplicity.empty() && simplicity.size() != algebras.size())
        fail("InvalidFamily", "simplicity flags do not match the vertices");
    for (std::size_t v = 0; v < algebras.size(); ++v) {
        const auto& a = algebras[v];
        if (a.field() != field()) fail("InvalidFamily", "vertex algebras live over different fields");
        if (a.dim() == 0 || a.one() != a.basis_vector(0))
            fail("InvalidFamily", "the algebra at vertex " + quiver.vertices()[v] +
                                      " must have its identity as basis vector 0");
    }
}

VertexAlgebraFamily VertexAlgebraFamily::scalar(const Quiver& q, FieldRef f) {
    VertexAlgebraFamily fam;
    fam.quiver = q;
    fam.algebras.assign(q.vertex_count(), build::ground(f));
    fam.simplicity.assign(q.vertex_count(), Simplicity::Verified);
    return fam;
}

std::string to_string(Flavor f) { return f == Flavor::Pseudo ? "pseudo" : "generalized"; }

std::size_t basis_cap() {
    if (const char* env = std::getenv("ALGPRES_MAX_BASIS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 3000;
}

namespace {

std::size_t path_end(const Quiver& q, const PathWord& w) {
    return w.arrows.empty() ? w.start : q.arrow(w.arrows.back()).target;
}

std::vector<std::size_t> path_vertices(const Quiver& q, const QuiverPath& p) {
    std::vector<std::size_t> vs{p.start};
    for (auto a : p.arrows) vs.push_back(q.arrow(a).target);
    return vs;
}

// A length-0 word is one slot; otherwise arrows plus standalone coefficients.
std::size_t word_slots(const PathWord& w) {
    if (w.arrows.empty()) return 1;
    std::size_t s = w.arrows.size();
    for (auto j : w.junction) s += j != 0;
    return s;
}

// Calls emit(index vector) for every index vector with entries below dims.
template <class Emit>
void odometer(const std::vector<std::size_t>& dims, Emit&& emit) {
    std::vector<std::uint32_t> idx(dims.size(), 0);
    for (auto d : dims)
        if (d == 0) return;
    while (true) {
        emit(idx);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == dims[k]) idx[k++] = 0;
        if (k == idx.size()) return;
    }
}

// Products of basis elements in a vertex algebra, as a sparse vector.
SparseVec basis_chain(const FDAlgebra& a, const std::vector<std::uint32_t>& factors) {
    FieldRef f = a.field();
    SparseVec cur{{0, f->one()}};
    for (auto x : factors) {
        Vec acc = zero_vec(f, a.dim());
        for (const auto& e : cur) axpy(acc, e.value, a.basis_product(e.index, x));
        cur = to_sparse(acc);
    }
    return cur;
}

} // namespace

TruncatedPathAlgebra TruncatedPathAlgebra::build(Flavor flavor, VertexAlgebraFamily family, std::size_t truncation) {
    if (truncation == 0) fail("PreconditionFailed", "truncation must be at least 1");
    family.validate();
    TruncatedPathAlgebra out;
    out.flavor_ = flavor;
    out.truncation_ = truncation;
    out.family_ = std::make_shared<const VertexAlgebraFamily>(std::move(family));
    const auto& fam = *out.family_;
    const Quiver& q = fam.quiver;
    FieldRef f = fam.field();
    if (q.vertex_count() == 0) fail("InvalidFamily", "the quiver has no vertices");
    std::size_t cap = basis_cap();

    auto paths = enumerate_paths(q, truncation - 1);
    std::size_t total = 0;
    for (const auto& p : paths) {
        std::size_t count = 1;
        auto vs = path_vertices(q, p);
        for (auto v : vs) count *= fam.algebras[v].dim();
        if (flavor == Flavor::Pseudo)
            for (auto a : p.arrows) count *= fam.algebras[q.arrow(a).source].dim() * fam.algebras[q.arrow(a).target].dim();
        total += count;
        if (total > cap)
            fail("TruncationTooLargeForMemory", "more than " + std::to_string(cap) +
                                                    " basis words at truncation " + std::to_string(truncation) +
                                                    " (raise ALGPRES_MAX_BASIS to allow more)");
    }

    for (const auto& p : paths) {
        auto vs = path_vertices(q, p);
        std::size_t n = p.length();
        std::vector<std::size_t> dims;
        for (auto v : vs) dims.push_back(fam.algebras[v].dim());
        if (flavor == Flavor::Pseudo)
            for (auto a : p.arrows) {
                dims.push_back(fam.algebras[q.arrow(a).source].dim());
                dims.push_back(fam.algebras[q.arrow(a).target].dim());
            }
        odometer(dims, [&](const std::vector<std::uint32_t>& idx) {
            PathWord w;
            w.start = static_cast<std::uint32_t>(p.start);
            for (auto a : p.arrows) w.arrows.push_back(static_cast<std::uint32_t>(a));
            w.junction.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n + 1));
            if (flavor == Flavor::Pseudo)
                for (std::size_t i = 0; i < n; ++i) {
                    w.left.push_back(idx[n + 1 + 2 * i]);
                    w.right.push_back(idx[n + 2 + 2 * i]);
                }
            out.words_.push_back(std::move(w));
        });
    }
    // Order by (arrow count, slot count, content).
    std::stable_sort(out.words_.begin(), out.words_.end(), [&](const PathWord& a, const PathWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        std::size_t sa = word_slots(a), sb = word_slots(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.index_.emplace(out.words_[i], i);

    for (std::size_t i = 0; i < out.words_.size(); ++i) {
        const auto& w = out.words_[i];
        if (w.length() == 0) {
            out.generators_.push_back(i);
        } else if (w.length() == 1 && w.junction[0] == 0 && w.junction[1] == 0) {
            // Pseudo needs every l|a|r; generalized words factor as a * (1.b.1) * c.
            out.generators_.push_back(i);
        }
    }

    std::size_t dim = out.words_.size();
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels.push_back(out.render_word(i));
    std::vector<SparseVec> table(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) table[i * dim + j] = out.multiply_words(i, j);
    Vec one = zero_vec(f, dim);
    for (std::size_t v = 0; v < q.vertex_count(); ++v) axpy(one, f->one(), out.vertex_unit(v));
    out.algebra_ = FDAlgebra(f, std::move(labels), std::move(table), std::move(one));
    return out;
}

std::optional<std::size_t> TruncatedPathAlgebra::index_of(const PathWord& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t TruncatedPathAlgebra::end_vertex(std::size_t i) const { return path_end(family_->quiver, words_[i]); }

std::size_t TruncatedPathAlgebra::slot_count(std::size_t i) const { return word_slots(words_[i]); }

Vec TruncatedPathAlgebra::vertex_unit(std::size_t v) const {
    PathWord w;
    w.start = static_cast<std::uint32_t>(v);
    w.junction = {0};
    return unit_vec(family_->field(), dim(), *index_of(w));
}

SubspaceBasis TruncatedPathAlgebra::arrow_ideal_power(std::size_t t) const {
    FieldRef f = family_->field();
    SubspaceBasis out(f, dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (words_[i].length() >= t) out.insert(unit_vec(f, dim(), i));
    return out;
}

std::map<PathWord, Scalar> TruncatedPathAlgebra::multiply_words(const PathWord& a, const PathWord& b) const {
    std::map<PathWord, Scalar> out;
    const Quiver& q = family_->quiver;
    if (path_end(q, a) != b.start) return out;
    if (a.length() + b.length() >= truncation_) return out;
    const FDAlgebra& seam = family_->algebras[b.start];
    PathWord w;
    w.start = a.start;
    w.arrows = a.arrows;
    w.arrows.insert(w.arrows.end(), b.arrows.begin(), b.arrows.end());
    w.left = a.left;
    w.left.insert(w.left.end(), b.left.begin(), b.left.end());
    w.right = a.right;
    w.right.insert(w.right.end(), b.right.begin(), b.right.end());
    w.junction.assign(a.junction.begin(), a.junction.end() - 1);
    std::size_t seam_slot = w.junction.size();
    w.junction.push_back(0);
    w.junction.insert(w.junction.end(), b.junction.begin() + 1, b.junction.end());
    for (const auto& e : seam.basis_product(a.junction.back(), b.junction.front())) {
        w.junction[seam_slot] = e.index;
        out.emplace(w, e.value);
    }
    return out;
}

SparseVec TruncatedPathAlgebra::multiply_words(std::size_t a, std::size_t b) const {
    SparseVec out;
    for (const auto& [w, c] : multiply_words(words_[a], words_[b]))
        out.push_back({static_cast<std::uint32_t>(index_.at(w)), c});
    std::sort(out.begin(), out.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.index < y.index; });
    return out;
}

std::string TruncatedPathAlgebra::render_word(std::size_t i) const {
    const auto& w = words_[i];
    const Quiver& q = family_->quiver;
    auto coeff = [&](std::size_t v, std::size_t k) { return family_->algebras[v].labels()[k] + "@" + q.vertices()[v]; };
    if (w.arrows.empty())
        return w.junction[0] == 0 ? "e" + q.vertices()[w.start] : coeff(w.start, w.junction[0]);
    std::vector<std::string> tokens;
    std::size_t v = w.start;
    for (std::size_t k = 0; k <= w.length(); ++k) {
        if (w.junction[k] != 0) tokens.push_back(coeff(v, w.junction[k]));
        if (k == w.length()) break;
        const Arrow& a = q.arrow(w.arrows[k]);
        if (flavor_ == Flavor::Pseudo)
            tokens.push_back(family_->algebras[a.source].labels()[w.left[k]] + "|" + a.label + "|" +
                             family_->algebras[a.target].labels()[w.right[k]]);
        else
            tokens.push_back(a.label);
        v = a.target;
    }
    std::string out;
    for (std::size_t k = 0; k < tokens.size(); ++k) out += (k ? " . " : "") + tokens[k];
    return out;
}

std::string TruncatedPathAlgebra::render(const Vec& x) const {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += x[i].is_one() ? render_word(i) : "(" + x[i].str() + ")*" + render_word(i);
    }
    return out.empty() ? "0" : out;
}

Matrix iota(const TruncatedPathAlgebra& pseudo, const TruncatedPathAlgebra& generalized) {
    if (pseudo.flavor() != Flavor::Pseudo || generalized.flavor() != Flavor::Generalized)
        fail("FamilyMismatch", "iota maps a pseudo path algebra to a generalized one");
    const auto& fp = pseudo.family();
    const auto& fg = generalized.family();
    bool same = pseudo.truncation() == generalized.truncation() && fp.quiver == fg.quiver &&
                fp.algebras.size() == fg.algebras.size();
    for (std::size_t v = 0; same && v < fp.algebras.size(); ++v) same = fp.algebras[v] == fg.algebras[v];
    if (!same) fail("FamilyMismatch", "the two path algebras are built from different families or truncations");

    FieldRef f = fp.field();
    const Quiver& q = fp.quiver;
    Matrix m(f, generalized.dim(), pseudo.dim());
    for (std::size_t col = 0; col < pseudo.dim(); ++col) {
        const PathWord& w = pseudo.word(col);
        std::size_t n = w.length();
        // Junction k of the image is right[k-1] * junction[k] * left[k].
        std::vector<SparseVec> parts;
        std::size_t v = w.start;
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<std::uint32_t> factors;
            if (k > 0) factors.push_back(w.right[k - 1]);
            factors.push_back(w.junction[k]);
            if (k < n) factors.push_back(w.left[k]);
            parts.push_back(basis_chain(fp.algebras[v], factors));
            if (k < n) v = q.arrow(w.arrows[k]).target;
        }
        std::vector<std::size_t> dims;
        for (const auto& p : parts) dims.push_back(p.size());
        PathWord img{w.start, w.arrows, std::vector<std::uint32_t>(n + 1, 0), {}, {}};
        odometer(dims, [&](const std::vector<std::uint32_t>& idx) {
            Scalar c = f->one();
            for (std::size_t k = 0; k <= n; ++k) {
                img.junction[k] = parts[k][idx[k]].index;
                c = c * parts[k][idx[k]].value;
            }
            m.at(*generalized.index_of(img), col) += c;
        });
    }
    return m;
}

SubspaceBasis ideal_generated(const TruncatedPathAlgebra& alg, const std::vector<Vec>& gens) {
    return ideal_closure(alg.algebra(), gens, alg.generator_indices());
}

void extend_generated(const TruncatedPathAlgebra& alg, SubspaceBasis& ideal, const std::vector<Vec>& gens) {
    extend_ideal(alg.algebra(), ideal, gens, alg.generator_indices());
}

std::vector<Relation> split_into_relations(const TruncatedPathAlgebra& alg, const Vec& x) {
    std::size_t s = alg.family().quiver.vertex_count();
    FieldRef f = alg.family().field();
    std::vector<Vec> pieces(s * s);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        Vec& p = pieces[alg.start_vertex(i) * s + alg.end_vertex(i)];
        if (p.empty()) p = zero_vec(f, alg.dim());
        p[i] = x[i];
    }
    std::vector<Relation> out;
    for (std::size_t k = 0; k < pieces.size(); ++k)
        if (!pieces[k].empty()) out.push_back({std::move(pieces[k]), k / s, k % s});
    return out;
}

Report radical_of_quotient_check(const TruncatedPathAlgebra& alg, const std::vector<Relation>& rho, std::size_t s) {
    const auto& fam = alg.family();
    if (fam.simplicity.size() != fam.algebras.size())
        fail("PreconditionFailed", "every vertex algebra must be flagged simple");
    if (s == 0) s = alg.truncation();
    std::vector<Vec> gens;
    for (const auto& r : rho) gens.push_back(r.element);
    SubspaceBasis ideal = ideal_generated(alg, gens);
    if (!ideal.contains(alg.arrow_ideal_power(s)))
        fail("PreconditionFailed", "J^" + std::to_string(s) + " is not contained in the relation ideal");

    Report rep;
    rep.title = "radical of the quotient by relations";
    auto quo = quotient_algebra(alg.algebra(), ideal, alg.generator_indices());
    SubspaceBasis image_j(fam.field(), quo.algebra.dim());
    for (const auto& v : alg.arrow_ideal_power(1).vectors()) image_j.insert(quo.projection.apply(v));
    RadicalResult rad;
    try {
        rad = radical(quo.algebra);
    } catch (const AlgebraError& e) {
        if (e.code() != "SmallCharacteristicNeedsClaim") throw;
        try {
            rad = radical(quo.algebra, image_j);
        } catch (const AlgebraError& rejected) {
            rep.add("radical of the quotient equals the image of J", false, rejected.what());
            return rep;
        }
    }
    bool ok = rad.basis == image_j;
    rep.add("radical of the quotient equals the image of J", ok,
            ok ? "dim " + std::to_string(image_j.dim()) + " via " + rad.method
               : "radical dim " + std::to_string(rad.basis.dim()) + ", image of J dim " +
                     std::to_string(image_j.dim()));
    for (const auto& n : rad.notes) rep.notes.push_back(n);
    return rep;
}

} // namespace algpres
