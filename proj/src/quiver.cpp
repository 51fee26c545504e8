#include "algpres/quiver.hpp"

#include "algpres/error.hpp"

#include <algorithm>
#include <sstream>

namespace algpres {

std::size_t Quiver::add_vertex(std::string label) {
    vertices_.push_back(std::move(label));
    return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::size_t source, std::size_t target, std::string label) {
    if (source >= vertices_.size() || target >= vertices_.size())
        fail("InvalidQuiver", "arrow endpoint out of range");
    std::size_t id = arrows_.size();
    arrows_.push_back({id, source, target, std::move(label)});
    return id;
}

std::vector<std::size_t> Quiver::arrows_from(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& a : arrows_)
        if (a.source == v) out.push_back(a.id);
    return out;
}

std::size_t Quiver::arrows_between(std::size_t i, std::size_t j) const {
    return static_cast<std::size_t>(
        std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.source == i && a.target == j; }));
}

bool Quiver::operator==(const Quiver& o) const {
    if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow &a = arrows_[i], &b = o.arrows_[i];
        if (a.source != b.source || a.target != b.target || a.label != b.label) return false;
    }
    return true;
}

std::vector<QuiverPath> enumerate_paths(const Quiver& q, std::size_t max_len) {
    std::vector<QuiverPath> out;
    std::vector<QuiverPath> layer;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) layer.push_back({v, {}});
    for (std::size_t len = 0;; ++len) {
        out.insert(out.end(), layer.begin(), layer.end());
        if (len == max_len) break;
        std::vector<QuiverPath> next;
        // Extending in order keeps each layer sorted by (start, arrow ids).
        for (const auto& p : layer)
            for (std::size_t a : q.arrows_from(p.end(q))) {
                QuiverPath longer = p;
                longer.arrows.push_back(a);
                next.push_back(std::move(longer));
            }
        if (next.empty()) break;
        layer = std::move(next);
    }
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string to_dot(const Quiver& q) {
    if (q.vertex_count() == 0) return "digraph { }";
    std::ostringstream os;
    os << "digraph {\n";
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        os << "  v" << v + 1 << " [label=\"" << dot_escape(q.vertices()[v]) << "\"];\n";
    for (const auto& a : q.arrows())
        os << "  v" << a.source + 1 << " -> v" << a.target + 1 << " [label=\"" << dot_escape(a.label) << "\"];\n";
    os << "}";
    return os.str();
}

AlgebraQuiver quiver_of_algebra(const SplittingData& split, std::uint64_t seed) {
    Report check = verify_splitting(split);
    for (const auto& c : check.checks)
        if (!c.pass) fail("SplittingInvalid", c.name + ": " + c.witness);

    AlgebraQuiver out;
    std::size_t n = split.vertex_count();
    for (std::size_t v = 0; v < n; ++v) out.quiver.add_vertex(std::to_string(v + 1));
    out.ranks.assign(n, std::vector<std::size_t>(n, 0));
    FieldRef f = split.algebra.field();
    for (const auto& piece : graded_radical_bimodule(split, 1)) {
        RankResult r = bimodule_min_generators(piece.module, seed);
        out.ranks[piece.source][piece.target] = r.rank;
        for (const auto& g : r.generators) {
            Vec w = zero_vec(f, split.algebra.dim());
            for (std::size_t k = 0; k < g.size(); ++k) axpy(w, g[k], piece.carrier[k]);
            out.quiver.add_arrow(piece.source, piece.target, "a" + std::to_string(out.quiver.arrow_count() + 1));
            out.witnesses.push_back(std::move(w));
        }
        if (!r.exhaustive && r.rank > 0) {
            auto [lo, hi] = std::minmax_element(r.seed_ranks.begin(), r.seed_ranks.end());
            if (*lo != *hi)
                out.notes.push_back("rank of piece (" + std::to_string(piece.source + 1) + "," +
                                    std::to_string(piece.target + 1) + ") varied across seeds");
        }
    }
    return out;
}

} // namespace algpres
