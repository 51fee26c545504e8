#include "algpres/io.hpp"

#include "algpres/error.hpp"

#include <fstream>
#include <sstream>

namespace algpres::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { fail("ParseError", msg); }

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::size_t need_index(const Json& j, std::size_t bound, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        parse_error(std::string(what) + " must be a non-negative integer");
    auto v = j.get<std::size_t>();
    if (v >= bound) parse_error(std::string(what) + " " + std::to_string(v) + " out of range");
    return v;
}

Scalar parse_scalar(FieldRef f, const Json& j) {
    if (j.is_number_integer()) return f->from_int(j.get<long long>());
    if (!j.is_string()) parse_error("coefficients must be strings");
    return f->parse(j.get<std::string>());
}

Simplicity simplicity_from_string(const std::string& s) {
    for (auto v : {Simplicity::Verified, Simplicity::Heuristic, Simplicity::Asserted})
        if (to_string(v) == s) return v;
    parse_error("unknown simplicity status \"" + s + "\"");
}

Json word_to_json(const PathWord& w) {
    return Json{{"start", w.start}, {"arrows", w.arrows}, {"junction", w.junction}, {"left", w.left}, {"right", w.right}};
}

PathWord word_from_json(const Json& j) {
    PathWord w;
    w.start = need(j, "start").get<std::uint32_t>();
    w.arrows = need(j, "arrows").get<std::vector<std::uint32_t>>();
    w.junction = need(j, "junction").get<std::vector<std::uint32_t>>();
    if (j.contains("left")) w.left = j.at("left").get<std::vector<std::uint32_t>>();
    if (j.contains("right")) w.right = j.at("right").get<std::vector<std::uint32_t>>();
    return w;
}

std::vector<Vec> vecs_from_json(FieldRef f, const Json& j, std::size_t n) {
    if (!j.is_array()) parse_error("expected a list of vectors");
    std::vector<Vec> out;
    for (const auto& v : j) out.push_back(vec_from_json(f, v, n));
    return out;
}

Json vecs_to_json(const std::vector<Vec>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(vec_to_json(v));
    return out;
}

// Runs a parser and turns library-level JSON exceptions into ParseError.
template <class F>
auto guarded(F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        parse_error(e.what());
    }
}

} // namespace

Json field_to_json(FieldRef f) {
    switch (f->kind()) {
    case FieldKind::Rationals: return Json{{"kind", "Q"}};
    case FieldKind::Prime: return Json{{"kind", "Fp"}, {"p", f->characteristic()}};
    case FieldKind::RationalFunction:
        return Json{{"kind", "function_field"}, {"base", field_to_json(f->base())}, {"var", f->symbol()}};
    case FieldKind::Extension: {
        Json mp = Json::array();
        for (const auto& c : f->minpoly()) mp.push_back(c.str());
        return Json{{"kind", "extension"}, {"base", field_to_json(f->base())}, {"minpoly", mp}, {"generator", f->symbol()}};
    }
    }
    return {};
}

FieldRef field_from_json(const Json& j) {
    return guarded([&] {
        std::string kind = need(j, "kind").get<std::string>();
        if (kind == "Q") return Field::rationals();
        if (kind == "Fp") return Field::prime(need(j, "p").get<std::uint64_t>());
        if (kind == "function_field")
            return Field::rational_functions(field_from_json(need(j, "base")), need(j, "var").get<std::string>());
        if (kind == "extension") {
            FieldRef base = field_from_json(need(j, "base"));
            Poly mp;
            for (const auto& c : need(j, "minpoly")) mp.push_back(parse_scalar(base, c));
            return Field::extension(base, mp, need(j, "generator").get<std::string>());
        }
        parse_error("unknown field kind \"" + kind + "\"");
    });
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Vec vec_from_json(FieldRef f, const Json& j, std::size_t expected) {
    return guarded([&] {
        if (!j.is_array() || j.size() != expected)
            parse_error("expected a vector of length " + std::to_string(expected));
        Vec out;
        for (const auto& x : j) out.push_back(parse_scalar(f, x));
        return out;
    });
}

Json algebra_to_json(const FDAlgebra& a) {
    Json products = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const auto& p = a.basis_product(i, j);
            if (p.empty()) continue;
            Json terms = Json::array();
            for (const auto& e : p) terms.push_back(Json::array({e.index, e.value.str()}));
            products.push_back(Json::array({i, j, terms}));
        }
    return Json{{"field", field_to_json(a.field())},
                {"labels", a.labels()},
                {"one", vec_to_json(a.one())},
                {"products", products}};
}

FDAlgebra algebra_from_json(const Json& j) {
    return guarded([&] {
        FieldRef f = field_from_json(need(j, "field"));
        auto labels = need(j, "labels").get<std::vector<std::string>>();
        std::size_t n = labels.size();
        std::vector<Vec> dense(n * n);
        for (const auto& entry : need(j, "products")) {
            if (!entry.is_array() || entry.size() != 3) parse_error("products entries are [i, j, terms]");
            std::size_t i = need_index(entry[0], n, "product row");
            std::size_t k = need_index(entry[1], n, "product column");
            Vec& slot = dense[i * n + k];
            if (slot.empty()) slot = zero_vec(f, n);
            for (const auto& term : entry[2]) {
                if (!term.is_array() || term.size() != 2) parse_error("product terms are [index, coefficient]");
                slot[need_index(term[0], n, "product term")] += parse_scalar(f, term[1]);
            }
        }
        std::vector<SparseVec> table(n * n);
        for (std::size_t t = 0; t < n * n; ++t)
            if (!dense[t].empty()) table[t] = to_sparse(dense[t]);
        return FDAlgebra(f, std::move(labels), std::move(table), vec_from_json(f, need(j, "one"), n));
    });
}

AlgebraSpec spec_from_json(const Json& j) {
    return guarded([&] {
        AlgebraSpec s;
        const Json& body = j.contains("algebra") ? j.at("algebra") : j;
        s.algebra = algebra_from_json(body);
        if (j.contains("name")) s.name = j.at("name").get<std::string>();
        FieldRef f = s.algebra.field();
        std::size_t n = s.algebra.dim();
        if (j.contains("radical"))
            s.hints.claimed_radical = SubspaceBasis::span(f, n, vecs_from_json(f, j.at("radical"), n));
        if (j.contains("lifted_subalgebra")) s.hints.lifted_subalgebra = vecs_from_json(f, j.at("lifted_subalgebra"), n);
        if (j.contains("idempotents")) {
            // Quotient coordinates; the length is checked when the splitting is built.
            std::vector<Vec> idem;
            for (const auto& v : j.at("idempotents")) idem.push_back(vec_from_json(f, v, v.size()));
            s.hints.claimed_idempotents = idem;
        }
        return s;
    });
}

Json spec_to_json(const AlgebraSpec& s) {
    Json out;
    if (!s.name.empty()) out["name"] = s.name;
    out["algebra"] = algebra_to_json(s.algebra);
    if (s.hints.claimed_radical) out["radical"] = vecs_to_json(s.hints.claimed_radical->vectors());
    if (s.hints.lifted_subalgebra) out["lifted_subalgebra"] = vecs_to_json(*s.hints.lifted_subalgebra);
    if (s.hints.claimed_idempotents) out["idempotents"] = vecs_to_json(*s.hints.claimed_idempotents);
    return out;
}

Json quiver_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows()) arrows.push_back(Json::array({a.id, a.source, a.target, a.label}));
    return Json{{"vertices", q.vertices()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
    return guarded([&] {
        Quiver q(need(j, "vertices").get<std::vector<std::string>>());
        for (const auto& a : need(j, "arrows")) {
            if (!a.is_array() || a.size() != 4) parse_error("arrows are [id, source, target, label]");
            if (a[0].get<std::size_t>() != q.arrow_count()) parse_error("arrow ids must be 0, 1, 2, ... in order");
            q.add_arrow(need_index(a[1], q.vertex_count(), "arrow source"),
                        need_index(a[2], q.vertex_count(), "arrow target"), a[3].get<std::string>());
        }
        return q;
    });
}

Json report_to_json(const Report& r) {
    Json checks = Json::object();
    for (const auto& c : r.checks) checks[c.name] = Json{{"pass", c.pass}, {"witness", c.witness}};
    return Json{{"title", r.title}, {"all_pass", r.all_pass()}, {"checks", checks}, {"notes", r.notes}};
}

Json presentation_to_json(const Presentation& p) {
    Json out;
    out["flavor"] = to_string(p.flavor);
    out["truncation"] = p.truncation;
    out["loewy_length"] = p.loewy_length;
    out["quiver"] = quiver_to_json(p.quiver());
    Json fam = Json::array(), simp = Json::array();
    for (const auto& a : p.family.algebras) fam.push_back(algebra_to_json(a));
    for (auto s : p.family.simplicity) simp.push_back(to_string(s));
    out["family"] = fam;
    out["simplicity"] = simp;
    TruncatedPathAlgebra path = p.path_algebra();
    Json rels = Json::array();
    for (const auto& r : p.relations) {
        Json terms = Json::array();
        for (std::size_t i = 0; i < r.element.size(); ++i)
            if (!r.element[i].is_zero())
                terms.push_back(Json{{"word", word_to_json(path.word(i))}, {"coeff", r.element[i].str()}});
        rels.push_back(Json{{"start", r.start}, {"end", r.end}, {"text", path.render(r.element)}, {"terms", terms}});
    }
    out["relations"] = rels;
    out["generators"] = vecs_to_json(p.generators.arrows);
    Json lifts = Json::array();
    for (const auto& l : p.lifts) lifts.push_back(vecs_to_json(l));
    out["lifts"] = lifts;
    out["ranks"] = p.ranks;
    out["admissible"] = p.admissible;
    out["algebra"] = algebra_to_json(p.algebra);
    out["radical"] = vecs_to_json(p.radical.vectors());
    out["notes"] = p.notes;
    out["report"] = report_to_json(p.report);
    return out;
}

Presentation presentation_from_json(const Json& j) {
    return guarded([&] {
        Presentation p;
        std::string flavor = need(j, "flavor").get<std::string>();
        if (flavor == "pseudo") p.flavor = Flavor::Pseudo;
        else if (flavor == "generalized") p.flavor = Flavor::Generalized;
        else parse_error("unknown flavor \"" + flavor + "\"");
        p.truncation = need(j, "truncation").get<std::size_t>();
        p.loewy_length = need(j, "loewy_length").get<std::size_t>();
        p.algebra = algebra_from_json(need(j, "algebra"));
        FieldRef f = p.algebra.field();
        std::size_t n = p.algebra.dim();
        p.family.quiver = quiver_from_json(need(j, "quiver"));
        for (const auto& a : need(j, "family")) p.family.algebras.push_back(algebra_from_json(a));
        for (const auto& s : need(j, "simplicity")) p.family.simplicity.push_back(simplicity_from_string(s.get<std::string>()));
        for (const auto& a : p.family.algebras)
            if (a.field() != f) parse_error("vertex algebras and the algebra live over different fields");
        p.radical = SubspaceBasis::span(f, n, vecs_from_json(f, need(j, "radical"), n));
        p.generators.arrows = vecs_from_json(f, need(j, "generators"), n);
        for (const auto& l : need(j, "lifts")) p.lifts.push_back(vecs_from_json(f, l, n));
        if (j.contains("ranks")) p.ranks = j.at("ranks").get<std::vector<std::size_t>>();
        if (j.contains("admissible")) p.admissible = j.at("admissible").get<bool>();
        if (j.contains("notes")) p.notes = j.at("notes").get<std::vector<std::string>>();

        TruncatedPathAlgebra path = p.path_algebra();
        for (const auto& r : need(j, "relations")) {
            Relation rel;
            rel.start = need_index(need(r, "start"), p.quiver().vertex_count(), "relation start");
            rel.end = need_index(need(r, "end"), p.quiver().vertex_count(), "relation end");
            rel.element = zero_vec(f, path.dim());
            for (const auto& t : need(r, "terms")) {
                auto idx = path.index_of(word_from_json(need(t, "word")));
                if (!idx) parse_error("relation term is not a word of the truncated path algebra");
                rel.element[*idx] += parse_scalar(f, need(t, "coeff"));
            }
            p.relations.push_back(std::move(rel));
        }
        return p;
    });
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ParseError", "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail("ParseError", path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail("IOError", "cannot write " + path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

} // namespace algpres::io
