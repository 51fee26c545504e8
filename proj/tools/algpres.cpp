// Command-line front end: reads algebra specs and presentations as JSON and
// writes JSON reports (or DOT for `quiver --dot`).
//
// Exit status: 0 when every check passes, 2 when a check fails, 1 on bad
// input, with {"error": {"code", "message"}} on stdout.

#include "algpres/error.hpp"
#include "algpres/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>

#ifndef ALGPRES_CORPUS_DIR
#define ALGPRES_CORPUS_DIR "corpus"
#endif

using namespace algpres;
using io::Json;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string input;
    std::string out;
    std::string flavor = "pseudo";
    std::optional<std::size_t> truncation;
    std::uint64_t seed = 0;
    bool dot = false;
    bool compact = false;
    bool verbose = false;
    std::string dir = ALGPRES_CORPUS_DIR;
};

struct Outcome {
    Json body;
    bool pass = true;
    std::string text;  // raw output instead of JSON when non-empty
};

void progress(const Options& o, const std::string& msg) {
    if (o.verbose) std::cerr << "algpres: " << msg << '\n';
}

io::AlgebraSpec load_spec(const std::string& path) {
    auto spec = io::spec_from_json(io::read_file(path));
    if (spec.name.empty()) {
        std::string stem = fs::path(path).filename().string();
        spec.name = stem.substr(0, stem.find('.'));
    }
    return spec;
}

Json report_body(const Report& r) { return io::report_to_json(r); }

Report info_report(const FDAlgebra& a) {
    Report rep;
    rep.title = "structure";
    auto bad = a.associativity_failure();
    rep.add("multiplication is associative", !bad, bad ? *bad : "all basis triples");
    bool unit = true;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec x = a.basis_vector(i);
        unit = unit && a.multiply(a.one(), x) == x && a.multiply(x, a.one()) == x;
    }
    rep.add("identity is a two-sided unit", unit);
    return rep;
}

Outcome cmd_info(const Options& o) {
    auto spec = load_spec(o.input);
    const FDAlgebra& a = spec.algebra;
    Report rep = info_report(a);
    Json body{{"name", spec.name},
              {"field", io::field_to_json(a.field())},
              {"dim", a.dim()},
              {"labels", a.labels()},
              {"identity", io::vec_to_json(a.one())},
              {"commutative", a.is_commutative()},
              {"report", report_body(rep)}};
    return {body, rep.all_pass()};
}

struct RadicalSummary {
    RadicalResult rad;
    std::vector<SubspaceBasis> powers;
    Report report;
};

RadicalSummary radical_summary(const io::AlgebraSpec& spec) {
    RadicalSummary s;
    const FDAlgebra& a = spec.algebra;
    s.rad = radical(a, spec.hints.claimed_radical);
    s.report.title = "radical";
    auto bad = ideal_failure(a, s.rad.basis);
    s.report.add("radical is a two-sided ideal", !bad, bad ? *bad : "");
    if (bad) return s;
    s.powers = ideal_powers(a, s.rad.basis);
    bool nil = s.powers.empty() || s.powers.back().is_zero();
    s.report.add("radical is nilpotent", nil, "Loewy length " + std::to_string(s.powers.size()));
    auto quo = quotient_algebra(a, s.rad.basis);
    auto ss = semisimplicity(quo.algebra);
    s.report.add("quotient by the radical is semisimple", ss.semisimple, ss.reason);
    if (ss.certainty == Certainty::Assumed) s.report.notes.push_back("semisimplicity assumed: " + ss.reason);
    return s;
}

Outcome cmd_radical(const Options& o) {
    auto spec = load_spec(o.input);
    auto s = radical_summary(spec);
    Json dims = Json::array();
    for (const auto& p : s.powers) dims.push_back(p.dim());
    Json basis = Json::array();
    for (const auto& v : s.rad.basis.vectors()) basis.push_back(io::vec_to_json(v));
    Json body{{"name", spec.name},
              {"dim", spec.algebra.dim()},
              {"radical_dim", s.rad.basis.dim()},
              {"method", s.rad.method},
              {"basis", basis},
              {"power_dims", dims},
              {"loewy_length", s.powers.size()},
              {"notes", s.rad.notes},
              {"report", report_body(s.report)}};
    return {body, s.report.all_pass()};
}

Outcome cmd_quiver(const Options& o) {
    auto spec = load_spec(o.input);
    SplittingData split = build_splitting(spec.algebra, spec.hints);
    Report rep = verify_splitting(split);
    AlgebraQuiver q = quiver_of_algebra(split, o.seed);
    if (o.dot) return {{}, rep.all_pass(), to_dot(q.quiver)};
    Json comps = Json::array();
    for (const auto& c : split.components)
        comps.push_back(Json{{"dim", c.quotient.algebra.dim()}, {"simplicity", to_string(c.quotient.simplicity)}});
    Json notes = q.notes;
    for (const auto& n : split.notes) notes.push_back(n);
    Json body{{"name", spec.name},
              {"quiver", io::quiver_to_json(q.quiver)},
              {"ranks", q.ranks},
              {"components", comps},
              {"notes", notes},
              {"report", report_body(rep)}};
    return {body, rep.all_pass()};
}

Presentation run_present(const io::AlgebraSpec& spec, const std::string& flavor, const Options& o) {
    SplittingData split = build_splitting(spec.algebra, spec.hints);
    PresentationOptions opts{o.seed, o.truncation};
    if (flavor == "pseudo") return presentation_pseudo(split, opts);
    if (flavor == "gen2") return presentation_generalized_2nilpotent(split, opts);
    fail("UsageError", "unknown flavor " + flavor + " (expected pseudo or gen2)");
}

Outcome cmd_present(const Options& o) {
    auto spec = load_spec(o.input);
    Presentation p = run_present(spec, o.flavor, o);
    Json body{{"name", spec.name}};
    body.update(io::presentation_to_json(p));
    return {body, p.report.all_pass()};
}

Outcome cmd_verify(const Options& o) {
    Presentation p = io::presentation_from_json(io::read_file(o.input));
    Report rep = verify_presentation(p);
    return {Json{{"report", report_body(rep)}}, rep.all_pass()};
}

Outcome cmd_example(const Options&) {
    Report rep = twisted_example_suite();
    return {Json{{"report", report_body(rep)}}, rep.all_pass()};
}

// Every fixture goes through info, radical, quiver and the pipelines that
// apply; stored presentations are re-verified.
Outcome cmd_corpus(const Options& o) {
    std::vector<fs::path> files;
    if (!fs::is_directory(o.dir)) fail("ParseError", "no corpus directory " + o.dir);
    for (const auto& e : fs::directory_iterator(o.dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    Report agg;
    agg.title = "corpus";
    Json entries = Json::array();
    auto guarded = [&](const std::string& name, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const AlgebraError& e) {
            agg.add(name, false, e.code() + ": " + e.what());
        }
    };
    for (const auto& path : files) {
        std::string file = path.filename().string();
        if (file.ends_with(".algebra.json")) {
            io::AlgebraSpec spec;
            guarded(file + ": load", [&] { spec = load_spec(path.string()); });
            if (spec.algebra.dim() == 0) continue;
            const std::string& n = spec.name;
            progress(o, n);
            Json entry{{"name", n}, {"dim", spec.algebra.dim()}};
            guarded(n + ": info", [&] {
                Report r = info_report(spec.algebra);
                agg.add(n + ": info", r.all_pass());
            });
            std::size_t rl = 0;
            guarded(n + ": radical", [&] {
                auto s = radical_summary(spec);
                rl = s.powers.size();
                entry["radical_dim"] = s.rad.basis.dim();
                entry["loewy_length"] = rl;
                agg.add(n + ": radical", s.report.all_pass());
            });
            guarded(n + ": quiver", [&] {
                SplittingData split = build_splitting(spec.algebra, spec.hints);
                AlgebraQuiver q = quiver_of_algebra(split, o.seed);
                entry["vertices"] = q.quiver.vertex_count();
                entry["arrows"] = q.quiver.arrow_count();
                agg.add(n + ": quiver", verify_splitting(split).all_pass());
            });
            std::vector<std::string> flavors{"pseudo"};
            if (rl <= 2) flavors.push_back("gen2");
            for (const auto& fl : flavors) {
                std::string key = n + ": present " + fl;
                guarded(key, [&] {
                    Options local = o;
                    local.truncation.reset();
                    Presentation p = run_present(spec, fl, local);
                    entry[fl] = Json{{"relations", p.relations.size()},
                                     {"path_dim", p.path_algebra().dim()},
                                     {"admissible", p.admissible}};
                    agg.add(key, p.report.all_pass());
                    Presentation back = io::presentation_from_json(Json::parse(io::presentation_to_json(p).dump()));
                    agg.add(key + " survives serialization", verify_presentation(back).all_pass());
                });
            }
            entries.push_back(entry);
        } else if (file.ends_with(".presentation.json")) {
            progress(o, file);
            guarded(file + ": verify", [&] {
                Json j = io::read_file(path.string());
                Report r = verify_presentation(io::presentation_from_json(j));
                if (j.contains("expect_failing_check")) {
                    std::string want = j.at("expect_failing_check").get<std::string>();
                    const Check* c = r.find(want);
                    agg.add(file + ": verify rejects", c && !c->pass, c ? c->witness : "no check named " + want);
                } else {
                    agg.add(file + ": verify", r.all_pass());
                }
            });
        }
    }
    progress(o, "example-3-6");
    Report ex = twisted_example_suite();
    agg.add("example-3-6", ex.all_pass(), std::to_string(ex.checks.size()) + " checks");
    return {Json{{"fixtures", entries}, {"report", report_body(agg)}}, agg.all_pass()};
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) std::cout << text << (text.ends_with('\n') ? "" : "\n");
    else io::write_text(o.out, text);
}

int emit_error(const std::string& code, const std::string& message) {
    std::cout << Json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << '\n';
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quiver presentations of finite-dimensional algebras"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_option("-o,--out", o.out, "Write output here instead of stdout");
    app.add_flag("--compact", o.compact, "Single-line JSON");
    app.add_flag("-v,--verbose", o.verbose, "Progress on stderr");

    auto input = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", o.input, what)->required()->check(CLI::ExistingFile);
    };
    auto* info = app.add_subcommand("info", "Dimension, identity and associativity");
    input(info, "Algebra spec (.algebra.json)");
    auto* rad = app.add_subcommand("radical", "Jacobson radical and its powers");
    input(rad, "Algebra spec");
    auto* quiv = app.add_subcommand("quiver", "Quiver of the algebra");
    input(quiv, "Algebra spec");
    quiv->add_flag("--dot", o.dot, "Emit Graphviz DOT");
    quiv->add_option("--seed", o.seed, "Seed for the rank search");
    auto* pres = app.add_subcommand("present", "Presentation by quiver and relations");
    input(pres, "Algebra spec");
    pres->add_option("--flavor", o.flavor, "pseudo or gen2")->check(CLI::IsMember({"pseudo", "gen2"}));
    pres->add_option("--truncation", o.truncation, "Truncation, at least the default");
    pres->add_option("--seed", o.seed, "Seed for the rank search");
    auto* ver = app.add_subcommand("verify", "Re-run the checks on a stored presentation");
    input(ver, "Presentation (.presentation.json)");
    auto* ex = app.add_subcommand("example-3-6", "Split algebra over F2(t) without a tensor-algebra cover");
    auto* corp = app.add_subcommand("corpus", "Run every bundled fixture");
    corp->add_option("--dir", o.dir, "Fixture directory");
    corp->add_option("--seed", o.seed, "Seed for the rank search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("UsageError", e.what());
    }

    try {
        Outcome out;
        if (info->parsed()) out = cmd_info(o);
        else if (rad->parsed()) out = cmd_radical(o);
        else if (quiv->parsed()) out = cmd_quiver(o);
        else if (pres->parsed()) out = cmd_present(o);
        else if (ver->parsed()) out = cmd_verify(o);
        else if (ex->parsed()) out = cmd_example(o);
        else if (corp->parsed()) out = cmd_corpus(o);
        emit(o, out.text.empty() ? out.body.dump(o.compact ? -1 : 2) : out.text);
        return out.pass ? 0 : 2;
    } catch (const AlgebraError& e) {
        return emit_error(e.code(), e.what());
    } catch (const std::exception& e) {
        return emit_error("InternalError", e.what());
    }
}
