#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "realog/assembly.hpp"
#include "realog/catalog.hpp"
#include "realog/json_io.hpp"
#include "realog/patchwork.hpp"
#include "realog/smith.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) realog::fail(realog::errc::parse_error, "cannot open \"" + path + "\"");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) realog::fail(realog::errc::parse_error, "cannot write \"" + path + "\"");
    out << text;
}

void print_diag(const json& doc) { std::cerr << doc.dump(2) << "\n"; }

int exit_for(realog::errc code) {
    return code == realog::errc::parse_error || code == realog::errc::unknown_name ? 2 : 1;
}

// Shared analyze/patchwork flags.
struct RenderFlags {
    std::string coeff = "both";
    std::string format = "json";
    std::string out;
    bool strict = false;

    realog::ReportOptions options() const {
        return {coeff != "f2", coeff != "z"};
    }
};

void add_render_flags(CLI::App* cmd, RenderFlags& flags) {
    cmd->add_option("--coeff", flags.coeff, "coefficients to report: z, f2, or both")
        ->check(CLI::IsMember({"z", "f2", "both"}));
    cmd->add_option("--format", flags.format, "output format: json or md")
        ->check(CLI::IsMember({"json", "md"}));
    cmd->add_option("--out", flags.out, "write the report here instead of stdout");
    cmd->add_flag("--strict", flags.strict, "fail instead of warning when hypotheses fail");
}

int run_validate(const std::string& path) {
    const std::string text = read_input(path);
    const realog::InputKind kind = realog::classify_json(text);
    realog::ValidationResult v = realog::ValidationResult::pass();
    const char* kind_name = "matrix";
    switch (kind) {
        case realog::InputKind::Matrix:
            realog::matrix_from_json(text);
            break;
        case realog::InputKind::Complex:
            kind_name = "complex";
            v = realog::complex_from_json(text).validate();
            break;
        case realog::InputKind::Degeneration: {
            kind_name = "degeneration";
            auto sdd = realog::sdd_from_json(text);
            v = realog::validate_sdd(sdd);
            if (v.ok) {
                // structural validation does not see block shapes; assembling
                // the complexes does
                try {
                    for (int q = 0; q <= sdd.fiber_dim; ++q) realog::build_cq(sdd, q);
                    realog::build_real_complex(sdd, true);
                } catch (const realog::error& e) {
                    v = realog::ValidationResult::violation(e.code(), 0, e.what());
                }
            }
            break;
        }
        case realog::InputKind::Patchwork:
            kind_name = "patchwork";
            v = realog::validate_patchwork(realog::patchwork_from_json(text));
            break;
    }
    if (!v.ok) {
        print_diag(json{{"ok", false},
                        {"kind", kind_name},
                        {"code", realog::errc_name(v.code)},
                        {"degree", v.degree},
                        {"message", v.message}});
        return 1;
    }
    std::cout << json{{"ok", true}, {"kind", kind_name}, {"warnings", v.warnings}}.dump(2)
              << "\n";
    return 0;
}

// Shared tail of analyze and patchwork: hypothesis gate, verdict, rendering,
// and the internal cross-checks that make a verified run trustworthy.
int render_verdict(const realog::StratifiedDegeneration& sdd, const RenderFlags& flags,
                   const realog::ViroSummary* viro) {
    auto v = realog::validate_sdd(sdd);
    if (!v.ok) {
        print_diag(json{{"ok", false},
                        {"code", realog::errc_name(v.code)},
                        {"degree", v.degree},
                        {"message", v.message}});
        return 1;
    }

    auto hyp = realog::validate_hypotheses(sdd);
    if (!hyp.theorem_applicable()) {
        json notes = json::array();
        for (const auto& s : hyp.strata)
            if (!s.a || !s.b)
                notes.push_back(json{{"id", s.id}, {"a", s.a}, {"b", s.b}, {"note", s.note}});
        const json block{{"ok", !flags.strict},
                         {"code", "HypothesisViolated"},
                         {"message", "theorem not applicable; report is descriptive only"},
                         {"strata", notes}};
        print_diag(block);
        if (flags.strict) return 1;
    }

    auto report = realog::verdict(sdd, !hyp.theorem_applicable());
    const std::string rendered =
        flags.format == "md" ? realog::report_to_markdown(report, flags.options(), viro)
                             : realog::report_to_json(report, flags.options(), viro);
    write_output(flags.out, rendered);

    if (report.verified && viro &&
        (report.betti_real.size() != 2 || report.betti_real[0] != viro->components ||
         report.betti_real[1] != viro->components)) {
        print_diag(json{{"ok", false},
                        {"code", "InvalidSDD"},
                        {"message", "curve components disagree with the computed Betti numbers"}});
        return 1;
    }
    if (report.verified && (!report.inequality_holds || !report.mod2_compatible)) {
        print_diag(json{{"ok", false},
                        {"code", "InvalidSDD"},
                        {"message", "internal invariant failed on a hypotheses-passing input"}});
        return 1;
    }
    return 0;
}

int run_analyze(const std::string& path, const RenderFlags& flags) {
    const std::string text = read_input(path);
    const realog::InputKind kind = realog::classify_json(text);
    realog::StratifiedDegeneration sdd;
    switch (kind) {
        case realog::InputKind::Degeneration:
            sdd = realog::sdd_from_json(text);
            break;
        case realog::InputKind::Patchwork: {
            auto pi = realog::patchwork_from_json(text);
            auto pv = realog::validate_patchwork(pi);
            if (!pv.ok) {
                print_diag(json{{"ok", false},
                                {"code", realog::errc_name(pv.code)},
                                {"message", pv.message}});
                return 1;
            }
            sdd = realog::to_sdd(pi);
            break;
        }
        default:
            realog::fail(realog::errc::parse_error,
                         "analyze expects a degeneration or patchwork document");
    }
    return render_verdict(sdd, flags, nullptr);
}

int run_patchwork(const std::string& path, const std::string& catalog_name,
                  const std::string& svg_path, const RenderFlags& flags) {
    realog::PatchworkInput pi = catalog_name.empty()
                                    ? realog::patchwork_from_json(read_input(path))
                                    : realog::catalog_patchwork(catalog_name);
    auto pv = realog::validate_patchwork(pi);
    if (!pv.ok) {
        print_diag(json{{"ok", false},
                        {"code", realog::errc_name(pv.code)},
                        {"message", pv.message}});
        return 1;
    }
    for (const auto& w : pv.warnings)
        print_diag(json{{"ok", true}, {"warning", w}});

    auto graph = realog::build_viro_graph(pi);
    realog::ViroSummary viro{static_cast<long>(graph.vertices.size()),
                             static_cast<long>(graph.segments.size()),
                             graph.component_count};
    if (!svg_path.empty()) write_output(svg_path, realog::viro_svg(pi));
    return render_verdict(realog::to_sdd(pi), flags, &viro);
}

int run_snf(const std::string& path, const std::string& out) {
    auto m = realog::matrix_from_json(read_input(path));
    auto sf = realog::smith_normal_form(m);
    json factors = json::array();
    for (const auto& f : sf.invariant_factors) {
        if (f.fits_slong_p())
            factors.push_back(f.get_si());
        else
            factors.push_back(f.get_str());
    }
    write_output(out, json{{"factors", std::move(factors)}}.dump(2) + "\n");
    return 0;
}

int run_examples_list() {
    for (const auto& e : realog::catalog_entries())
        std::cout << e.name << "  " << (e.patchwork ? "[patchwork]" : "[degeneration]") << " "
                  << e.summary << "\n";
    return 0;
}

int run_examples_emit(const std::string& name, const std::string& out) {
    for (const auto& e : realog::catalog_entries()) {
        if (e.name != name) continue;
        const std::string text = e.patchwork
                                     ? realog::patchwork_to_json(realog::catalog_patchwork(name))
                                     : realog::sdd_to_json(realog::catalog_sdd(name));
        write_output(out, text);
        return 0;
    }
    realog::fail(realog::errc::unknown_name, "no entry named \"" + name + "\" in the catalog");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology of semistable degenerations and their real covers"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "check a JSON document against its schema");
    validate->add_option("path", validate_path, "input file, or - for stdin")->required();

    std::string analyze_path;
    RenderFlags analyze_flags;
    auto* analyze =
        app.add_subcommand("analyze", "compute the full cohomology verdict for a degeneration");
    analyze->add_option("path", analyze_path, "input file, or - for stdin")->required();
    add_render_flags(analyze, analyze_flags);

    std::string patch_path, patch_catalog, patch_svg;
    RenderFlags patch_flags;
    auto* patchwork =
        app.add_subcommand("patchwork", "run the combinatorial curve pipeline end to end");
    auto* patch_path_opt =
        patchwork->add_option("path", patch_path, "patchwork JSON file, or - for stdin");
    patchwork->add_option("--catalog", patch_catalog, "use a built-in example instead of a file")
        ->excludes(patch_path_opt);
    patchwork->add_option("--svg", patch_svg, "render the symmetrized curve to this file");
    add_render_flags(patchwork, patch_flags);

    std::string snf_path, snf_out;
    auto* snf = app.add_subcommand("snf", "invariant factors of an integer matrix");
    snf->add_option("path", snf_path, "matrix JSON file, or - for stdin")->required();
    snf->add_option("--out", snf_out, "write the factors here instead of stdout");

    auto* examples = app.add_subcommand("examples", "built-in example library");
    examples->require_subcommand(1);
    examples->add_subcommand("list", "list the catalog");
    std::string emit_name, emit_out;
    auto* emit = examples->add_subcommand("emit", "print a catalog entry as canonical JSON");
    emit->add_option("name", emit_name, "catalog entry name")->required();
    emit->add_option("--out", emit_out, "write the document here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(validate_path);
        if (analyze->parsed()) return run_analyze(analyze_path, analyze_flags);
        if (patchwork->parsed()) {
            if (patch_path.empty() && patch_catalog.empty())
                realog::fail(realog::errc::parse_error,
                             "patchwork needs a file path or --catalog name");
            return run_patchwork(patch_path, patch_catalog, patch_svg, patch_flags);
        }
        if (snf->parsed()) return run_snf(snf_path, snf_out);
        if (examples->parsed()) {
            if (examples->get_subcommand("emit")->parsed())
                return run_examples_emit(emit_name, emit_out);
            return run_examples_list();
        }
    } catch (const realog::error& e) {
        std::string msg = e.what();
        const std::string prefix = std::string(realog::errc_name(e.code())) + ": ";
        if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
        print_diag(json{{"ok", false}, {"code", realog::errc_name(e.code())}, {"message", msg}});
        return exit_for(e.code());
    }
    return 0;
}
