// Command-line entry point: enumeration, classification, model runs, verdict
// tables, comparisons, and the verification suite.
//
// Exit codes: 0 success, 1 validation/configuration error, 2 golden-file
// mismatch.

#include <counterpoint/compare.hpp>
#include <counterpoint/config.hpp>
#include <counterpoint/model.hpp>
#include <counterpoint/reduction.hpp>
#include <counterpoint/report.hpp>
#include <counterpoint/strict.hpp>
#include <counterpoint/verify.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using namespace counterpoint;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitGoldenDrift = 2;

struct Cli {
    RunConfig cfg;
    std::string enumerate_what;
    std::string classify_what;
    std::optional<int> model_k;
    bool model_all = false;
};

Dichotomy resolve_dichotomy(const RunConfig& cfg) {
    if (!cfg.dichotomy_path.empty()) return load_dichotomy(cfg.dichotomy_path, cfg.n);
    if (cfg.n != 12)
        throw std::invalid_argument("no built-in dichotomy for n=" + std::to_string(cfg.n) +
                                    "; supply --dichotomy");
    return Dichotomy::standard();
}

Scale resolve_scale(const RunConfig& cfg) {
    if (!cfg.scale_path.empty()) return load_scale(cfg.scale_path, cfg.n);
    if (cfg.n != 12)
        throw std::invalid_argument("no built-in scale for n=" + std::to_string(cfg.n) +
                                    "; supply --scale");
    return Scale::diatonic();
}

void require_n12(const RunConfig& cfg, const char* what) {
    if (cfg.n != 12)
        throw std::invalid_argument(std::string(what) +
                                    " is defined for n=12 only (got n=" +
                                    std::to_string(cfg.n) + ")");
}

int finish_with_golden(const Json& doc, const std::string& golden_file) {
    const GoldenDiff diff = golden_compare(doc, golden_file);
    if (diff.matches) {
        std::fprintf(stderr, "golden: %s matches\n", golden_file.c_str());
        return kExitOk;
    }
    for (const std::string& d : diff.drifts) std::fprintf(stderr, "golden drift: %s\n", d.c_str());
    return kExitGoldenDrift;
}

int run_enumerate_strict(const Cli& cli) {
    require_n12(cli.cfg, "the strict style");
    const Scale scale = resolve_scale(cli.cfg);
    const auto rows = enumerate_strict_representatives(scale);
    if (!cli.cfg.golden_dir.empty())
        return finish_with_golden(strict_summary_json(summarize_strict(rows)),
                                  cli.cfg.golden_dir + "/table1.json");
    if (cli.cfg.summary)
        emit(render_strict_summary(summarize_strict(rows), cli.cfg.format), cli.cfg.out);
    else
        emit(render_strict_rows(rows, cli.cfg.format), cli.cfg.out);
    return kExitOk;
}

int run_enumerate_reduced(const Cli& cli) {
    require_n12(cli.cfg, "the reduced strict style");
    const Scale scale = resolve_scale(cli.cfg);
    const ReducedStyle style = ReducedStyle::build(scale);
    if (!cli.cfg.golden_dir.empty())
        return finish_with_golden(reduced_summary_json(style.summary()),
                                  cli.cfg.golden_dir + "/table2.json");
    if (cli.cfg.summary)
        emit(render_reduced_summary(style.summary(), cli.cfg.format), cli.cfg.out);
    else
        emit(render_reduced_rows(style, cli.cfg.format), cli.cfg.out);
    return kExitOk;
}

int run_model(const Cli& cli) {
    const Variant variant = parse_variant(cli.cfg.variant);
    ModelEngine engine(resolve_dichotomy(cli.cfg));
    VariantModel model;
    if (cli.model_k.has_value()) {
        Residue k(*cli.model_k, engine.modulus());
        DualNumber xi(Residue(0, engine.modulus()), k, flavor_of(variant));
        ContrapuntalEntry e;
        e.k = k.value();
        e.symmetries = engine.contrapuntal_symmetries(k, variant);  // rejects dissonances
        e.successors = engine.admitted_successors(xi, variant);
        e.max_cardinality =
            e.symmetries.empty() ? 0 : engine.intersection_for(e.symmetries.front()).size();
        model.variant = variant;
        model.entries.push_back(std::move(e));
    } else {
        model = build_model(engine, variant);
    }
    if (!cli.cfg.golden_dir.empty())
        return finish_with_golden(
            model_document(model, engine.modulus()),
            cli.cfg.golden_dir + "/model_" + variant_name(variant) + ".json");
    emit(render_model(model, engine.modulus(), cli.cfg.format), cli.cfg.out);
    return kExitOk;
}

int run_verdicts(const Cli& cli) {
    const Variant variant = parse_variant(cli.cfg.variant);
    ModelEngine engine(resolve_dichotomy(cli.cfg));
    VerdictTable vt;
    if (cli.cfg.n == 12 && cli.cfg.dichotomy_path.empty()) {
        const Scale scale = resolve_scale(cli.cfg);
        vt = compute_verdicts(engine, ReducedStyle::build(scale), variant);
    } else {
        // generic run: the scale (when given) filters the progression domain
        std::optional<Scale> scale;
        if (!cli.cfg.scale_path.empty()) scale = load_scale(cli.cfg.scale_path, cli.cfg.n);
        const VariantModel model = build_model(engine, variant);
        vt.variant = variant;
        for (const ReducedProgression& r :
             verdict_domain(engine, flavor_of(variant), scale ? &*scale : nullptr))
            vt.rows.emplace_back(r, verdict_with_model(engine, model, r.first, r.second));
    }
    if (cli.cfg.summary)
        emit(verdict_summary_json(vt).dump(2) + "\n", cli.cfg.out);
    else
        emit(render_verdicts(vt, cli.cfg.format), cli.cfg.out);
    return kExitOk;
}

int run_compare(const Cli& cli) {
    require_n12(cli.cfg, "the comparison");
    if (!cli.cfg.dichotomy_path.empty())
        throw std::invalid_argument(
            "the comparison is defined against the built-in dichotomy only");
    const Variant variant = parse_variant(cli.cfg.variant);
    const Semantics semantics = parse_semantics(cli.cfg.semantics);
    const Scale scale = resolve_scale(cli.cfg);
    ModelEngine engine(Dichotomy::standard());
    const ReducedStyle style = ReducedStyle::build(scale);
    const VerdictTable vt = compute_verdicts(engine, style, variant);
    const CrossTable table = cross_table(style, vt, semantics);
    const MatchMetrics metrics = match_metrics(table);
    const KindTable kinds = kind_table(style, vt);
    const RuleRecovery recovery = rule_recovery(engine, vt);
    if (!cli.cfg.golden_dir.empty())
        return finish_with_golden(compare_document(table, metrics, kinds, recovery),
                                  cli.cfg.golden_dir + "/compare_" +
                                      std::string(variant_name(variant)) + "_" +
                                      semantics_name(semantics) + ".json");
    if (cli.cfg.summary && cli.cfg.format == Format::csv) {
        emit("matches=" + std::to_string(metrics.matches) +
                 " mismatches=" + std::to_string(metrics.mismatches) + "\n",
             cli.cfg.out);
        return kExitOk;
    }
    emit(render_compare(table, metrics, kinds, recovery, cli.cfg.format, cli.cfg.summary),
         cli.cfg.out);
    return kExitOk;
}

int run_verify(const Cli& cli) {
    const auto results = run_verification(cli.cfg.jobs);
    bool all = true;
    std::ostringstream os;
    for (const CheckResult& r : results) {
        all = all && r.passed;
        os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.criterion << ": " << r.name
           << " — " << r.detail << "\n";
    }
    os << (all ? "verification passed" : "verification FAILED") << "\n";
    emit(os.str(), cli.cfg.out);
    return all ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    CLI::App app{"finite-algebra engine for first-species counterpoint"};
    app.set_config("--config");
    app.add_option("--n", cli.cfg.n, "modulus (default 12)")->envname("CPOINT_N");
    app.add_option("--dichotomy", cli.cfg.dichotomy_path,
                   "dichotomy file with 'K = ...' and 'D = ...' lines")
        ->envname("CPOINT_DICHOTOMY");
    app.add_option("--scale", cli.cfg.scale_path, "scale file with an 'X = ...' line")
        ->envname("CPOINT_SCALE");
    app.add_option("--jobs", cli.cfg.jobs, "worker threads for exhaustive searches")
        ->envname("CPOINT_JOBS");

    const auto add_output_options = [&cli](CLI::App* sub) {
        sub->add_option_function<std::string>(
               "--format", [&cli](const std::string& f) { cli.cfg.format = parse_format(f); },
               "csv | json | md")
            ->envname("CPOINT_FORMAT");
        sub->add_option("--out", cli.cfg.out, "output file (default stdout)")
            ->envname("CPOINT_OUT");
        sub->add_flag("--summary", cli.cfg.summary, "emit the aggregate table");
        sub->add_option("--golden", cli.cfg.golden_dir,
                        "golden directory to diff against (exit 2 on drift)")
            ->envname("CPOINT_GOLDEN");
    };
    const auto add_variant_option = [&cli](CLI::App* sub) {
        sub->add_option("--variant", cli.cfg.variant,
                        "classical | idempotent | local-global-nilpotent | "
                        "local-global-idempotent")
            ->envname("CPOINT_VARIANT");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate progressions");
    enumerate->add_option("what", cli.enumerate_what, "strict | reduced")
        ->required()
        ->check(CLI::IsMember({"strict", "reduced"}));
    add_output_options(enumerate);

    CLI::App* classify = app.add_subcommand("classify", "emit labeled progressions");
    classify->add_option("what", cli.classify_what, "strict | reduced")
        ->required()
        ->check(CLI::IsMember({"strict", "reduced"}));
    add_output_options(classify);

    CLI::App* model = app.add_subcommand("model", "contrapuntal symmetries and successors");
    add_variant_option(model);
    add_output_options(model);
    CLI::Option* k_opt = model->add_option_function<int>(
        "--k", [&cli](int k) { cli.model_k = k; }, "single consonance");
    model->add_flag("--all", cli.model_all, "all consonances (default)")->excludes(k_opt);

    CLI::App* verdicts = app.add_subcommand("verdicts", "per-progression verdicts");
    add_variant_option(verdicts);
    add_output_options(verdicts);

    CLI::App* compare = app.add_subcommand("compare", "cross tables and match metrics");
    add_variant_option(compare);
    compare
        ->add_option("--semantics", cli.cfg.semantics, "original | refined | starred")
        ->envname("CPOINT_SEMANTICS");
    add_output_options(compare);

    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
    verify->add_option("--out", cli.cfg.out, "output file (default stdout)");

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed())
            return cli.enumerate_what == "strict" ? run_enumerate_strict(cli)
                                                  : run_enumerate_reduced(cli);
        if (classify->parsed())
            return cli.classify_what == "strict" ? run_enumerate_strict(cli)
                                                 : run_enumerate_reduced(cli);
        if (model->parsed()) return run_model(cli);
        if (verdicts->parsed()) return run_verdicts(cli);
        if (compare->parsed()) return run_compare(cli);
        if (verify->parsed()) return run_verify(cli);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return kExitValidation;
}
