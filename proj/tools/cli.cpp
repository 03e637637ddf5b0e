#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "trustrec/dataset.hpp"
#include "trustrec/evaluation.hpp"
#include "trustrec/ingestion.hpp"
#include "trustrec/predictor.hpp"
#include "trustrec/report_csv.hpp"
#include "trustrec/significance.hpp"
#include "trustrec/synthetic.hpp"

namespace trustrec::cli {
namespace {

// Thrown for input that cannot be loaded or evaluated (exit 1).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown for flag values that parse but make no sense together (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFormats{"movielens", "epinions", "flixster", "csv"};
const std::vector<std::string> kAlgos{"traditional", "trust", "hybrid", "propagated"};
const std::vector<std::string> kSims{"pearson", "cosine", "iuf"};
const std::vector<std::string> kSegments{"no", "few", "regular", "coldstart"};

struct DataFlags {
    std::string ratings;
    std::string trust;
    std::string format = "movielens";
    std::string scale;
};

struct ModelFlags {
    std::string sim = "pearson";
    int dmax = 2;
    std::optional<double> rho;
    int min_overlap = 2;
    double fallback_weight = 1.0;
    bool no_clamp = false;
};

struct EvalFlags {
    std::optional<std::size_t> sample_users;
    std::uint64_t seed = 42;
    std::string segment;
    std::string out;
};

void add_data_flags(CLI::App* app, DataFlags& f) {
    app->add_option("--ratings", f.ratings, "Ratings file")->required();
    app->add_option("--trust", f.trust, "Trust file");
    app->add_option("--format", f.format, "Input layout")
        ->check(CLI::IsMember(kFormats))
        ->capture_default_str();
    app->add_option("--scale", f.scale, "Rating scale MIN:MAX (default: from the format)");
}

void add_model_flags(CLI::App* app, ModelFlags& f) {
    app->add_option("--sim", f.sim, "Similarity measure")
        ->check(CLI::IsMember(kSims))
        ->capture_default_str();
    app->add_option("--dmax", f.dmax, "Trust propagation depth for propagated")
        ->capture_default_str();
    app->add_option("--rho", f.rho, "Case amplification exponent (> 1)");
    app->add_option("--min-overlap", f.min_overlap, "Minimum co-rated items")->capture_default_str();
    app->add_option("--fallback-weight", f.fallback_weight,
                    "Weight of a trusted user with undefined similarity")
        ->capture_default_str();
    app->add_flag("--no-clamp", f.no_clamp, "Do not clamp predictions to the scale");
}

void add_eval_flags(CLI::App* app, EvalFlags& f) {
    app->add_option("--sample-users", f.sample_users, "Evaluate a seeded sample of users");
    app->add_option("--seed", f.seed, "Sampling seed")->capture_default_str();
    app->add_option("--segment", f.segment, "Restrict to a cold-start segment")
        ->check(CLI::IsMember(kSegments));
    app->add_option("--out", f.out, "Write CSV here instead of standard output");
}

PredictorConfig predictor_config(const std::string& algo, const ModelFlags& m) {
    PredictorConfig c;
    c.strategy = parse_strategy(algo, m.dmax);
    c.similarity.measure = parse_similarity_measure(m.sim);
    c.similarity.amplification_rho = m.rho;
    c.similarity.min_overlap = m.min_overlap;
    c.trust_fallback_weight = m.fallback_weight;
    c.clamp_to_scale = !m.no_clamp;
    c.validate();
    return c;
}

unsigned thread_cap() {
    const char* env = std::getenv("TRUSTREC_THREADS");
    if (!env || !*env) return 0;
    unsigned v = 0;
    const std::string_view s(env);
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v == 0) {
        throw UsageError("TRUSTREC_THREADS must be a positive integer");
    }
    return v;
}

EvalConfig eval_config(const PredictorConfig& p, const EvalFlags& e) {
    EvalConfig c;
    c.predictor = p;
    c.user_sample_size = e.sample_users;
    c.rng_seed = e.seed;
    if (!e.segment.empty()) c.segment = parse_segment(e.segment);
    c.threads = thread_cap();
    return c;
}

void report_warnings(std::ostream& err, const std::string& path, const IngestWarnings& w) {
    if (w.total() == 0) return;
    err << "warning: " << path << ": " << w.malformed << " malformed, " << w.out_of_scale
        << " out of scale, " << w.duplicates << " duplicate, " << w.self_loops
        << " self-loop rows\n";
}

FormatPreset resolve_format(const DataFlags& f) {
    FormatPreset p = format_preset(f.format);
    if (!f.scale.empty()) p.scale = parse_scale(f.scale);
    return p;
}

Dataset load_dataset(const DataFlags& f, const FormatPreset& preset, std::ostream& err) {
    std::ifstream rin(f.ratings);
    if (!rin) throw DataError("cannot open " + f.ratings);
    LoadedRatings ratings;
    try {
        ratings = load_ratings(rin, preset.ratings, preset.scale);
    } catch (const FormatError& e) {
        throw DataError(f.ratings + ": " + e.what());
    }
    report_warnings(err, f.ratings, ratings.warnings);

    TrustNetwork trust;
    if (!f.trust.empty()) {
        std::ifstream tin(f.trust);
        if (!tin) throw DataError("cannot open " + f.trust);
        LoadedTrust loaded;
        try {
            loaded = load_trust(tin, preset.trust);
        } catch (const FormatError& e) {
            throw DataError(f.trust + ": " + e.what());
        }
        report_warnings(err, f.trust, loaded.warnings);
        trust = std::move(loaded.network);
    }
    return make_dataset(std::move(ratings.matrix), std::move(trust));
}

EvalReport evaluate(const Dataset& d, const EvalConfig& c) {
    try {
        return leave_one_out(d.ratings, d.trust, c);
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
}

// Writes to --out when given, else to `out`.
template <class F>
void emit(const std::string& path, std::ostream& out, F&& body) {
    if (path.empty()) {
        body(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw DataError("cannot write " + path);
    body(file);
    if (!file) throw DataError("write failed for " + path);
}

std::string shortest(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

std::string percent(std::size_t part, std::size_t whole) {
    if (whole == 0) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * static_cast<double>(part) / whole);
    return buf;
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void print_stats(std::ostream& out, const DatasetStats& s) {
    const auto line = [&](const char* label, const std::string& value) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%-22s", label);
        out << buf << value << '\n';
    };
    line("users", std::to_string(s.users));
    line("items", std::to_string(s.items));
    line("ratings", std::to_string(s.ratings));
    line("sparsity", s.sparsity ? fixed2(100.0 * *s.sparsity) + "%" : "n/a");
    line("avg ratings/user", fixed2(s.avg_ratings_per_user));
    line("trust statements", std::to_string(s.trust_statements));
    line("avg trustees/user", fixed2(s.avg_trustees_per_user));
    line("no-rating users", std::to_string(s.no_rating_users) + " (" +
                                percent(s.no_rating_users, s.users) + ")");
    line("few-rating users", std::to_string(s.few_rating_users) + " (" +
                                 percent(s.few_rating_users, s.users) + ")");
    line("regular users", std::to_string(s.regular_users) + " (" +
                              percent(s.regular_users, s.users) + ")");
}

void write_rows(std::ostream& out, const std::vector<ReportRow>& rows) {
    for (const auto& r : rows) write_report_row(out, r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trust-aware collaborative filtering experiments", "trustrec"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    DataFlags data;
    ModelFlags model;
    EvalFlags ev;
    std::string algo = "traditional";
    std::string algo_a, algo_b;
    std::uint32_t user = 0, item = 0;
    std::optional<std::size_t> budget;
    std::size_t kmin = 5;

    auto* stats = app.add_subcommand("stats", "Dataset statistics");
    add_data_flags(stats, data);

    auto* eval = app.add_subcommand("eval", "Leave-one-out evaluation as CSV");
    add_data_flags(eval, data);
    add_model_flags(eval, model);
    add_eval_flags(eval, ev);
    eval->add_option("--algo", algo, "Neighbourhood strategy")
        ->check(CLI::IsMember(kAlgos))
        ->capture_default_str();

    auto* compare = app.add_subcommand("compare", "Two evaluations and a paired t-test");
    add_data_flags(compare, data);
    add_model_flags(compare, model);
    add_eval_flags(compare, ev);
    compare->add_option("--algo-a", algo_a, "First strategy")
        ->check(CLI::IsMember(kAlgos))
        ->required();
    compare->add_option("--algo-b", algo_b, "Second strategy")
        ->check(CLI::IsMember(kAlgos))
        ->required();

    auto* predict_cmd = app.add_subcommand("predict", "One prediction");
    add_data_flags(predict_cmd, data);
    add_model_flags(predict_cmd, model);
    predict_cmd->add_option("--algo", algo, "Neighbourhood strategy")
        ->check(CLI::IsMember(kAlgos))
        ->capture_default_str();
    predict_cmd->add_option("--user", user, "Active user id")->required();
    predict_cmd->add_option("--item", item, "Target item id")->required();
    predict_cmd->add_option("--budget", budget,
                            "Trust edges the elastic predictor may scan (propagated only)");
    predict_cmd->add_option("--kmin", kmin, "Contributors the elastic predictor aims for")
        ->capture_default_str();

    SyntheticParams sp;
    std::string prefix;
    std::uint64_t synth_seed = 42;
    std::string synth_scale;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic dataset");
    synth->add_option("--users", sp.users, "Users")->capture_default_str();
    synth->add_option("--items", sp.items, "Items")->capture_default_str();
    synth->add_option("--avg-ratings", sp.ratings_per_user, "Mean ratings per regular user")
        ->capture_default_str();
    synth->add_option("--out-degree", sp.trust_out_degree, "Mean trust out-degree")
        ->capture_default_str();
    synth->add_option("--coupling", sp.coupling, "Trust/taste coupling in [0, 1]")
        ->capture_default_str();
    synth->add_option("--coldstart-frac", sp.coldstart_fraction, "Fraction of cold-start users")
        ->capture_default_str();
    synth->add_option("--scale", synth_scale, "Rating scale MIN:MAX");
    synth->add_option("--seed", synth_seed, "Generator seed")->capture_default_str();
    synth->add_option("--out-prefix", prefix, "Writes PREFIX_ratings.csv and PREFIX_trust.csv")
        ->required();

    // CLI11 wants the arguments in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitUsage;
    }

    try {
        if (stats->parsed()) {
            const FormatPreset preset = resolve_format(data);
            const Dataset d = load_dataset(data, preset, err);
            print_stats(out, dataset_stats(d.ratings, d.trust));
            return kExitOk;
        }

        if (eval->parsed()) {
            const FormatPreset preset = resolve_format(data);
            const PredictorConfig pc = predictor_config(algo, model);
            const EvalConfig ec = eval_config(pc, ev);
            const Dataset d = load_dataset(data, preset, err);
            const EvalReport r = evaluate(d, ec);
            const auto rows = report_rows(strategy_label(pc.strategy), pc.similarity.label(), r);
            emit(ev.out, out, [&](std::ostream& o) {
                write_report_header(o);
                write_rows(o, rows);
            });
            return kExitOk;
        }

        if (compare->parsed()) {
            const FormatPreset preset = resolve_format(data);
            const PredictorConfig pa = predictor_config(algo_a, model);
            const PredictorConfig pb = predictor_config(algo_b, model);
            const EvalConfig ea = eval_config(pa, ev);
            const EvalConfig eb = eval_config(pb, ev);
            const Dataset d = load_dataset(data, preset, err);
            const EvalReport ra = evaluate(d, ea);
            const EvalReport rb = evaluate(d, eb);
            std::string p;
            try {
                p = shortest(paired_significance(ra, rb).p_value);
            } catch (const std::invalid_argument& e) {
                err << "warning: no p-value: " << e.what() << '\n';
            }
            emit(ev.out, out, [&](std::ostream& o) {
                write_report_header(o);
                write_rows(o, report_rows(strategy_label(pa.strategy), pa.similarity.label(), ra));
                write_rows(o, report_rows(strategy_label(pb.strategy), pb.similarity.label(), rb));
                o << "p_value," << p << '\n';
            });
            return kExitOk;
        }

        if (predict_cmd->parsed()) {
            const FormatPreset preset = resolve_format(data);
            const PredictorConfig pc = predictor_config(algo, model);
            const bool elastic = budget.has_value();
            if (elastic && !std::holds_alternative<PropagatedTrust>(pc.strategy)) {
                throw UsageError("--budget needs --algo propagated");
            }
            if (kmin < 1) throw UsageError("--kmin must be at least 1");
            const Dataset d = load_dataset(data, preset, err);
            const UserId a{user};
            const ItemId j{item};
            PredictionOutcome o;
            std::optional<ElasticOutcome> e;
            if (elastic) {
                e = predict_elastic(d.ratings, d.trust, a, j, ElasticConfig{*budget, kmin}, pc);
                o = e->outcome;
            } else {
                o = predict(d.ratings, d.trust, a, j, pc);
            }
            out << "user=" << user << " item=" << item;
            if (o.ok()) {
                out << " prediction=" << format_fixed(o.value);
            } else {
                out << " failure=" << to_string(*o.failure);
            }
            out << " contributors=" << o.contributor_count << " clamped=" << (o.clamped ? 1 : 0);
            if (e) out << " depth=" << e->depth << " edges=" << e->edges_visited;
            out << '\n';
            return kExitOk;
        }

        if (synth->parsed()) {
            if (!synth_scale.empty()) sp.scale = parse_scale(synth_scale);
            sp.validate();
            const Dataset d = generate_synthetic(sp, synth_seed);
            const std::string rpath = prefix + "_ratings.csv";
            const std::string tpath = prefix + "_trust.csv";
            emit(rpath, out, [&](std::ostream& o) { write_ratings_csv(o, d.ratings); });
            emit(tpath, out, [&](std::ostream& o) { write_trust_csv(o, d.trust); });
            out << rpath << '\n' << tpath << '\n';
            return kExitOk;
        }
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        // Config validation: the flags parsed but the values are out of range.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitUsage;
}

}  // namespace trustrec::cli
