#include "volclust/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "volclust/acf.hpp"
#include "volclust/asym.hpp"
#include "volclust/cluster.hpp"
#include "volclust/csv.hpp"
#include "volclust/errors.hpp"
#include "volclust/histogram.hpp"
#include "volclust/returns.hpp"
#include "volclust/rng.hpp"
#include "volclust/surrogate.hpp"

namespace volclust {

namespace {

// Window size of the count-frequency experiment (two trading weeks).
constexpr std::size_t kWindowDistSize = 10;

const std::vector<std::pair<Experiment, std::string>>& experiment_names() {
    static const std::vector<std::pair<Experiment, std::string>> kNames = {
        {Experiment::pdf, "pdf"},
        {Experiment::acf, "acf"},
        {Experiment::rearranged, "rearranged"},
        {Experiment::binarized, "binarized"},
        {Experiment::swap, "swap"},
        {Experiment::windowdist, "windowdist"},
        {Experiment::index, "index"},
        {Experiment::smallest_index, "smallest_index"},
        {Experiment::asymmetry, "asymmetry"},
        {Experiment::transitions, "transitions"},
        {Experiment::signed_transitions, "signed_transitions"},
    };
    return kNames;
}

std::string sanitize_symbol(const std::string& symbol) {
    std::string out;
    out.reserve(symbol.size());
    for (char c : symbol) {
        const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
                          c == '_';
        out += keep ? c : '_';
    }
    return out;
}

std::string fmt_p(double p) {
    if (p == std::floor(p)) return std::to_string(static_cast<long long>(p));
    return format_double(p);
}

OutputTable series_table(std::string name, const ReturnSeries& series) {
    OutputTable t;
    t.name = std::move(name);
    t.kind = ArtifactKind::plotdata;
    t.label_header = "date";
    t.columns = {"value"};
    t.rows.reserve(series.size());
    t.labels.reserve(series.size());
    for (const auto& obs : series.observations()) {
        t.labels.push_back(obs.date.to_string());
        t.rows.push_back({obs.value});
    }
    return t;
}

OutputTable acf_table(std::string name, const AcfSeries& series) {
    OutputTable t;
    t.name = std::move(name);
    t.kind = ArtifactKind::plotdata;
    t.columns = {"lag", "acf"};
    t.rows.reserve(series.values.size());
    for (std::size_t lag = 0; lag < series.values.size(); ++lag) {
        t.rows.push_back({static_cast<double>(lag), series.values[lag]});
    }
    return t;
}

OutputTable transition_table(std::string name, const TransitionMatrix& tm) {
    OutputTable t;
    t.name = std::move(name);
    t.kind = ArtifactKind::table;
    t.label_header = "category";
    t.columns = tm.outcome_labels;
    t.labels = tm.labels;
    t.rows = tm.probs;
    return t;
}

std::vector<double> bits_as_doubles(const IndicatorSequence& indicator) {
    return std::vector<double>(indicator.bits.begin(), indicator.bits.end());
}

/// Sample n values of a per-n profile at a few representative windows.
std::vector<std::size_t> summary_windows(std::size_t n_max) {
    std::vector<std::size_t> out;
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{10}, std::size_t{100},
                          std::size_t{240}}) {
        if (n <= n_max) out.push_back(n);
    }
    if (out.empty() || out.back() != n_max) out.push_back(n_max);
    return out;
}

struct CellContext {
    const RunConfig& config;
    const std::string& symbol;     // raw, used for seed streams
    const std::string& stem;       // sanitized, used for artifact names
    const ReturnSeries& returns;
    std::size_t n_max;             // clamped to the series length
    std::size_t max_lag;           // clamped to length - 2
    std::vector<OutputTable>& tables;
    nlohmann::json& summary;       // summary["series"][stem]
};

void run_pdf(CellContext& ctx) {
    const auto normalized = normalize_returns(ctx.returns);
    const auto hist = histogram_pdf(normalized, ctx.config.bins);
    OutputTable t;
    t.name = ctx.stem + "_pdf";
    t.kind = ArtifactKind::plotdata;
    t.columns = {"bin_center", "density", "reference"};
    const auto centers = hist.bin_centers();
    for (std::size_t i = 0; i < centers.size(); ++i) {
        t.rows.push_back({centers[i], hist.densities[i], hist.reference[i]});
    }
    ctx.tables.push_back(std::move(t));
    ctx.summary["pdf"] = {{"bins", hist.densities.size()},
                          {"min", hist.bin_edges.front()},
                          {"max", hist.bin_edges.back()}};
}

void run_acf(CellContext& ctx) {
    const auto values = ctx.returns.values();
    const auto abs_vals = absolute_values(ctx.returns);
    const auto plain = acf(values, ctx.max_lag);
    const auto nonlinear = acf(abs_vals, ctx.max_lag);
    ctx.tables.push_back(acf_table(ctx.stem + "_acf_returns", plain));
    ctx.tables.push_back(acf_table(ctx.stem + "_acf_abs", nonlinear));
    ctx.summary["acf"] = {{"noise_band", plain.noise_band}, {"max_lag", plain.max_lag()}};
}

void run_rearranged(CellContext& ctx) {
    const auto cell_seed = derive_seed(ctx.config.seed, ctx.symbol + "/rearranged");
    const auto surrogate = gaussian_surrogate(ctx.returns, cell_seed);
    const auto rearranged = rank_rearrange(ctx.returns, surrogate);

    ctx.tables.push_back(series_table(ctx.stem + "_rearranged", rearranged));
    ctx.tables.push_back(
        acf_table(ctx.stem + "_acf_abs_empirical", acf(absolute_values(ctx.returns), ctx.max_lag)));
    ctx.tables.push_back(
        acf_table(ctx.stem + "_acf_abs_rearranged", acf(absolute_values(rearranged), ctx.max_lag)));
    ctx.tables.push_back(
        acf_table(ctx.stem + "_acf_abs_gaussian", acf(absolute_values(surrogate), ctx.max_lag)));
    ctx.summary["rearranged"] = {{"seed", cell_seed},
                                 {"surrogate_mean", surrogate.mean()},
                                 {"surrogate_stddev", surrogate.stddev()}};
}

void run_binarized(CellContext& ctx) {
    for (double p : ctx.config.p_list) {
        const auto indicator = binarize(ctx.returns, p, Tail::largest);
        const auto bits_acf = acf(bits_as_doubles(indicator), ctx.max_lag);
        ctx.tables.push_back(acf_table(ctx.stem + "_acf_binarized_p" + fmt_p(p), bits_acf));
        ctx.summary["binarized"]["p" + fmt_p(p)] = {{"ones", indicator.ones},
                                                    {"fraction", indicator.fraction}};
    }
}

void run_swap(CellContext& ctx) {
    for (double p : ctx.config.p_list) {
        const auto swapped = swap_extremes(ctx.returns, p);
        ctx.tables.push_back(series_table(ctx.stem + "_swapped_p" + fmt_p(p), swapped));
        ctx.tables.push_back(acf_table(ctx.stem + "_acf_abs_swapped_p" + fmt_p(p),
                                       acf(absolute_values(swapped), ctx.max_lag)));
    }
}

void run_windowdist(CellContext& ctx) {
    for (double p : ctx.config.p_list) {
        const auto indicator = binarize(ctx.returns, p, Tail::largest);
        const auto dist = window_counts(indicator, kWindowDistSize);
        const auto positions = static_cast<double>(dist.counts.size());
        OutputTable t;
        t.name = ctx.stem + "_windowdist_p" + fmt_p(p);
        t.kind = ArtifactKind::table;
        t.columns = {"m", "count", "binomial_reference"};
        for (std::size_t m = 0; m < dist.frequency.size(); ++m) {
            t.rows.push_back({static_cast<double>(m), static_cast<double>(dist.frequency[m]),
                              positions * binomial_pmf(dist.window, m, indicator.fraction)});
        }
        ctx.tables.push_back(std::move(t));
    }
}

void profile_table(CellContext& ctx, Tail which, const std::string& stem_suffix) {
    for (double p : ctx.config.p_list) {
        const auto profile = clustering_profile(ctx.returns, p, ctx.n_max, which);
        OutputTable t;
        t.name = ctx.stem + stem_suffix + fmt_p(p);
        t.kind = ArtifactKind::table;
        t.columns = {"n", "sigma_e", "sigma_g", "r_n", "r_lim"};
        for (const auto& row : profile.rows) {
            t.rows.push_back({static_cast<double>(row.n), row.sigma_e, row.sigma_g, row.r_n,
                              row.r_lim});
        }
        ctx.tables.push_back(std::move(t));

        nlohmann::json& entry =
            ctx.summary[which == Tail::largest ? "index" : "smallest_index"]["p" + fmt_p(p)];
        for (std::size_t n : summary_windows(ctx.n_max)) {
            entry["r_n"][std::to_string(n)] = profile.rows[n - 1].r_n;
        }
    }
}

void run_index(CellContext& ctx) { profile_table(ctx, Tail::largest, "_index_p"); }

void run_smallest_index(CellContext& ctx) {
    profile_table(ctx, Tail::smallest, "_index_smallest_p");
}

void run_asymmetry(CellContext& ctx) {
    for (double p : ctx.config.p_list) {
        const auto profile = asymmetry_profile(ctx.returns, p, ctx.n_max);
        OutputTable t;
        t.name = ctx.stem + "_asymmetry_p" + fmt_p(p);
        t.kind = ArtifactKind::table;
        t.columns = {"n", "a_ls", "a_pm", "r_l", "r_s", "r_plus", "r_minus"};
        bool pm_negative = true;
        bool ls_positive = true;
        for (const auto& row : profile.rows) {
            t.rows.push_back({static_cast<double>(row.n), row.a_ls, row.a_pm, row.r_l, row.r_s,
                              row.r_plus, row.r_minus});
            if (row.n >= 2) {
                pm_negative = pm_negative && row.a_pm < 0.0;
                ls_positive = ls_positive && row.a_ls > 0.0;
            }
        }
        ctx.tables.push_back(std::move(t));

        nlohmann::json& entry = ctx.summary["asymmetry"]["p" + fmt_p(p)];
        entry["a_pm_negative_for_all_n"] = pm_negative;
        entry["a_ls_positive_for_all_n"] = ls_positive;
        for (std::size_t n : summary_windows(ctx.n_max)) {
            entry["a_ls"][std::to_string(n)] = profile.rows[n - 1].a_ls;
            entry["a_pm"][std::to_string(n)] = profile.rows[n - 1].a_pm;
        }
    }
}

void transition_summary(nlohmann::json& entry, const TransitionMatrix& tm) {
    for (std::size_t r = 0; r < tm.labels.size(); ++r) {
        for (std::size_t c = 0; c < tm.outcome_labels.size(); ++c) {
            entry[tm.labels[r]][tm.outcome_labels[c]] = tm.probs[r][c];
        }
        entry[tm.labels[r]]["support"] = tm.support[r];
    }
}

void run_transitions(CellContext& ctx) {
    for (double p : ctx.config.p_list) {
        const auto tm = transition_matrix(ctx.returns, p);
        ctx.tables.push_back(transition_table(ctx.stem + "_transitions_p" + fmt_p(p), tm));
        transition_summary(ctx.summary["transitions"]["p" + fmt_p(p)], tm);
    }
}

void run_signed_transitions(CellContext& ctx) {
    for (double p : ctx.config.p_list) {
        const auto tm = transition_matrix_signed(ctx.returns, p);
        ctx.tables.push_back(
            transition_table(ctx.stem + "_transitions_signed_p" + fmt_p(p), tm));
        transition_summary(ctx.summary["signed_transitions"]["p" + fmt_p(p)], tm);
    }
}

void run_cell(Experiment experiment, CellContext& ctx) {
    switch (experiment) {
        case Experiment::pdf: run_pdf(ctx); return;
        case Experiment::acf: run_acf(ctx); return;
        case Experiment::rearranged: run_rearranged(ctx); return;
        case Experiment::binarized: run_binarized(ctx); return;
        case Experiment::swap: run_swap(ctx); return;
        case Experiment::windowdist: run_windowdist(ctx); return;
        case Experiment::index: run_index(ctx); return;
        case Experiment::smallest_index: run_smallest_index(ctx); return;
        case Experiment::asymmetry: run_asymmetry(ctx); return;
        case Experiment::transitions: run_transitions(ctx); return;
        case Experiment::signed_transitions: run_signed_transitions(ctx); return;
    }
    throw InvalidArgumentError("unhandled experiment");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string derive_run_id(const RunConfig& config, const std::vector<InputRecord>& inputs) {
    std::ostringstream canon;
    canon << "tau=" << config.tau << ";p=";
    for (double p : config.p_list) canon << format_double(p) << ',';
    canon << ";n_max=" << config.n_max << ";max_lag=" << config.max_lag
          << ";bins=" << config.bins << ";seed=" << config.seed << ";experiments=";
    for (const auto& e : config.experiments) canon << e << ',';
    canon << ";inputs=";
    for (const auto& input : inputs) canon << input.name << ':' << input.digest << ',';
    const std::string text = canon.str();
    const std::uint64_t h = fnv1a64_bytes(std::span<const char>(text.data(), text.size()));
    return digest_string(h).substr(8);  // bare 16 hex digits for the directory name
}

}  // namespace

std::string to_string(Experiment e) {
    for (const auto& [experiment, name] : experiment_names()) {
        if (experiment == e) return name;
    }
    return "?";
}

std::vector<Experiment> parse_experiments(const std::vector<std::string>& names) {
    std::vector<Experiment> out;
    auto add = [&out](Experiment e) {
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    };
    for (const auto& name : names) {
        if (name == "all") {
            for (const auto& [experiment, unused] : experiment_names()) add(experiment);
            continue;
        }
        bool found = false;
        for (const auto& [experiment, known] : experiment_names()) {
            if (known == name) {
                add(experiment);
                found = true;
                break;
            }
        }
        if (!found) throw InvalidArgumentError("unknown experiment '" + name + "'");
    }
    return out;
}

void validate(const RunConfig& config) {
    if (config.inputs.empty()) throw InvalidArgumentError("no input series given");
    if (config.tau <= 0) throw InvalidArgumentError("tau must be positive");
    if (config.n_max == 0) throw InvalidArgumentError("n-max must be positive");
    if (config.max_lag == 0) throw InvalidArgumentError("max-lag must be positive");
    if (config.bins < 2) throw InvalidArgumentError("bins must be at least 2");
    if (config.seed == 0) throw InvalidArgumentError("seed must be positive");
    if (config.p_list.empty()) throw InvalidArgumentError("p list must not be empty");
    for (double p : config.p_list) {
        if (!(p > 0.0 && p <= 50.0)) {
            throw InvalidArgumentError("p values must lie in (0, 50], got " + std::to_string(p));
        }
    }
    if (config.experiments.empty()) throw InvalidArgumentError("experiment list must not be empty");
    parse_experiments(config.experiments);

    std::vector<std::string> stems;
    for (const auto& [symbol, path] : config.inputs) {
        if (symbol.empty()) throw InvalidArgumentError("empty input symbol");
        stems.push_back(sanitize_symbol(symbol));
    }
    std::sort(stems.begin(), stems.end());
    if (std::adjacent_find(stems.begin(), stems.end()) != stems.end()) {
        throw InvalidArgumentError("input symbols collide after filename sanitization");
    }
}

ResultManifest run_analysis(const RunConfig& config) {
    validate(config);
    const auto experiments = parse_experiments(config.experiments);

    std::vector<InputRecord> inputs;
    std::vector<std::string> errors;
    struct LoadedSeries {
        std::string symbol;
        std::string stem;
        std::optional<ReturnSeries> returns;
    };
    std::vector<LoadedSeries> loaded;

    for (const auto& [symbol, path] : config.inputs) {
        LoadedSeries entry{symbol, sanitize_symbol(symbol), std::nullopt};
        InputRecord record{symbol, path.string(), ""};
        try {
            const std::string bytes = read_file(path);
            record.digest =
                digest_string(fnv1a64_bytes(std::span<const char>(bytes.data(), bytes.size())));
            const auto prices = parse_price_csv(bytes, symbol);
            entry.returns = compute_returns(prices, config.tau);
        } catch (const std::exception& e) {
            errors.push_back(symbol + ": " + e.what());
        }
        inputs.push_back(std::move(record));
        loaded.push_back(std::move(entry));
    }

    const std::string run_id =
        config.run_id.empty() ? derive_run_id(config, inputs) : config.run_id;
    const std::filesystem::path run_dir = config.outdir / run_id;
    if (std::filesystem::exists(run_dir) && !config.overwrite) {
        throw IoError("run directory already exists: " + run_dir.string() +
                      " (use --overwrite to replace it)");
    }

    RunResults results;
    nlohmann::json summary;
    summary["run_id"] = run_id;
    summary["seed"] = config.seed;
    summary["tau"] = config.tau;
    summary["series"] = nlohmann::json::object();

    for (const auto& entry : loaded) {
        if (!entry.returns.has_value()) continue;
        const ReturnSeries& returns = *entry.returns;
        nlohmann::json& series_summary = summary["series"][entry.stem];
        series_summary["symbol"] = entry.symbol;
        series_summary["observations"] = returns.size();
        series_summary["mean"] = returns.mean();
        series_summary["stddev"] = returns.stddev();

        const std::size_t n_max = std::min(config.n_max, returns.size());
        const std::size_t max_lag =
            returns.size() > 2 ? std::min(config.max_lag, returns.size() - 2) : 0;

        for (Experiment experiment : experiments) {
            // Each cell stages into local buffers so a failure leaves no
            // partial artifacts behind.
            std::vector<OutputTable> cell_tables;
            nlohmann::json cell_summary = nlohmann::json::object();
            CellContext ctx{config, entry.symbol, entry.stem, returns,
                            n_max,  max_lag,      cell_tables, cell_summary};
            try {
                run_cell(experiment, ctx);
                for (auto& table : cell_tables) results.tables.push_back(std::move(table));
                series_summary.update(cell_summary);
            } catch (const std::exception& e) {
                errors.push_back(entry.symbol + "/" + to_string(experiment) + ": " + e.what());
            }
        }
    }

    results.summary_json = summary.dump(2) + "\n";
    return write_outputs(results, config.outdir, run_id, config.overwrite, std::move(inputs),
                         std::move(errors));
}

}  // namespace volclust
