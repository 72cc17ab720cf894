// hedge: command-line front end for the HEDGE toolkit.
//
// Every output carries the full resolved configuration (JSON under "config",
// text outputs as a "# config: {...}" line). Passing such a file back with
// --config re-runs the same computation.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hedge/hedge.hpp"

namespace {

using namespace hedge;
using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 12345;
constexpr std::size_t kBrandesGuard = 20000;
constexpr std::size_t kExGreedyGuard = 10000;
constexpr std::size_t kExGreedyWarn = 2000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    std::string input;
    std::string gen;
    bool directed = false;
    std::string sampler = "betweenness";
    unsigned kappa = 2;
    double p = 0.01;
    std::size_t k = 1;
    double eps = std::numeric_limits<double>::quiet_NaN();
    unsigned ell = 1;
    double maxk_scaled = 1.0;
    std::string budget = "theory";
    std::uint64_t seed = kDefaultSeed;
    std::size_t workers = 1;
    std::string format;
    std::string mode = "brandes";
    std::string ordering = "betweenness";
    std::size_t cap = 1000;
    std::size_t runs = 10000;
    std::size_t num_rr = 100000;
    std::vector<std::size_t> ks;
    std::vector<std::string> methods;
    std::vector<std::int64_t> snapshots;
    std::size_t quantiles = 10;
    std::string snapshot_mode = "cumulative";
    std::string levels;
    bool timing = false;

    // not part of the embedded config
    std::string output = "-";
};

Json to_json(const RunConfig& c) {
    Json j;
    j["subcommand"] = c.subcommand;
    j["input"] = c.input;
    j["gen"] = c.gen;
    j["directed"] = c.directed;
    j["sampler"] = c.sampler;
    j["kappa"] = c.kappa;
    j["p"] = c.p;
    j["k"] = c.k;
    j["eps"] = c.eps;
    j["ell"] = c.ell;
    j["maxk_scaled"] = c.maxk_scaled;
    j["budget"] = c.budget;
    j["seed"] = c.seed;
    j["workers"] = c.workers;
    j["format"] = c.format;
    j["mode"] = c.mode;
    j["ordering"] = c.ordering;
    j["cap"] = c.cap;
    j["runs"] = c.runs;
    j["num_rr"] = c.num_rr;
    j["ks"] = c.ks;
    j["methods"] = c.methods;
    j["snapshots"] = c.snapshots;
    j["quantiles"] = c.quantiles;
    j["snapshot_mode"] = c.snapshot_mode;
    j["levels"] = c.levels;
    j["timing"] = c.timing;
    return j;
}

template <typename T>
void read_field(const Json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

RunConfig from_json(const Json& j) {
    RunConfig c;
    try {
        read_field(j, "subcommand", c.subcommand);
        read_field(j, "input", c.input);
        read_field(j, "gen", c.gen);
        read_field(j, "directed", c.directed);
        read_field(j, "sampler", c.sampler);
        read_field(j, "kappa", c.kappa);
        read_field(j, "p", c.p);
        read_field(j, "k", c.k);
        if (j.contains("eps") && !j.at("eps").is_null()) c.eps = j.at("eps").get<double>();
        read_field(j, "ell", c.ell);
        read_field(j, "maxk_scaled", c.maxk_scaled);
        read_field(j, "budget", c.budget);
        read_field(j, "seed", c.seed);
        read_field(j, "workers", c.workers);
        read_field(j, "format", c.format);
        read_field(j, "mode", c.mode);
        read_field(j, "ordering", c.ordering);
        read_field(j, "cap", c.cap);
        read_field(j, "runs", c.runs);
        read_field(j, "num_rr", c.num_rr);
        read_field(j, "ks", c.ks);
        read_field(j, "methods", c.methods);
        read_field(j, "snapshots", c.snapshots);
        read_field(j, "quantiles", c.quantiles);
        read_field(j, "snapshot_mode", c.snapshot_mode);
        read_field(j, "levels", c.levels);
        read_field(j, "timing", c.timing);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad config: ") + e.what());
    }
    return c;
}

/// Accepts a bare config object, a JSON output with a "config" member, or a text output with a "# config:" line.
RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::istringstream lines(text);
    std::string line;
    const std::string marker = "# config: ";
    while (std::getline(lines, line))
        if (line.rfind(marker, 0) == 0) return from_json(Json::parse(line.substr(marker.size())));
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file is neither JSON nor a hedge output: " + path);
    }
    return from_json(j.contains("config") ? j.at("config") : j);
}

// ---------------------------------------------------------------- generators

struct GenSpec {
    std::string kind;
    std::map<std::string, std::string> params;

    std::string get(const std::string& key, const std::string& fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }
};

GenSpec parse_gen(const std::string& text) {
    GenSpec spec;
    const auto colon = text.find(':');
    spec.kind = text.substr(0, colon);
    if (colon != std::string::npos) {
        std::stringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw UsageError("generator parameter without '=': " + item);
            spec.params[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    return spec;
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        double x = std::stod(s, &pos);
        if (pos == s.size()) return x;
    } catch (const std::exception&) {
    }
    throw UsageError("bad number for " + what + ": " + s);
}

std::uint64_t to_uint(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        auto x = std::stoull(s, &pos);
        if (pos == s.size() && s.find('-') == std::string::npos) return x;
    } catch (const std::exception&) {
    }
    throw UsageError("bad integer for " + what + ": " + s);
}

KroneckerSeed parse_seed_matrix(const std::string& text) {
    KroneckerSeed seed;
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), '/', ',');
    std::stringstream in(normalized);
    std::string item;
    std::size_t i = 0;
    while (std::getline(in, item, ',')) {
        if (i >= 4) throw UsageError("seed matrix needs exactly 4 entries");
        seed.p[i++] = to_double(item, "seed matrix");
    }
    if (i != 4) throw UsageError("seed matrix needs exactly 4 entries");
    return seed;
}

KroneckerMethod parse_kron_method(const std::string& s) {
    if (s == "auto") return KroneckerMethod::automatic;
    if (s == "exact") return KroneckerMethod::exact;
    if (s == "ball") return KroneckerMethod::ball_dropping;
    throw UsageError("unknown Kronecker method: " + s);
}

/// Generator stream, independent of the stream the algorithms use.
Rng generator_rng(std::uint64_t seed) { return worker_stream(seed, std::numeric_limits<std::size_t>::max()); }

Graph generate(const GenSpec& spec, std::uint64_t seed) {
    Rng rng = generator_rng(seed);
    if (spec.kind == "ran") return gen_ran(to_uint(spec.get("n", "100"), "n"), rng);
    if (spec.kind == "hypercube") return gen_hypercube(static_cast<unsigned>(to_uint(spec.get("r", "3"), "r")));
    if (spec.kind == "kron")
        return gen_kronecker(parse_seed_matrix(spec.get("p", "0.9/0.5/0.5/0.2")),
                             static_cast<unsigned>(to_uint(spec.get("i", "8"), "i")), rng,
                             parse_kron_method(spec.get("method", "auto")));
    if (spec.kind == "lowerbound")
        return gen_lower_bound(to_uint(spec.get("n", "10000"), "n"), to_double(spec.get("eps", "0.5"), "eps")).graph;
    throw UsageError("unknown generator: " + spec.kind);
}

// ---------------------------------------------------------------- helpers

Graph load_graph(const RunConfig& c) {
    if (!c.gen.empty()) return generate(parse_gen(c.gen), c.seed);
    return load_edge_list(c.input, c.directed);
}

SamplerSpec sampler_spec(const RunConfig& c) {
    SamplerSpec spec;
    spec.kind = parse_sampler_kind(c.sampler);
    spec.kappa = c.kappa;
    spec.p = c.p;
    return spec;
}

std::size_t resolve_budget(const RunConfig& c, std::size_t n) {
    if (c.budget == "theory") return sample_budget(n, c.k, c.eps / 2.0, c.ell, c.maxk_scaled);
    if (c.budget == "paper-exp") return paper_exp_budget(n, c.k, c.eps);
    if (c.budget == "equal-yalg") return equal_yalg_budget(n, c.eps);
    const std::string prefix = "explicit:";
    if (c.budget.rfind(prefix, 0) == 0) {
        auto q = to_uint(c.budget.substr(prefix.size()), "budget");
        if (q == 0) throw UsageError("explicit budget must be positive");
        return q;
    }
    throw UsageError("unknown budget preset: " + c.budget);
}

std::string config_line(const RunConfig& c) { return "# config: " + to_json(c).dump() + "\n"; }

/// CSV text to a JSON array of row objects; numeric cells become numbers.
Json csv_to_json(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> header;
    Json rows = Json::array();
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        return cells;
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto cells = split(line);
        if (header.empty()) {
            header = cells;
            continue;
        }
        Json row;
        for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) {
            const auto& cell = cells[i];
            char* end = nullptr;
            errno = 0;
            const long long as_int = std::strtoll(cell.c_str(), &end, 10);
            if (!cell.empty() && *end == '\0' && errno == 0) {
                row[header[i]] = as_int;
                continue;
            }
            const double as_real = std::strtod(cell.c_str(), &end);
            if (!cell.empty() && *end == '\0')
                row[header[i]] = as_real;
            else
                row[header[i]] = cell;
        }
        rows.push_back(row);
    }
    return rows;
}

/// Wraps a CSV body in the configured output format.
std::string render_table(const RunConfig& c, const std::string& csv) {
    if (c.format == "json") {
        Json j;
        j["config"] = to_json(c);
        j["rows"] = csv_to_json(csv);
        return j.dump(2) + "\n";
    }
    return config_line(c) + csv;
}

void write_output(const RunConfig& c, const std::string& text) {
    if (c.output == "-" || c.output.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw IoError("failed writing to stdout");
        return;
    }
    std::filesystem::path path(c.output);
    if (const char* dir = std::getenv("HEDGE_OUTPUT_DIR"); dir && *dir && path.is_relative()) path = std::filesystem::path(dir) / path;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path.string());
    out << text;
    out.close();
    if (!out) throw IoError("failed writing output file: " + path.string());
}

std::vector<NodeId> ordering_for(const std::string& name, const Graph& g, const RunConfig& c, Rng& rng) {
    if (name == "triangle") return triangle_ordering(g);
    SamplerSpec spec = sampler_spec(c);
    spec.kind = parse_sampler_kind(name);
    return centrality_ordering(g, spec, c.eps, rng);
}

// ---------------------------------------------------------------- subcommands

std::string cmd_maximize(const RunConfig& c) {
    const Graph g = load_graph(c);
    const SamplerSpec spec = sampler_spec(c);
    const auto n = g.num_nodes();
    if (c.k < 1 || c.k > n) throw UsageError("k must lie in [1, n]");
    const auto q = resolve_budget(c, n);
    const auto start = std::chrono::steady_clock::now();
    auto pool = build_pool(g, spec, q, c.seed, c.workers);
    auto result = greedy_cover(pool, c.k, alpha(spec, g));
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (c.format == "json") {
        Json j;
        j["config"] = to_json(c);
        const Json body = run_result_json(result, g, c.timing);
        for (const auto& [key, value] : body.items()) j[key] = value;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << config_line(c);
    out << "# sample_count " << result.sample_count << " alpha " << format_real(result.alpha) << '\n';
    if (c.timing) out << "# wall_time_seconds " << format_real(result.wall_time) << '\n';
    out << "rank,node,marginal_degree,scaled_centrality\n";
    for (std::size_t i = 0; i < result.selected.size(); ++i)
        out << i + 1 << ',' << g.label(result.selected[i]) << ',' << result.marginal_degrees[i] << ','
            << format_real(result.estimated_centrality[i] / result.alpha) << '\n';
    return out.str();
}

std::string cmd_exact(const RunConfig& c) {
    const Graph g = load_graph(c);
    const auto n = g.num_nodes();
    const double a = n >= 2 ? static_cast<double>(n) * static_cast<double>(n - 1) : 0.0;
    std::ostringstream csv;
    if (c.mode == "brandes") {
        if (n > kBrandesGuard) throw SizeError("brandes refused: n exceeds " + std::to_string(kBrandesGuard));
        write_centrality_csv(csv, g, brandes(g), a);
    } else if (c.mode == "exgreedy") {
        if (n > kExGreedyGuard) throw SizeError("exgreedy refused: n exceeds " + std::to_string(kExGreedyGuard));
        if (n > kExGreedyWarn) std::cerr << "warning: exgreedy on " << n << " nodes takes k * O(nm) time\n";
        if (c.k < 1 || c.k > n) throw UsageError("k must lie in [1, n]");
        write_trace_csv(csv, g, ex_greedy(g, c.k), a);
    } else if (c.mode == "brute") {
        if (c.k < 1 || c.k > n) throw UsageError("k must lie in [1, n]");
        auto best = brute_force_max(g, c.k);
        csv << "k,nodes,set_score,scaled_set_score\n" << c.k << ',';
        for (std::size_t i = 0; i < best.nodes.size(); ++i) csv << (i ? " " : "") << g.label(best.nodes[i]);
        csv << ',' << format_real(best.value) << ',' << format_real(a > 0 ? best.value / a : 0.0) << '\n';
    } else if (c.mode == "triangle") {
        if (c.k < 1 || c.k > n) throw UsageError("k must lie in [1, n]");
        write_trace_csv(csv, g, triangle_greedy(g, c.k), static_cast<double>(list_triangles(g).size()));
    } else {
        throw UsageError("unknown exact mode: " + c.mode);
    }
    return render_table(c, csv.str());
}

std::string cmd_generate(const RunConfig& c) {
    if (c.gen.empty()) throw UsageError("generate needs a generator kind");
    const GenSpec spec = parse_gen(c.gen);
    const Graph g = generate(spec, c.seed);
    std::ostringstream out;
    out << config_line(c);
    write_edge_list(out, g, {"generator " + c.gen});
    return out.str();
}

std::string cmd_attack(const RunConfig& c) {
    const Graph g = load_graph(c);
    Rng rng(c.seed);
    const auto order = ordering_for(c.ordering, g, c, rng);
    std::ostringstream csv;
    write_attack_csv(csv, attack_curve(g, order, std::min(c.cap, g.num_nodes())));
    return render_table(c, csv.str());
}

std::string cmd_influence(const RunConfig& c) {
    const Graph g = load_graph(c);
    const auto n = g.num_nodes();
    std::vector<InfluenceRow> rows;
    const std::size_t kmax = *std::max_element(c.ks.begin(), c.ks.end());
    if (kmax > n) throw UsageError("k exceeds node count");
    for (const auto& method : c.methods) {
        Rng rng(c.seed);
        std::vector<NodeId> order;
        if (method != "im") order = ordering_for(method, g, c, rng);
        for (auto k : c.ks) {
            std::vector<NodeId> seeds;
            if (method == "im") {
                Rng im_rng(c.seed);
                seeds = ris_influence_max(g, k, c.num_rr, c.p, im_rng);
            } else {
                seeds.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
            }
            // same cascade stream for every method
            Rng cascade(c.seed ^ 0x9e3779b97f4a7c15ULL);
            rows.push_back({method, k, ic_spread(g, seeds, c.p, c.runs, cascade).mean});
        }
    }
    std::ostringstream csv;
    write_influence_csv(csv, rows);
    return render_table(c, csv.str());
}

std::string cmd_evolve(const RunConfig& c) {
    const SamplerSpec spec = sampler_spec(c);
    Rng rng(c.seed);
    EvolutionSeries series;
    if (!c.levels.empty()) {
        const GenSpec gs = parse_gen(c.gen.empty() ? "kron" : c.gen);
        if (gs.kind != "kron") throw UsageError("--levels needs a kron generator");
        const auto colon = c.levels.find(':');
        if (colon == std::string::npos) throw UsageError("--levels expects FIRST:LAST");
        const auto first = static_cast<unsigned>(to_uint(c.levels.substr(0, colon), "levels"));
        const auto last = static_cast<unsigned>(to_uint(c.levels.substr(colon + 1), "levels"));
        if (first < 1 || first > last) throw UsageError("--levels needs 1 <= FIRST <= LAST");
        series = kronecker_series(parse_seed_matrix(gs.get("p", "0.9/0.5/0.5/0.2")), first, last, c.ks, spec, c.eps, rng);
    } else {
        if (c.input.empty()) throw UsageError("evolve needs --input with a temporal edge list, or --levels");
        const auto temporal = load_temporal_edge_list(c.input);
        const auto snaps = c.snapshots.empty() ? snapshot_quantiles(temporal, c.quantiles) : c.snapshots;
        SnapshotMode mode;
        if (c.snapshot_mode == "cumulative")
            mode = SnapshotMode::cumulative;
        else if (c.snapshot_mode == "exact")
            mode = SnapshotMode::exact;
        else
            throw UsageError("unknown snapshot mode: " + c.snapshot_mode);
        series = evolve(temporal, snaps, c.ks, spec, c.eps, rng, mode, c.directed);
    }
    std::ostringstream csv;
    write_evolution_csv(csv, series);
    return render_table(c, csv.str());
}

std::string cmd_sample_dump(const RunConfig& c) {
    const Graph g = load_graph(c);
    const auto q = resolve_budget(c, g.num_nodes());
    auto pool = build_pool(g, sampler_spec(c), q, c.seed, c.workers);
    std::ostringstream out;
    out << config_line(c);
    for (const auto& h : pool.edges()) {
        for (std::size_t i = 0; i < h.size(); ++i) out << (i ? " " : "") << g.label(h[i]);
        out << '\n';
    }
    return out.str();
}

/// Fills subcommand-specific defaults and checks cross-field constraints.
void resolve(RunConfig& c) {
    const auto& s = c.subcommand;
    if (s != "generate" && s != "evolve" && c.input.empty() == c.gen.empty())
        throw UsageError("exactly one of --input and --gen is required");
    if (s == "evolve" && !c.input.empty() && !c.gen.empty()) throw UsageError("--input and --gen are exclusive");
    if (std::isnan(c.eps)) c.eps = (s == "attack" || s == "influence" || s == "evolve") ? 0.25 : 0.1;
    if (!(c.eps > 0.0 && c.eps < 1.0)) throw UsageError("eps must lie in (0, 1)");
    if (c.format.empty()) c.format = s == "maximize" ? "json" : "csv";
    if (c.format != "csv" && c.format != "json") throw UsageError("format must be csv or json");
    if (c.workers < 1) throw UsageError("workers must be positive");
    if (c.runs < 1 || c.num_rr < 1) throw UsageError("runs and num-rr must be positive");
    if (!(c.p >= 0.0 && c.p <= 1.0)) throw UsageError("p must lie in [0, 1]");
    parse_sampler_kind(c.sampler);
    if (c.ks.empty()) {
        if (s == "influence") c.ks = {10, 50, 100};
        if (s == "evolve") c.ks = {1, 50};
    }
    if (std::find(c.ks.begin(), c.ks.end(), std::size_t{0}) != c.ks.end()) throw UsageError("k values must be positive");
    if (c.methods.empty() && s == "influence") c.methods = {"im", "betweenness", "coverage", "kpath", "triangle"};
    for (const auto& m : c.methods)
        if (m != "im" && m != "triangle") parse_sampler_kind(m);
    if (s == "attack" && c.ordering != "triangle") parse_sampler_kind(c.ordering);
}

std::string run(const RunConfig& c) {
    if (c.subcommand == "maximize") return cmd_maximize(c);
    if (c.subcommand == "exact") return cmd_exact(c);
    if (c.subcommand == "generate") return cmd_generate(c);
    if (c.subcommand == "attack") return cmd_attack(c);
    if (c.subcommand == "influence") return cmd_influence(c);
    if (c.subcommand == "evolve") return cmd_evolve(c);
    if (c.subcommand == "sample-dump") return cmd_sample_dump(c);
    throw UsageError("unknown subcommand: " + c.subcommand);
}

// ---------------------------------------------------------------- flag plumbing

/// Records which flags were given so they can override a loaded --config.
class Flags {
public:
    template <typename T>
    CLI::Option* add(CLI::App* app, const std::string& name, T RunConfig::*field, const std::string& help) {
        auto* opt = app->add_option(name, flags_.*field, help);
        overrides_.push_back({opt, [field](RunConfig& dst, const RunConfig& src) { dst.*field = src.*field; }});
        return opt;
    }

    CLI::Option* add_flag(CLI::App* app, const std::string& name, bool RunConfig::*field, const std::string& help) {
        auto* opt = app->add_flag(name, flags_.*field, help);
        overrides_.push_back({opt, [field](RunConfig& dst, const RunConfig& src) { dst.*field = src.*field; }});
        return opt;
    }

    RunConfig& values() { return flags_; }

    void apply(RunConfig& base) const {
        for (const auto& [opt, copy] : overrides_)
            if (opt->count() > 0) copy(base, flags_);
    }

private:
    RunConfig flags_;
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&, const RunConfig&)>>> overrides_;
};

void add_input_options(Flags& f, CLI::App* app) {
    f.add(app, "--input", &RunConfig::input, "Edge-list file (whitespace separated, # comments)");
    f.add(app, "--gen", &RunConfig::gen, "Generator spec, e.g. ran:n=1000, hypercube:r=5, kron:i=10, lowerbound:n=400,eps=0.5");
    f.add_flag(app, "--directed", &RunConfig::directed, "Treat the input as directed");
}

void add_sampler_options(Flags& f, CLI::App* app) {
    f.add(app, "--sampler", &RunConfig::sampler, "betweenness | coverage | kpath | rr");
    f.add(app, "--kappa", &RunConfig::kappa, "Walk length for kpath");
    f.add(app, "--p", &RunConfig::p, "Edge probability for rr sets and cascades");
}

void add_common(Flags& f, CLI::App* app) {
    f.add(app, "--seed", &RunConfig::seed, "RNG seed");
    f.add(app, "--output,-o", &RunConfig::output, "Output path, - for stdout");
    f.add(app, "--format", &RunConfig::format, "csv | json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hedge: betweenness centrality maximization toolkit"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "Re-run the configuration embedded in a config or output file");
    Flags f;

    auto* maximize = app.add_subcommand("maximize", "Top-k set by HEDGE");
    add_input_options(f, maximize);
    add_sampler_options(f, maximize);
    f.add(maximize, "--k", &RunConfig::k, "Set size");
    f.add(maximize, "--eps", &RunConfig::eps, "Accuracy parameter (default 0.1)");
    f.add(maximize, "--ell", &RunConfig::ell, "Confidence exponent: failure probability 1/n^ell");
    f.add(maximize, "--maxk-scaled", &RunConfig::maxk_scaled, "Lower bound on MAX_k / alpha for the theory budget");
    f.add(maximize, "--budget", &RunConfig::budget, "theory | paper-exp | equal-yalg | explicit:N");
    f.add(maximize, "--workers", &RunConfig::workers, "Sampling threads; output depends on seed and worker count");
    f.add_flag(maximize, "--timing", &RunConfig::timing, "Include wall time (output is then not byte-stable)");
    add_common(f, maximize);

    auto* exact = app.add_subcommand("exact", "Exact baselines");
    add_input_options(f, exact);
    f.add(exact, "--mode", &RunConfig::mode, "brandes | exgreedy | brute | triangle");
    f.add(exact, "--k", &RunConfig::k, "Set size");
    add_common(f, exact);

    auto* gen = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
    std::string gen_kind, seed_matrix = "0.9,0.5,0.5,0.2", kron_method = "auto";
    std::size_t gen_n = 100;
    unsigned gen_r = 3, gen_i = 8;
    double gen_eps = 0.5;
    auto* kind_opt = gen->add_option("kind", gen_kind, "ran | hypercube | kron | lowerbound");
    gen->add_option("--n", gen_n, "Node count (ran, lowerbound)");
    gen->add_option("--r", gen_r, "Dimension (hypercube)");
    gen->add_option("--i", gen_i, "Levels: 2^i nodes (kron)");
    gen->add_option("--seed-matrix", seed_matrix, "p00,p01,p10,p11 (kron)");
    gen->add_option("--method", kron_method, "auto | exact | ball (kron)");
    gen->add_option("--eps", gen_eps, "Block ratio (lowerbound)");
    add_common(f, gen);

    auto* attack = app.add_subcommand("attack", "Largest component under ordered node removal");
    add_input_options(f, attack);
    add_sampler_options(f, attack);
    f.add(attack, "--ordering", &RunConfig::ordering, "betweenness | coverage | kpath | triangle");
    f.add(attack, "--eps", &RunConfig::eps, "Ordering accuracy (default 0.25)");
    f.add(attack, "--cap", &RunConfig::cap, "Number of removals");
    add_common(f, attack);

    auto* influence = app.add_subcommand("influence", "Cascade spread of top-k sets per method");
    add_input_options(f, influence);
    f.add(influence, "--p", &RunConfig::p, "Edge activation probability");
    f.add(influence, "--kappa", &RunConfig::kappa, "Walk length for the kpath method");
    f.add(influence, "--eps", &RunConfig::eps, "Ordering accuracy (default 0.25)");
    f.add(influence, "--ks", &RunConfig::ks, "Set sizes")->delimiter(',');
    f.add(influence, "--methods", &RunConfig::methods, "im,betweenness,coverage,kpath,triangle")->delimiter(',');
    f.add(influence, "--runs", &RunConfig::runs, "Cascades per estimate");
    f.add(influence, "--num-rr", &RunConfig::num_rr, "Reverse-reachable sets for im");
    add_common(f, influence);

    auto* evolve_cmd = app.add_subcommand("evolve", "Top-k centrality over temporal snapshots");
    f.add(evolve_cmd, "--input", &RunConfig::input, "Temporal edge list: u v t");
    f.add(evolve_cmd, "--gen", &RunConfig::gen, "kron generator for --levels, e.g. kron:p=0.9/0.5/0.5/0.2");
    f.add_flag(evolve_cmd, "--directed", &RunConfig::directed, "Treat the input as directed");
    add_sampler_options(f, evolve_cmd);
    f.add(evolve_cmd, "--eps", &RunConfig::eps, "Accuracy (default 0.25)");
    f.add(evolve_cmd, "--ks", &RunConfig::ks, "Set sizes")->delimiter(',');
    f.add(evolve_cmd, "--snapshots", &RunConfig::snapshots, "Snapshot timestamps")->delimiter(',');
    f.add(evolve_cmd, "--quantiles", &RunConfig::quantiles, "Snapshot count when --snapshots is absent");
    f.add(evolve_cmd, "--snapshot-mode", &RunConfig::snapshot_mode, "cumulative | exact");
    f.add(evolve_cmd, "--levels", &RunConfig::levels, "Kronecker sweep FIRST:LAST instead of a temporal input");
    add_common(f, evolve_cmd);

    auto* dump = app.add_subcommand("sample-dump", "Write the hyper-edge pool, one edge per line");
    add_input_options(f, dump);
    add_sampler_options(f, dump);
    f.add(dump, "--k", &RunConfig::k, "Set size (for budget presets)");
    f.add(dump, "--eps", &RunConfig::eps, "Accuracy (default 0.1)");
    f.add(dump, "--ell", &RunConfig::ell, "Confidence exponent");
    f.add(dump, "--maxk-scaled", &RunConfig::maxk_scaled, "Lower bound on MAX_k / alpha");
    f.add(dump, "--budget", &RunConfig::budget, "theory | paper-exp | equal-yalg | explicit:N");
    f.add(dump, "--workers", &RunConfig::workers, "Sampling threads");
    add_common(f, dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) config = load_config(config_path);
        f.apply(config);
        if (!app.get_subcommands().empty()) config.subcommand = app.get_subcommands().front()->get_name();
        if (config.subcommand.empty()) throw UsageError("a subcommand is required (see --help)");
        if (config.subcommand == "generate" && kind_opt->count() > 0) {
            std::ostringstream spec;
            spec << gen_kind << ':';
            if (gen_kind == "ran")
                spec << "n=" << gen_n;
            else if (gen_kind == "hypercube")
                spec << "r=" << gen_r;
            else if (gen_kind == "kron") {
                const auto m = parse_seed_matrix(seed_matrix).p;
                spec << "i=" << gen_i << ",p=" << m[0] << '/' << m[1] << '/' << m[2] << '/' << m[3] << ",method=" << kron_method;
            }
            else if (gen_kind == "lowerbound")
                spec << "n=" << gen_n << ",eps=" << gen_eps;
            else
                throw UsageError("unknown generator: " + gen_kind);
            config.gen = spec.str();
        }
        config.output = f.values().output;
        resolve(config);
        write_output(config, run(config));
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "hedge: " << e.what() << '\n';
        return 2;
    } catch (const SizeError& e) {
        std::cerr << "hedge: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "hedge: " << e.what() << '\n';
        return 4;
    } catch (const hedge::ParseError& e) {
        std::cerr << "hedge: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hedge: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "hedge: " << e.what() << '\n';
        return 1;
    }
}
