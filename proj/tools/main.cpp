// incompress — one entry point for every experiment in the workbench, with
// reproducible seeds and machine-readable output. JSON reports carry the
// tool version, the full resolved config, the seed, and the wall time; CSV
// emits plain tables. Identical configs produce identical reports (modulo
// wall time).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "incompress/codes.hpp"
#include "incompress/lcs.hpp"
#include "incompress/mesh.hpp"
#include "incompress/monopoly.hpp"
#include "incompress/rng.hpp"
#include "incompress/sortbench.hpp"
#include "incompress/stats.hpp"
#include "incompress/version.hpp"
#include "incompress/walk.hpp"

using json = nlohmann::ordered_json;
using namespace incompress;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json summary_json(const core::TrialSummary& s) {
    return json{{"count", s.count},       {"mean", s.mean},
                {"sample_std", s.sample_std}, {"ci95_low", s.ci95_low},
                {"ci95_high", s.ci95_high},   {"min", s.min},
                {"max", s.max}};
}

struct Output {
    std::string format = "json"; // json or csv
    std::string path;            // empty = stdout

    void emit_json(const json& report) const { write(report.dump(2) + "\n"); }

    void emit_csv(const std::string& header, const std::vector<std::string>& rows) const {
        std::string text = header + "\n";
        for (const auto& row : rows) text += row + "\n";
        write(text);
    }

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file: " + path);
            out << text;
        }
    }
};

// state resolved before dispatch
struct Run {
    std::uint64_t seed = 0;
    Output out;
    std::chrono::steady_clock::time_point t0;

    json envelope(const std::string& command, json config, json result) const {
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        config["seed"] = seed;
        config["format"] = out.format;
        config["output"] = out.path.empty() ? "-" : out.path;
        return json{{"version", INCOMPRESS_VERSION},
                    {"command", command},
                    {"seed", seed},
                    {"config", std::move(config)},
                    {"result", std::move(result)},
                    {"wall_time_ms", ms}};
    }
};

const std::string kBitstringHint = "expected a run of 0/1 characters or \"eps\"";

CLI::Validator bitstring_validator() {
    return CLI::Validator(
        [](std::string& input) -> std::string {
            if (input == "eps") return {};
            if (input.empty()) return kBitstringHint;
            for (char ch : input)
                if (ch != '0' && ch != '1') return kBitstringHint;
            return {};
        },
        "BITSTRING");
}

std::uint64_t env_default_seed() {
    if (const char* env = std::getenv("INCOMPRESS_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && end != env) return v;
        throw std::invalid_argument("INCOMPRESS_SEED must be an unsigned integer");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"incompress: codes, subsequence encodings, mesh locality, random walks,\n"
                 "the monopolist game, and comparison-counting sorts — all seeded and\n"
                 "reproducible."};
    app.set_version_flag("--version", INCOMPRESS_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    Run run;
    std::optional<std::uint64_t> seed_flag;
    app.add_option("--seed", seed_flag, "base seed (default: $INCOMPRESS_SEED or 0)");
    app.add_option("--format", run.out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", run.out.path, "output file (default: stdout)");

    // ---- codec ----------------------------------------------------------
    auto* codec = app.add_subcommand("codec", "self-delimiting codes E0..E3 and the pairing map");
    codec->require_subcommand(1);
    int level = 1;
    std::string input_bits, x_bits, y_bits;

    auto* cEncode = codec->add_subcommand("encode", "wrap a bitstring in a level codeword");
    cEncode->add_option("--level", level, "code level")->check(CLI::Range(0, 3))->required();
    cEncode->add_option("--input", input_bits, "payload bits")
        ->check(bitstring_validator())
        ->required();

    auto* cDecode = codec->add_subcommand("decode", "strip one codeword off a stream");
    cDecode->add_option("--level", level, "code level")->check(CLI::Range(0, 3))->required();
    cDecode->add_option("--input", input_bits, "stream bits")
        ->check(bitstring_validator())
        ->required();

    auto* cPair = codec->add_subcommand("pair", "<x,y> = E2(x) y");
    cPair->add_option("--x", x_bits, "first component")->check(bitstring_validator())->required();
    cPair->add_option("--y", y_bits, "second component")->check(bitstring_validator())->required();

    auto* cUnpair = codec->add_subcommand("unpair", "recover both components of a pairing");
    cUnpair->add_option("--input", input_bits, "paired bits")
        ->check(bitstring_validator())
        ->required();

    auto* cCensus = codec->add_subcommand(
        "census", "fraction of length-n inputs an injective encoder maps below n-c bits");
    std::string census_encoder = "random";
    unsigned census_n = 12, census_c = 1, census_max_len = 16;
    cCensus->add_option("--encoder", census_encoder, "encoder under census")
        ->check(CLI::IsMember({"identity", "e1", "random"}))
        ->capture_default_str();
    cCensus->add_option("--n", census_n, "input length")->required();
    cCensus->add_option("--c", census_c, "compression margin")->required();
    cCensus->add_option("--max-len", census_max_len,
                        "codomain cap for the random injection (strings of length <= max-len)")
        ->capture_default_str();

    // ---- lcs --------------------------------------------------------------
    auto* lcsCmd = app.add_subcommand(
        "lcs", "common subsequences, trace and gap codecs, and the expected-ratio experiment");
    lcsCmd->require_subcommand(1);
    std::string s_bits, t_bits, u_bits, z_bits;
    std::size_t lcs_n = 0;

    auto* lDp = lcsCmd->add_subcommand("dp", "a longest common subsequence (dynamic program)");
    lDp->add_option("--s", s_bits)->check(bitstring_validator())->required();
    lDp->add_option("--t", t_bits)->check(bitstring_validator())->required();

    auto* lZm = lcsCmd->add_subcommand("zm", "the zero-major greedy common subsequence");
    lZm->add_option("--s", s_bits)->check(bitstring_validator())->required();
    lZm->add_option("--t", t_bits)->check(bitstring_validator())->required();

    auto* lTrace = lcsCmd->add_subcommand("trace", "comparison trace (y,z) of a zero-major run");
    lTrace->add_option("--s", s_bits)->check(bitstring_validator())->required();
    lTrace->add_option("--t", t_bits)->check(bitstring_validator())->required();

    auto* lUntrace = lcsCmd->add_subcommand("untrace", "invert a comparison trace");
    lUntrace->add_option("--y", y_bits)->check(bitstring_validator())->required();
    lUntrace->add_option("--z", z_bits)->check(bitstring_validator())->required();
    lUntrace->add_option("--n", lcs_n, "original string length")->required();

    auto* lReencode =
        lcsCmd->add_subcommand("reencode", "gap re-encoding of s against a subsequence u");
    lReencode->add_option("--s", s_bits)->check(bitstring_validator())->required();
    lReencode->add_option("--u", u_bits)->check(bitstring_validator())->required();

    auto* lSim = lcsCmd->add_subcommand("sim", "ratio l(u)/n over random pairs");
    std::size_t sim_trials = 100;
    std::string sim_algorithm = "dp";
    bool sim_exhaustive = false;
    lSim->add_option("--n", lcs_n, "string length")->required();
    lSim->add_option("--trials", sim_trials, "number of pairs")->capture_default_str();
    lSim->add_option("--algorithm", sim_algorithm, "dp or zero_major")
        ->check(CLI::IsMember({"dp", "zero_major"}))
        ->capture_default_str();
    lSim->add_flag("--exhaustive", sim_exhaustive,
                   "every ordered pair of length n instead of sampling (n <= 8)");

    // ---- mesh -------------------------------------------------------------
    auto* meshCmd = app.add_subcommand("mesh", "indexing schemes and locality scans");
    meshCmd->require_subcommand(1);
    std::string scheme_name = "hilbert", metric_name = "euclidean";
    unsigned mesh_n = 32;

    auto* mMap = meshCmd->add_subcommand("map", "index <-> cell under a scheme");
    std::optional<std::uint64_t> map_index;
    std::optional<unsigned> map_row, map_col;
    mMap->add_option("--scheme", scheme_name)->capture_default_str();
    mMap->add_option("--n", mesh_n, "side length")->required();
    mMap->add_option("--index", map_index, "index in 1..n^2");
    mMap->add_option("--row", map_row, "cell row in 0..n-1");
    mMap->add_option("--col", map_col, "cell column in 0..n-1");

    auto* mScan = meshCmd->add_subcommand("scan", "worst dilation (d+1)^2/|i-j| over all pairs");
    bool scan_sampled = false;
    std::uint64_t scan_samples = 1000000;
    mScan->add_option("--scheme", scheme_name)->capture_default_str();
    mScan->add_option("--n", mesh_n, "side length")->required();
    mScan->add_option("--metric", metric_name)->capture_default_str();
    mScan->add_flag("--sampled", scan_sampled, "sample pairs instead of the exhaustive scan");
    mScan->add_option("--samples", scan_samples, "pairs to sample in sampled mode")
        ->capture_default_str();

    auto* mCorner = meshCmd->add_subcommand(
        "corner", "per-corner share of pairs with d >= sqrt(c0 |i-j|)");
    double corner_c0 = 2.5;
    mCorner->add_option("--scheme", scheme_name)->capture_default_str();
    mCorner->add_option("--n", mesh_n, "side length")->required();
    mCorner->add_option("--metric", metric_name)->capture_default_str();
    mCorner->add_option("--c0", corner_c0, "locality constant")->capture_default_str();

    // ---- walk -------------------------------------------------------------
    auto* walkCmd = app.add_subcommand("walk", "k-dimensional unit-step random walks");
    walkCmd->require_subcommand(1);
    auto* wSim = walkCmd->add_subcommand("sim", "batch of seeded walks with per-dimension stats");
    unsigned walk_k = 1;
    std::uint64_t walk_n = 1000;
    std::size_t walk_trials = 100;
    wSim->add_option("--k", walk_k, "dimensions")->capture_default_str();
    wSim->add_option("--n", walk_n, "steps per walk")->required();
    wSim->add_option("--trials", walk_trials, "walks in the batch")->capture_default_str();

    // ---- monopoly ----------------------------------------------------------
    auto* monoCmd = app.add_subcommand("monopoly", "the k-player win-transfer game");
    monoCmd->require_subcommand(1);
    auto* oSim = monoCmd->add_subcommand("sim", "batch of games, termination rounds");
    unsigned mono_k = 2;
    std::uint64_t mono_capital = 20;
    std::size_t mono_trials = 1000;
    std::optional<std::uint64_t> mono_max_rounds;
    oSim->add_option("--k", mono_k, "players")->capture_default_str();
    oSim->add_option("--I", mono_capital, "total capital (divisible by k)")->capture_default_str();
    oSim->add_option("--trials", mono_trials, "games in the batch")->capture_default_str();
    oSim->add_option("--max-rounds", mono_max_rounds, "round cap (default 10*I^2)");

    // ---- sort ---------------------------------------------------------------
    auto* sortCmd = app.add_subcommand("sort", "comparison-counting sorts");
    sortCmd->require_subcommand(1);
    auto* sBench = sortCmd->add_subcommand("bench", "mean comparisons vs the log2 n! floor");
    std::uint32_t sort_n = 100;
    std::size_t sort_trials = 1000;
    std::vector<std::string> sort_algorithms = {"merge", "quick", "insertion"};
    bool sort_per_trial = false;
    sBench->add_option("--n", sort_n, "array size")->required();
    sBench->add_option("--trials", sort_trials, "permutations per algorithm")
        ->capture_default_str();
    sBench->add_option("--algorithms", sort_algorithms, "algorithms to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"merge", "quick", "insertion"}));
    sBench->add_flag("--per-trial", sort_per_trial, "csv: only per-trial rows, no summary rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e); // prints the usage message on the error stream
        return 1;
    }

    try {
        run.seed = seed_flag ? *seed_flag : env_default_seed();
        run.t0 = std::chrono::steady_clock::now();
        const bool csv = run.out.format == "csv";
        auto bs = [](const std::string& text) { return BitString::from_string(text); };

        if (cEncode->parsed()) {
            const BitString coded = codes::encode(level, bs(input_bits));
            if (csv)
                run.out.emit_csv("level,input,output,output_length",
                                 {std::to_string(level) + "," + input_bits + "," +
                                  coded.display() + "," + std::to_string(coded.size())});
            else
                run.out.emit_json(run.envelope(
                    "codec encode", json{{"level", level}, {"input", input_bits}},
                    json{{"output", coded.display()}, {"output_length", coded.size()}}));
        } else if (cDecode->parsed()) {
            const auto decoded = codes::decode(level, bs(input_bits));
            if (csv)
                run.out.emit_csv("level,input,value,remainder",
                                 {std::to_string(level) + "," + input_bits + "," +
                                  decoded.value.display() + "," + decoded.remainder.display()});
            else
                run.out.emit_json(run.envelope(
                    "codec decode", json{{"level", level}, {"input", input_bits}},
                    json{{"value", decoded.value.display()},
                         {"remainder", decoded.remainder.display()}}));
        } else if (cPair->parsed()) {
            const BitString paired = codes::pair_encode(bs(x_bits), bs(y_bits));
            if (csv)
                run.out.emit_csv("x,y,output", {x_bits + "," + y_bits + "," + paired.display()});
            else
                run.out.emit_json(run.envelope(
                    "codec pair", json{{"x", x_bits}, {"y", y_bits}},
                    json{{"output", paired.display()}, {"output_length", paired.size()}}));
        } else if (cUnpair->parsed()) {
            const auto [px, py] = codes::unpair(bs(input_bits));
            if (csv)
                run.out.emit_csv("input,x,y",
                                 {input_bits + "," + px.display() + "," + py.display()});
            else
                run.out.emit_json(run.envelope("codec unpair", json{{"input", input_bits}},
                                               json{{"x", px.display()}, {"y", py.display()}}));
        } else if (cCensus->parsed()) {
            std::function<BitString(const BitString&)> encoder;
            if (census_encoder == "identity") {
                encoder = [](const BitString& x) { return x; };
            } else if (census_encoder == "e1") {
                encoder = [](const BitString& x) { return codes::encode(1, x); };
            } else {
                if (census_max_len < census_n)
                    throw std::invalid_argument("census: max-len must be >= n");
                encoder = [inj = codes::RandomInjection(census_max_len, run.seed)](
                              const BitString& x) { return inj(x); };
            }
            const auto res = codes::census(encoder, census_n, census_c);
            const double bound = std::pow(2.0, -double(census_c));
            if (csv)
                run.out.emit_csv(
                    "encoder,n,c,domain_size,compressed,fraction,bound",
                    {census_encoder + "," + std::to_string(census_n) + "," +
                     std::to_string(census_c) + "," + std::to_string(res.domain_size) + "," +
                     std::to_string(res.compressed) + "," + fmt_double(res.fraction) + "," +
                     fmt_double(bound)});
            else
                run.out.emit_json(run.envelope("codec census",
                                               json{{"encoder", census_encoder},
                                                    {"n", census_n},
                                                    {"c", census_c},
                                                    {"max_len", census_max_len}},
                                               json{{"domain_size", res.domain_size},
                                                    {"compressed", res.compressed},
                                                    {"fraction", res.fraction},
                                                    {"bound", bound}}));
        } else if (lDp->parsed() || lZm->parsed()) {
            const BitString s = bs(s_bits), t = bs(t_bits);
            const BitString u = lDp->parsed() ? lcs::lcs_dp(s, t) : lcs::zero_major(s, t);
            json result{{"u", u.display()}, {"length", u.size()}};
            if (!s.empty()) result["ratio"] = double(u.size()) / double(s.size());
            if (csv)
                run.out.emit_csv("s,t,u,length", {s_bits + "," + t_bits + "," + u.display() + "," +
                                                  std::to_string(u.size())});
            else
                run.out.emit_json(run.envelope(lDp->parsed() ? "lcs dp" : "lcs zm",
                                               json{{"s", s_bits}, {"t", t_bits}}, result));
        } else if (lTrace->parsed()) {
            const BitString s = bs(s_bits), t = bs(t_bits);
            const auto enc = lcs::trace_encode(s, t);
            const BitString u = lcs::zero_major(s, t);
            if (csv)
                run.out.emit_csv("s,t,n,u,y,z",
                                 {s.display() + "," + t.display() + "," + std::to_string(enc.n) +
                                  "," + u.display() + "," + enc.y.display() + "," +
                                  enc.z.display()});
            else
                run.out.emit_json(run.envelope("lcs trace",
                                               json{{"s", s_bits}, {"t", t_bits}},
                                               json{{"s", s.display()},
                                                    {"t", t.display()},
                                                    {"n", enc.n},
                                                    {"u", u.display()},
                                                    {"y", enc.y.display()},
                                                    {"z", enc.z.display()}}));
        } else if (lUntrace->parsed()) {
            const auto [s, t] = lcs::trace_decode({bs(y_bits), bs(z_bits), lcs_n});
            if (csv)
                run.out.emit_csv("y,z,n,s,t", {y_bits + "," + z_bits + "," + std::to_string(lcs_n) +
                                               "," + s.display() + "," + t.display()});
            else
                run.out.emit_json(run.envelope(
                    "lcs untrace", json{{"y", y_bits}, {"z", z_bits}, {"n", lcs_n}},
                    json{{"s", s.display()}, {"t", t.display()}}));
        } else if (lReencode->parsed()) {
            const auto enc = lcs::subseq_encode(bs(s_bits), bs(u_bits));
            if (csv)
                run.out.emit_csv("s,u,encoded,m",
                                 {s_bits + "," + u_bits + "," + enc.encoded.display() + "," +
                                  std::to_string(enc.m)});
            else
                run.out.emit_json(run.envelope(
                    "lcs reencode", json{{"s", s_bits}, {"u", u_bits}},
                    json{{"encoded", enc.encoded.display()}, {"m", enc.m}}));
        } else if (lSim->parsed()) {
            const auto alg = lcs::algorithm_from_name(sim_algorithm);
            const auto summary = sim_exhaustive ? lcs::lcs_exhaustive(lcs_n, alg)
                                                : lcs::lcs_mc(lcs_n, sim_trials, run.seed, alg);
            if (csv)
                run.out.emit_csv("n,trials,algorithm,mean,sample_std,ci95_low,ci95_high,min,max",
                                 {std::to_string(summary.n) + "," + std::to_string(summary.trials) +
                                  "," + lcs::algorithm_name(summary.algorithm) + "," +
                                  fmt_double(summary.ratio.mean) + "," +
                                  fmt_double(summary.ratio.sample_std) + "," +
                                  fmt_double(summary.ratio.ci95_low) + "," +
                                  fmt_double(summary.ratio.ci95_high) + "," +
                                  fmt_double(summary.ratio.min) + "," +
                                  fmt_double(summary.ratio.max)});
            else
                run.out.emit_json(run.envelope("lcs sim",
                                               json{{"n", lcs_n},
                                                    {"trials", sim_trials},
                                                    {"algorithm", sim_algorithm},
                                                    {"exhaustive", sim_exhaustive}},
                                               json{{"n", summary.n},
                                                    {"trials", summary.trials},
                                                    {"algorithm",
                                                     lcs::algorithm_name(summary.algorithm)},
                                                    {"ratio", summary_json(summary.ratio)}}));
        } else if (mMap->parsed()) {
            const mesh::IndexingScheme scheme(mesh::scheme_from_name(scheme_name), mesh_n);
            std::uint64_t index = 0;
            mesh::Cell cell;
            if (map_index && !map_row && !map_col) {
                index = *map_index;
                cell = mesh::index_to_cell(scheme, index);
            } else if (!map_index && map_row && map_col) {
                cell = {*map_row, *map_col};
                index = mesh::cell_to_index(scheme, cell);
            } else {
                throw std::invalid_argument("mesh map: give either --index or both --row/--col");
            }
            if (csv)
                run.out.emit_csv("scheme,n,index,row,col",
                                 {scheme_name + "," + std::to_string(mesh_n) + "," +
                                  std::to_string(index) + "," + std::to_string(cell.row) + "," +
                                  std::to_string(cell.col)});
            else
                run.out.emit_json(run.envelope(
                    "mesh map", json{{"scheme", scheme_name}, {"n", mesh_n}},
                    json{{"index", index}, {"row", cell.row}, {"col", cell.col}}));
        } else if (mScan->parsed()) {
            const mesh::IndexingScheme scheme(mesh::scheme_from_name(scheme_name), mesh_n);
            const auto metric = mesh::metric_from_name(metric_name);
            const auto res = scan_sampled
                                 ? mesh::worst_dilation_sampled(scheme, metric, scan_samples,
                                                                run.seed)
                                 : mesh::worst_dilation(scheme, metric);
            if (csv)
                run.out.emit_csv("scheme,n,metric,c_max,witness_i,witness_j",
                                 {scheme_name + "," + std::to_string(mesh_n) + "," + metric_name +
                                  "," + fmt_double(res.c_max) + "," +
                                  std::to_string(res.witness_i) + "," +
                                  std::to_string(res.witness_j)});
            else
                run.out.emit_json(run.envelope("mesh scan",
                                               json{{"scheme", scheme_name},
                                                    {"n", mesh_n},
                                                    {"metric", metric_name},
                                                    {"sampled", scan_sampled},
                                                    {"samples", scan_samples}},
                                               json{{"c_max", res.c_max},
                                                    {"witness_i", res.witness_i},
                                                    {"witness_j", res.witness_j}}));
        } else if (mCorner->parsed()) {
            const mesh::IndexingScheme scheme(mesh::scheme_from_name(scheme_name), mesh_n);
            const auto metric = mesh::metric_from_name(metric_name);
            const auto corners = mesh::corner_locality(scheme, metric, corner_c0);
            json list = json::array();
            std::vector<std::string> rows;
            for (const auto& corner : corners) {
                list.push_back(json{{"corner", corner.corner},
                                    {"row", corner.cell.row},
                                    {"col", corner.cell.col},
                                    {"index", corner.index},
                                    {"fraction", corner.fraction}});
                rows.push_back(scheme_name + "," + std::to_string(mesh_n) + "," + metric_name +
                               "," + fmt_double(corner_c0) + "," + corner.corner + "," +
                               fmt_double(corner.fraction));
            }
            if (csv)
                run.out.emit_csv("scheme,n,metric,c0,corner,fraction", rows);
            else
                run.out.emit_json(run.envelope("mesh corner",
                                               json{{"scheme", scheme_name},
                                                    {"n", mesh_n},
                                                    {"metric", metric_name},
                                                    {"c0", corner_c0}},
                                               json{{"corners", std::move(list)}}));
        } else if (wSim->parsed()) {
            std::vector<walk::WalkRecord> records;
            const auto stats =
                walk::walk_batch(walk_k, walk_n, walk_trials, run.seed, csv ? &records : nullptr);
            if (csv) {
                std::vector<std::string> rows;
                for (std::size_t trial = 0; trial < records.size(); ++trial)
                    for (unsigned d = 0; d < walk_k; ++d)
                        rows.push_back(std::to_string(walk_k) + "," + std::to_string(walk_n) + "," +
                                       std::to_string(trial) + "," + std::to_string(d) + "," +
                                       std::to_string(records[trial].steps[d]) + "," +
                                       std::to_string(records[trial].endpoint[d]) + "," +
                                       std::to_string(records[trial].max_excursion[d]));
                run.out.emit_csv("k,n,trial,dim,m_i,D_i,M_i", rows);
            } else {
                json dims = json::array();
                for (unsigned d = 0; d < walk_k; ++d)
                    dims.push_back(
                        json{{"dim", d},
                             {"steps", summary_json(stats.dims[d].steps)},
                             {"abs_endpoint", summary_json(stats.dims[d].abs_endpoint)},
                             {"max_excursion", summary_json(stats.dims[d].max_excursion)}});
                run.out.emit_json(run.envelope(
                    "walk sim", json{{"k", walk_k}, {"n", walk_n}, {"trials", walk_trials}},
                    json{{"k", stats.k},
                         {"n", stats.n},
                         {"trials", stats.trials},
                         {"dims", std::move(dims)}}));
            }
        } else if (oSim->parsed()) {
            const std::uint64_t cap =
                mono_max_rounds ? *mono_max_rounds : monopoly::default_max_rounds(mono_capital);
            std::vector<monopoly::GameOutcome> outcomes;
            const auto batch = monopoly::monopoly_batch(mono_k, mono_capital, mono_trials,
                                                        run.seed, cap, csv ? &outcomes : nullptr);
            if (csv) {
                std::vector<std::string> rows;
                for (std::size_t trial = 0; trial < outcomes.size(); ++trial)
                    rows.push_back(std::to_string(mono_k) + "," + std::to_string(mono_capital) +
                                   "," + std::to_string(trial) + "," +
                                   std::to_string(outcomes[trial].rounds) + "," +
                                   (outcomes[trial].terminated ? "1" : "0") + "," +
                                   std::to_string(outcomes[trial].winner));
                run.out.emit_csv("k,I,trial,rounds,terminated,winner", rows);
            } else {
                run.out.emit_json(run.envelope(
                    "monopoly sim",
                    json{{"k", mono_k},
                         {"I", mono_capital},
                         {"trials", mono_trials},
                         {"max_rounds", cap}},
                    json{{"k", mono_k},
                         {"I", mono_capital},
                         {"trials", mono_trials},
                         {"terminated", batch.terminated},
                         {"not_terminated", batch.not_terminated},
                         {"rounds",
                          batch.terminated > 0 ? summary_json(batch.rounds) : json(nullptr)}}));
            }
        } else if (sBench->parsed()) {
            std::vector<sortbench::Algorithm> algs;
            for (const auto& name : sort_algorithms)
                algs.push_back(sortbench::algorithm_from_name(name));
            const auto results = sortbench::sort_bench(sort_n, sort_trials, algs, run.seed);
            const double floor = core::log2_factorial(sort_n);
            if (csv) {
                std::vector<std::string> rows;
                for (const auto& bench : results) {
                    const std::string name = sortbench::algorithm_name(bench.algorithm);
                    for (std::size_t trial = 0; trial < bench.counts.size(); ++trial)
                        rows.push_back(name + "," + std::to_string(sort_n) + "," +
                                       std::to_string(trial) + "," +
                                       std::to_string(bench.counts[trial]) + "," +
                                       fmt_double(floor));
                    if (!sort_per_trial)
                        rows.push_back(name + "," + std::to_string(sort_n) + ",mean," +
                                       fmt_double(bench.comparisons.mean) + "," +
                                       fmt_double(floor));
                }
                run.out.emit_csv("algorithm,n,trial,comparisons,floor", rows);
            } else {
                json algos = json::array();
                for (const auto& bench : results)
                    algos.push_back(json{{"algorithm", sortbench::algorithm_name(bench.algorithm)},
                                         {"comparisons", summary_json(bench.comparisons)}});
                run.out.emit_json(run.envelope("sort bench",
                                               json{{"n", sort_n},
                                                    {"trials", sort_trials},
                                                    {"algorithms", sort_algorithms},
                                                    {"per_trial", sort_per_trial}},
                                               json{{"n", sort_n},
                                                    {"trials", sort_trials},
                                                    {"log2_factorial", floor},
                                                    {"algorithms", std::move(algos)}}));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
