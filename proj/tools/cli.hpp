// symprod command-line front end. Exit codes: 0 success, 1 invariant
// violation, 2 input error, 3 undersampled loop.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symprod/symprod.hpp"

namespace symprod::cli {

enum ExitCode : int { kOk = 0, kInvariantViolation = 1, kInputError = 2, kUndersampled = 3 };

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("SYMPROD_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidInput(std::string("SYMPROD_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

/// "2..6" or "4".
inline std::pair<std::size_t, std::size_t> parse_n_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const std::size_t n = std::stoul(s);
            return {n, n};
        }
        return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InvalidInput("invalid n range '" + s + "' (expected N or LO..HI)");
    }
}

struct DistArgs {
    std::string a, b, file, engine;
    bool complex = false;
};

inline int cmd_dist(const DistArgs& args, std::ostream& out) {
    RealTuple ra, rb;
    ComplexTuple ca, cb;
    bool complex = args.complex;
    if (!args.file.empty()) {
        std::ifstream in(args.file);
        if (!in) throw InvalidInput("cannot open " + args.file);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("a") || !doc.contains("b") || !doc["a"].is_array() ||
            !doc["b"].is_array())
            throw InvalidInput("dist file must be an object with arrays \"a\" and \"b\"");
        auto read = [&](const nlohmann::json& arr, RealTuple& r, ComplexTuple& c) {
            const bool cx = !arr.empty() && arr.front().is_array();
            complex = complex || cx;
            std::vector<std::complex<double>> vals;
            for (const auto& v : arr) {
                if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
                    vals.emplace_back(v[0].get<double>(), v[1].get<double>());
                else if (v.is_number())
                    vals.emplace_back(v.get<double>(), 0.0);
                else
                    throw InvalidInput("tuple entries must be numbers or [re, im] pairs");
            }
            c = ComplexTuple(vals);
            std::vector<double> re;
            for (const auto& z : vals) re.push_back(z.real());
            r = RealTuple(std::move(re));
        };
        read(doc["a"], ra, ca);
        read(doc["b"], rb, cb);
    } else {
        if (args.a.empty() || args.b.empty()) throw InvalidInput("dist needs --a and --b, or --file");
        if (complex) {
            ca = io::parse_complex_list(args.a);
            cb = io::parse_complex_list(args.b);
        } else {
            ra = io::parse_real_list(args.a);
            rb = io::parse_real_list(args.b);
        }
    }

    Engine engine = complex ? Engine::assignment : Engine::sorted;
    if (!args.engine.empty()) engine = parse_engine(args.engine);
    if (complex && engine == Engine::sorted) throw InvalidInput("the sorted engine handles real tuples only");

    const Distance d = complex ? distance(ca, cb, engine) : distance(ra, rb, engine);
    out << "distance: " << io::format_human(d.value) << '\n'
        << "engine: " << engine_name(engine) << '\n'
        << "permutation: " << io::to_string(d.attaining_perm) << '\n';
    return kOk;
}

inline int cmd_canon(const std::string& a, double tol, std::ostream& out) {
    const RealTuple x = io::parse_real_list(a);
    const RealTuple c = canonicalize(x);
    out << "canonical: " << io::to_string(c) << '\n'
        << "input_class: " << to_string(boundary_class(x)) << '\n'
        << "blocks: [";
    const auto p = equality_partition(c, tol);
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        if (i) out << ", ";
        out << '[';
        for (std::size_t j = 0; j < p.blocks()[i].size(); ++j) out << (j ? ", " : "") << p.blocks()[i][j];
        out << ']';
    }
    out << "]\n";
    return kOk;
}

struct LiftArgs {
    std::string input, output, format = "auto";
};

inline int cmd_lift(const LiftArgs& args, std::ostream& out, std::ostream& err) {
    std::ifstream in(args.input);
    if (!in) throw InvalidInput("cannot open " + args.input);
    std::string format = args.format;
    if (format == "auto") format = args.input.ends_with(".csv") ? "csv" : "jsonl";
    io::FieldDocument doc;
    if (format == "csv") {
        doc = io::read_field_csv(in);
    } else if (format == "jsonl") {
        doc = io::read_field_jsonl(in);
    } else {
        throw InvalidInput("unknown format '" + format + "'");
    }
    if (doc.complex) {
        err << "error: complex tuples have no continuous ordered lift; run `symprod holonomy --input "
            << args.input << "` to inspect the loop instead\n";
        return kInputError;
    }

    const SampledField phi = doc.to_sampled_field();
    const LiftedField f = lift_field(phi);
    if (args.output.empty() || args.output == "-") {
        io::write_lifted_jsonl(out, f, doc.explicit_adjacency);
    } else {
        std::ofstream file(args.output, std::ios::binary);
        if (!file) throw InvalidInput("cannot write " + args.output);
        io::write_lifted_jsonl(file, f, doc.explicit_adjacency);
    }

    const ContinuityReport r = continuity_report(f, phi);
    err << "max_ratio: " << io::format_human(r.max_ratio) << '\n';
    if (r.worst_edge) err << "worst_edge: (" << r.worst_edge->first << ", " << r.worst_edge->second << ")\n";
    err << "edges: " << r.edges_checked << " (" << r.zero_distance_edges << " with zero distance)\n";
    if (r.zero_distance_violations > 0 || std::abs(r.max_ratio - 1.0) > 1e-6) {
        err << "error: lifted field is not an isometric copy of the input\n";
        return kInvariantViolation;
    }
    return kOk;
}

struct HolonomyArgs {
    std::size_t k = 2;
    std::size_t steps = 256;
    double radius = 1.0;
    std::string input;
};

inline int cmd_holonomy(const HolonomyArgs& args, std::ostream& out, std::ostream& err) {
    const bool from_file = !args.input.empty();
    try {
        std::optional<ComplexLoop> loop;
        if (from_file) {
            std::ifstream in(args.input);
            if (!in) throw InvalidInput("cannot open " + args.input);
            io::FieldDocument doc = io::read_field_jsonl(in, /*require_point=*/false);
            std::vector<ComplexTuple> samples = doc.complex_tuples;
            if (!doc.complex) {
                for (const auto& t : doc.real_tuples) {
                    std::vector<std::complex<double>> v(t.begin(), t.end());
                    samples.emplace_back(std::move(v));
                }
            }
            loop.emplace(std::move(samples));
        } else {
            loop = roots_loop_generator(args.k, args.steps, args.radius);
        }
        const Holonomy h = track_loop(*loop);
        out << "holonomy: " << describe_cycle_type(h.permutation) << '\n'
            << "permutation: " << h.permutation.cycle_notation() << '\n'
            << "total_cost: " << io::format_human(h.total_path_cost) << '\n'
            << "steps: " << h.steps << '\n';
        return kOk;
    } catch (const UndersampledLoop& e) {
        err << "error: " << e.what() << '\n';
        if (e.suggested_steps > 0) {
            err << (from_file ? "resample the loop with at least " : "try --steps ") << e.suggested_steps
                << (from_file ? " samples\n" : "\n");
        }
        return kUndersampled;
    }
}

struct LemmaArgs {
    std::string n = "2..6";
    std::size_t trials = 200;
    std::optional<std::uint64_t> seed;
    bool inject_fault = false;
};

inline int cmd_lemmas(const LemmaArgs& args, std::ostream& out) {
    LemmaOptions opt;
    std::tie(opt.n_min, opt.n_max) = parse_n_range(args.n);
    opt.trials = args.trials;
    opt.seed = args.seed ? *args.seed : default_seed();
    opt.inject_fault = args.inject_fault;
    const auto results = run_lemma_suite(opt);

    std::size_t failed = 0;
    out << std::left << std::setw(28) << "check" << std::right << std::setw(4) << "n" << std::setw(12)
        << "checks" << std::setw(12) << "violations" << "  result\n";
    for (const auto& r : results) {
        if (!r.passed()) ++failed;
        out << std::left << std::setw(28) << r.name << std::right << std::setw(4) << r.n << std::setw(12)
            << r.checks << std::setw(12) << r.violations << "  " << (r.passed() ? "pass" : "FAIL") << '\n';
    }
    out << "seed " << opt.seed << ": ";
    if (failed == 0) {
        out << "all " << results.size() << " checks passed\n";
        return kOk;
    }
    out << failed << " of " << results.size() << " checks failed\n";
    return kInvariantViolation;
}

struct BenchArgs {
    std::vector<std::size_t> n{2, 7, 500};
    std::size_t reps = 5;
    std::string engines = "sorted,assignment,brute";
    std::optional<std::uint64_t> seed;
};

/// Largest n the O(n^3) assignment engine is run at by the benchmark.
inline constexpr std::size_t kBenchAssignmentCap = 5000;

inline int cmd_bench(const BenchArgs& args, std::ostream& out) {
    std::vector<Engine> engines;
    for (auto name : io::split(args.engines, ',')) engines.push_back(parse_engine(name));
    if (args.reps == 0) throw InvalidInput("reps must be positive");
    random::Rng rng(args.seed ? *args.seed : default_seed());

    bool all_agree = true;
    out << std::left << std::setw(10) << "n" << std::setw(12) << "engine" << std::right << std::setw(14)
        << "median_ms" << std::setw(22) << "value" << "  check\n";
    for (std::size_t n : args.n) {
        if (n == 0) throw InvalidInput("n must be positive");
        const RealTuple y = random::real_tuple(rng, n);
        const RealTuple z = random::real_tuple(rng, n);
        std::vector<std::pair<Engine, double>> values;
        for (Engine e : engines) {
            if ((e == Engine::brute && n > kBruteForceCap) || (e == Engine::assignment && n > kBenchAssignmentCap)) {
                out << std::left << std::setw(10) << n << std::setw(12) << engine_name(e) << std::right
                    << std::setw(14) << "-" << std::setw(22) << "-" << "  skipped\n";
                continue;
            }
            std::vector<double> ms;
            double value = 0.0;
            for (std::size_t r = 0; r < args.reps; ++r) {
                const auto t0 = std::chrono::steady_clock::now();
                value = distance(y, z, e).value;
                const auto t1 = std::chrono::steady_clock::now();
                ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            }
            std::nth_element(ms.begin(), ms.begin() + static_cast<std::ptrdiff_t>(ms.size() / 2), ms.end());
            values.emplace_back(e, value);
            out << std::left << std::setw(10) << n << std::setw(12) << engine_name(e) << std::right
                << std::setw(14) << io::format_human(ms[ms.size() / 2]) << std::setw(22)
                << io::format_human(value) << '\n';
        }
        // Reference: brute force when it ran, otherwise the first engine.
        auto ref = std::find_if(values.begin(), values.end(), [](auto& v) { return v.first == Engine::brute; });
        if (ref == values.end()) ref = values.begin();
        if (values.size() > 1) {
            bool agree = true;
            for (const auto& [e, v] : values) {
                const double tol = n <= kBruteForceCap ? 1e-9 : 1e-9 * std::max(1.0, std::abs(ref->second));
                if (std::abs(v - ref->second) > tol) agree = false;
            }
            out << "n = " << n << ": engines " << (agree ? "agree" : "DISAGREE") << " (reference "
                << engine_name(ref->first) << ")\n";
            all_agree = all_agree && agree;
        }
    }
    return all_agree ? kOk : kInvariantViolation;
}

/// Entry point; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symprod: unordered tuples, the matching distance and the sorting selection"};
    app.name("symprod");
    app.require_subcommand(1);

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "Matching distance between two unordered tuples");
    dist_cmd->add_option("--a", dist.a, "First tuple, comma separated (re:im pairs with --complex)");
    dist_cmd->add_option("--b", dist.b, "Second tuple");
    dist_cmd->add_option("--file", dist.file, "JSON file {\"a\": [...], \"b\": [...]}");
    dist_cmd->add_option("--engine", dist.engine, "sorted | assignment | brute");
    dist_cmd->add_flag("--complex", dist.complex, "Parse --a/--b as complex");

    std::string canon_a;
    double canon_tol = 1e-9;
    auto* canon_cmd = app.add_subcommand("canon", "Sorted representative of an unordered tuple");
    canon_cmd->add_option("--a", canon_a, "Tuple, comma separated")->required();
    canon_cmd->add_option("--tol", canon_tol, "Tolerance for grouping equal components")->capture_default_str();

    LiftArgs lift;
    auto* lift_cmd = app.add_subcommand("lift", "Lift a sampled field to sorted tuples");
    lift_cmd->add_option("--input", lift.input, "Field file (.jsonl or .csv)")->required();
    lift_cmd->add_option("--output", lift.output, "Output JSON-lines path (default stdout)");
    lift_cmd->add_option("--format", lift.format, "auto | jsonl | csv")->capture_default_str();

    HolonomyArgs hol;
    auto* hol_cmd = app.add_subcommand("holonomy", "Track a loop of complex tuples and report the holonomy");
    hol_cmd->add_option("--k", hol.k, "Root order for the generated loop w^k = radius e^{i theta}")
        ->capture_default_str();
    hol_cmd->add_option("--steps", hol.steps, "Samples along the generated loop")->capture_default_str();
    hol_cmd->add_option("--radius", hol.radius, "Radius of the generated loop")->capture_default_str();
    hol_cmd->add_option("--input", hol.input, "Loop file (JSON-lines of tuples) instead of a generated loop");

    LemmaArgs lem;
    auto* lem_cmd = app.add_subcommand("lemmas", "Run the diagonal-set property suite");
    lem_cmd->add_option("--n", lem.n, "Tuple sizes, N or LO..HI (at most 7)")->capture_default_str();
    lem_cmd->add_option("--trials", lem.trials, "Random instances per check")->capture_default_str();
    lem_cmd->add_option("--seed", lem.seed, "RNG seed (default: $SYMPROD_SEED or 0)");
    lem_cmd->add_flag("--inject-fault", lem.inject_fault)->group("");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time the distance engines and cross-check them");
    bench_cmd->add_option("--n", bench.n, "Tuple sizes")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--reps", bench.reps, "Repetitions per engine")->capture_default_str();
    bench_cmd->add_option("--engines", bench.engines, "Comma separated engines")->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "RNG seed (default: $SYMPROD_SEED or 0)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*dist_cmd) return cmd_dist(dist, out);
        if (*canon_cmd) return cmd_canon(canon_a, canon_tol, out);
        if (*lift_cmd) return cmd_lift(lift, out, err);
        if (*hol_cmd) return cmd_holonomy(hol, out, err);
        if (*lem_cmd) return cmd_lemmas(lem, out);
        if (*bench_cmd) return cmd_bench(bench, out);
    } catch (const UndersampledLoop& e) {
        err << "error: " << e.what() << '\n';
        return kUndersampled;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace symprod::cli
