// covsys: exact covering systems of the integers — verification, reduction,
// irreducibility and naturality testing, generation, enumeration, and
// vanishing sums of roots of unity.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covsys/cyclotomic.hpp"
#include "covsys/ecs.hpp"
#include "covsys/error.hpp"
#include "covsys/io.hpp"
#include "covsys/reduction.hpp"

namespace {

using covsys::i64;
using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw covsys::Error(covsys::ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw covsys::Error(covsys::ErrorCode::ParseError, "cannot write " + path);
    out << contents;
}

json classes_json(const covsys::Ecs& system) {
    json arr = json::array();
    for (const auto& c : system.classes()) arr.push_back({c.residue(), c.modulus()});
    return arr;
}

void print_system(const covsys::Ecs& system, const std::string& format) {
    if (format == "json")
        std::cout << covsys::format_ecs_json(system) << "\n";
    else
        std::cout << covsys::format_ecs_text(system);
}

void print_trace_text(const covsys::ReductionTrace& trace) {
    for (const auto& step : trace.steps) {
        std::cout << "  split " << step.parent.residue() << "(" << step.parent.modulus()
                  << ") into " << step.prime << " parts\n";
    }
}

int run_verify(const std::string& path, i64 scan_limit, const std::string& format) {
    covsys::Ecs system = covsys::parse_ecs_auto(read_input(path));
    std::optional<covsys::CoverReport> scan;
    std::optional<bool> genfun;
    try {
        scan = covsys::verify_scan(system, scan_limit);
        genfun = covsys::verify_genfun(system, scan_limit);
    } catch (const covsys::Error& e) {
        if (e.code() != covsys::ErrorCode::ScanLimitExceeded) throw;
    }
    bool crt = covsys::verify_crt(system);
    covsys::CoverReport report = scan ? *scan : covsys::stats(system);
    bool exact = scan ? *report.is_exact : crt;

    if (format == "json") {
        json out{{"exact", exact},
                 {"lcm", report.lcm.to_string()},
                 {"density", report.density.to_string()},
                 {"classes", system.size()},
                 {"greatest_modulus_count", report.greatest_modulus_count},
                 {"maximal_moduli", report.maximal_moduli},
                 {"verifiers", json{{"crt", crt}}}};
        if (scan) {
            out["verifiers"]["scan"] = *report.is_exact;
            out["verifiers"]["genfun"] = *genfun;
            out["uncovered_count"] = report.uncovered.size();
            out["multiply_covered_count"] = report.multiply_covered.size();
        } else {
            out["note"] = "period exceeds scan limit; CRT verifier only";
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (exact ? "exact" : "not exact") << ", N=" << report.lcm.to_string()
                  << ", density=" << report.density.to_string() << "\n";
        std::cout << "classes: " << system.size() << ", greatest modulus x"
                  << report.greatest_modulus_count << ", maximal moduli:";
        for (i64 m : report.maximal_moduli) std::cout << " " << m;
        std::cout << "\n";
        if (scan && !exact) {
            std::cout << "uncovered: " << report.uncovered.size()
                      << ", multiply covered: " << report.multiply_covered.size() << "\n";
        }
        if (!scan)
            std::cout << "note: period exceeds scan limit; CRT verifier only\n";
    }
    return exact ? kExitHolds : kExitFails;
}

int run_reduce(const std::string& path, const std::string& trace_path,
               const std::string& format) {
    covsys::Ecs system = covsys::parse_ecs_auto(read_input(path));
    if (!covsys::verify_crt(system))
        throw covsys::Error(covsys::ErrorCode::NotExact, "input system is not exact");
    covsys::ReductionTrace trace;
    try {
        trace = covsys::reduce_to_trivial(system);
    } catch (const covsys::Error& e) {
        if (e.code() == covsys::ErrorCode::NoEligibleMaximalModulus) {
            std::cerr << "reduction stuck: " << e.what() << "\n";
            return kExitFails;
        }
        throw;
    }
    if (!trace_path.empty()) write_file(trace_path, covsys::format_trace_json(trace) + "\n");
    if (format == "json") {
        std::cout << covsys::format_trace_json(trace) << "\n";
    } else {
        std::cout << "reduced to trivial in " << trace.steps.size() << " steps\n";
        print_trace_text(trace);
    }
    return kExitHolds;
}

int run_irreducible(const std::string& path, const std::string& format) {
    covsys::Ecs system = covsys::parse_ecs_auto(read_input(path));
    bool irreducible = covsys::is_irreducible(system);
    if (format == "json") {
        json out{{"irreducible", irreducible}};
        if (!irreducible && !system.is_trivial()) {
            auto candidates = covsys::merge_candidates(system);
            json arr = json::array();
            for (const auto& c : candidates)
                arr.push_back({{"modulus", c.modulus}, {"prime", c.prime}, {"shift", c.shift}});
            out["merge_candidates"] = arr;
        }
        std::cout << out.dump() << "\n";
    } else if (irreducible) {
        std::cout << "irreducible\n";
    } else if (system.is_trivial()) {
        std::cout << "reducible: trivial system\n";
    } else {
        auto candidates = covsys::merge_candidates(system);
        std::cout << "reducible: " << candidates.size() << " merge candidates, first (n="
                  << candidates[0].modulus << ", p=" << candidates[0].prime
                  << ", d=" << candidates[0].shift << ")\n";
    }
    return irreducible ? kExitHolds : kExitFails;
}

int run_natural(const std::string& path, const std::string& trace_path,
                const std::string& format) {
    covsys::Ecs system = covsys::parse_ecs_auto(read_input(path));
    covsys::NaturalResult result = covsys::is_natural(system);
    if (result.natural && !trace_path.empty())
        write_file(trace_path, covsys::format_trace_json(*result.trace) + "\n");
    if (format == "json") {
        json out{{"natural", result.natural}};
        if (result.natural) out["steps"] = result.trace->steps.size();
        std::cout << out.dump() << "\n";
    } else if (result.natural) {
        std::cout << "natural, " << result.trace->steps.size() << " splits\n";
        print_trace_text(*result.trace);
    } else {
        std::cout << "not natural\n";
    }
    return result.natural ? kExitHolds : kExitFails;
}

int run_split(const std::string& path, const std::vector<i64>& target, i64 parts,
              const std::string& format) {
    covsys::Ecs system = covsys::parse_ecs_auto(read_input(path));
    covsys::Ecs result =
        covsys::split(system, covsys::ResidueClass(target[0], target[1]), parts);
    print_system(result, format);
    return kExitHolds;
}

int run_merge(const std::string& path, i64 modulus, i64 prime, i64 shift,
              const std::string& format) {
    covsys::Ecs system = covsys::parse_ecs_auto(read_input(path));
    covsys::Ecs result = covsys::merge(system, covsys::MergeCandidate{modulus, prime, shift});
    print_system(result, format);
    return kExitHolds;
}

int run_gen(std::uint64_t seed, i64 steps, const std::vector<i64>& primes,
            std::optional<i64> lcm_cap, const std::string& trace_path,
            const std::string& format) {
    covsys::GeneratedEcs generated = covsys::generate_natural(seed, steps, primes, lcm_cap);
    if (!trace_path.empty())
        write_file(trace_path, covsys::format_trace_json(generated.trace) + "\n");
    print_system(generated.system, format);
    return kExitHolds;
}

int run_enumerate(i64 period, const std::string& format) {
    auto systems = covsys::enumerate_ecs(period, std::max(period, covsys::kDefaultEnumerationLimit));
    if (format == "json") {
        json arr = json::array();
        for (const auto& s : systems) arr.push_back({{"classes", classes_json(s)}});
        std::cout << json{{"count", systems.size()}, {"systems", arr}}.dump() << "\n";
    } else {
        for (const auto& s : systems) {
            bool first = true;
            for (const auto& c : s.classes()) {
                if (!first) std::cout << " ";
                std::cout << c.residue() << "(" << c.modulus() << ")";
                first = false;
            }
            std::cout << "\n";
        }
        std::cout << "total " << systems.size() << "\n";
    }
    return kExitHolds;
}

int run_vanish(i64 modulus, const std::vector<i64>& exponents, bool with_decomposition,
               const std::string& format) {
    covsys::CycVector v = covsys::from_exponents(modulus, exponents);
    bool zero = covsys::vanishes(v);
    std::optional<std::vector<covsys::CosetTerm>> terms;
    std::string decompose_note;
    if (zero && with_decomposition) {
        try {
            terms = covsys::decompose(v);
        } catch (const covsys::Error& e) {
            decompose_note = e.what();
        }
    }
    if (format == "json") {
        json out{{"vanishes", zero}};
        if (terms) {
            json arr = json::array();
            for (const auto& t : *terms)
                arr.push_back({{"prime", t.prime}, {"shift", t.shift}});
            out["decomposition"] = arr;
        } else if (!decompose_note.empty()) {
            out["decomposition_error"] = decompose_note;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (zero ? "vanishes" : "does not vanish") << "\n";
        if (terms) {
            for (const auto& t : *terms)
                std::cout << "  coset: prime " << t.prime << ", shift " << t.shift << "\n";
        } else if (!decompose_note.empty()) {
            std::cout << "  no decomposition: " << decompose_note << "\n";
        }
    }
    return zero ? kExitHolds : kExitFails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact covering systems toolkit"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string format = "text";
    std::string trace_path;
    i64 scan_limit = covsys::kDefaultScanLimit;
    std::uint64_t seed = 0;
    i64 steps = 0;
    std::vector<i64> primes;
    i64 lcm_value = 0;
    std::vector<i64> target;
    i64 parts = 2;
    i64 modulus = 0;
    i64 prime = 0;
    i64 shift = 0;
    std::vector<i64> exponents;
    bool with_decomposition = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input system (text or JSON, '-' for stdin)");
    };

    CLI::App* verify = app.add_subcommand("verify", "check exactness, report N and density");
    add_file(verify);
    add_format(verify);
    verify->add_option("--scan-limit", scan_limit, "largest period the scan verifier accepts");

    CLI::App* reduce = app.add_subcommand("reduce", "merge step by step down to 0(1)");
    add_file(reduce);
    add_format(reduce);
    reduce->add_option("--trace", trace_path, "write the split trace as JSON");

    CLI::App* irreducible =
        app.add_subcommand("irreducible", "test whether no coarser system exists");
    add_file(irreducible);
    add_format(irreducible);

    CLI::App* natural =
        app.add_subcommand("natural", "test whether iterated splitting reaches the system");
    add_file(natural);
    add_format(natural);
    natural->add_option("--trace", trace_path, "write the witnessing trace as JSON");

    CLI::App* split_cmd = app.add_subcommand("split", "split one class into equal parts");
    add_file(split_cmd);
    add_format(split_cmd);
    split_cmd->add_option("--target", target, "class to split: residue modulus")
        ->expected(2)
        ->required();
    split_cmd->add_option("--parts", parts, "number of parts (>= 2)")->required();

    CLI::App* merge_cmd = app.add_subcommand("merge", "consolidate a full prime-order coset");
    add_file(merge_cmd);
    add_format(merge_cmd);
    merge_cmd->add_option("--modulus", modulus, "modulus of the coset classes")->required();
    merge_cmd->add_option("--prime", prime, "coset size (prime divisor of modulus)")->required();
    merge_cmd->add_option("--shift", shift, "coset shift d in [0, modulus/prime)")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate a natural system by random splits");
    add_format(gen);
    gen->add_option("--seed", seed, "PRNG seed (splitmix64)");
    gen->add_option("--steps", steps, "number of splits")->required();
    gen->add_option("--primes", primes, "prime pool, comma separated")
        ->delimiter(',')
        ->required();
    CLI::Option* lcm_opt = gen->add_option("--lcm", lcm_value, "keep N(A) at or below this cap");
    gen->add_option("--trace", trace_path, "write the split trace as JSON");

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "list all exact systems with moduli dividing N");
    add_format(enumerate);
    enumerate->add_option("--lcm", lcm_value, "period N (moduli divide N)")->required();

    CLI::App* vanish = app.add_subcommand("vanish", "test a sum of roots of unity for zero");
    add_format(vanish);
    vanish->add_option("--modulus", modulus, "root-of-unity order")->required();
    vanish->add_option("--exponents", exponents, "exponent list, comma separated")
        ->delimiter(',')
        ->required();
    vanish->add_flag("--decompose", with_decomposition, "also split into prime-order cosets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(file, scan_limit, format);
        if (reduce->parsed()) return run_reduce(file, trace_path, format);
        if (irreducible->parsed()) return run_irreducible(file, format);
        if (natural->parsed()) return run_natural(file, trace_path, format);
        if (split_cmd->parsed()) return run_split(file, target, parts, format);
        if (merge_cmd->parsed()) return run_merge(file, modulus, prime, shift, format);
        if (gen->parsed())
            return run_gen(seed, steps, primes,
                           lcm_opt->count() ? std::optional<i64>(lcm_value) : std::nullopt,
                           trace_path, format);
        if (enumerate->parsed()) return run_enumerate(lcm_value, format);
        if (vanish->parsed()) return run_vanish(modulus, exponents, with_decomposition, format);
    } catch (const covsys::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
