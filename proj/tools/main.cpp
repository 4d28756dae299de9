#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "cubeprod/local_sieve.hpp"
#include "cubeprod/logio.hpp"
#include "cubeprod/oracle.hpp"
#include "cubeprod/pipeline.hpp"
#include "cubeprod/ternary_cubic.hpp"

namespace {

using namespace cubeprod;

constexpr int kExitOk = 0;
constexpr int kExitMathMismatch = 1;
constexpr int kExitUsage = 2;

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("CUBEPROD_OUT_DIR");
    if (!dir || !*dir) return path;
    return std::string(dir) + "/" + path;
}

struct LogSink {
    std::ofstream file;
    std::optional<CertificateLog> log;
    RunManifest manifest;

    // Returns false when the output file cannot be opened.
    bool open(const std::string& out, const std::string& command,
              const std::map<std::string, std::string>& parameters) {
        manifest.command = command;
        manifest.parameters = parameters;
        manifest.manifest_id = RunManifest::make_id(command, parameters);
        manifest.version = kVersion;
        manifest.node_count_convention = kNodeCountConvention;
        manifest.started = current_timestamp();
        if (out.empty()) return true;
        const std::string path = resolve_out_path(out);
        file.open(path);
        if (!file) {
            std::cerr << "cannot open output file: " << path << "\n";
            return false;
        }
        log.emplace(file, manifest.manifest_id);
        return true;
    }

    void write(const nlohmann::json& record) {
        if (log) log->write(record);
    }

    void finish(const std::string& out) {
        manifest.finished = current_timestamp();
        if (out.empty()) return;
        const std::string path = resolve_out_path(out) + ".manifest.json";
        std::ofstream mf(path);
        mf << manifest.to_json().dump(2) << "\n";
    }
};

std::optional<std::vector<FilterKind>> parse_filters(const std::string& spec) {
    std::vector<FilterKind> filters;
    std::stringstream ss(spec);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto kind = filter_kind_from_string(name);
        if (!kind) {
            std::cerr << "unknown filter: " << name << "\n";
            return std::nullopt;
        }
        filters.push_back(*kind);
    }
    return filters;
}

void print_survivor_table(const std::vector<CoefficientVector>& survivors) {
    if (survivors.empty()) {
        std::printf("  (no survivors)\n");
        return;
    }
    size_t width = 0;
    for (const auto& v : survivors) width = std::max(width, v.entries_str().size());
    for (const auto& v : survivors)
        std::printf("  | %-*s |\n", static_cast<int>(width), v.entries_str().c_str());
}

int cmd_enumerate(int k, int i, const std::string& filter_spec, const std::string& out, int threads) {
    auto filters = parse_filters(filter_spec);
    if (!filters) return kExitUsage;

    LogSink sink;
    if (!sink.open(out, "enumerate",
                   {{"k", std::to_string(k)}, {"i", std::to_string(i)}, {"filters", filter_spec}}))
        return kExitUsage;
    sink.manifest.parameters["threads"] = std::to_string(threads);  // metadata, not part of the id

    FilterRunResult result = run_filters(
        k, i, *filters, threads, [&](const CoefficientVector& v, const Certificate* cert) {
            sink.write(cert ? certificate_to_json(*cert) : survivor_to_json(v));
        });
    sink.write(stats_to_json(k, i, result.stats));
    sink.manifest.totals[std::to_string(k) + "," + std::to_string(i)] = result.stats;
    sink.finish(out);

    std::printf("enumerate k=%d i=%d filters=%s\n", k, i, filter_spec.c_str());
    std::printf("  incomplete nodes : %llu\n",
                static_cast<unsigned long long>(result.stats.incomplete_nodes));
    std::printf("  complete vectors : %llu\n",
                static_cast<unsigned long long>(result.stats.complete_vectors));
    for (const auto& [kind, count] : result.eliminated_counts)
        std::printf("  eliminated by %-10s : %llu\n", to_string(kind),
                    static_cast<unsigned long long>(count));
    std::printf("  survivors        : %llu\n",
                static_cast<unsigned long long>(result.stats.survivors));
    print_survivor_table(result.survivors);
    return kExitOk;
}

int cmd_verify_theorem(int threads, int max_k, const std::string& out) {
    LogSink sink;
    if (!sink.open(out, "verify-theorem", {{"max_k", std::to_string(max_k)}})) return kExitUsage;
    sink.manifest.parameters["threads"] = std::to_string(threads);

    TheoremDerivation derivation;
    try {
        derivation = derive_theorem(threads, max_k);
    } catch (const std::exception& e) {
        std::cerr << "derivation failed: " << e.what() << "\n";
        return kExitMathMismatch;
    }

    for (const auto& report : derivation.cases) {
        const std::string key = std::to_string(report.k) + "," + std::to_string(report.i);
        sink.manifest.totals[key] = report.stats;
        if (!report.edge_case) sink.write(stats_to_json(report.k, report.i, report.stats));
        for (const auto& cert : report.certificates) sink.write(certificate_to_json(cert));
        for (const auto& rec : report.records) sink.write(solution_to_json(rec));
        std::printf("k=%2d i=%2d  %s  solutions: %zu\n", report.k, report.i,
                    report.edge_case ? "edge " : "inner", report.records.size());
    }
    sink.finish(out);

    // Diff against the frozen table restricted to k <= max_k.
    std::vector<SolutionRecord> expected;
    for (const auto& rec : theorem_table())
        if (rec.k <= max_k) expected.push_back(rec);
    std::sort(expected.begin(), expected.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
        return std::tie(a.k, a.i, a.n, a.d) < std::tie(b.k, b.i, b.n, b.d);
    });
    bool match = derivation.all_records.size() == expected.size();
    if (match)
        for (size_t idx = 0; idx < expected.size(); ++idx)
            if (!derivation.all_records[idx].same_tuple(expected[idx]) ||
                derivation.all_records[idx].y != expected[idx].y)
                match = false;
    std::printf("%zu/%zu solutions reproduced\n", derivation.all_records.size(), expected.size());
    if (!match) {
        std::printf("MISMATCH against the frozen solution table\n");
        return kExitMathMismatch;
    }
    return kExitOk;
}

int cmd_identities() {
    IdentityReport report = run_identity_suite();
    for (const auto& entry : report.entries)
        std::printf("[%s] %s = %s\n", entry.ok ? "PASS" : "FAIL", entry.name.c_str(),
                    entry.value.c_str());
    return report.all_ok ? kExitOk : kExitMathMismatch;
}

int cmd_search(bool window, bool all_windows, bool pair_cubics, bool cubic_field, bool corollary,
               int k, int i, std::int64_t n_min, std::int64_t n_max, std::int64_t d_max,
               std::int64_t height, int threads, const std::string& out) {
    const int modes = static_cast<int>(window) + static_cast<int>(all_windows) +
                      static_cast<int>(pair_cubics) + static_cast<int>(cubic_field) +
                      static_cast<int>(corollary);
    if (modes != 1) {
        std::cerr << "search: choose exactly one of --window, --all-windows, --pair-cubics, "
                     "--cubic-field, --corollary\n";
        return kExitUsage;
    }

    if (window || all_windows) {
        std::map<std::string, std::string> params = {{"n_min", std::to_string(n_min)},
                                                     {"n_max", std::to_string(n_max)},
                                                     {"d_max", std::to_string(d_max)}};
        if (window) {
            params["k"] = std::to_string(k);
            params["i"] = std::to_string(i);
        }
        LogSink sink;
        if (!sink.open(out, window ? "search-window" : "search-all-windows", params))
            return kExitUsage;
        std::vector<SolutionRecord> hits;
        try {
            hits = window ? search_window({n_min, n_max, d_max, k, i})
                          : search_all_windows(n_min, n_max, d_max, threads);
        } catch (const std::exception& e) {
            std::cerr << "search failed: " << e.what() << "\n";
            return kExitUsage;
        }
        for (const auto& rec : hits) {
            sink.write(solution_to_json(rec));
            std::printf("(k,i,n,d) = (%d,%d,%lld,%lld)  y = %s\n", rec.k, rec.i,
                        static_cast<long long>(rec.n), static_cast<long long>(rec.d),
                        rec.y.get_str().c_str());
        }
        sink.finish(out);
        std::printf("%zu solutions in window\n", hits.size());
        return kExitOk;
    }

    if (pair_cubics) {
        auto hits = search_pair_cubics(height);
        for (const auto& q : hits)
            std::printf("(x,y,z,w) = (%lld,%lld,%lld,%lld)\n", static_cast<long long>(q.x),
                        static_cast<long long>(q.y), static_cast<long long>(q.z),
                        static_cast<long long>(q.w));
        std::printf("%zu solutions of the pair of cubics up to height %lld\n", hits.size(),
                    static_cast<long long>(height));
        return kExitOk;
    }

    if (cubic_field) {
        auto hits = search_cubic_field_relation(height);
        for (const auto& rel : hits)
            std::printf("(x,y) = (%lld,%lld)  u = %s\n", static_cast<long long>(rel.x),
                        static_cast<long long>(rel.y), rel.u.str().c_str());
        std::printf("%zu solutions of the cubic field relation up to height %lld\n", hits.size(),
                    static_cast<long long>(height));
        return kExitOk;
    }

    auto points = corollary_points(height);
    for (const auto& p : points)
        std::printf("(x,y) = (%s, %s)\n", p.x.get_str().c_str(), p.y.get_str().c_str());
    std::printf("%zu rational points up to height %lld\n", points.size(),
                static_cast<long long>(height));
    return kExitOk;
}

int cmd_revalidate(const std::string& in) {
    std::ifstream file(resolve_out_path(in));
    if (!file) {
        std::cerr << "cannot open input file: " << in << "\n";
        return kExitUsage;
    }
    RevalidationSummary summary = revalidate_log(file);
    std::printf("certificates: %zu  solutions: %zu  other records: %zu\n", summary.certificates,
                summary.solutions, summary.other);
    for (const auto& failure : summary.failures) std::printf("FAIL %s\n", failure.c_str());
    std::printf("%s\n", summary.ok() ? "all records revalidated" : "revalidation FAILED");
    return summary.ok() ? kExitOk : kExitMathMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Products of arithmetic progressions with one term removed: cube certificates"};
    app.require_subcommand(1);

    int k = 5, i = 1, threads = 1, max_k = 11;
    std::string filter_spec = "rank-zero", out, in;
    std::int64_t n_min = -100, n_max = 100, d_max = 20, height = 100;
    bool window = false, all_windows = false, pair_cubics = false, cubic_field = false,
         corollary = false;

    auto* enumerate = app.add_subcommand("enumerate", "enumerate and filter coefficient vectors");
    enumerate->add_option("--k", k, "progression length")->required()->check(CLI::Range(5, 11));
    enumerate->add_option("--i", i, "removed index")->required();
    enumerate->add_option("--filters", filter_spec,
                          "comma list of rank-zero,three-ones,bennett,sieve");
    enumerate->add_option("--out", out, "certificate log file");
    enumerate->add_option("--threads", threads, "worker count (output independent of it)");

    auto* verify = app.add_subcommand("verify-theorem", "re-derive all solutions end to end");
    verify->add_option("--threads", threads, "worker count");
    verify->add_option("--max-k", max_k, "largest k to process")->check(CLI::Range(5, 11));
    verify->add_option("--out", out, "certificate log file");

    app.add_subcommand("identities", "run the exact identity suite");

    auto* search = app.add_subcommand("search", "brute-force oracle searches");
    search->add_flag("--window", window, "one (k,i) window");
    search->add_flag("--all-windows", all_windows, "every (k,i), 5 <= k <= 11");
    search->add_flag("--pair-cubics", pair_cubics, "x^3+y^3=9z^3, 5x^3-y^3=3w^3");
    search->add_flag("--cubic-field", cubic_field, "(a x - y)(x^2-xy+y^2) = 3(2-a)u^3");
    search->add_flag("--corollary", corollary, "rational points on the degree-6 curve");
    search->add_option("--k", k, "progression length")->check(CLI::Range(5, 11));
    search->add_option("--i", i, "removed index");
    search->add_option("--n-min", n_min, "window lower bound");
    search->add_option("--n-max", n_max, "window upper bound");
    search->add_option("--d-max", d_max, "largest progression step");
    search->add_option("--height", height, "search height");
    search->add_option("--threads", threads, "worker count");
    search->add_option("--out", out, "solution log file");

    auto* revalidate = app.add_subcommand("revalidate", "re-check a certificate log");
    revalidate->add_option("--in", in, "certificate log file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("enumerate")) {
            if (i < 0 || i >= k) {
                std::cerr << "i must be in [0, k-1]\n";
                return kExitUsage;
            }
            return cmd_enumerate(k, i, filter_spec, out, threads);
        }
        if (app.got_subcommand("verify-theorem")) return cmd_verify_theorem(threads, max_k, out);
        if (app.got_subcommand("identities")) return cmd_identities();
        if (app.got_subcommand("search"))
            return cmd_search(window, all_windows, pair_cubics, cubic_field, corollary, k, i, n_min,
                              n_max, d_max, height, threads, out);
        if (app.got_subcommand("revalidate")) return cmd_revalidate(in);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathMismatch;
    }
    return kExitUsage;
}
