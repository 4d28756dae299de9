#include "cubeprod/logio.hpp"

#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>

namespace cubeprod {

namespace {

std::vector<std::int64_t> parse_entries(const std::string& csv) {
    std::vector<std::int64_t> entries;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(std::stoll(item));
    return entries;
}

std::string triple_str(const TripleIndices& t) {
    return std::to_string(t.r) + "," + std::to_string(t.s) + "," + std::to_string(t.t);
}

TripleIndices parse_triple(const std::string& csv) {
    auto parts = parse_entries(csv);
    if (parts.size() != 3) throw std::invalid_argument("bad triple: " + csv);
    return {static_cast<int>(parts[0]), static_cast<int>(parts[1]), static_cast<int>(parts[2])};
}

}  // namespace

const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::RankZeroList: return "rank-zero-list";
        case CertificateKind::ThreeOnes: return "three-ones";
        case CertificateKind::BennettWindow: return "bennett-window";
        case CertificateKind::ModularSieve: return "modular-sieve";
        case CertificateKind::SpecialEquation: return "special-equation";
        case CertificateKind::EdgeCaseHTT: return "edge-case-htt";
        case CertificateKind::PairOfCubics: return "pair-of-cubics";
    }
    return "?";
}

std::optional<CertificateKind> certificate_kind_from_string(const std::string& s) {
    for (CertificateKind kind :
         {CertificateKind::RankZeroList, CertificateKind::ThreeOnes, CertificateKind::BennettWindow,
          CertificateKind::ModularSieve, CertificateKind::SpecialEquation,
          CertificateKind::EdgeCaseHTT, CertificateKind::PairOfCubics})
        if (s == to_string(kind)) return kind;
    return std::nullopt;
}

std::string RunManifest::make_id(const std::string& command,
                                 const std::map<std::string, std::string>& parameters) {
    std::string id = command;
    for (const auto& [key, value] : parameters) id += "|" + key + "=" + value;
    return id;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["manifest_id"] = manifest_id;
    j["command"] = command;
    j["parameters"] = parameters;
    j["version"] = version;
    j["node_count_convention"] = node_count_convention;
    j["started"] = started;
    j["finished"] = finished;
    nlohmann::json totals_json = nlohmann::json::object();
    for (const auto& [key, stats] : totals) {
        totals_json[key] = {{"incomplete_nodes", std::to_string(stats.incomplete_nodes)},
                            {"complete_vectors", std::to_string(stats.complete_vectors)},
                            {"survivors", std::to_string(stats.survivors)}};
    }
    j["totals"] = totals_json;
    return j;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["type"] = "certificate";
    j["kind"] = to_string(cert.kind);
    j["k"] = std::to_string(cert.k);
    j["i"] = std::to_string(cert.i);
    if (!cert.vector_entries.empty()) {
        CoefficientVector v = cert.vector();
        j["vector"] = v.entries_str();
    }
    if (cert.triple) j["triple"] = triple_str(*cert.triple);
    if (cert.second_triple) j["second_triple"] = triple_str(*cert.second_triple);
    if (cert.kind == CertificateKind::RankZeroList || cert.kind == CertificateKind::BennettWindow) {
        j["form"] = cert.form[0].get_str() + "," + cert.form[1].get_str() + "," + cert.form[2].get_str();
        j["selmer_invariant"] = cert.selmer_d.get_str();
    }
    if (cert.window_start >= 0) j["window_start"] = std::to_string(cert.window_start);
    if (cert.ones_index >= 0) j["ones_index"] = std::to_string(cert.ones_index);
    if (cert.modulus > 0) j["modulus"] = std::to_string(cert.modulus);
    if (!cert.derived_solutions.empty()) {
        std::string derived;
        for (const auto& [n, d] : cert.derived_solutions) {
            if (!derived.empty()) derived += ";";
            derived += std::to_string(n) + "," + std::to_string(d);
        }
        j["derived_solutions"] = derived;
    }
    if (cert.trusted) {
        j["trusted"] = "true";
        j["trusted_basis"] = cert.trusted_basis;
    }
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate cert;
    auto kind = certificate_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown certificate kind");
    cert.kind = *kind;
    cert.k = std::stoi(j.at("k").get<std::string>());
    cert.i = std::stoi(j.at("i").get<std::string>());
    if (j.contains("vector")) cert.vector_entries = parse_entries(j["vector"].get<std::string>());
    if (j.contains("triple")) cert.triple = parse_triple(j["triple"].get<std::string>());
    if (j.contains("second_triple"))
        cert.second_triple = parse_triple(j["second_triple"].get<std::string>());
    if (j.contains("form")) {
        auto parts = j["form"].get<std::string>();
        std::stringstream ss(parts);
        std::string item;
        for (int p = 0; p < 3 && std::getline(ss, item, ','); ++p) cert.form[p] = mpz_class(item);
    }
    if (j.contains("selmer_invariant"))
        cert.selmer_d = mpz_class(j["selmer_invariant"].get<std::string>());
    if (j.contains("window_start")) cert.window_start = std::stoi(j["window_start"].get<std::string>());
    if (j.contains("ones_index")) cert.ones_index = std::stoi(j["ones_index"].get<std::string>());
    if (j.contains("modulus")) cert.modulus = std::stol(j["modulus"].get<std::string>());
    if (j.contains("derived_solutions")) {
        std::stringstream ss(j["derived_solutions"].get<std::string>());
        std::string pair;
        while (std::getline(ss, pair, ';')) {
            auto parts = parse_entries(pair);
            if (parts.size() != 2) throw std::invalid_argument("bad derived solution: " + pair);
            cert.derived_solutions.emplace_back(parts[0], parts[1]);
        }
    }
    if (j.contains("trusted")) {
        cert.trusted = j["trusted"].get<std::string>() == "true";
        if (j.contains("trusted_basis")) cert.trusted_basis = j["trusted_basis"].get<std::string>();
    }
    return cert;
}

nlohmann::json solution_to_json(const SolutionRecord& rec) {
    nlohmann::json j;
    j["type"] = "solution";
    j["k"] = std::to_string(rec.k);
    j["i"] = std::to_string(rec.i);
    j["n"] = std::to_string(rec.n);
    j["d"] = std::to_string(rec.d);
    j["y"] = rec.y.get_str();
    j["vector"] = rec.vector.entries_str();
    return j;
}

nlohmann::json survivor_to_json(const CoefficientVector& v) {
    nlohmann::json j;
    j["type"] = "survivor";
    j["k"] = std::to_string(v.k);
    j["i"] = std::to_string(v.i);
    j["vector"] = v.entries_str();
    return j;
}

nlohmann::json stats_to_json(int k, int i, const EnumerationStats& stats) {
    nlohmann::json j;
    j["type"] = "stats";
    j["k"] = std::to_string(k);
    j["i"] = std::to_string(i);
    j["incomplete_nodes"] = std::to_string(stats.incomplete_nodes);
    j["complete_vectors"] = std::to_string(stats.complete_vectors);
    j["survivors"] = std::to_string(stats.survivors);
    return j;
}

CertificateLog::CertificateLog(std::ostream& out, const std::string& manifest_id) : out_(out) {
    nlohmann::json header;
    header["type"] = "header";
    header["manifest"] = manifest_id;
    out_ << header.dump() << "\n";
}

void CertificateLog::write(const nlohmann::json& record) { out_ << record.dump() << "\n"; }

RevalidationSummary revalidate_log(std::istream& in) {
    RevalidationSummary summary;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const std::exception& e) {
            summary.failures.push_back("line " + std::to_string(line_no) + ": parse error");
            continue;
        }
        const std::string type = j.value("type", "");
        try {
            if (type == "certificate") {
                ++summary.certificates;
                Certificate cert = certificate_from_json(j);
                if (!revalidate_certificate(cert))
                    summary.failures.push_back("line " + std::to_string(line_no) +
                                               ": certificate failed revalidation");
            } else if (type == "solution") {
                ++summary.solutions;
                SolutionRecord rec =
                    verify_solution(std::stoi(j.at("k").get<std::string>()),
                                    std::stoi(j.at("i").get<std::string>()),
                                    std::stoll(j.at("n").get<std::string>()),
                                    std::stoll(j.at("d").get<std::string>()));
                if (rec.y.get_str() != j.at("y").get<std::string>() ||
                    rec.vector.entries_str() != j.at("vector").get<std::string>())
                    summary.failures.push_back("line " + std::to_string(line_no) +
                                               ": solution record mismatch");
            } else {
                ++summary.other;
            }
        } catch (const std::exception& e) {
            summary.failures.push_back("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return summary;
}

std::string current_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

}  // namespace cubeprod
