#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubeprod/certificate.hpp"
#include "cubeprod/pipeline.hpp"
#include "cubeprod/resolver.hpp"
#include "cubeprod/vector_enum.hpp"

namespace cubeprod {

/// Provenance of a run. Timestamps live only here, never in log records, so
/// reruns with identical parameters produce byte-identical logs.
struct RunManifest {
    std::string manifest_id;  // deterministic: derived from command + parameters
    std::string command;
    std::map<std::string, std::string> parameters;
    std::string version;
    std::string node_count_convention;
    std::string started, finished;  // ISO 8601
    std::map<std::string, EnumerationStats> totals;  // keyed "k,i"

    static std::string make_id(const std::string& command,
                               const std::map<std::string, std::string>& parameters);
    nlohmann::json to_json() const;
};

// Log records: one flat JSON document per line; integers as decimal strings.
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json solution_to_json(const SolutionRecord& rec);
nlohmann::json survivor_to_json(const CoefficientVector& v);
nlohmann::json stats_to_json(int k, int i, const EnumerationStats& stats);

/// Streams records to an output file; the first line is a header referencing
/// the manifest.
class CertificateLog {
  public:
    explicit CertificateLog(std::ostream& out, const std::string& manifest_id);
    void write(const nlohmann::json& record);

  private:
    std::ostream& out_;
};

struct RevalidationSummary {
    std::size_t certificates = 0;
    std::size_t solutions = 0;
    std::size_t other = 0;
    std::vector<std::string> failures;  // one message per failed line
    bool ok() const { return failures.empty(); }
};

/// Re-checks every certificate and solution record in a log without
/// re-running the enumeration that produced it.
RevalidationSummary revalidate_log(std::istream& in);

std::string current_timestamp();

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cubeprod
