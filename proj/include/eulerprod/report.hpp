#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace eulerprod {

inline constexpr const char *kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
    long bound = 12;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    long cyclotomic_scan_bound = 12;
};

struct EvalOptions {
    long bound = 12;
    double delta = 0; // 0 keeps the delta computed from the point
    int zero_count = 10;
    long direct_cutoff = 0; // when positive, also run the direct product with this prime cutoff
    std::string zero_cache;
    unsigned threads = 1;
};

struct ZerosOptions {
    long face = 0; // 1-based column index, 0 picks the first usable face
    double u = 1, eta = 1, eps = 0, re_max = 1;
    long pmax = 10000;
    std::uint64_t seed = 0;
    long bound = 12;
    int zero_count = 10;
    double tolerance = 1e-4;
    std::vector<double> ladder{0.2, 0.1, 0.05, 0.02, 0.01};
    std::string zero_cache;
    unsigned threads = 1;
};

Json cmd_analyze(const std::string &input, const AnalyzeOptions &opt);
Json cmd_gamma(const std::string &input, long bound, unsigned threads);
std::string gamma_csv(const Json &gamma_report);
// `point` is a JSON array whose entries are numbers, [re, im] pairs or {"re", "im"} objects.
Json cmd_eval(const std::string &input, const std::string &point, const EvalOptions &opt);

struct ZerosOutput {
    std::string csv;
    Json summary;
};

ZerosOutput cmd_zeros(const std::string &input, const ZerosOptions &opt);
Json cmd_toric(int n, unsigned threads);

// Structural check of a report against the published schema for `command`;
// throws an internal error when it does not conform.
void validate_report(const std::string &command, const Json &report);
Json report_schema(const std::string &command);

} // namespace eulerprod
