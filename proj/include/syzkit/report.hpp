#pragma once

#include <json.hpp>

#include "syzkit/classify.hpp"
#include "syzkit/corpus.hpp"
#include "syzkit/io.hpp"

namespace syzkit {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "syzkit 1.0.0";
inline constexpr const char* kSchema = "syzkit/1";

// seed/samples resolution: explicit flag > input document field > default.
struct RunOptions {
    OrderKind order = OrderKind::grevlex;
    std::optional<std::uint64_t> seed;
    std::optional<int> sample_count;
    std::vector<std::vector<std::string>> extra_points;
    bool timings = false;

    std::uint64_t resolve_seed(const std::optional<std::uint64_t>& doc_seed) const {
        return seed ? *seed : doc_seed.value_or(1);
    }
    int resolve_samples(const std::optional<int>& doc_samples) const {
        return sample_count ? *sample_count : doc_samples.value_or(50);
    }
};

struct RunOutcome {
    ordered_json report;
    int exit_code = 0;  // 0 ok, 2 theorem-conformance failure
};

RunOutcome run_syzygy(const std::string& input_text, const RunOptions& opts);
RunOutcome run_classify(const std::string& input_text, const RunOptions& opts);
RunOutcome run_decompose(const std::string& input_text, const RunOptions& opts);
RunOutcome run_verify(const std::string& input_text, const RunOptions& opts);

ordered_json matrix_to_json(const PolyMatrix& m);
ordered_json point_to_json(const std::vector<GaussianRational>& pt);

}  // namespace syzkit
