#pragma once

#include <optional>

#include "syzkit/decompose.hpp"
#include "syzkit/rank_analysis.hpp"

namespace syzkit {

// Everything the classify command reports about one operator.
struct ClassificationReport {
    RowHomogeneity row_homogeneity;
    bool column_homogeneous = false;
    bool homogeneity_ambiguous = false;  // row and column views disagree

    int generic_rank = 0;
    FittingData fitting;

    // absent when the operator is not row-homogeneous
    std::optional<ComplexVerdict> c_elliptic;
    std::optional<ComplexVerdict> c_constant_rank;
    std::optional<RealConditionResult> r_ellipticity;
    std::optional<RealConditionResult> r_constant_rank;

    ControllabilityVerdict controllability{Controllability::mixed};
};

struct ClassifyOptions {
    std::vector<std::vector<Rational>> witnesses;  // candidate refutation points
    int sample_count = 50;
    std::uint64_t seed = 1;
};

ClassificationReport classify(const PolyMatrix& A, const ClassifyOptions& opts = {});

}  // namespace syzkit
