#include "syzkit/classify.hpp"

namespace syzkit {

ClassificationReport classify(const PolyMatrix& A, const ClassifyOptions& opts) {
    ClassificationReport rep;
    rep.row_homogeneity = is_row_homogeneous(A);
    rep.column_homogeneous = is_row_homogeneous(A.transpose()).row_homogeneous;
    rep.homogeneity_ambiguous = rep.row_homogeneity.row_homogeneous != rep.column_homogeneous;

    rep.fitting = fitting_ideals(A);
    rep.generic_rank = rep.fitting.generic_rank;

    if (rep.row_homogeneity.row_homogeneous) {
        rep.c_elliptic = is_c_elliptic(A);
        rep.c_constant_rank = is_c_constant_rank(A);
        rep.r_ellipticity = check_r_condition(A, RealCondition::ellipticity, opts.witnesses,
                                              opts.sample_count, opts.seed);
        rep.r_constant_rank = check_r_condition(A, RealCondition::constant_rank, opts.witnesses,
                                                opts.sample_count, opts.seed);
    }
    rep.controllability = classify_controllability(A);
    return rep;
}

}  // namespace syzkit
