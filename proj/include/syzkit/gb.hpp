#pragma once

#include <vector>

#include "syzkit/module.hpp"

namespace syzkit {

struct BuchbergerOptions {
    bool product_criterion = true;  // only sound for ideals (rank 1); ignored otherwise
    bool chain_criterion = true;
};

// Reduced Groebner basis of a submodule of R^k under position-over-term with
// the ring's order breaking ties. Generators are content-normalized and
// sorted by leading term descending, so the representation is unique.
struct SubmoduleGB {
    RingPtr ring;
    int rank = 0;
    std::vector<ModuleElement> gens;
    bool reduced = true;

    bool is_zero_module() const { return gens.empty(); }
};

// An ideal is the rank-1 case.
using Ideal = SubmoduleGB;

SubmoduleGB buchberger(std::vector<ModuleElement> gens, int rank, RingPtr ring,
                       const BuchbergerOptions& opts = {});

// Remainder of the full division of v by gb; unique once gb is reduced.
ModuleElement normal_form(const ModuleElement& v, const SubmoduleGB& gb);

bool member(const ModuleElement& v, const SubmoduleGB& gb);

// S with A*S = 0 whose columns generate ker_R A (as syzygies of the columns
// of A). Zero kernels come back as a k x 0 matrix.
PolyMatrix syzygy_matrix(const PolyMatrix& A);

// GB of the module generated by the rows of A inside R^cols, i.e. im A^T.
SubmoduleGB row_module(const PolyMatrix& A);
SubmoduleGB column_module(const PolyMatrix& A);

// GB of all of R^k (the standard basis).
SubmoduleGB full_module(RingPtr ring, int rank);

Ideal ideal_from_polys(std::vector<Polynomial> gens, RingPtr ring);
bool is_unit_ideal(const Ideal& I);

}  // namespace syzkit
