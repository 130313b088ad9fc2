#pragma once

#include <string>
#include <utility>
#include <vector>

#include "syzkit/module_ops.hpp"
#include "syzkit/rank_analysis.hpp"

namespace syzkit {

// Named verification results; the construction re-proves its own
// postconditions on every run.
struct DecompositionChecks {
    bool controllable_part_is_closure = false;    // im A_c^T equals the torsion-free closure
    bool controllable_quotient_torsion_free = false;
    bool uncontrollable_quotient_torsion = false;
    bool intersection_identity = false;           // im A^T = im A_c^T cap im A_u^T
    bool uncontrollable_kernel_trivial = false;   // syzygy matrix of A_u is empty
    bool kernel_stability = false;                // ker_R A = ker_R A_c as modules

    bool all_pass() const {
        return controllable_part_is_closure && controllable_quotient_torsion_free &&
               uncontrollable_quotient_torsion && intersection_identity &&
               uncontrollable_kernel_trivial && kernel_stability;
    }
    std::vector<std::pair<std::string, bool>> named() const;
};

struct DecompositionResult {
    PolyMatrix a_c;
    PolyMatrix a_u;
    PolyMatrix syzygies;
    Ideal conductor;   // Ann(M_c / im A^T)
    int exponent = 0;  // least m with im A^T = M_c cap (im A^T + conductor^m R^k)
    DecompositionChecks checks;

    SubmoduleGB image;     // im A^T
    SubmoduleGB module_c;  // im A_c^T
    SubmoduleGB module_u;  // im A_u^T
};

enum class Controllability { controllable, uncontrollable, mixed };

struct ControllabilityVerdict {
    Controllability verdict;
    int generic_rank = 0;
    bool image_equals_closure = false;
    bool syzygy_trivial = false;
};

std::string to_string(Controllability c);

PolyMatrix controllable_part(const PolyMatrix& A);

struct UncontrollablePart {
    PolyMatrix a_u;
    Ideal conductor;
    int exponent = 0;
};
UncontrollablePart uncontrollable_part(const PolyMatrix& A);

DecompositionResult decompose(const PolyMatrix& A);

ControllabilityVerdict classify_controllability(const PolyMatrix& A);

}  // namespace syzkit
