#pragma once

#include "syzkit/gb.hpp"

namespace syzkit {

// M cap N, via the auxiliary-variable trick: eliminate t from t*M + (1-t)*N.
SubmoduleGB intersect_modules(const SubmoduleGB& M, const SubmoduleGB& N);

// Same module through the syzygies of the combined generator matrix; much
// faster on large inputs and cross-checked against the elimination route.
SubmoduleGB intersect_modules_via_syzygies(const SubmoduleGB& M, const SubmoduleGB& N);

// (M : v) = { r in R : r*v in M }.
Ideal colon_ideal(const SubmoduleGB& M, const ModuleElement& v);

// Ann(Mc/M); requires M subseteq Mc and fails fast otherwise.
Ideal annihilator_quotient(const SubmoduleGB& Mc, const SubmoduleGB& M);

struct Saturation {
    SubmoduleGB module;  // (M : g^infinity)
    int exponent;        // least m with (M : g^m) = (M : g^{m+1})
};
Saturation saturate(const SubmoduleGB& M, const Polynomial& g);

// Colon by a single polynomial, (M : g) = (1/g) * (M cap g*R^k).
SubmoduleGB colon_by_poly(const SubmoduleGB& M, const Polynomial& g);

// Decides equality by two independent routes (generator membership both ways,
// and identity of reduced bases) and insists they agree.
bool module_equal(const SubmoduleGB& M, const SubmoduleGB& N);

// Smallest M_c containing im A^T with torsion-free quotient, computed as the
// kernel of the transposed syzygy matrix.
SubmoduleGB tf_closure(const PolyMatrix& A);

Ideal multiply_ideals(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& I, int m);
Ideal intersect_ideals(const Ideal& a, const Ideal& b);
Ideal unit_ideal(RingPtr ring);

}  // namespace syzkit
