#include "syzkit/decompose.hpp"

namespace syzkit {

std::vector<std::pair<std::string, bool>> DecompositionChecks::named() const {
    return {
        {"controllable_part_is_closure", controllable_part_is_closure},
        {"controllable_quotient_torsion_free", controllable_quotient_torsion_free},
        {"uncontrollable_quotient_torsion", uncontrollable_quotient_torsion},
        {"intersection_identity", intersection_identity},
        {"uncontrollable_kernel_trivial", uncontrollable_kernel_trivial},
        {"kernel_stability", kernel_stability},
    };
}

std::string to_string(Controllability c) {
    switch (c) {
        case Controllability::controllable: return "controllable";
        case Controllability::uncontrollable: return "uncontrollable";
        case Controllability::mixed: return "mixed";
    }
    return "?";
}

PolyMatrix controllable_part(const PolyMatrix& A) {
    SubmoduleGB closure = tf_closure(A);
    return PolyMatrix::from_rows(A.ring, A.cols, closure.gens);
}

namespace {

constexpr int kExponentCap = 64;

// im A^T + I^m R^k, presented by its reduced basis.
SubmoduleGB torsion_cover(const SubmoduleGB& image, const Ideal& I, int m, int k) {
    Ideal Im = ideal_power(I, m);
    std::vector<ModuleElement> gens = image.gens;
    for (const auto& f : Im.gens) {
        for (int i = 0; i < k; ++i) {
            ModuleElement e(image.ring, k);
            e.comps[i] = f.comps[0];
            gens.push_back(std::move(e));
        }
    }
    return buchberger(std::move(gens), k, image.ring);
}

struct InternalDecomposition {
    SubmoduleGB image, module_c, module_u;
    Ideal conductor;
    int exponent;
    bool intersection_ok;
};

InternalDecomposition build(const PolyMatrix& A) {
    const RingPtr& ring = A.ring;
    int k = A.cols;
    InternalDecomposition d{
        row_module(A), tf_closure(A), SubmoduleGB{}, Ideal{}, 0, false,
    };
    d.conductor = annihilator_quotient(d.module_c, d.image);
    if (is_unit_ideal(d.conductor)) {
        d.module_u = full_module(ring, k);
        d.exponent = 0;
        d.intersection_ok =
            module_equal(d.image, intersect_modules_via_syzygies(d.module_c, d.module_u));
        return d;
    }
    for (int m = 1; m <= kExponentCap; ++m) {
        SubmoduleGB candidate = torsion_cover(d.image, d.conductor, m, k);
        SubmoduleGB inter = intersect_modules_via_syzygies(d.module_c, candidate);
        if (module_equal(d.image, inter)) {
            d.module_u = std::move(candidate);
            d.exponent = m;
            d.intersection_ok = true;
            return d;
        }
    }
    throw std::runtime_error(
        "conductor exponent exceeded the safety cap; the stabilization index did not settle");
}

}  // namespace

UncontrollablePart uncontrollable_part(const PolyMatrix& A) {
    InternalDecomposition d = build(A);
    int k = A.cols;
    PolyMatrix a_u = is_unit_ideal(d.conductor) ? PolyMatrix::identity(A.ring, k)
                                                : PolyMatrix::from_rows(A.ring, k, d.module_u.gens);
    return {std::move(a_u), std::move(d.conductor), d.exponent};
}

DecompositionResult decompose(const PolyMatrix& A) {
    const RingPtr& ring = A.ring;
    int k = A.cols;
    InternalDecomposition d = build(A);

    PolyMatrix S = syzygy_matrix(A);
    PolyMatrix a_c = PolyMatrix::from_rows(ring, k, d.module_c.gens);
    PolyMatrix a_u = is_unit_ideal(d.conductor) ? PolyMatrix::identity(ring, k)
                                                : PolyMatrix::from_rows(ring, k, d.module_u.gens);

    DecompositionResult result{
        std::move(a_c), std::move(a_u), std::move(S), d.conductor, d.exponent, {},
        std::move(d.image), std::move(d.module_c), std::move(d.module_u),
    };

    DecompositionChecks& c = result.checks;
    c.controllable_part_is_closure = module_equal(row_module(result.a_c), result.module_c);
    c.controllable_quotient_torsion_free =
        module_equal(tf_closure(result.a_c), result.module_c);
    // torsion quotient iff the rows of A_u span generically, i.e. rank k
    c.uncontrollable_quotient_torsion = generic_rank(result.a_u) == k;
    c.intersection_identity = d.intersection_ok;
    c.uncontrollable_kernel_trivial = syzygy_matrix(result.a_u).cols == 0;
    c.kernel_stability =
        module_equal(column_module(result.syzygies), column_module(syzygy_matrix(result.a_c)));
    return result;
}

ControllabilityVerdict classify_controllability(const PolyMatrix& A) {
    ControllabilityVerdict v{Controllability::mixed, 0, false, false};
    v.generic_rank = generic_rank(A);
    PolyMatrix S = syzygy_matrix(A);
    v.syzygy_trivial = S.cols == 0;
    v.image_equals_closure = module_equal(row_module(A), tf_closure(A));
    if (v.syzygy_trivial)
        v.verdict = Controllability::uncontrollable;
    else if (v.image_equals_closure)
        v.verdict = Controllability::controllable;
    else
        v.verdict = Controllability::mixed;
    return v;
}

}  // namespace syzkit
