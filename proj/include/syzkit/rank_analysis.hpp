#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syzkit/module_ops.hpp"

namespace syzkit {

// Deterministic PRNG used for all sampling, so reports are reproducible.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// Nonzero integer point in [-bound, bound]^n.
std::vector<Rational> sample_integer_point(SplitMix64& rng, int n, int bound = 101);

// --------------------------------------------------------------------------
// Exact linear algebra over Q(i)
// --------------------------------------------------------------------------

struct MatrixEvaluation {
    int rows = 0;
    int cols = 0;
    std::vector<GaussianRational> value;  // row-major A(xi)
    int rank = 0;
    std::vector<int> pivot_columns;
    // reduced echelon convention: one vector per free column, unit there
    std::vector<std::vector<GaussianRational>> kernel_basis;
    // columns of A(xi) at the pivot positions
    std::vector<std::vector<GaussianRational>> column_space_basis;

    const GaussianRational& at(int i, int j) const { return value[static_cast<std::size_t>(i) * cols + j]; }
};

MatrixEvaluation evaluate_matrix(const PolyMatrix& A, std::span<const GaussianRational> point);

// Rank + reduced row echelon data of an explicit Q(i) matrix.
MatrixEvaluation reduce_matrix(int rows, int cols, std::vector<GaussianRational> entries);

// --------------------------------------------------------------------------
// Generic rank and Fitting ideals
// --------------------------------------------------------------------------

int generic_rank(const PolyMatrix& A);

struct FittingData {
    int generic_rank = 0;
    // minor_ideals[j-1] = ideal of j x j minors, GB-reduced; j = 1..min(rows,cols)
    std::vector<Ideal> minor_ideals;
    // size of the minors generating the first nonzero Fitting ideal of the
    // cokernel presented by A^T; equals the generic rank
    int first_nonzero_size = 0;
};

FittingData fitting_ideals(const PolyMatrix& A);

// f in sqrt(I), decided by the extended-ring unit test 1 in I + (1 - t*f).
bool radical_membership(const Polynomial& f, const Ideal& I);

// Least e with f^e in I; only valid after radical_membership(f, I).
std::optional<int> radical_membership_exponent(const Polynomial& f, const Ideal& I, int cap = 64);

// --------------------------------------------------------------------------
// Homogeneity
// --------------------------------------------------------------------------

struct RowHomogeneity {
    bool row_homogeneous = false;
    std::vector<std::optional<int>> degrees;  // nullopt for zero rows
};

RowHomogeneity is_row_homogeneous(const PolyMatrix& A);

// --------------------------------------------------------------------------
// Ellipticity / constant rank over C (exact) and over R (semi-decision)
// --------------------------------------------------------------------------

struct RadicalWitness {
    std::string variable;
    int exponent;  // least e with variable^e in the tested minor ideal
};

struct ComplexVerdict {
    bool holds = false;
    std::vector<RadicalWitness> radical_witnesses;           // for "yes"
    std::optional<std::vector<GaussianRational>> witness;    // point certifying "no", when found
    std::string reason;
};

ComplexVerdict is_c_elliptic(const PolyMatrix& A);
ComplexVerdict is_c_constant_rank(const PolyMatrix& A);

enum class RealVerdict { refuted, certified_via_complex, inconclusive };
enum class RealCondition { ellipticity, constant_rank };

struct RealConditionResult {
    RealVerdict verdict;
    std::optional<std::vector<Rational>> witness;  // refuting real point
    int sample_count = 0;
};

RealConditionResult check_r_condition(const PolyMatrix& A, RealCondition kind,
                                      std::span<const std::vector<Rational>> witnesses,
                                      int sample_count, std::uint64_t seed);

// --------------------------------------------------------------------------
// Pointwise exactness and the wave cone
// --------------------------------------------------------------------------

enum class ExactnessRelation { equal, strict_superset };

struct EvalComparison {
    std::vector<GaussianRational> point;
    int rank_a = 0;
    int dim_ker_a = 0;
    int dim_im_s = 0;
    ExactnessRelation relation = ExactnessRelation::equal;
    bool conforms = false;  // relation matches what the rank of A(xi) dictates
};

EvalComparison pointwise_exactness(const PolyMatrix& A, const PolyMatrix& S,
                                   std::span<const GaussianRational> point,
                                   std::optional<int> known_generic_rank = std::nullopt);

// Reduced-echelon basis of the span of im S(xi) over all frequencies xi,
// read off the monomial coefficient vectors of the columns of S.
std::vector<std::vector<Rational>> wave_cone_span(const PolyMatrix& S);

// Search small rational and Gaussian-rational points for one where the rank
// of A drops below r; deterministic order.
std::optional<std::vector<GaussianRational>> find_rank_drop_point(const PolyMatrix& A, int r);

}  // namespace syzkit
