#include "syzkit/rank_analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace syzkit {

std::vector<Rational> sample_integer_point(SplitMix64& rng, int n, int bound) {
    while (true) {
        std::vector<Rational> pt(n);
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            std::int64_t v = static_cast<std::int64_t>(rng.next() % (2 * bound + 1)) - bound;
            pt[i] = Rational(static_cast<long>(v));
            if (v != 0) nonzero = true;
        }
        if (nonzero) return pt;
    }
}

// --------------------------------------------------------------------------
// Exact Gaussian elimination over Q(i)
// --------------------------------------------------------------------------

MatrixEvaluation reduce_matrix(int rows, int cols, std::vector<GaussianRational> entries) {
    MatrixEvaluation ev;
    ev.rows = rows;
    ev.cols = cols;
    ev.value = entries;  // keep the original for column-space extraction

    auto& m = entries;
    auto at = [&](int i, int j) -> GaussianRational& { return m[static_cast<std::size_t>(i) * cols + j]; };

    std::vector<int> pivot_row_of_col(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
        GaussianRational inv = GaussianRational{Rational(1)} / at(r, c);
        for (int j = 0; j < cols; ++j) at(r, j) = at(r, j) * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            GaussianRational f = at(i, c);
            for (int j = 0; j < cols; ++j) at(i, j) = at(i, j) - f * at(r, j);
        }
        pivot_row_of_col[c] = r;
        ev.pivot_columns.push_back(c);
        ++r;
    }
    ev.rank = r;

    // kernel vectors: unit at each free column, pivot entries filled from RREF
    for (int c = 0; c < cols; ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        std::vector<GaussianRational> v(cols);
        v[c] = GaussianRational{Rational(1)};
        for (int pc = 0; pc < cols; ++pc) {
            int pr = pivot_row_of_col[pc];
            if (pr >= 0) v[pc] = -at(pr, c);
        }
        ev.kernel_basis.push_back(std::move(v));
    }

    for (int c : ev.pivot_columns) {
        std::vector<GaussianRational> col(rows);
        for (int i = 0; i < rows; ++i) col[i] = ev.value[static_cast<std::size_t>(i) * cols + c];
        ev.column_space_basis.push_back(std::move(col));
    }
    return ev;
}

MatrixEvaluation evaluate_matrix(const PolyMatrix& A, std::span<const GaussianRational> point) {
    if (static_cast<int>(point.size()) != A.ring->nvars())
        throw ContextError("evaluation point arity does not match ring");
    std::vector<GaussianRational> vals;
    vals.reserve(A.entries.size());
    for (const auto& p : A.entries) vals.push_back(evaluate_poly(p, point));
    return reduce_matrix(A.rows, A.cols, std::move(vals));
}

// --------------------------------------------------------------------------
// Minors
// --------------------------------------------------------------------------

namespace {

Polynomial minor_determinant(const PolyMatrix& A, const std::vector<int>& rows,
                             const std::vector<int>& cols) {
    int n = static_cast<int>(rows.size());
    if (n == 0) return Polynomial::constant(A.ring, Rational(1));
    if (n == 1) return A.at(rows[0], cols[0]);
    // expansion along the first selected row
    Polynomial acc(A.ring);
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (int j = 0; j < n; ++j) {
        const Polynomial& e = A.at(rows[0], cols[j]);
        if (e.is_zero()) continue;
        std::vector<int> subcols;
        subcols.reserve(n - 1);
        for (int l = 0; l < n; ++l)
            if (l != j) subcols.push_back(cols[l]);
        Polynomial sub = minor_determinant(A, subrows, subcols);
        if (j % 2 == 0)
            acc = acc + e * sub;
        else
            acc = acc - e * sub;
    }
    return acc;
}

// All j-subsets of [0, n) in lexicographic order.
void for_each_subset(int n, int j, const std::function<bool(const std::vector<int>&)>& body) {
    std::vector<int> idx(j);
    for (int i = 0; i < j; ++i) idx[i] = i;
    if (j > n) return;
    while (true) {
        if (!body(idx)) return;
        int i = j - 1;
        while (i >= 0 && idx[i] == n - j + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int l = i + 1; l < j; ++l) idx[l] = idx[l - 1] + 1;
    }
}

// Point with distinct small-prime coordinates; rank there bounds the generic
// rank from below, and the bound is certified because a nonzero evaluation
// certifies a nonzero minor.
std::vector<GaussianRational> probe_point(int n, int variant) {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<GaussianRational> pt(n);
    for (int i = 0; i < n; ++i) {
        long p = primes[(i + variant) % (sizeof(primes) / sizeof(primes[0]))];
        pt[i] = GaussianRational{Rational(p + variant)};
    }
    return pt;
}

bool all_minors_vanish(const PolyMatrix& A, int j) {
    bool all_zero = true;
    for_each_subset(A.rows, j, [&](const std::vector<int>& rs) {
        bool keep_going = true;
        for_each_subset(A.cols, j, [&](const std::vector<int>& cs) {
            if (!minor_determinant(A, rs, cs).is_zero()) {
                all_zero = false;
                keep_going = false;
                return false;
            }
            return true;
        });
        return keep_going;
    });
    return all_zero;
}

}  // namespace

int generic_rank(const PolyMatrix& A) {
    int maxr = std::min(A.rows, A.cols);
    if (maxr == 0) return 0;
    int lower = 0;
    for (int variant = 0; variant < 3; ++variant) {
        MatrixEvaluation ev = evaluate_matrix(A, probe_point(A.ring->nvars(), variant));
        lower = std::max(lower, ev.rank);
    }
    // rank at any point is a certified lower bound; climb with exact minors
    int r = lower;
    while (r < maxr && !all_minors_vanish(A, r + 1)) ++r;
    return r;
}

FittingData fitting_ideals(const PolyMatrix& A) {
    FittingData data;
    int maxj = std::min(A.rows, A.cols);
    for (int j = 1; j <= maxj; ++j) {
        std::vector<Polynomial> gens;
        for_each_subset(A.rows, j, [&](const std::vector<int>& rs) {
            for_each_subset(A.cols, j, [&](const std::vector<int>& cs) {
                Polynomial d = minor_determinant(A, rs, cs);
                if (!d.is_zero()) gens.push_back(std::move(d));
                return true;
            });
            return true;
        });
        data.minor_ideals.push_back(ideal_from_polys(std::move(gens), A.ring));
        if (!data.minor_ideals.back().is_zero_module()) data.generic_rank = j;
    }
    data.first_nonzero_size = data.generic_rank;
    return data;
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    if (I.rank != 1) throw ContextError("radical membership needs an ideal");
    if (f.is_zero()) return true;
    const RingPtr& ring = f.ring();
    check_same_ring(ring, I.ring);
    std::vector<std::string> vars = ring->variables();
    std::string tname = "t";
    while (ring->var_index(tname) >= 0) tname += "_";
    vars.push_back(tname);
    RingPtr ext = RingContext::create(vars, MonomialOrder{OrderKind::grevlex, 0});
    int n = ring->nvars();
    auto lift = [&](const Polynomial& p) {
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            Monomial m = Monomial::one(n + 1);
            for (int i = 0; i < n; ++i) m.exp[i] = t.mono.exp[i];
            terms.push_back({t.coeff, std::move(m)});
        }
        return Polynomial::from_terms(ext, std::move(terms));
    };
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens) gens.push_back(lift(g.comps[0]));
    Polynomial t = Polynomial::variable(ext, n);
    gens.push_back(Polynomial::constant(ext, Rational(1)) - t * lift(f));
    Ideal extended = ideal_from_polys(std::move(gens), ext);
    return is_unit_ideal(extended);
}

std::optional<int> radical_membership_exponent(const Polynomial& f, const Ideal& I, int cap) {
    Polynomial power = Polynomial::constant(f.ring(), Rational(1));
    for (int e = 1; e <= cap; ++e) {
        power = power * f;
        ModuleElement elem(f.ring(), std::vector<Polynomial>{power});
        if (member(elem, I)) return e;
    }
    return std::nullopt;
}

RowHomogeneity is_row_homogeneous(const PolyMatrix& A) {
    RowHomogeneity result;
    result.row_homogeneous = true;
    for (int i = 0; i < A.rows; ++i) {
        std::optional<int> row_deg;
        bool row_ok = true;
        for (int j = 0; j < A.cols; ++j) {
            const Polynomial& p = A.at(i, j);
            if (p.is_zero()) continue;
            auto d = p.homogeneous_degree();
            if (!d) {
                row_ok = false;
                break;
            }
            if (row_deg && *row_deg != *d) {
                row_ok = false;
                break;
            }
            row_deg = d;
        }
        if (!row_ok) {
            result.row_homogeneous = false;
            result.degrees.push_back(std::nullopt);
        } else {
            result.degrees.push_back(row_deg);
        }
    }
    return result;
}

// --------------------------------------------------------------------------
// Witness search
// --------------------------------------------------------------------------

namespace {

std::vector<GaussianRational> candidate_values() {
    using G = GaussianRational;
    return {
        G{Rational(0)},
        G{Rational(1)},
        G{Rational(-1)},
        G{Rational(2)},
        G{Rational(3)},
        G{Rational(0), Rational(1)},
        G{Rational(0), Rational(-1)},
        G{Rational(1), Rational(1)},
        G{Rational(1), Rational(-1)},
    };
}

}  // namespace

std::optional<std::vector<GaussianRational>> find_rank_drop_point(const PolyMatrix& A, int r) {
    int n = A.ring->nvars();
    auto values = candidate_values();
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= values.size();
    // first coordinate most significant: real points come before complex ones
    for (std::size_t code = 1; code < total; ++code) {
        std::size_t c = code;
        std::vector<GaussianRational> pt(n);
        bool nonzero = false;
        for (int i = n - 1; i >= 0; --i) {
            pt[i] = values[c % values.size()];
            c /= values.size();
            if (!pt[i].is_zero()) nonzero = true;
        }
        if (!nonzero) continue;
        if (evaluate_matrix(A, pt).rank < r) return pt;
    }
    // fall back to a deterministic integer sweep
    SplitMix64 rng(0x5EEDull);
    for (int s = 0; s < 5000; ++s) {
        std::vector<Rational> real_pt = sample_integer_point(rng, n, 7);
        std::vector<GaussianRational> pt(real_pt.begin(), real_pt.end());
        if (evaluate_matrix(A, pt).rank < r) return pt;
    }
    return std::nullopt;
}

// --------------------------------------------------------------------------
// Complex verdicts
// --------------------------------------------------------------------------

namespace {

void require_row_homogeneous(const PolyMatrix& A) {
    if (!is_row_homogeneous(A).row_homogeneous)
        throw std::invalid_argument("operator is not row-homogeneous");
}

// Decides whether every variable lies in sqrt(I_j(A)) without always
// enumerating the full minor set. Pivot submatrices at a handful of probe
// points usually expose the decisive minors; if that is inconclusive the
// exhaustive sweep runs with geometrically spaced retests.
struct IncrementalRadicalTest {
    const PolyMatrix& A;
    int j;
    std::vector<Polynomial> collected;

    bool run(std::vector<RadicalWitness>& witnesses_out) {
        int n = A.ring->nvars();

        for (const auto& pt : probe_points(n)) {
            MatrixEvaluation ev = evaluate_matrix(A, pt);
            if (ev.rank < j) continue;
            // the pivot rows/cols of the elimination give a minor that is
            // nonzero at pt, hence nonzero as a polynomial
            std::vector<int> rs = pivot_rows(ev);
            Polynomial d = minor_determinant(A, rs, ev.pivot_columns);
            if (!d.is_zero()) collected.push_back(std::move(d));
        }
        if (!collected.empty() && decides(n, witnesses_out)) return true;

        std::size_t next_try = collected.size() + 1;
        bool pass = false;
        for_each_subset(A.rows, j, [&](const std::vector<int>& rs) {
            bool keep_going = true;
            for_each_subset(A.cols, j, [&](const std::vector<int>& cs) {
                Polynomial d = minor_determinant(A, rs, cs);
                if (!d.is_zero()) collected.push_back(std::move(d));
                if (collected.size() >= next_try) {
                    next_try = collected.size() * 2;
                    if (decides(n, witnesses_out)) {
                        pass = true;
                        keep_going = false;
                        return false;
                    }
                }
                return true;
            });
            return keep_going;
        });
        if (pass) return true;
        return decides(n, witnesses_out);
    }

private:
    static std::vector<std::vector<GaussianRational>> probe_points(int n) {
        std::vector<std::vector<GaussianRational>> pts;
        for (int i = 0; i < n; ++i) {
            std::vector<GaussianRational> e(n);
            e[i] = GaussianRational{Rational(1)};
            pts.push_back(std::move(e));
        }
        for (int i = 0; i < n; ++i)
            for (int l = i + 1; l < n; ++l) {
                std::vector<GaussianRational> e(n);
                e[i] = GaussianRational{Rational(1)};
                e[l] = GaussianRational{Rational(1)};
                pts.push_back(std::move(e));
            }
        for (int variant = 0; variant < 2; ++variant) pts.push_back(probe_point(n, variant));
        return pts;
    }

    static std::vector<int> pivot_rows(const MatrixEvaluation& ev) {
        // after row reduction the pivots sit in the first `rank` rows of the
        // permuted matrix; recover original indices by re-eliminating greedily
        std::vector<int> rows;
        std::vector<std::vector<GaussianRational>> work;
        for (int i = 0; i < ev.rows && static_cast<int>(rows.size()) < ev.rank; ++i) {
            std::vector<GaussianRational> cand;
            for (int c : ev.pivot_columns) cand.push_back(ev.at(i, c));
            // reduce against chosen rows
            for (std::size_t w = 0; w < work.size(); ++w) {
                // find leading nonzero of work[w]
                int lead = -1;
                for (std::size_t c = 0; c < work[w].size(); ++c)
                    if (!work[w][c].is_zero()) {
                        lead = static_cast<int>(c);
                        break;
                    }
                if (lead < 0 || cand[lead].is_zero()) continue;
                GaussianRational f = cand[lead] / work[w][lead];
                for (std::size_t c = 0; c < cand.size(); ++c)
                    cand[c] = cand[c] - f * work[w][c];
            }
            bool nonzero = false;
            for (const auto& c : cand)
                if (!c.is_zero()) nonzero = true;
            if (nonzero) {
                rows.push_back(i);
                work.push_back(std::move(cand));
            }
        }
        return rows;
    }

    bool decides(int n, std::vector<RadicalWitness>& witnesses_out) {
        Ideal I = ideal_from_polys(collected, A.ring);
        std::vector<RadicalWitness> ws;
        for (int i = 0; i < n; ++i) {
            Polynomial xi = Polynomial::variable(A.ring, i);
            if (!radical_membership(xi, I)) return false;
            auto e = radical_membership_exponent(xi, I);
            ws.push_back({A.ring->variables()[i], e.value_or(-1)});
        }
        witnesses_out = std::move(ws);
        return true;
    }
};

}  // namespace

ComplexVerdict is_c_elliptic(const PolyMatrix& A) {
    require_row_homogeneous(A);
    ComplexVerdict v;
    int k = A.cols, l = A.rows;
    if (k > l) {
        v.holds = false;
        v.reason = "more columns than rows, so kernels are nontrivial everywhere";
        v.witness = find_rank_drop_point(A, k);
        if (!v.witness) {
            std::vector<GaussianRational> e1(A.ring->nvars());
            e1[0] = GaussianRational{Rational(1)};
            v.witness = e1;
        }
        return v;
    }
    int r = generic_rank(A);
    if (r < k) {
        v.holds = false;
        v.reason = "generic rank " + std::to_string(r) + " is below the column count";
        // every nonzero point has a kernel; pick the first candidate
        std::vector<GaussianRational> e1(A.ring->nvars());
        e1[0] = GaussianRational{Rational(1)};
        v.witness = e1;
        return v;
    }
    IncrementalRadicalTest test{A, k, {}};
    std::vector<RadicalWitness> ws;
    if (test.run(ws)) {
        v.holds = true;
        v.radical_witnesses = std::move(ws);
        v.reason = "every variable lies in the radical of the maximal minor ideal";
    } else {
        v.holds = false;
        v.reason = "the maximal minor ideal vanishes on a nonzero complex point";
        v.witness = find_rank_drop_point(A, k);
    }
    return v;
}

ComplexVerdict is_c_constant_rank(const PolyMatrix& A) {
    require_row_homogeneous(A);
    ComplexVerdict v;
    int r = generic_rank(A);
    if (r == 0) {
        // zero matrix: rank 0 everywhere, vacuously constant
        v.holds = true;
        v.reason = "zero operator has rank 0 everywhere";
        return v;
    }
    IncrementalRadicalTest test{A, r, {}};
    std::vector<RadicalWitness> ws;
    if (test.run(ws)) {
        v.holds = true;
        v.radical_witnesses = std::move(ws);
        v.reason = "rank can only drop at the origin";
    } else {
        v.holds = false;
        v.reason = "rank drops on a nonzero complex point";
        v.witness = find_rank_drop_point(A, r);
    }
    return v;
}

RealConditionResult check_r_condition(const PolyMatrix& A, RealCondition kind,
                                      std::span<const std::vector<Rational>> witnesses,
                                      int sample_count, std::uint64_t seed) {
    require_row_homogeneous(A);
    int k = A.cols;
    int r = generic_rank(A);
    int threshold = kind == RealCondition::ellipticity ? k : r;

    auto fails_at = [&](const std::vector<Rational>& pt) {
        bool nonzero = false;
        for (const auto& c : pt)
            if (c != 0) nonzero = true;
        if (!nonzero) return false;
        std::vector<GaussianRational> gpt(pt.begin(), pt.end());
        return evaluate_matrix(A, gpt).rank < threshold;
    };

    for (const auto& w : witnesses) {
        if (static_cast<int>(w.size()) != A.ring->nvars())
            throw ContextError("witness point arity does not match ring");
        if (fails_at(w)) return {RealVerdict::refuted, w, 0};
    }

    ComplexVerdict cv =
        kind == RealCondition::ellipticity ? is_c_elliptic(A) : is_c_constant_rank(A);
    if (cv.holds) return {RealVerdict::certified_via_complex, std::nullopt, 0};

    SplitMix64 rng(seed);
    for (int s = 0; s < sample_count; ++s) {
        std::vector<Rational> pt = sample_integer_point(rng, A.ring->nvars());
        if (fails_at(pt)) return {RealVerdict::refuted, pt, s + 1};
    }
    return {RealVerdict::inconclusive, std::nullopt, sample_count};
}

EvalComparison pointwise_exactness(const PolyMatrix& A, const PolyMatrix& S,
                                   std::span<const GaussianRational> point,
                                   std::optional<int> known_generic_rank) {
    if (S.cols > 0 && !(A * S).is_zero())
        throw std::invalid_argument("S is not a syzygy matrix of A (A*S != 0)");
    if (A.cols != S.rows && S.cols > 0)
        throw ContextError("dimension mismatch between A and S");
    EvalComparison cmp;
    cmp.point.assign(point.begin(), point.end());
    MatrixEvaluation evA = evaluate_matrix(A, point);
    cmp.rank_a = evA.rank;
    cmp.dim_ker_a = A.cols - evA.rank;
    if (S.cols == 0) {
        cmp.dim_im_s = 0;
    } else {
        cmp.dim_im_s = evaluate_matrix(S, point).rank;
    }
    cmp.relation = cmp.dim_im_s == cmp.dim_ker_a ? ExactnessRelation::equal
                                                 : ExactnessRelation::strict_superset;
    int r = known_generic_rank ? *known_generic_rank : generic_rank(A);
    bool max_rank = cmp.rank_a == r;
    cmp.conforms = (cmp.relation == ExactnessRelation::equal) == max_rank;
    return cmp;
}

std::vector<std::vector<Rational>> wave_cone_span(const PolyMatrix& S) {
    int k = S.rows;
    // one coefficient vector per (column, monomial) pair
    std::vector<std::vector<Rational>> work;
    for (int j = 0; j < S.cols; ++j) {
        std::map<std::vector<int>, std::vector<Rational>> by_monomial;
        for (int i = 0; i < k; ++i) {
            for (const auto& t : S.at(i, j).terms()) {
                auto& vec = by_monomial[t.mono.exp];
                if (vec.empty()) vec.assign(k, Rational(0));
                vec[i] = t.coeff;
            }
        }
        for (auto& [mono, vec] : by_monomial) work.push_back(vec);
    }
    if (work.empty()) return {};
    int m = static_cast<int>(work.size());
    int rr = 0;
    for (int c = 0; c < k && rr < m; ++c) {
        int pivot = -1;
        for (int i = rr; i < m; ++i)
            if (work[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[pivot], work[rr]);
        Rational inv = 1 / work[rr][c];
        for (int j = 0; j < k; ++j) work[rr][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == rr || work[i][c] == 0) continue;
            Rational f = work[i][c];
            for (int j = 0; j < k; ++j) work[i][j] -= f * work[rr][j];
        }
        ++rr;
    }
    work.resize(rr);
    return work;
}

}  // namespace syzkit
