#include <doctest.h>

#include "test_support.hpp"
#include "syzkit/classify.hpp"
#include "syzkit/corpus.hpp"

using namespace syzkit;
using namespace syzkit::testing;

TEST_CASE("generic rank") {
    RingPtr r3 = RingContext::create({"x1", "x2", "x3"});
    PolyMatrix euler = load_fixture("euler").matrix;
    CHECK(generic_rank(euler) == 3);

    RingPtr r = ring2();
    CHECK(generic_rank(PolyMatrix::identity(r, 4)) == 4);
    CHECK(generic_rank(PolyMatrix(r, 2, 2)) == 0);

    // rows sum to zero, so the rank stays below full; a 2x2 minor is nonzero
    PolyMatrix a4 = load_fixture("a4").matrix;
    ModuleElement row_sum = a4.row(0) + a4.row(1) + a4.row(2);
    CHECK(row_sum.is_zero());
    Polynomial minor = a4.at(0, 0) * a4.at(1, 1) - a4.at(0, 1) * a4.at(1, 0);
    CHECK_FALSE(minor.is_zero());
    CHECK(generic_rank(a4) == 2);
}

TEST_CASE("fitting ideals of a diagonal operator") {
    RingPtr r = RingContext::create({"x1", "x2"});
    PolyMatrix d = mat(r, {{"x1", "0"}, {"0", "x2"}});
    FittingData f = fitting_ideals(d);
    REQUIRE(f.minor_ideals.size() == 2);
    CHECK(module_equal(f.minor_ideals[0], ideal_from_polys({P(r, "x1"), P(r, "x2")}, r)));
    CHECK(module_equal(f.minor_ideals[1], ideal_from_polys({P(r, "x1*x2")}, r)));
    CHECK(f.generic_rank == 2);
    CHECK(f.first_nonzero_size == 2);
}

TEST_CASE("fitting chain and rank-drop locus for the euler operator") {
    Fixture fx = load_fixture("euler");
    FittingData f = fitting_ideals(fx.matrix);
    REQUIRE(f.generic_rank == 3);
    // chain: I_{j+1} contained in I_j
    for (std::size_t j = 0; j + 1 < f.minor_ideals.size(); ++j)
        for (const auto& g : f.minor_ideals[j + 1].gens) CHECK(member(g, f.minor_ideals[j]));
    // every maximal minor vanishes where the rank is known to drop
    auto pt = gpoint({"1", "0", "0"});
    for (const auto& g : f.minor_ideals[2].gens)
        CHECK(evaluate_poly(g.comps[0], pt).is_zero());
    CHECK_FALSE(f.minor_ideals[2].is_zero_module());
}

TEST_CASE("fitting ideals of the curl operator") {
    Fixture fx = load_fixture("a5");
    FittingData f = fitting_ideals(fx.matrix);
    CHECK(f.generic_rank == 2);
    REQUIRE(f.minor_ideals.size() == 3);
    CHECK(f.minor_ideals[2].is_zero_module());  // determinant vanishes
    // the 2x2 minors cut out exactly the origin
    const RingPtr& r = fx.ring;
    for (int i = 0; i < 3; ++i)
        CHECK(radical_membership(Polynomial::variable(r, i), f.minor_ideals[1]));
}

TEST_CASE("fitting invariance under unimodular transforms") {
    RingPtr r = ring2();
    SplitMix64 rng(59);
    PolyMatrix A = load_fixture("a1").matrix;
    const RingPtr& ra = A.ring;
    FittingData base = fitting_ideals(A);
    for (int trial = 0; trial < 20; ++trial) {
        auto elementary = [&](int k) {
            PolyMatrix E = PolyMatrix::identity(ra, k);
            int i = static_cast<int>(rng.next() % k);
            int j = static_cast<int>(rng.next() % k);
            if (i == j) {
                E.at(i, i) = Polynomial::constant(ra, Rational(rng.next() % 2 == 0 ? 1 : -1));
            } else {
                E.at(i, j) = random_poly(rng, ra, 2, 1);
            }
            return E;
        };
        PolyMatrix U = elementary(A.rows) * elementary(A.rows);
        PolyMatrix V = elementary(A.cols) * elementary(A.cols);
        FittingData transformed = fitting_ideals(U * A * V);
        REQUIRE(transformed.minor_ideals.size() == base.minor_ideals.size());
        for (std::size_t j = 0; j < base.minor_ideals.size(); ++j)
            CHECK(module_equal(transformed.minor_ideals[j], base.minor_ideals[j]));
    }
    (void)r;
}

TEST_CASE("radical membership") {
    RingPtr r = ring2();
    Ideal x2 = ideal_from_polys({P(r, "x^2")}, r);
    CHECK(radical_membership(P(r, "x"), x2));
    CHECK(radical_membership_exponent(P(r, "x"), x2) == 2);
    Ideal iy = ideal_from_polys({P(r, "y")}, r);
    CHECK_FALSE(radical_membership(P(r, "x"), iy));
    CHECK(radical_membership(P(r, "x"), unit_ideal(r)));
    CHECK_FALSE(radical_membership(P(r, "x"), Ideal{r, 1, {}, true}));
}

TEST_CASE("row homogeneity") {
    RingPtr r = ring2();
    PolyMatrix good = mat(r, {{"x^2+y^2", "x*y"}, {"x", "y"}});
    RowHomogeneity h = is_row_homogeneous(good);
    CHECK(h.row_homogeneous);
    REQUIRE(h.degrees.size() == 2);
    CHECK(h.degrees[0] == 2);
    CHECK(h.degrees[1] == 1);

    PolyMatrix bad = mat(r, {{"x+x^2"}});
    CHECK_FALSE(is_row_homogeneous(bad).row_homogeneous);

    PolyMatrix with_zero_row = mat(r, {{"0", "0"}, {"x", "y"}});
    RowHomogeneity hz = is_row_homogeneous(with_zero_row);
    CHECK(hz.row_homogeneous);
    CHECK_FALSE(hz.degrees[0].has_value());

    // mixed degrees inside one row of the four-variable fixture
    Fixture fx = load_fixture("ctrl-not-rcr");
    CHECK_FALSE(is_row_homogeneous(fx.matrix).row_homogeneous);
}

TEST_CASE("complex ellipticity verdicts") {
    Fixture a6 = load_fixture("a6"), a7 = load_fixture("a7"), a8 = load_fixture("a8");
    CHECK(is_c_elliptic(a6.matrix).holds);
    CHECK(is_c_elliptic(a7.matrix).holds);
    CHECK(is_c_elliptic(a8.matrix).holds);

    // radical witnesses come back with usable exponents
    ComplexVerdict v = is_c_elliptic(a7.matrix);
    REQUIRE(v.radical_witnesses.size() == 2);
    for (const auto& w : v.radical_witnesses) CHECK(w.exponent == 2);

    Fixture a3 = load_fixture("a3");
    ComplexVerdict no = is_c_elliptic(a3.matrix);
    CHECK_FALSE(no.holds);
    REQUIRE(no.witness.has_value());
    // the witness genuinely kills the symbol
    CHECK(evaluate_matrix(a3.matrix, *no.witness).rank == 0);

    // rank deficit decides without any radical test
    Fixture a5 = load_fixture("a5");
    ComplexVerdict rank_no = is_c_elliptic(a5.matrix);
    CHECK_FALSE(rank_no.holds);

    // non-homogeneous input is rejected
    RingPtr r = ring2();
    CHECK_THROWS_AS(is_c_elliptic(mat(r, {{"x+x^2"}})), std::invalid_argument);
}

TEST_CASE("complex constant rank verdicts") {
    CHECK(is_c_constant_rank(load_fixture("a5").matrix).holds);
    CHECK_FALSE(is_c_constant_rank(load_fixture("a3").matrix).holds);
    CHECK_FALSE(is_c_constant_rank(load_fixture("a4").matrix).holds);

    ComplexVerdict a1 = is_c_constant_rank(load_fixture("a1").matrix);
    CHECK_FALSE(a1.holds);
    REQUIRE(a1.witness.has_value());
    CHECK(evaluate_matrix(load_fixture("a1").matrix, *a1.witness).rank < 2);

    // zero operator: vacuously constant
    RingPtr r = ring2();
    CHECK(is_c_constant_rank(PolyMatrix(r, 1, 1)).holds);
    CHECK_FALSE(is_c_elliptic(PolyMatrix(r, 1, 1)).holds);
}

TEST_CASE("real semi-decisions") {
    Fixture a1 = load_fixture("a1");
    std::vector<std::vector<Rational>> w1 = {{Rational(1), Rational(0)}};
    RealConditionResult r1 =
        check_r_condition(a1.matrix, RealCondition::constant_rank, w1, 100, 1);
    CHECK(r1.verdict == RealVerdict::refuted);
    REQUIRE(r1.witness.has_value());

    RealConditionResult r5 =
        check_r_condition(load_fixture("a5").matrix, RealCondition::constant_rank, {}, 100, 1);
    CHECK(r5.verdict == RealVerdict::certified_via_complex);

    // claimed true over the reals, so sampling cannot refute and the complex
    // test cannot certify
    RealConditionResult r4 =
        check_r_condition(load_fixture("a4").matrix, RealCondition::constant_rank, {}, 200, 1);
    CHECK(r4.verdict == RealVerdict::inconclusive);
    CHECK(r4.sample_count == 200);

    RealConditionResult r3 =
        check_r_condition(load_fixture("a3").matrix, RealCondition::ellipticity, {}, 150, 1);
    CHECK(r3.verdict == RealVerdict::inconclusive);
}

TEST_CASE("matrix evaluation over Q(i)") {
    Fixture euler = load_fixture("euler");
    MatrixEvaluation ev = evaluate_matrix(euler.matrix, gpoint({"0", "1", "0"}));
    CHECK(ev.rank == 3);
    REQUIRE(ev.kernel_basis.size() == 2);
    // expected kernel vectors (0,1,0,0,0) and (0,0,-1,0,1)
    for (const auto& kv : ev.kernel_basis) {
        CHECK(kv[0].is_zero());
        CHECK(kv[3].is_zero());
    }
    MatrixEvaluation drop = evaluate_matrix(euler.matrix, gpoint({"1", "0", "0"}));
    CHECK(drop.rank == 2);
    CHECK(drop.kernel_basis.size() == 3);

    RingPtr r = ring2();
    MatrixEvaluation idv = evaluate_matrix(PolyMatrix::identity(r, 3), gpoint({"5", "-2/3"}));
    CHECK(idv.rank == 3);
    CHECK(idv.kernel_basis.empty());
    CHECK_THROWS_AS(evaluate_matrix(PolyMatrix::identity(r, 2), gpoint({"1"})), ContextError);
}

TEST_CASE("rank semicontinuity under sampling") {
    Fixture euler = load_fixture("euler");
    int r = generic_rank(euler.matrix);
    SplitMix64 rng(61);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> pt = sample_integer_point(rng, 3);
        std::vector<GaussianRational> gpt(pt.begin(), pt.end());
        CHECK(evaluate_matrix(euler.matrix, gpt).rank <= r);
    }
}

TEST_CASE("rank is scale invariant for homogeneous operators") {
    Fixture a4 = load_fixture("a4");
    SplitMix64 rng(67);
    for (int i = 0; i < 20; ++i) {
        std::vector<Rational> pt = sample_integer_point(rng, 3);
        std::vector<GaussianRational> gpt(pt.begin(), pt.end());
        std::vector<GaussianRational> scaled;
        Rational t = make_rational(static_cast<long>(rng.next() % 9) + 1, 4);
        for (const auto& c : gpt) scaled.push_back(GaussianRational{Rational(t * c.re)});
        CHECK(evaluate_matrix(a4.matrix, gpt).rank == evaluate_matrix(a4.matrix, scaled).rank);
    }
}

TEST_CASE("pointwise exactness") {
    Fixture euler = load_fixture("euler");
    PolyMatrix S = syzygy_matrix(euler.matrix);

    EvalComparison eq = pointwise_exactness(euler.matrix, S, gpoint({"0", "1", "0"}));
    CHECK(eq.relation == ExactnessRelation::equal);
    CHECK(eq.dim_ker_a == 2);
    CHECK(eq.dim_im_s == 2);
    CHECK(eq.conforms);

    EvalComparison strict = pointwise_exactness(euler.matrix, S, gpoint({"1", "0", "0"}));
    CHECK(strict.relation == ExactnessRelation::strict_superset);
    CHECK(strict.dim_ker_a == 3);
    CHECK(strict.dim_im_s == 0);
    CHECK(strict.conforms);

    // trivial pair: identity with empty syzygy
    RingPtr r = ring2();
    PolyMatrix id = PolyMatrix::identity(r, 2);
    EvalComparison triv = pointwise_exactness(id, syzygy_matrix(id), gpoint({"4", "9"}));
    CHECK(triv.relation == ExactnessRelation::equal);
    CHECK(triv.conforms);

    // refusing a non-syzygy pairing
    CHECK_THROWS_AS(pointwise_exactness(id, id, gpoint({"1", "1"})), std::invalid_argument);
}

TEST_CASE("wave cone span") {
    RingPtr r = ring2();
    PolyMatrix empty(r, 2, 0);
    CHECK(wave_cone_span(empty).empty());

    PolyMatrix s = mat(r, {{"y"}, {"-x"}});
    auto span = wave_cone_span(s);
    REQUIRE(span.size() == 2);  // full plane
    CHECK(span[0][0] == 1);
    CHECK(span[1][1] == 1);

    RingPtr rxyz = RingContext::create({"x", "y", "z"});
    PolyMatrix grad2 = mat(rxyz, {{"x^2"}, {"y^2"}, {"z^2"}});
    CHECK(wave_cone_span(grad2).size() == 3);
}

TEST_CASE("wave cone span contains sampled evaluations") {
    Fixture euler = load_fixture("euler");
    PolyMatrix S = syzygy_matrix(euler.matrix);
    auto span = wave_cone_span(S);
    int k = S.rows;
    SplitMix64 rng(71);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> pt = sample_integer_point(rng, 3);
        std::vector<GaussianRational> gpt(pt.begin(), pt.end());
        MatrixEvaluation ev = evaluate_matrix(S, gpt);
        // every evaluated column must reduce to zero against the span basis
        for (int j = 0; j < S.cols; ++j) {
            std::vector<Rational> col(k);
            for (int row = 0; row < k; ++row) {
                REQUIRE(ev.at(row, j).im == 0);
                col[row] = ev.at(row, j).re;
            }
            for (const auto& basis_row : span) {
                int lead = -1;
                for (std::size_t c = 0; c < basis_row.size(); ++c)
                    if (basis_row[c] != 0) {
                        lead = static_cast<int>(c);
                        break;
                    }
                if (lead < 0 || col[lead] == 0) continue;
                Rational f = col[lead] / basis_row[lead];
                for (std::size_t c = 0; c < basis_row.size(); ++c) col[c] -= f * basis_row[c];
            }
            for (const auto& c : col) CHECK(c == 0);
        }
    }
}

TEST_CASE("classification ties the pieces together") {
    ClassifyOptions opts;
    opts.sample_count = 60;
    ClassificationReport rep = classify(load_fixture("a3").matrix, opts);
    CHECK(rep.generic_rank == 1);
    REQUIRE(rep.c_elliptic.has_value());
    CHECK_FALSE(rep.c_elliptic->holds);
    CHECK(rep.r_ellipticity->verdict == RealVerdict::inconclusive);
    CHECK(rep.controllability.verdict == Controllability::uncontrollable);

    // implication: complex ellipticity certifies both real verdicts
    ClassificationReport a8 = classify(load_fixture("a8").matrix, opts);
    REQUIRE(a8.c_elliptic.has_value());
    CHECK(a8.c_elliptic->holds);
    CHECK(a8.r_ellipticity->verdict == RealVerdict::certified_via_complex);
    CHECK(a8.r_constant_rank->verdict == RealVerdict::certified_via_complex);
    CHECK(a8.c_constant_rank->holds);  // ellipticity forces constant rank k

    // non-homogeneous operators skip the pointwise conditions but keep the rest
    ClassificationReport ctrl = classify(load_fixture("ctrl-not-rcr").matrix, opts);
    CHECK_FALSE(ctrl.row_homogeneity.row_homogeneous);
    CHECK_FALSE(ctrl.c_elliptic.has_value());
    CHECK(ctrl.controllability.verdict == Controllability::controllable);
}

TEST_CASE("constant-rank operators are exact at every nonzero complex point") {
    // the curl operator holds its rank over all of C^3 minus the origin, so
    // the evaluated kernel and image must agree at random Gaussian points
    Fixture a5 = load_fixture("a5");
    PolyMatrix S = syzygy_matrix(a5.matrix);
    SplitMix64 rng(89);
    int checked = 0;
    while (checked < 100) {
        std::vector<GaussianRational> pt(3);
        bool nonzero = false;
        for (int i = 0; i < 3; ++i) {
            long re = static_cast<long>(rng.next() % 21) - 10;
            long im = static_cast<long>(rng.next() % 21) - 10;
            pt[i] = GaussianRational{Rational(re), Rational(im)};
            if (!pt[i].is_zero()) nonzero = true;
        }
        if (!nonzero) continue;
        ++checked;
        EvalComparison cmp = pointwise_exactness(a5.matrix, S, pt, 2);
        CHECK(cmp.relation == ExactnessRelation::equal);
        CHECK(cmp.rank_a == 2);
    }
}
