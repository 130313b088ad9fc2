#include "syzkit/report.hpp"

#include <chrono>

namespace syzkit {

namespace {

ordered_json report_header(const std::string& command, const std::string& input_text,
                           const RunOptions& opts, const InputDocument& doc) {
    ordered_json j;
    j["schema"] = kSchema;
    j["tool"] = kToolVersion;
    j["command"] = command;
    j["input_digest"] = fnv1a64_digest(input_text);
    j["order"] = opts.order == OrderKind::grevlex ? "grevlex" : "lex";
    j["seed"] = opts.resolve_seed(doc.seed);
    j["samples"] = opts.resolve_samples(doc.sample_count);
    return j;
}

ordered_json ring_to_json(const RingPtr& ring) {
    ordered_json j;
    j["variables"] = ring->variables();
    j["order"] = ring->order().kind == OrderKind::grevlex ? "grevlex" : "lex";
    return j;
}

std::string relation_name(ExactnessRelation r) {
    return r == ExactnessRelation::equal ? "equal" : "strict-superset";
}

std::string real_verdict_name(RealVerdict v) {
    switch (v) {
        case RealVerdict::refuted: return "refuted";
        case RealVerdict::certified_via_complex: return "certified-via-complex";
        case RealVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

ordered_json complex_verdict_to_json(const ComplexVerdict& v) {
    ordered_json j;
    j["verdict"] = v.holds ? "yes" : "no";
    j["reason"] = v.reason;
    if (!v.radical_witnesses.empty()) {
        ordered_json ws = ordered_json::array();
        for (const auto& w : v.radical_witnesses) {
            ordered_json e;
            e["variable"] = w.variable;
            e["exponent"] = w.exponent;
            ws.push_back(e);
        }
        j["radical_witnesses"] = ws;
    }
    if (v.witness) j["counterexample"] = point_to_json(*v.witness);
    return j;
}

ordered_json real_verdict_to_json(const RealConditionResult& v) {
    ordered_json j;
    j["verdict"] = real_verdict_name(v.verdict);
    if (v.witness) {
        ordered_json pt = ordered_json::array();
        for (const auto& c : *v.witness) pt.push_back(format_rational(c));
        j["witness"] = pt;
    }
    j["samples_used"] = v.sample_count;
    return j;
}

ordered_json ideal_to_json(const Ideal& I) {
    ordered_json gens = ordered_json::array();
    for (const auto& g : I.gens) gens.push_back(format_poly(normalize_content(g.comps[0])));
    return gens;
}

std::vector<std::vector<Rational>> real_points_of(const std::vector<std::vector<GaussianRational>>& pts) {
    std::vector<std::vector<Rational>> out;
    for (const auto& p : pts) {
        bool real = true;
        for (const auto& c : p)
            if (!c.is_real()) real = false;
        if (!real) continue;
        std::vector<Rational> rp;
        for (const auto& c : p) rp.push_back(c.re);
        out.push_back(std::move(rp));
    }
    return out;
}

ordered_json classification_to_json(const ClassificationReport& rep) {
    ordered_json j;
    j["row_homogeneous"] = rep.row_homogeneity.row_homogeneous;
    ordered_json degs = ordered_json::array();
    for (const auto& d : rep.row_homogeneity.degrees) {
        if (d)
            degs.push_back(*d);
        else
            degs.push_back(nullptr);
    }
    j["row_degrees"] = degs;
    j["column_homogeneous"] = rep.column_homogeneous;
    j["homogeneity_ambiguous"] = rep.homogeneity_ambiguous;
    j["generic_rank"] = rep.generic_rank;
    ordered_json fitting;
    fitting["first_nonzero_size"] = rep.fitting.first_nonzero_size;
    ordered_json ideals = ordered_json::array();
    for (std::size_t i = 0; i < rep.fitting.minor_ideals.size(); ++i) {
        ordered_json e;
        e["size"] = static_cast<int>(i + 1);
        e["generators"] = ideal_to_json(rep.fitting.minor_ideals[i]);
        ideals.push_back(e);
    }
    fitting["minor_ideals"] = ideals;
    j["fitting"] = fitting;
    auto opt_complex = [&](const std::optional<ComplexVerdict>& v) -> ordered_json {
        if (!v) {
            ordered_json na;
            na["verdict"] = "not-applicable";
            na["reason"] = "operator is not row-homogeneous";
            return na;
        }
        return complex_verdict_to_json(*v);
    };
    auto opt_real = [&](const std::optional<RealConditionResult>& v) -> ordered_json {
        if (!v) {
            ordered_json na;
            na["verdict"] = "not-applicable";
            return na;
        }
        return real_verdict_to_json(*v);
    };
    j["c_elliptic"] = opt_complex(rep.c_elliptic);
    j["c_constant_rank"] = opt_complex(rep.c_constant_rank);
    j["r_ellipticity"] = opt_real(rep.r_ellipticity);
    j["r_constant_rank"] = opt_real(rep.r_constant_rank);
    ordered_json ctrl;
    ctrl["verdict"] = to_string(rep.controllability.verdict);
    ctrl["generic_rank"] = rep.controllability.generic_rank;
    ctrl["image_equals_torsion_free_closure"] = rep.controllability.image_equals_closure;
    ctrl["syzygy_trivial"] = rep.controllability.syzygy_trivial;
    j["controllability"] = ctrl;
    return j;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void finish(ordered_json& j, const Timer& t, const RunOptions& opts) {
    if (opts.timings) j["timing_ms"] = t.elapsed_ms();
}

}  // namespace

// Computed matrices carry generator-normalized entries already; per-entry
// rescaling would change the row or column module, so entries print as-is.
ordered_json matrix_to_json(const PolyMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(format_poly(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json point_to_json(const std::vector<GaussianRational>& pt) {
    ordered_json j = ordered_json::array();
    for (const auto& c : pt) j.push_back(format_gaussian(c));
    return j;
}

RunOutcome run_syzygy(const std::string& input_text, const RunOptions& opts) {
    Timer timer;
    InputDocument doc = parse_input_document(input_text);
    LoadedInput in = realize_input(doc, opts.order);
    ordered_json j = report_header("syzygy", input_text, opts, doc);
    j["ring"] = ring_to_json(in.ring);
    j["matrix"] = matrix_to_json(in.matrix);
    PolyMatrix S = syzygy_matrix(in.matrix);
    bool product_zero = S.cols == 0 || (in.matrix * S).is_zero();
    ordered_json syz;
    syz["columns"] = S.cols;
    syz["matrix"] = matrix_to_json(S);
    syz["product_is_zero"] = product_zero;
    ordered_json span = ordered_json::array();
    for (const auto& v : wave_cone_span(S)) {
        ordered_json row = ordered_json::array();
        for (const auto& c : v) row.push_back(format_rational(c));
        span.push_back(row);
    }
    syz["wave_cone_span"] = span;
    j["syzygy"] = syz;
    finish(j, timer, opts);
    return {j, product_zero ? 0 : 2};
}

RunOutcome run_classify(const std::string& input_text, const RunOptions& opts) {
    Timer timer;
    InputDocument doc = parse_input_document(input_text);
    LoadedInput in = realize_input(doc, opts.order);
    for (const auto& p : opts.extra_points) {
        std::vector<GaussianRational> coords;
        for (const auto& c : p) coords.push_back(parse_gaussian(c));
        if (static_cast<int>(coords.size()) != in.ring->nvars())
            throw ContextError("point arity does not match ring");
        in.points.push_back(std::move(coords));
    }
    ClassifyOptions copts;
    copts.witnesses = real_points_of(in.points);
    copts.sample_count = opts.resolve_samples(doc.sample_count);
    copts.seed = opts.resolve_seed(doc.seed);
    ClassificationReport rep = classify(in.matrix, copts);
    ordered_json j = report_header("classify", input_text, opts, doc);
    j["ring"] = ring_to_json(in.ring);
    j["matrix"] = matrix_to_json(in.matrix);
    j["classification"] = classification_to_json(rep);
    finish(j, timer, opts);
    return {j, 0};
}

RunOutcome run_decompose(const std::string& input_text, const RunOptions& opts) {
    Timer timer;
    InputDocument doc = parse_input_document(input_text);
    LoadedInput in = realize_input(doc, opts.order);
    DecompositionResult d = decompose(in.matrix);
    ordered_json j = report_header("decompose", input_text, opts, doc);
    j["ring"] = ring_to_json(in.ring);
    j["matrix"] = matrix_to_json(in.matrix);
    ordered_json dec;
    dec["a_c"] = matrix_to_json(d.a_c);
    dec["a_u"] = matrix_to_json(d.a_u);
    dec["syzygy"] = matrix_to_json(d.syzygies);
    dec["conductor"] = ideal_to_json(d.conductor);
    dec["exponent"] = d.exponent;
    ordered_json checks;
    for (const auto& [name, ok] : d.checks.named()) checks[name] = ok;
    dec["checks"] = checks;
    dec["valid"] = d.checks.all_pass();
    j["decomposition"] = dec;
    finish(j, timer, opts);
    return {j, d.checks.all_pass() ? 0 : 2};
}

RunOutcome run_verify(const std::string& input_text, const RunOptions& opts) {
    Timer timer;
    InputDocument doc = parse_input_document(input_text);
    LoadedInput in = realize_input(doc, opts.order);
    for (const auto& p : opts.extra_points) {
        std::vector<GaussianRational> coords;
        for (const auto& c : p) coords.push_back(parse_gaussian(c));
        if (static_cast<int>(coords.size()) != in.ring->nvars())
            throw ContextError("point arity does not match ring");
        in.points.push_back(std::move(coords));
    }
    DecompositionResult d = decompose(in.matrix);
    int r = generic_rank(in.matrix);
    int sample_count = opts.resolve_samples(doc.sample_count);
    std::uint64_t seed = opts.resolve_seed(doc.seed);

    ordered_json j = report_header("verify", input_text, opts, doc);
    j["ring"] = ring_to_json(in.ring);
    j["matrix"] = matrix_to_json(in.matrix);
    j["generic_rank"] = r;
    j["decomposition_valid"] = d.checks.all_pass();

    int violations = d.checks.all_pass() ? 0 : 1;
    auto check_point = [&](const std::vector<GaussianRational>& pt, bool sampled) {
        EvalComparison cmp = pointwise_exactness(in.matrix, d.syzygies, pt, r);
        ordered_json e;
        e["point"] = point_to_json(pt);
        e["sampled"] = sampled;
        e["rank"] = cmp.rank_a;
        e["kernel_dim"] = cmp.dim_ker_a;
        e["image_dim"] = cmp.dim_im_s;
        e["relation"] = relation_name(cmp.relation);
        e["conforms"] = cmp.conforms;
        if (!cmp.conforms) ++violations;
        if (cmp.rank_a == r) {
            bool trivial = evaluate_matrix(d.a_u, pt).rank == d.a_u.cols;
            e["uncontrollable_kernel_trivial"] = trivial;
            if (!trivial) ++violations;
        }
        return e;
    };

    ordered_json pts = ordered_json::array();
    for (const auto& pt : in.points) pts.push_back(check_point(pt, false));
    SplitMix64 rng(seed);
    int accepted = 0, guard = 0;
    while (accepted < sample_count && guard < sample_count * 100) {
        ++guard;
        std::vector<Rational> rp = sample_integer_point(rng, in.ring->nvars());
        std::vector<GaussianRational> pt(rp.begin(), rp.end());
        if (evaluate_matrix(in.matrix, pt).rank != r) continue;  // sample at maximal rank only
        ++accepted;
        pts.push_back(check_point(pt, true));
    }
    j["points"] = pts;
    j["sampled_points"] = accepted;
    j["violations"] = violations;
    j["conformance"] = violations == 0;
    finish(j, timer, opts);
    return {j, violations == 0 ? 0 : 2};
}

}  // namespace syzkit
