#include "syzkit/module_ops.hpp"

#include <algorithm>

namespace syzkit {

namespace {

// [t, x_1, ..., x_n] with t forming an elimination block; the base order is
// preserved on the x block so eliminated results restrict cleanly.
RingPtr extend_with_elimination_var(const RingPtr& ring, const std::string& name) {
    if (ring->order().elim_block != 0)
        throw std::logic_error("cannot stack elimination blocks");
    std::vector<std::string> vars;
    vars.push_back(name);
    for (const auto& v : ring->variables()) vars.push_back(v);
    MonomialOrder order = ring->order();
    order.elim_block = 1;
    return RingContext::create(std::move(vars), order);
}

std::string fresh_var_name(const RingPtr& ring) {
    std::string name = "t";
    while (ring->var_index(name) >= 0) name += "_";
    return name;
}

Polynomial lift_poly(const Polynomial& p, const RingPtr& ext) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m = Monomial::one(ext->nvars());
        for (int i = 0; i < t.mono.arity(); ++i) m.exp[i + 1] = t.mono.exp[i];
        terms.push_back({t.coeff, std::move(m)});
    }
    return Polynomial::from_terms(ext, std::move(terms));
}

// Drops the leading auxiliary variable; caller guarantees it does not occur.
Polynomial restrict_poly(const Polynomial& p, const RingPtr& base) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m = Monomial::one(base->nvars());
        for (int i = 0; i < base->nvars(); ++i) m.exp[i] = t.mono.exp[i + 1];
        terms.push_back({t.coeff, std::move(m)});
    }
    return Polynomial::from_terms(base, std::move(terms));
}

bool uses_first_var(const ModuleElement& v) {
    for (const auto& p : v.comps)
        for (const auto& t : p.terms())
            if (t.mono.exp[0] > 0) return true;
    return false;
}

}  // namespace

SubmoduleGB intersect_modules(const SubmoduleGB& M, const SubmoduleGB& N) {
    check_same_ring(M.ring, N.ring);
    if (M.rank != N.rank) throw ContextError("rank mismatch in module intersection");
    const RingPtr& ring = M.ring;
    int k = M.rank;
    RingPtr ext = extend_with_elimination_var(ring, fresh_var_name(ring));
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - t;

    std::vector<ModuleElement> gens;
    for (const auto& g : M.gens) {
        ModuleElement lifted(ext, k);
        for (int i = 0; i < k; ++i) lifted.comps[i] = lift_poly(g.comps[i], ext) * t;
        gens.push_back(std::move(lifted));
    }
    for (const auto& h : N.gens) {
        ModuleElement lifted(ext, k);
        for (int i = 0; i < k; ++i) lifted.comps[i] = lift_poly(h.comps[i], ext) * one_minus_t;
        gens.push_back(std::move(lifted));
    }
    SubmoduleGB ext_gb = buchberger(std::move(gens), k, ext);

    std::vector<ModuleElement> restricted;
    for (const auto& g : ext_gb.gens) {
        if (uses_first_var(g)) continue;
        ModuleElement down(ring, k);
        for (int i = 0; i < k; ++i) down.comps[i] = restrict_poly(g.comps[i], ring);
        restricted.push_back(std::move(down));
    }
    return buchberger(std::move(restricted), k, ring);
}

SubmoduleGB intersect_modules_via_syzygies(const SubmoduleGB& M, const SubmoduleGB& N) {
    check_same_ring(M.ring, N.ring);
    if (M.rank != N.rank) throw ContextError("rank mismatch in module intersection");
    int k = M.rank;
    if (M.gens.empty() || N.gens.empty()) return SubmoduleGB{M.ring, k, {}, true};
    std::vector<ModuleElement> cols = M.gens;
    for (const auto& n : N.gens) cols.push_back(n);
    PolyMatrix C = PolyMatrix::from_cols(M.ring, k, cols);
    PolyMatrix S = syzygy_matrix(C);
    // for each syzygy (p; q), sum p_i m_i lands in both modules
    std::vector<ModuleElement> gens;
    for (int j = 0; j < S.cols; ++j) {
        ModuleElement v(M.ring, k);
        for (std::size_t i = 0; i < M.gens.size(); ++i)
            v = v + M.gens[i].times_poly(S.at(static_cast<int>(i), j));
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return buchberger(std::move(gens), k, M.ring);
}

Ideal colon_ideal(const SubmoduleGB& M, const ModuleElement& v) {
    check_same_ring(M.ring, v.ring);
    if (M.rank != v.rank()) throw ContextError("rank mismatch in colon ideal");
    std::vector<ModuleElement> cols;
    cols.push_back(v);
    for (const auto& g : M.gens) cols.push_back(g);
    PolyMatrix C = PolyMatrix::from_cols(M.ring, M.rank, cols);
    PolyMatrix S = syzygy_matrix(C);
    std::vector<Polynomial> gens;
    for (int j = 0; j < S.cols; ++j) gens.push_back(S.at(0, j));
    return ideal_from_polys(std::move(gens), M.ring);
}

Ideal annihilator_quotient(const SubmoduleGB& Mc, const SubmoduleGB& M) {
    check_same_ring(Mc.ring, M.ring);
    if (Mc.rank != M.rank) throw ContextError("rank mismatch in annihilator");
    for (const auto& g : M.gens)
        if (!member(g, Mc)) throw std::invalid_argument("annihilator_quotient requires M inside Mc");
    int s = static_cast<int>(Mc.gens.size());
    if (s == 0) return unit_ideal(M.ring);
    // one stacked colon instead of intersecting per-generator colon ideals:
    // r annihilates the quotient iff r * (g_1; ...; g_s) lies in M + ... + M
    int k = M.rank;
    std::vector<ModuleElement> cols;
    ModuleElement stacked(M.ring, s * k);
    for (int a = 0; a < s; ++a)
        for (int i = 0; i < k; ++i) stacked.comps[a * k + i] = Mc.gens[a].comps[i];
    cols.push_back(std::move(stacked));
    for (int a = 0; a < s; ++a)
        for (const auto& g : M.gens) {
            ModuleElement e(M.ring, s * k);
            for (int i = 0; i < k; ++i) e.comps[a * k + i] = g.comps[i];
            cols.push_back(std::move(e));
        }
    PolyMatrix C = PolyMatrix::from_cols(M.ring, s * k, cols);
    PolyMatrix S = syzygy_matrix(C);
    std::vector<Polynomial> gens;
    for (int j = 0; j < S.cols; ++j) gens.push_back(S.at(0, j));
    return ideal_from_polys(std::move(gens), M.ring);
}

SubmoduleGB colon_by_poly(const SubmoduleGB& M, const Polynomial& g) {
    check_same_ring(M.ring, g.ring());
    if (g.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
    int k = M.rank;
    std::vector<ModuleElement> scaled;
    for (int i = 0; i < k; ++i) {
        ModuleElement e(M.ring, k);
        e.comps[i] = g;
        scaled.push_back(std::move(e));
    }
    SubmoduleGB gRk = buchberger(std::move(scaled), k, M.ring);
    SubmoduleGB inter = intersect_modules(M, gRk);
    std::vector<ModuleElement> divided;
    for (const auto& v : inter.gens) {
        ModuleElement q(M.ring, k);
        for (int i = 0; i < k; ++i)
            q.comps[i] = v.comps[i].is_zero() ? Polynomial(M.ring) : divide_exact(v.comps[i], g);
        divided.push_back(std::move(q));
    }
    return buchberger(std::move(divided), k, M.ring);
}

Saturation saturate(const SubmoduleGB& M, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
    if (g.is_constant()) return {M, 0};
    SubmoduleGB current = M;
    int m = 0;
    while (true) {
        SubmoduleGB next = colon_by_poly(current, g);
        if (module_equal(current, next)) return {current, m};
        current = std::move(next);
        ++m;
    }
}

bool module_equal(const SubmoduleGB& M, const SubmoduleGB& N) {
    check_same_ring(M.ring, N.ring);
    if (M.rank != N.rank) throw ContextError("rank mismatch in module comparison");
    bool by_membership = true;
    for (const auto& g : M.gens)
        if (!member(g, N)) {
            by_membership = false;
            break;
        }
    if (by_membership)
        for (const auto& h : N.gens)
            if (!member(h, M)) {
                by_membership = false;
                break;
            }
    bool by_basis = M.gens.size() == N.gens.size();
    for (std::size_t i = 0; by_basis && i < M.gens.size(); ++i)
        if (!(M.gens[i] == N.gens[i])) by_basis = false;
    if (by_membership != by_basis)
        throw std::logic_error("module equality routes disagree; reduced basis is not canonical");
    return by_basis;
}

SubmoduleGB tf_closure(const PolyMatrix& A) {
    PolyMatrix S = syzygy_matrix(A);
    if (S.cols == 0) return full_module(A.ring, A.cols);
    PolyMatrix T = syzygy_matrix(S.transpose());
    return column_module(T);
}

Ideal multiply_ideals(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring, b.ring);
    if (a.rank != 1 || b.rank != 1) throw ContextError("ideal product needs rank-1 modules");
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens)
        for (const auto& g : b.gens) gens.push_back(f.comps[0] * g.comps[0]);
    return ideal_from_polys(std::move(gens), a.ring);
}

Ideal ideal_power(const Ideal& I, int m) {
    if (m < 0) throw std::invalid_argument("negative ideal power");
    Ideal acc = unit_ideal(I.ring);
    for (int i = 0; i < m; ++i) acc = multiply_ideals(acc, I);
    return acc;
}

Ideal intersect_ideals(const Ideal& a, const Ideal& b) { return intersect_modules(a, b); }

Ideal unit_ideal(RingPtr ring) {
    return ideal_from_polys({Polynomial::constant(ring, Rational(1))}, ring);
}

}  // namespace syzkit
