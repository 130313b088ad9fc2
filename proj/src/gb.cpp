#include "syzkit/gb.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace syzkit {

namespace {

int lt_compare(const RingPtr& ring, const ModuleElement& a, const ModuleElement& b) {
    auto la = a.leading_term();
    auto lb = b.leading_term();
    if (!la && !lb) return 0;
    if (!la) return -1;
    if (!lb) return 1;
    return module_term_compare(ring->order(), la->component, la->mono, lb->component, lb->mono);
}

void sort_desc_by_lt(const RingPtr& ring, std::vector<ModuleElement>& v) {
    std::sort(v.begin(), v.end(), [&](const ModuleElement& a, const ModuleElement& b) {
        int c = lt_compare(ring, a, b);
        if (c != 0) return c > 0;
        // total tie-break so equal-LT generators sort deterministically
        for (int i = 0; i < a.rank(); ++i) {
            const auto& ta = a.comps[i].terms();
            const auto& tb = b.comps[i].terms();
            for (std::size_t j = 0; j < std::min(ta.size(), tb.size()); ++j) {
                int mc = ring->order().compare(ta[j].mono, tb[j].mono);
                if (mc != 0) return mc > 0;
                if (ta[j].coeff != tb[j].coeff) return ta[j].coeff > tb[j].coeff;
            }
            if (ta.size() != tb.size()) return ta.size() > tb.size();
        }
        return false;
    });
}

struct PendingPair {
    int degree;  // total degree of the lcm of the leading monomials
    int i, j;
    friend bool operator<(const PendingPair& a, const PendingPair& b) {
        return std::tie(a.degree, a.i, a.j) < std::tie(b.degree, b.i, b.j);
    }
    friend bool operator==(const PendingPair& a, const PendingPair& b) {
        return a.i == b.i && a.j == b.j;
    }
};

// Divisors bucketed by leading-term component, in basis order.
struct ReducerIndex {
    std::vector<std::vector<std::pair<const Monomial*, const ModuleElement*>>> by_comp;

    ReducerIndex(const std::vector<ModuleElement>& gens, int rank, int skip) : by_comp(rank) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (static_cast<int>(g) == skip) continue;
            auto lt = gens[g].leading_term();
            if (!lt) continue;
            const Term& t = gens[g].comps[lt->component].leading_term();
            by_comp[lt->component].emplace_back(&t.mono, &gens[g]);
        }
    }

    const ModuleElement* find(const ModuleTerm& lt) const {
        for (const auto& [mono, elem] : by_comp[lt.component])
            if (mono->divides(lt.mono)) return elem;
        return nullptr;
    }
};

// Full division with fraction-free arithmetic: the working value is kept at
// integer coefficients of small content and a running scale records the
// multiple of v it represents. Reduction is linear, so dividing the collected
// tail by the scale at the end returns the exact normal form of v.
ModuleElement reduce_full(const ModuleElement& v, const std::vector<ModuleElement>& gens,
                          int skip = -1) {
    ReducerIndex index(gens, v.rank(), skip);
    ModuleElement work = v;
    Rational scale = 1;  // work == scale * (v - <module elements>)

    auto strip_content = [&] {
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& p : work.comps)
            for (const auto& t : p.terms()) {
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
            }
        if (num_gcd == 0) return;
        Rational c{den_lcm, num_gcd};
        c.canonicalize();
        if (c == 1) return;
        for (auto& p : work.comps) p = p.scaled(c);
        scale *= c;
    };
    strip_content();

    struct TailTerm {
        int comp;
        Term term;
        Rational scale_at_extraction;
    };
    std::vector<TailTerm> tail;
    while (!work.is_zero()) {
        ModuleTerm lt = *work.leading_term();
        const ModuleElement* reducer = index.find(lt);
        if (reducer) {
            auto glt = reducer->leading_term();
            // scale work so the leading terms cancel over the integers
            mpz_class a_num = lt.coeff.get_num() * glt->coeff.get_den();
            mpz_class b_num = glt->coeff.get_num() * lt.coeff.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a_num.get_mpz_t(), b_num.get_mpz_t());
            Rational work_factor{b_num / g, 1};
            Rational red_factor{a_num / g, 1};
            if (work_factor < 0) {
                work_factor = -work_factor;
                red_factor = -red_factor;
            }
            Monomial m = lt.mono.quotient_by(glt->mono);
            if (work_factor != 1) {
                for (auto& p : work.comps) p = p.scaled(work_factor);
                scale *= work_factor;
            }
            work = work - reducer->times_term(red_factor, m);
            strip_content();
        } else {
            tail.push_back({lt.component, Term{lt.coeff, lt.mono}, scale});
            work.comps[lt.component] =
                work.comps[lt.component] - Polynomial::term(v.ring, lt.coeff, lt.mono);
        }
    }
    ModuleElement r(v.ring, v.rank());
    std::vector<std::vector<Term>> per_comp(v.rank());
    for (auto& t : tail)
        per_comp[t.comp].push_back({Rational(t.term.coeff / t.scale_at_extraction), t.term.mono});
    for (int i = 0; i < v.rank(); ++i)
        r.comps[i] = Polynomial::from_terms(v.ring, std::move(per_comp[i]));
    return r;
}

}  // namespace

SubmoduleGB buchberger(std::vector<ModuleElement> input, int rank, RingPtr ring,
                       const BuchbergerOptions& opts) {
    for (const auto& g : input) {
        check_same_ring(ring, g.ring);
        if (g.rank() != rank) throw ContextError("generator rank mismatch");
    }
    std::vector<ModuleElement> basis;
    for (auto& g : input)
        if (!g.is_zero()) basis.push_back(normalize_content(g));
    sort_desc_by_lt(ring, basis);
    basis.erase(std::unique(basis.begin(), basis.end(),
                            [](const ModuleElement& a, const ModuleElement& b) { return a == b; }),
                basis.end());

    std::set<PendingPair> pending;
    auto lcm_of = [&](int i, int j) {
        auto li = basis[i].leading_term();
        auto lj = basis[j].leading_term();
        return Monomial::lcm(li->mono, lj->mono);
    };
    auto add_pairs_for = [&](int j) {
        auto lj = basis[j].leading_term();
        for (int i = 0; i < j; ++i) {
            auto li = basis[i].leading_term();
            if (li->component != lj->component) continue;
            pending.insert({Monomial::lcm(li->mono, lj->mono).degree(), i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) add_pairs_for(j);

    auto in_pending = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        Monomial l = lcm_of(i, j);
        return pending.count({l.degree(), i, j}) > 0;
    };

    while (!pending.empty()) {
        PendingPair pr = *pending.begin();
        pending.erase(pending.begin());
        int i = pr.i, j = pr.j;
        auto li = basis[i].leading_term();
        auto lj = basis[j].leading_term();
        Monomial l = Monomial::lcm(li->mono, lj->mono);

        if (opts.product_criterion && rank == 1 && li->mono.coprime_with(lj->mono)) continue;
        if (opts.chain_criterion) {
            bool skip = false;
            for (int g = 0; g < static_cast<int>(basis.size()) && !skip; ++g) {
                if (g == i || g == j) continue;
                auto lg = basis[g].leading_term();
                if (lg->component != li->component || !lg->mono.divides(l)) continue;
                if (!in_pending(std::min(g, i), std::max(g, i)) &&
                    !in_pending(std::min(g, j), std::max(g, j)))
                    skip = true;
            }
            if (skip) continue;
        }

        ModuleElement spair = basis[i].times_term(lj->coeff, l.quotient_by(li->mono)) -
                              basis[j].times_term(li->coeff, l.quotient_by(lj->mono));
        ModuleElement rem = reduce_full(spair, basis);
        if (!rem.is_zero()) {
            basis.push_back(normalize_content(rem));
            add_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }

    // minimalize: drop generators whose leading term another one divides
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (!keep[a]) continue;
        auto la = basis[a].leading_term();
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (a == b || !keep[b]) continue;
            auto lb = basis[b].leading_term();
            if (la->component == lb->component && lb->mono.divides(la->mono)) {
                if (lb->mono == la->mono && b > a) continue;  // equal LTs: keep the earlier one
                keep[a] = 0;
                break;
            }
        }
    }
    std::vector<ModuleElement> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (keep[a]) minimal.push_back(basis[a]);

    // tail-reduce until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < minimal.size(); ++a) {
            ModuleElement r = reduce_full(minimal[a], minimal, static_cast<int>(a));
            r = normalize_content(r);
            if (!(r == minimal[a])) {
                minimal[a] = std::move(r);
                changed = true;
            }
        }
    }
    sort_desc_by_lt(ring, minimal);

    SubmoduleGB gb;
    gb.ring = std::move(ring);
    gb.rank = rank;
    gb.gens = std::move(minimal);
    gb.reduced = true;
    return gb;
}

ModuleElement normal_form(const ModuleElement& v, const SubmoduleGB& gb) {
    check_same_ring(v.ring, gb.ring);
    if (v.rank() != gb.rank) throw ContextError("rank mismatch in normal form");
    return reduce_full(v, gb.gens);
}

bool member(const ModuleElement& v, const SubmoduleGB& gb) {
    return normal_form(v, gb).is_zero();
}

namespace {

// Basis element of the column module together with the combination of the
// original columns it came from. The payload is bookkeeping only: it never
// drives the order, is never a reduction target, and spawns no pairs.
struct Tracked {
    ModuleElement vec;      // element of R^rows
    ModuleElement payload;  // element of R^cols with columns * payload == vec
};

// Joint content normalization; scaling both blocks by the same factor keeps
// the defining invariant intact.
void strip_tracked(Tracked& t) {
    mpz_class num_gcd = 0, den_lcm = 1;
    auto scan = [&](const ModuleElement& m) {
        for (const auto& p : m.comps)
            for (const auto& term : p.terms()) {
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), term.coeff.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), term.coeff.get_den().get_mpz_t());
            }
    };
    scan(t.vec);
    scan(t.payload);
    if (num_gcd == 0) return;
    Rational c{den_lcm, num_gcd};
    c.canonicalize();
    auto lt = t.vec.leading_term();
    if (!lt) lt = t.payload.leading_term();
    if (lt && lt->coeff * c < 0) c = -c;
    if (c == 1) return;
    for (auto& p : t.vec.comps) p = p.scaled(c);
    for (auto& p : t.payload.comps) p = p.scaled(c);
}

// Leading-term reduction of the vector block, mirrored onto the payload.
// Stops at the first irreducible leading term; elements that belong to the
// module reach zero this way, which is all the syzygy collection needs.
void top_reduce_tracked(Tracked& t, const std::vector<Tracked>& basis) {
    while (!t.vec.is_zero()) {
        ModuleTerm lt = *t.vec.leading_term();
        const Tracked* reducer = nullptr;
        for (const auto& b : basis) {
            auto blt = b.vec.leading_term();
            if (blt->component == lt.component && blt->mono.divides(lt.mono)) {
                reducer = &b;
                break;
            }
        }
        if (!reducer) return;
        auto blt = reducer->vec.leading_term();
        mpz_class a_num = lt.coeff.get_num() * blt->coeff.get_den();
        mpz_class b_num = blt->coeff.get_num() * lt.coeff.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a_num.get_mpz_t(), b_num.get_mpz_t());
        Rational self_factor{b_num / g, 1};
        Rational red_factor{a_num / g, 1};
        if (self_factor < 0) {
            self_factor = -self_factor;
            red_factor = -red_factor;
        }
        Monomial m = lt.mono.quotient_by(blt->mono);
        if (self_factor != 1) {
            for (auto& p : t.vec.comps) p = p.scaled(self_factor);
            for (auto& p : t.payload.comps) p = p.scaled(self_factor);
        }
        t.vec = t.vec - reducer->vec.times_term(red_factor, m);
        t.payload = t.payload - reducer->payload.times_term(red_factor, m);
        strip_tracked(t);
    }
}

}  // namespace

PolyMatrix syzygy_matrix(const PolyMatrix& A) {
    const RingPtr& ring = A.ring;
    int l = A.rows, k = A.cols;
    if (k == 0) return PolyMatrix(ring, 0, 0);
    if (l == 0) return PolyMatrix::identity(ring, k);

    std::vector<Tracked> basis;
    // collected syzygies are folded into a running reduced basis immediately;
    // raw pair transcripts are hugely redundant and would choke a single
    // final reduction
    SubmoduleGB collected{ring, k, {}, true};
    auto collect = [&](const ModuleElement& sigma) {
        ModuleElement r = normal_form(sigma, collected);
        if (r.is_zero()) return;
        std::vector<ModuleElement> gens = collected.gens;
        gens.push_back(std::move(r));
        collected = buchberger(std::move(gens), k, ring);
    };
    for (int j = 0; j < k; ++j) {
        Tracked t{A.col(j), ModuleElement(ring, k)};
        t.payload.comps[j] = Polynomial::constant(ring, Rational(1));
        if (t.vec.is_zero()) {
            collect(t.payload);
        } else {
            strip_tracked(t);
            basis.push_back(std::move(t));
        }
    }

    // every processed pair contributes: a new basis element when the
    // reduction survives, a syzygy of the original columns when it dies
    std::set<PendingPair> pending;
    auto add_pairs_for = [&](int j) {
        auto lj = basis[j].vec.leading_term();
        for (int i = 0; i < j; ++i) {
            auto li = basis[i].vec.leading_term();
            if (li->component != lj->component) continue;
            pending.insert({Monomial::lcm(li->mono, lj->mono).degree(), i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) add_pairs_for(j);

    auto in_pending = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        auto li = basis[i].vec.leading_term();
        auto lj = basis[j].vec.leading_term();
        return pending.count({Monomial::lcm(li->mono, lj->mono).degree(), i, j}) > 0;
    };

    while (!pending.empty()) {
        PendingPair pr = *pending.begin();
        pending.erase(pending.begin());
        const Tracked& bi = basis[pr.i];
        const Tracked& bj = basis[pr.j];
        auto li = bi.vec.leading_term();
        auto lj = bj.vec.leading_term();
        Monomial lcm = Monomial::lcm(li->mono, lj->mono);

        // chain criterion; the retained transcripts still generate the
        // syzygy module because the skipped pair's leading-term relation is
        // a combination of the two retained ones
        bool skip = false;
        for (int g = 0; g < static_cast<int>(basis.size()) && !skip; ++g) {
            if (g == pr.i || g == pr.j) continue;
            auto lg = basis[g].vec.leading_term();
            if (lg->component != li->component || !lg->mono.divides(lcm)) continue;
            if (!in_pending(g, pr.i) && !in_pending(g, pr.j)) skip = true;
        }
        if (skip) continue;

        Monomial mi = lcm.quotient_by(li->mono);
        Monomial mj = lcm.quotient_by(lj->mono);
        Tracked spair{bi.vec.times_term(lj->coeff, mi) - bj.vec.times_term(li->coeff, mj),
                      bi.payload.times_term(lj->coeff, mi) - bj.payload.times_term(li->coeff, mj)};
        top_reduce_tracked(spair, basis);
        if (spair.vec.is_zero()) {
            if (!spair.payload.is_zero()) collect(normalize_content(spair.payload));
        } else {
            // shrinking the payload by known kernel elements keeps the
            // invariant: they contribute nothing under the column map
            spair.payload = normal_form(spair.payload, collected);
            strip_tracked(spair);
            basis.push_back(std::move(spair));
            add_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }

    return PolyMatrix::from_cols(ring, k, collected.gens);
}

SubmoduleGB row_module(const PolyMatrix& A) { return buchberger(A.row_elements(), A.cols, A.ring); }

SubmoduleGB column_module(const PolyMatrix& A) {
    return buchberger(A.col_elements(), A.rows, A.ring);
}

SubmoduleGB full_module(RingPtr ring, int rank) {
    std::vector<ModuleElement> gens;
    for (int i = 0; i < rank; ++i) {
        ModuleElement e(ring, rank);
        e.comps[i] = Polynomial::constant(ring, Rational(1));
        gens.push_back(std::move(e));
    }
    return buchberger(std::move(gens), rank, ring);
}

Ideal ideal_from_polys(std::vector<Polynomial> gens, RingPtr ring) {
    std::vector<ModuleElement> elems;
    elems.reserve(gens.size());
    for (auto& p : gens) {
        check_same_ring(ring, p.ring());
        elems.emplace_back(ring, std::vector<Polynomial>{std::move(p)});
    }
    return buchberger(std::move(elems), 1, std::move(ring));
}

bool is_unit_ideal(const Ideal& I) {
    if (I.rank != 1) throw ContextError("not an ideal");
    return I.gens.size() == 1 && I.gens[0].comps[0].is_constant() && !I.gens[0].comps[0].is_zero();
}

}  // namespace syzkit
