#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "syzkit/errors.hpp"

namespace syzkit {

// Power product x^a. Exponents are dense; n is small in every workload here.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

    static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }

    int arity() const { return static_cast<int>(exp.size()); }
    int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
    bool is_one() const {
        return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    }

    Monomial times(const Monomial& m) const {
        check_arity(m);
        Monomial r = *this;
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
        return r;
    }

    // true iff *this divides m.
    bool divides(const Monomial& m) const {
        check_arity(m);
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > m.exp[i]) return false;
        return true;
    }

    // this / m; caller must ensure divisibility.
    Monomial quotient_by(const Monomial& m) const {
        check_arity(m);
        Monomial r = *this;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            r.exp[i] -= m.exp[i];
            if (r.exp[i] < 0) throw std::invalid_argument("monomial quotient is not a monomial");
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_arity(b);
        Monomial r = a;
        for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
        return r;
    }

    bool coprime_with(const Monomial& m) const {
        check_arity(m);
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > 0 && m.exp[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }

    void check_arity(const Monomial& m) const {
        if (exp.size() != m.exp.size()) throw ContextError("monomial arity mismatch");
    }
};

enum class OrderKind { grevlex, lex };

// Ring monomial order. elim_block > 0 makes the first elim_block variables an
// elimination block: any monomial involving them beats any monomial that does
// not, which is what the auxiliary-variable tricks rely on.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int elim_block = 0;

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
};

// Position-over-term with lower component index taking precedence; the ring
// order breaks ties inside a component. Fixed engine-wide for determinism.
struct ModuleTermRef {
    int component;
    const Monomial* mono;
};

int module_term_compare(const MonomialOrder& ring_order, int comp_a, const Monomial& mono_a,
                        int comp_b, const Monomial& mono_b);

}  // namespace syzkit
