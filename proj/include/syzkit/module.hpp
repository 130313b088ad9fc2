#pragma once

#include <optional>
#include <vector>

#include "syzkit/polynomial.hpp"

namespace syzkit {

// Leading term of a module element under the engine's position-over-term order.
struct ModuleTerm {
    int component;
    Rational coeff;
    Monomial mono;
};

// Element of the free module R^k.
struct ModuleElement {
    RingPtr ring;
    std::vector<Polynomial> comps;

    ModuleElement(RingPtr r, int rank)
        : ring(std::move(r)), comps(static_cast<std::size_t>(rank), Polynomial(ring)) {}
    ModuleElement(RingPtr r, std::vector<Polynomial> c) : ring(std::move(r)), comps(std::move(c)) {
        for (const auto& p : comps) check_same_ring(ring, p.ring());
    }

    int rank() const { return static_cast<int>(comps.size()); }
    bool is_zero() const {
        for (const auto& p : comps)
            if (!p.is_zero()) return false;
        return true;
    }

    // Position-over-term, lower component first: the leading term is the
    // leading term of the first nonzero component.
    std::optional<ModuleTerm> leading_term() const {
        for (int i = 0; i < rank(); ++i) {
            if (!comps[i].is_zero()) {
                const Term& t = comps[i].leading_term();
                return ModuleTerm{i, t.coeff, t.mono};
            }
        }
        return std::nullopt;
    }

    // All components homogeneous of one shared total degree.
    std::optional<int> homogeneous_degree() const;

    ModuleElement operator-() const;
    friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
    friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
    ModuleElement times_term(const Rational& c, const Monomial& m) const;
    ModuleElement times_poly(const Polynomial& p) const;
    friend bool operator==(const ModuleElement& a, const ModuleElement& b);
};

// Scales so all coefficients are coprime integers and the leading coefficient
// is positive; the canonical form every emitted generator uses.
ModuleElement normalize_content(const ModuleElement& v);
Polynomial normalize_content(const Polynomial& p);

// Dense l x k matrix of polynomials sharing one ring context.
struct PolyMatrix {
    RingPtr ring;
    int rows = 0;
    int cols = 0;
    std::vector<Polynomial> entries;  // row-major

    PolyMatrix(RingPtr r, int nrows, int ncols)
        : ring(std::move(r)),
          rows(nrows),
          cols(ncols),
          entries(static_cast<std::size_t>(nrows) * ncols, Polynomial(ring)) {}

    const Polynomial& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
    Polynomial& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }

    static PolyMatrix identity(RingPtr r, int k);
    static PolyMatrix from_rows(RingPtr r, int ncols, const std::vector<ModuleElement>& rows);
    static PolyMatrix from_cols(RingPtr r, int nrows, const std::vector<ModuleElement>& cols);

    PolyMatrix transpose() const;
    ModuleElement row(int i) const;
    ModuleElement col(int j) const;
    std::vector<ModuleElement> row_elements() const;
    std::vector<ModuleElement> col_elements() const;
    bool is_zero() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
};

}  // namespace syzkit
