#include "syzkit/module.hpp"

namespace syzkit {

std::optional<int> ModuleElement::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& p : comps) {
        if (p.is_zero()) continue;
        auto d = p.homogeneous_degree();
        if (!d) return std::nullopt;
        if (deg && *deg != *d) return std::nullopt;
        deg = d;
    }
    return deg;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement r(ring, rank());
    for (int i = 0; i < rank(); ++i) r.comps[i] = -comps[i];
    return r;
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
    check_same_ring(a.ring, b.ring);
    if (a.rank() != b.rank()) throw ContextError("module element rank mismatch");
    ModuleElement r(a.ring, a.rank());
    for (int i = 0; i < a.rank(); ++i) r.comps[i] = a.comps[i] + b.comps[i];
    return r;
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
    check_same_ring(a.ring, b.ring);
    if (a.rank() != b.rank()) throw ContextError("module element rank mismatch");
    ModuleElement r(a.ring, a.rank());
    for (int i = 0; i < a.rank(); ++i) r.comps[i] = a.comps[i] - b.comps[i];
    return r;
}

ModuleElement ModuleElement::times_term(const Rational& c, const Monomial& m) const {
    ModuleElement r(ring, rank());
    for (int i = 0; i < rank(); ++i) r.comps[i] = comps[i].times_term(c, m);
    return r;
}

ModuleElement ModuleElement::times_poly(const Polynomial& p) const {
    ModuleElement r(ring, rank());
    for (int i = 0; i < rank(); ++i) r.comps[i] = comps[i] * p;
    return r;
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
    if (a.ring.get() != b.ring.get() || a.rank() != b.rank()) return false;
    for (int i = 0; i < a.rank(); ++i)
        if (!(a.comps[i] == b.comps[i])) return false;
    return true;
}

ModuleElement normalize_content(const ModuleElement& v) {
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& p : v.comps) {
        for (const auto& t : p.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        }
    }
    if (num_gcd == 0) return v;  // zero element
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    auto lt = v.leading_term();
    if (lt && lt->coeff * scale < 0) scale = -scale;
    ModuleElement r(v.ring, v.rank());
    for (int i = 0; i < v.rank(); ++i) r.comps[i] = v.comps[i].scaled(scale);
    return r;
}

Polynomial normalize_content(const Polynomial& p) {
    ModuleElement wrapped(p.ring(), std::vector<Polynomial>{p});
    return normalize_content(wrapped).comps[0];
}

PolyMatrix PolyMatrix::identity(RingPtr r, int k) {
    PolyMatrix m(r, k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = Polynomial::constant(r, Rational(1));
    return m;
}

PolyMatrix PolyMatrix::from_rows(RingPtr r, int ncols, const std::vector<ModuleElement>& rows) {
    PolyMatrix m(r, static_cast<int>(rows.size()), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].rank() != ncols) throw ContextError("row rank mismatch");
        for (int j = 0; j < ncols; ++j) m.at(static_cast<int>(i), j) = rows[i].comps[j];
    }
    return m;
}

PolyMatrix PolyMatrix::from_cols(RingPtr r, int nrows, const std::vector<ModuleElement>& cols) {
    PolyMatrix m(r, nrows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].rank() != nrows) throw ContextError("column rank mismatch");
        for (int i = 0; i < nrows; ++i) m.at(i, static_cast<int>(j)) = cols[j].comps[i];
    }
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(ring, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

ModuleElement PolyMatrix::row(int i) const {
    ModuleElement r(ring, cols);
    for (int j = 0; j < cols; ++j) r.comps[j] = at(i, j);
    return r;
}

ModuleElement PolyMatrix::col(int j) const {
    ModuleElement c(ring, rows);
    for (int i = 0; i < rows; ++i) c.comps[i] = at(i, j);
    return c;
}

std::vector<ModuleElement> PolyMatrix::row_elements() const {
    std::vector<ModuleElement> out;
    out.reserve(rows);
    for (int i = 0; i < rows; ++i) out.push_back(row(i));
    return out;
}

std::vector<ModuleElement> PolyMatrix::col_elements() const {
    std::vector<ModuleElement> out;
    out.reserve(cols);
    for (int j = 0; j < cols; ++j) out.push_back(col(j));
    return out;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : entries)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    check_same_ring(a.ring, b.ring);
    if (a.cols != b.rows) throw ContextError("matrix dimension mismatch in product");
    PolyMatrix c(a.ring, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            Polynomial acc(a.ring);
            for (int l = 0; l < a.cols; ++l) acc = acc + a.at(i, l) * b.at(l, j);
            c.at(i, j) = acc;
        }
    return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.ring.get() != b.ring.get() || a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (!(a.entries[i] == b.entries[i])) return false;
    return true;
}

}  // namespace syzkit
