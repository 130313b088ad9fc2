#include "syzkit/monomial.hpp"

namespace syzkit {

namespace {

int grevlex_compare(const int* a, const int* b, int n) {
    int da = 0, db = 0;
    for (int i = 0; i < n; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // degree tie: the rightmost differing exponent decides, smaller wins
    for (int i = n - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int lex_compare(const int* a, const int* b, int n) {
    for (int i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    a.check_arity(b);
    int n = a.arity();
    const int* pa = a.exp.data();
    const int* pb = b.exp.data();
    if (elim_block > 0) {
        int blk = std::min(elim_block, n);
        int c = grevlex_compare(pa, pb, blk);
        if (c != 0) return c;
        pa += blk;
        pb += blk;
        n -= blk;
    }
    switch (kind) {
        case OrderKind::grevlex:
            return grevlex_compare(pa, pb, n);
        case OrderKind::lex:
            return lex_compare(pa, pb, n);
    }
    return 0;
}

int module_term_compare(const MonomialOrder& ring_order, int comp_a, const Monomial& mono_a,
                        int comp_b, const Monomial& mono_b) {
    if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;  // lower component is greater
    return ring_order.compare(mono_a, mono_b);
}

}  // namespace syzkit
