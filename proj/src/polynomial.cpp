#include "syzkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace syzkit {

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const MonomialOrder& ord = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.mono, b.mono) > 0;
    });
    Polynomial p(ring);
    for (auto& t : terms) {
        if (t.mono.arity() != ring->nvars()) throw ContextError("monomial arity does not match ring");
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(c), Monomial::one(ring->nvars())});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index, int power) {
    if (index < 0 || index >= ring->nvars()) throw std::invalid_argument("variable index out of range");
    if (power < 0) throw std::invalid_argument("negative exponent");
    Monomial m = Monomial::one(ring->nvars());
    m.exp[index] = power;
    return term(std::move(ring), Rational(1), std::move(m));
}

Polynomial Polynomial::term(RingPtr ring, Rational c, Monomial m) {
    if (m.arity() != ring->nvars()) throw ContextError("monomial arity does not match ring");
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(c), std::move(m)});
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({Rational(-t.coeff), t.mono});
    return r;
}

namespace {

// Merge two descending term lists; sign = +1 for addition, -1 for subtraction.
std::vector<Term> merge_terms(const RingPtr& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, int sign) {
    const MonomialOrder& ord = ring->order();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size())
            c = -1;
        else if (j == b.size())
            c = 1;
        else
            c = ord.compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({Rational(sign * b[j].coeff), b[j].mono});
            ++j;
        } else {
            Rational s = a[i].coeff + sign * b[j].coeff;
            if (s != 0) out.push_back({std::move(s), a[i].mono});
            ++i;
            ++j;
        }
    }
    return out;
}

Polynomial from_sorted(RingPtr ring, std::vector<Term> terms) {
    return Polynomial::from_terms(std::move(ring), std::move(terms));
}

}  // namespace

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    check_same_ring(p.ring_, q.ring_);
    return from_sorted(p.ring_, merge_terms(p.ring_, p.terms_, q.terms_, 1));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    check_same_ring(p.ring_, q.ring_);
    return from_sorted(p.ring_, merge_terms(p.ring_, p.terms_, q.terms_, -1));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    check_same_ring(p.ring_, q.ring_);
    const MonomialOrder& ord = p.ring_->order();
    auto desc = [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; };
    std::map<Monomial, Rational, decltype(desc)> acc(desc);
    for (const auto& s : p.terms_)
        for (const auto& t : q.terms_) {
            Monomial m = s.mono.times(t.mono);
            Rational c = s.coeff * t.coeff;
            auto [it, inserted] = acc.emplace(std::move(m), c);
            if (!inserted) it->second += c;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({std::move(c), m});
    return from_sorted(p.ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({Rational(c * t.coeff), t.mono});
    return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({Rational(c * t.coeff), t.mono.times(m)});
    return r;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
    if (p.ring_.get() != q.ring_.get()) return false;
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
        if (!(p.terms_[i].coeff == q.terms_[i].coeff && p.terms_[i].mono == q.terms_[i].mono))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Parsing. Grammar: sums of products of signed powers; '^' > '*' > additive;
// no implicit multiplication.
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    const RingPtr& ring;
    std::size_t pos = 0;

    explicit Parser(const std::string& t, const RingPtr& r) : text(t), ring(r) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    Polynomial parse_expression() {
        Polynomial acc = parse_product();
        while (true) {
            skip_ws();
            if (accept('+'))
                acc = acc + parse_product();
            else if (accept('-'))
                acc = acc - parse_product();
            else
                break;
        }
        return acc;
    }

    Polynomial parse_product() {
        Polynomial acc = parse_signed_power();
        while (accept('*')) acc = acc * parse_signed_power();
        return acc;
    }

    Polynomial parse_signed_power() {
        skip_ws();
        int sign = 1;
        while (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            if (text[pos] == '-') sign = -sign;
            ++pos;
            skip_ws();
        }
        Polynomial base = parse_atom();
        if (accept('^')) {
            int e = parse_nat();
            Polynomial acc = Polynomial::constant(ring, Rational(1));
            for (int i = 0; i < e; ++i) acc = acc * base;
            base = acc;
        }
        return sign < 0 ? -base : base;
    }

    int parse_nat() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected exponent");
        std::string digits = text.substr(start, pos - start);
        if (digits.size() > 4) fail("exponent too large");
        return std::stoi(digits);
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expression();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        fail("unexpected character");
    }

    Polynomial parse_number() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        mpz_class num(text.substr(start, pos - start));
        mpz_class den(1);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
            den = mpz_class(text.substr(dstart, pos - dstart));
            if (den == 0) fail("zero denominator in coefficient");
        }
        Rational q(num, den);
        q.canonicalize();
        return Polynomial::constant(ring, std::move(q));
    }

    Polynomial parse_variable() {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        int idx = ring->var_index(name);
        if (idx < 0) {
            pos = start;
            fail("unknown variable '" + name + "'");
        }
        return Polynomial::variable(ring, idx);
    }
};

}  // namespace

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
    Parser p(text, ring);
    Polynomial result = p.parse_expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return result;
}

std::string format_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const auto& vars = p.ring()->variables();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational a = abs(t.coeff);
        if (t.coeff < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        bool coeff_printed = false;
        if (a != 1 || t.mono.is_one()) {
            os << a;
            coeff_printed = true;
        }
        bool any_var = false;
        for (int i = 0; i < t.mono.arity(); ++i) {
            int e = t.mono.exp[i];
            if (e == 0) continue;
            if (coeff_printed || any_var) os << '*';
            os << vars[i];
            if (e > 1) os << '^' << e;
            any_var = true;
        }
    }
    return os.str();
}

GaussianRational evaluate_poly(const Polynomial& p, std::span<const GaussianRational> point) {
    int n = p.ring()->nvars();
    if (static_cast<int>(point.size()) != n)
        throw ContextError("evaluation point arity does not match ring");
    // powers[i][e] = point[i]^e, filled on demand
    std::vector<std::vector<GaussianRational>> powers(n);
    for (int i = 0; i < n; ++i) powers[i].push_back(GaussianRational{Rational(1)});
    auto power = [&](int i, int e) -> const GaussianRational& {
        auto& col = powers[i];
        while (static_cast<int>(col.size()) <= e) col.push_back(col.back() * point[i]);
        return col[e];
    };
    GaussianRational acc;
    for (const auto& t : p.terms()) {
        GaussianRational v{t.coeff};
        for (int i = 0; i < n; ++i)
            if (t.mono.exp[i] > 0) v = v * power(i, t.mono.exp[i]);
        acc = acc + v;
    }
    return acc;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& g) {
    check_same_ring(p.ring(), g.ring());
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    Polynomial rem = p;
    std::vector<Term> quotient;
    const Term& glt = g.leading_term();
    while (!rem.is_zero()) {
        const Term& rlt = rem.leading_term();
        if (!glt.mono.divides(rlt.mono))
            throw std::invalid_argument("polynomial division is not exact");
        Rational c = rlt.coeff / glt.coeff;
        Monomial m = rlt.mono.quotient_by(glt.mono);
        quotient.push_back({c, m});
        rem = rem - g.times_term(c, m);
    }
    return Polynomial::from_terms(p.ring(), std::move(quotient));
}

}  // namespace syzkit
