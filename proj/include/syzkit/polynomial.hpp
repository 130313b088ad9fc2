#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syzkit/monomial.hpp"
#include "syzkit/rational.hpp"
#include "syzkit/ring.hpp"

namespace syzkit {

struct Term {
    Rational coeff;
    Monomial mono;
};

// Exact multivariate polynomial over Q. Terms are kept strictly descending
// under the ring's monomial order with no zero coefficients, so equal
// polynomials have identical representations.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial constant(RingPtr ring, Rational c);
    static Polynomial variable(RingPtr ring, int index, int power = 1);
    static Polynomial term(RingPtr ring, Rational c, Monomial m);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
        return terms_[0];
    }

    int total_degree() const;                  // -1 for the zero polynomial
    std::optional<int> homogeneous_degree() const;  // nullopt unless all terms share a degree

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Rational& c, const Monomial& m) const;

    friend bool operator==(const Polynomial& p, const Polynomial& q);

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial parse_poly(const std::string& text, const RingPtr& ring);
std::string format_poly(const Polynomial& p);
GaussianRational evaluate_poly(const Polynomial& p, std::span<const GaussianRational> point);

// Exact division p / g; throws if g does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& g);

}  // namespace syzkit
