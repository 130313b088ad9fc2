#include "syzkit/rational.hpp"

#include <cctype>
#include <sstream>

namespace syzkit {

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected rational literal", 0);
    std::string num = text.substr(start, i - start);
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t dstart = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == dstart) throw ParseError("expected denominator", i);
        den = text.substr(dstart, i - dstart);
    }
    if (i != text.size()) throw ParseError("trailing characters after rational", i);
    mpz_class den_z(den);
    if (den_z == 0) throw ParseError("zero denominator", 0);
    Rational q{mpz_class(num), den_z};
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

std::string format_rational(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

GaussianRational parse_gaussian(const std::string& text) {
    // Accepted forms: "a", "b*i", "i", "a+b*i", "a-i", ... with a, b rational.
    struct Part {
        Rational value;
        bool imaginary;
    };
    std::vector<Part> parts;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty coordinate", 0);
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between coordinate parts", i);
        }
        first = false;
        if (i < text.size() && text[i] == 'i') {
            ++i;
            parts.push_back({Rational(sign), true});
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        if (i == start) throw ParseError("expected rational or 'i'", i);
        Rational mag = parse_rational(text.substr(start, i - start));
        skip_ws();
        bool imag = false;
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
            if (i >= text.size() || text[i] != 'i')
                throw ParseError("expected 'i' after '*'", i);
            ++i;
            imag = true;
        } else if (i < text.size() && text[i] == 'i') {
            ++i;
            imag = true;
        }
        if (sign < 0) mag = -mag;
        parts.push_back({mag, imag});
    }
    GaussianRational z;
    for (auto& p : parts) {
        if (p.imaginary)
            z.im += p.value;
        else
            z.re += p.value;
    }
    return z;
}

std::string format_gaussian(const GaussianRational& z) {
    if (z.is_zero()) return "0";
    std::string out;
    if (z.re != 0) out = format_rational(z.re);
    if (z.im != 0) {
        Rational a = abs(z.im);
        std::string mag = a == 1 ? "i" : format_rational(a) + "*i";
        if (out.empty())
            out = (z.im < 0 ? "-" : "") + mag;
        else
            out += (z.im < 0 ? "-" : "+") + mag;
    }
    return out;
}

GaussianRational gaussian_pow(const GaussianRational& z, unsigned e) {
    GaussianRational r{Rational(1)};
    GaussianRational base = z;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

}  // namespace syzkit
