#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seqcodes/base_field.hpp"

namespace seqcodes {

// Dense univariate polynomial over GF(q), lowest degree first. The zero
// polynomial has no coefficients and degree -1.
class Poly {
public:
    explicit Poly(BaseFieldPtr field);
    Poly(BaseFieldPtr field, std::vector<Sym> coeffs);

    static Poly constant(BaseFieldPtr field, Sym c);
    static Poly monomial(BaseFieldPtr field, std::size_t k, Sym c = 1);
    // x^n - 1
    static Poly xn_minus_1(BaseFieldPtr field, std::size_t n);
    // Parses "1,1,0,1" (lowest degree first).
    static Poly parse(BaseFieldPtr field, const std::string& text);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Sym lead() const { return c_.empty() ? 0 : c_.back(); }
    Sym operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Sym>& coeffs() const { return c_; }

    const BaseFieldPtr& field() const { return f_; }
    FieldTag tag() const { return f_->tag(); }

    Poly monic() const;
    Sym eval(Sym x) const;
    std::string to_text() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Sym c) const;
    Poly operator-() const;

    bool operator==(const Poly& o) const { return tag() == o.tag() && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void trim();
    void check_same(const Poly& o) const;

    BaseFieldPtr f_;
    std::vector<Sym> c_;
};

// a = quot * b + rem, deg rem < deg b. Throws on b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

// Exact quotient; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

// Monic gcd. Throws when both arguments are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

struct Bezout {
    Poly gcd;
    Poly u;
    Poly v;  // u*a + v*b == gcd
};
Bezout extended_gcd(const Poly& a, const Poly& b);

// x^{deg f} f(1/x), made monic. Requires f(0) != 0.
Poly reciprocal(const Poly& f);

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod);

// Distinct-degree irreducibility test over the polynomial's own field.
bool is_irreducible(const Poly& f);

}  // namespace seqcodes
