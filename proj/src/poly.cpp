#include "seqcodes/poly.hpp"

#include <cctype>
#include <sstream>

namespace seqcodes {

Poly::Poly(BaseFieldPtr field) : f_(std::move(field)) {}

Poly::Poly(BaseFieldPtr field, std::vector<Sym> coeffs) : f_(std::move(field)), c_(std::move(coeffs)) {
    for (Sym c : c_) {
        if (!f_->contains(c)) throw std::invalid_argument("coefficient " + std::to_string(c) + " outside " + tag().to_string());
    }
    trim();
}

Poly Poly::constant(BaseFieldPtr field, Sym c) { return Poly(std::move(field), std::vector<Sym>{c}); }

Poly Poly::monomial(BaseFieldPtr field, std::size_t k, Sym c) {
    std::vector<Sym> v(k + 1, 0);
    v[k] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::xn_minus_1(BaseFieldPtr field, std::size_t n) {
    std::vector<Sym> v(n + 1, 0);
    v[n] = 1;
    v[0] = field->neg(1);
    if (n == 0) v = {0};
    return Poly(std::move(field), std::move(v));
}

Poly Poly::parse(BaseFieldPtr field, const std::string& text) {
    std::vector<Sym> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        const auto value = std::stoull(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("malformed polynomial coefficient '" + tok + "'");
        v.push_back(value);
    }
    return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
    if (tag() != o.tag())
        throw std::invalid_argument("polynomial field mismatch: " + tag().to_string() + " vs " + o.tag().to_string());
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(f_->inv(lead()));
}

Sym Poly::eval(Sym x) const {
    Sym r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
    return r;
}

std::string Poly::to_text() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c_[i]);
    }
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    std::vector<Sym> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->add((*this)[i], o[i]);
    return Poly(f_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    check_same(o);
    std::vector<Sym> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->sub((*this)[i], o[i]);
    return Poly(f_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Sym> v(c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->neg(c_[i]);
    return Poly(f_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<Sym> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (!o.c_[j]) continue;
            v[i + j] = f_->add(v[i + j], f_->mul(c_[i], o.c_[j]));
        }
    }
    return Poly(f_, std::move(v));
}

Poly Poly::scaled(Sym c) const {
    std::vector<Sym> v(c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->mul(c_[i], c);
    return Poly(f_, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (a.tag() != b.tag()) throw std::invalid_argument("polynomial field mismatch");
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Sym> r = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    const Sym inv_lead = f->inv(b.lead());
    std::vector<Sym> quot(a.degree() - db + 1, 0);
    for (int k = a.degree(); k >= db; --k) {
        const Sym c = r[k];
        if (!c) continue;
        const Sym t = f->mul(c, inv_lead);
        quot[k - db] = t;
        for (int i = 0; i <= db; ++i) {
            if (bc[i]) r[k - db + i] = f->sub(r[k - db + i], f->mul(t, bc[i]));
        }
    }
    r.resize(db);
    return {Poly(f, std::move(quot)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero()) throw std::domain_error("polynomial " + b.to_text() + " does not divide " + a.to_text());
    return quot;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.tag() != b.tag()) throw std::invalid_argument("polynomial field mismatch");
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Bezout extended_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    const auto& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1(f);
    Poly t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(r0, r1);
        Poly s2 = s0 - quot * s1;
        Poly t2 = t0 - quot * t1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Sym inv = f->inv(r0.lead());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
    if (f[0] == 0) throw std::domain_error("reciprocal needs a nonzero constant term");
    std::vector<Sym> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(v)).monic();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(base.field(), 1) % mod;
    Poly b = base % mod;
    while (e) {
        if (e & 1) r = (r * b) % mod;
        e >>= 1;
        if (e) b = (b * b) % mod;
    }
    return r;
}

bool is_irreducible(const Poly& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const auto& field = f.field();
    const Poly g = f.monic();
    const Poly x = Poly::monomial(field, 1);
    Poly xq = x;
    for (int i = 1; 2 * i <= d; ++i) {
        xq = pow_mod(xq, field->q(), g);
        if (!poly_gcd(xq - x, g).is_one()) return false;
    }
    return true;
}

}  // namespace seqcodes
