#include "seqcodes/field.hpp"

#include <map>
#include <mutex>

namespace seqcodes {

std::string ContextTag::to_string() const {
    return "GF((" + std::to_string(p) + "^" + std::to_string(s) + ")^" + std::to_string(m) + ")";
}

bool FieldElem::is_zero() const {
    for (Sym c : c_) {
        if (c) return false;
    }
    return true;
}

FieldCtxPtr FieldCtx::build(std::uint64_t p, unsigned s, unsigned m) {
    if (m == 0) throw std::invalid_argument("extension degree m must be positive");
    auto base = BaseField::make(p, s);
    std::uint64_t order = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (order > kFieldBudget / base->q()) throw std::invalid_argument("field size q^m exceeds the 2^40 budget");
        order *= base->q();
    }

    static std::mutex mu;
    static std::map<ContextTag, FieldCtxPtr> cache;
    const ContextTag key{p, s, m};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto ctx = FieldCtxPtr(new FieldCtx(std::move(base), m));
    std::lock_guard lock(mu);
    return cache.try_emplace(key, std::move(ctx)).first->second;
}

FieldCtxPtr build_field(std::uint64_t p, unsigned s, unsigned m) { return FieldCtx::build(p, s, m); }

FieldCtx::FieldCtx(BaseFieldPtr base, unsigned m)
    : base_(std::move(base)), m_(m), order_(checked_pow(base_->q(), m)), ext_modulus_(base_) {
    const std::uint64_t q = base_->q();
    // Canonical modulus: smallest sum c_i q^i over monic irreducibles of degree m.
    for (std::uint64_t code = 0; code < order_; ++code) {
        std::vector<Sym> c(m_ + 1, 0);
        std::uint64_t v = code;
        for (unsigned i = 0; i < m_; ++i) {
            c[i] = v % q;
            v /= q;
        }
        c[m_] = 1;
        if (m_ > 1 && c[0] == 0) continue;
        Poly cand(base_, c);
        if (is_irreducible(cand)) {
            ext_modulus_ = std::move(cand);
            break;
        }
    }
    if (ext_modulus_.is_zero()) throw std::logic_error("no irreducible extension modulus found");

    n_factors_ = prime_factors(n());
    for (std::uint64_t code = 1; code < order_; ++code) {
        FieldElem cand = decode(code);
        if (is_primitive(cand)) {
            alpha_ = std::move(cand);
            break;
        }
    }
    if (alpha_.coeffs().empty()) throw std::logic_error("no primitive element found");
}

Poly FieldCtx::base_modulus() const { return Poly(BaseField::make(p(), 1), base_->modulus_digits()); }

void FieldCtx::check(const FieldElem& a) const {
    if (a.tag() != tag()) throw std::invalid_argument("element of " + a.tag().to_string() + " used in " + tag().to_string());
}

FieldElem FieldCtx::zero() const { return FieldElem(tag(), std::vector<Sym>(m_, 0)); }

FieldElem FieldCtx::one() const { return from_base(1); }

FieldElem FieldCtx::from_base(Sym c) const {
    if (!base_->contains(c)) throw std::invalid_argument("symbol outside GF(q)");
    std::vector<Sym> v(m_, 0);
    v[0] = c;
    return FieldElem(tag(), std::move(v));
}

FieldElem FieldCtx::alpha_pow(std::uint64_t e) const { return pow(alpha_, e % n()); }

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    std::vector<Sym> v(m_);
    for (unsigned i = 0; i < m_; ++i) v[i] = base_->add(a.coeffs()[i], b.coeffs()[i]);
    return FieldElem(tag(), std::move(v));
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    std::vector<Sym> v(m_);
    for (unsigned i = 0; i < m_; ++i) v[i] = base_->sub(a.coeffs()[i], b.coeffs()[i]);
    return FieldElem(tag(), std::move(v));
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    check(a);
    std::vector<Sym> v(m_);
    for (unsigned i = 0; i < m_; ++i) v[i] = base_->neg(a.coeffs()[i]);
    return FieldElem(tag(), std::move(v));
}

FieldElem FieldCtx::scale(const FieldElem& a, Sym c) const {
    check(a);
    std::vector<Sym> v(m_);
    for (unsigned i = 0; i < m_; ++i) v[i] = base_->mul(a.coeffs()[i], c);
    return FieldElem(tag(), std::move(v));
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    const auto& f = *base_;
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Sym> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (!ac[i]) continue;
        for (unsigned j = 0; j < m_; ++j) {
            if (bc[j]) prod[i + j] = f.add(prod[i + j], f.mul(ac[i], bc[j]));
        }
    }
    const auto& mod = ext_modulus_.coeffs();
    for (std::size_t k = prod.size(); k-- > m_;) {
        const Sym c = prod[k];
        if (!c) continue;
        for (unsigned i = 0; i < m_; ++i) {
            if (mod[i]) prod[k - m_ + i] = f.sub(prod[k - m_ + i], f.mul(c, mod[i]));
        }
        prod[k] = 0;
    }
    prod.resize(m_);
    return FieldElem(tag(), std::move(prod));
}

FieldElem FieldCtx::pow(const FieldElem& a, std::uint64_t e) const {
    check(a);
    FieldElem r = one();
    FieldElem b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("inverse of zero in " + tag().to_string());
    return pow(a, order_ - 2);
}

Sym FieldCtx::trace(const FieldElem& a) const {
    check(a);
    FieldElem acc = a;
    FieldElem conj = a;
    for (unsigned i = 1; i < m_; ++i) {
        conj = frobenius(conj);
        acc = add(acc, conj);
    }
    return to_base(acc);
}

std::uint64_t FieldCtx::element_order(const FieldElem& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t ord = n();
    for (auto r : n_factors_) {
        while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
    }
    return ord;
}

bool FieldCtx::is_primitive(const FieldElem& a) const {
    check(a);
    if (a.is_zero()) return false;
    for (auto r : n_factors_) {
        if (pow(a, n() / r) == one()) return false;
    }
    return true;
}

bool FieldCtx::in_base(const FieldElem& a) const {
    check(a);
    for (unsigned i = 1; i < m_; ++i) {
        if (a.coeffs()[i]) return false;
    }
    return true;
}

Sym FieldCtx::to_base(const FieldElem& a) const {
    if (!in_base(a)) throw std::logic_error("element is not in the subfield GF(q)");
    return a.coeffs()[0];
}

std::uint64_t FieldCtx::encode(const FieldElem& a) const {
    check(a);
    std::uint64_t v = 0;
    for (unsigned i = m_; i-- > 0;) v = v * q() + a.coeffs()[i];
    return v;
}

FieldElem FieldCtx::decode(std::uint64_t code) const {
    if (code >= order_) throw std::invalid_argument("encoding " + std::to_string(code) + " outside " + tag().to_string());
    std::vector<Sym> v(m_);
    for (unsigned i = 0; i < m_; ++i) {
        v[i] = code % q();
        code /= q();
    }
    return FieldElem(tag(), std::move(v));
}

Sym trace(const FieldCtx& ctx, const FieldElem& x) { return ctx.trace(x); }

int delta(const FieldCtx& ctx, const FieldElem& x) { return ctx.delta(x); }

int np_indicator(std::int64_t x, std::int64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("np_indicator modulus must be at least 2");
    return x % modulus == 0 ? 0 : 1;
}

}  // namespace seqcodes
