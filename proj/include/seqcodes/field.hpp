#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "seqcodes/base_field.hpp"
#include "seqcodes/poly.hpp"

namespace seqcodes {

struct ContextTag {
    std::uint64_t p = 0;
    unsigned s = 0;
    unsigned m = 0;

    auto operator<=>(const ContextTag&) const = default;
    std::string to_string() const;
};

// Element of GF(q^m): m coordinates over GF(q), lowest power first.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(ContextTag tag, std::vector<Sym> coeffs) : tag_(tag), c_(std::move(coeffs)) {}

    const ContextTag& tag() const { return tag_; }
    const std::vector<Sym>& coeffs() const { return c_; }
    bool is_zero() const;

    bool operator==(const FieldElem&) const = default;

private:
    ContextTag tag_{};
    std::vector<Sym> c_;
};

// The tower GF(p) < GF(q) < GF(q^m) with canonical moduli and a fixed
// primitive element. Immutable once built.
class FieldCtx {
public:
    static std::shared_ptr<const FieldCtx> build(std::uint64_t p, unsigned s, unsigned m);

    std::uint64_t p() const { return base_->p(); }
    unsigned s() const { return base_->s(); }
    unsigned m() const { return m_; }
    std::uint64_t q() const { return base_->q(); }
    std::uint64_t order() const { return order_; }  // q^m
    std::uint64_t n() const { return order_ - 1; }
    ContextTag tag() const { return {p(), s(), m_}; }

    const BaseFieldPtr& base() const { return base_; }
    Poly base_modulus() const;
    const Poly& ext_modulus() const { return ext_modulus_; }
    const FieldElem& alpha() const { return alpha_; }
    const std::vector<std::uint64_t>& order_factors() const { return n_factors_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_base(Sym c) const;
    FieldElem alpha_pow(std::uint64_t e) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem scale(const FieldElem& a, Sym c) const;
    FieldElem pow(const FieldElem& a, std::uint64_t e) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }
    FieldElem frobenius(const FieldElem& a) const { return pow(a, q()); }

    // Sum of the m conjugates a^{q^i}; lies in GF(q).
    Sym trace(const FieldElem& a) const;
    int delta(const FieldElem& a) const { return trace(a) == 0 ? 0 : 1; }

    // Multiplicative order (1 for a == 1). Throws for zero.
    std::uint64_t element_order(const FieldElem& a) const;
    bool is_primitive(const FieldElem& a) const;

    // If a lies in GF(q) return its symbol, otherwise throw.
    Sym to_base(const FieldElem& a) const;
    bool in_base(const FieldElem& a) const;

    std::uint64_t encode(const FieldElem& a) const;
    FieldElem decode(std::uint64_t code) const;

    void check(const FieldElem& a) const;

private:
    FieldCtx(BaseFieldPtr base, unsigned m);

    BaseFieldPtr base_;
    unsigned m_;
    std::uint64_t order_;
    Poly ext_modulus_;
    FieldElem alpha_;
    std::vector<std::uint64_t> n_factors_;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// Default size budget for arithmetic: q^m <= 2^40.
inline constexpr std::uint64_t kFieldBudget = std::uint64_t{1} << 40;

FieldCtxPtr build_field(std::uint64_t p, unsigned s, unsigned m);

Sym trace(const FieldCtx& ctx, const FieldElem& x);
int delta(const FieldCtx& ctx, const FieldElem& x);

// 0 when modulus divides x, 1 otherwise.
int np_indicator(std::int64_t x, std::int64_t modulus);

}  // namespace seqcodes
