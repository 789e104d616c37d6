#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "seqcodes/field.hpp"
#include "seqcodes/minpoly.hpp"
#include "seqcodes/poly.hpp"

namespace seqcodes {

// One period of a periodic sequence over GF(q); gcd(n, q) = 1.
class PeriodicSequence {
public:
    PeriodicSequence(BaseFieldPtr field, std::vector<Sym> symbols);

    std::size_t n() const { return s_.size(); }
    const std::vector<Sym>& symbols() const { return s_; }
    Sym operator[](std::size_t i) const { return s_[i % s_.size()]; }
    const BaseFieldPtr& field() const { return f_; }
    FieldTag tag() const { return f_->tag(); }
    bool is_zero() const;

    PeriodicSequence shifted(std::size_t k) const;
    // S(x) = sum s_i x^i
    Poly generating_poly() const;

private:
    BaseFieldPtr f_;
    std::vector<Sym> s_;
};

struct LfsrProfile {
    std::size_t linear_span = 0;
    Poly minimal_poly;
};

PeriodicSequence characteristic_sequence(const std::vector<std::uint64_t>& D, std::uint64_t n, BaseFieldPtr field);

using FieldFn = std::function<FieldElem(const FieldElem&)>;

// s_i = Tr(f(alpha^i + 1)), i = 0..q^m-2.
PeriodicSequence trace_sequence(const FieldCtx& ctx, const FieldFn& f);
PeriodicSequence trace_sequence_monomial(const FieldCtx& ctx, std::uint64_t e);
PeriodicSequence trace_sequence_poly(const FieldCtx& ctx, const ExtPoly& f);

// Dickson polynomial of the first (kind 1) or second (kind 2) kind, as a
// coefficient list over GF(q^m). Kind 1 is cross-checked against the closed
// form sum h/(h-i) C(h-i, i) (-a)^i x^{h-2i}.
ExtPoly dickson_poly(const FieldCtx& ctx, int kind, unsigned h, const FieldElem& a);
ExtPoly dickson_closed_form(const FieldCtx& ctx, unsigned h, const FieldElem& a);

// Runs over two periods. The connection polynomial, made monic, is returned
// as the minimal polynomial: it equals (x^n - 1) / gcd(S(x), x^n - 1).
LfsrProfile berlekamp_massey(const PeriodicSequence& seq);
Poly minimal_poly_via_gcd(const PeriodicSequence& seq);

// max over a != 0 and b of #{x : f(x + a) - f(x) = b}. Exhaustive.
std::uint64_t differential_uniformity(const FieldCtx& ctx, const FieldFn& f);
bool is_planar(const FieldCtx& ctx, const FieldFn& f);
bool is_apn(const FieldCtx& ctx, const FieldFn& f);

// "p s n" header followed by n canonical encodings.
PeriodicSequence read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const PeriodicSequence& seq);

}  // namespace seqcodes
