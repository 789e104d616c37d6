#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seqcodes/field.hpp"
#include "seqcodes/poly.hpp"

namespace seqcodes {

// m_e(x): product of (x - c) over the GF(q)-conjugates c of e, projected to
// GF(q)[x]. Returns x for e == 0.
Poly minimal_polynomial_of_element(const FieldCtx& ctx, const FieldElem& e);

// m_{alpha^j}(x) for an arbitrary (possibly negative) exponent j.
Poly minimal_polynomial_of_power(const FieldCtx& ctx, std::int64_t j);

struct CosetFactor {
    std::uint64_t leader;
    Poly factor;
};

// Canonical factorization of x^n - 1 over GF(q): one factor per q-cyclotomic
// coset leader i modulo n, the minimal polynomial of beta^i where
// beta = alpha^{(q^m-1)/n}. Requires n | q^m - 1.
std::vector<CosetFactor> factor_xn_minus_1(const FieldCtx& ctx, std::uint64_t n);

// Polynomial over GF(q^m), lowest degree first.
using ExtPoly = std::vector<FieldElem>;

ExtPoly ext_poly_mul(const FieldCtx& ctx, const ExtPoly& a, const ExtPoly& b);
FieldElem ext_poly_eval(const FieldCtx& ctx, const ExtPoly& f, const FieldElem& x);

// Image of a GF(q)[x] polynomial evaluated at an element of GF(q^m).
FieldElem eval_in_extension(const FieldCtx& ctx, const Poly& f, const FieldElem& x);

}  // namespace seqcodes
