#include "seqcodes/minpoly.hpp"

#include <stdexcept>
#include <string>

#include "seqcodes/cyclotomic.hpp"

namespace seqcodes {

ExtPoly ext_poly_mul(const FieldCtx& ctx, const ExtPoly& a, const ExtPoly& b) {
    if (a.empty() || b.empty()) return {};
    ExtPoly r(a.size() + b.size() - 1, ctx.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j].is_zero()) r[i + j] = ctx.add(r[i + j], ctx.mul(a[i], b[j]));
        }
    }
    return r;
}

FieldElem ext_poly_eval(const FieldCtx& ctx, const ExtPoly& f, const FieldElem& x) {
    FieldElem acc = ctx.zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), f[i]);
    return acc;
}

FieldElem eval_in_extension(const FieldCtx& ctx, const Poly& f, const FieldElem& x) {
    if (f.field()->tag() != ctx.base()->tag()) throw std::invalid_argument("polynomial is not over the base field of the context");
    FieldElem acc = ctx.zero();
    for (int i = f.degree(); i >= 0; --i) acc = ctx.add(ctx.mul(acc, x), ctx.from_base(f[i]));
    return acc;
}

Poly minimal_polynomial_of_element(const FieldCtx& ctx, const FieldElem& e) {
    ctx.check(e);
    if (e.is_zero()) return Poly::monomial(ctx.base(), 1);
    ExtPoly acc{ctx.one()};
    FieldElem c = e;
    do {
        acc = ext_poly_mul(ctx, acc, ExtPoly{ctx.neg(c), ctx.one()});
        c = ctx.frobenius(c);
    } while (!(c == e));
    std::vector<Sym> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& a : acc) {
        if (!ctx.in_base(a)) throw std::logic_error("minimal polynomial coefficient outside GF(q)");
        coeffs.push_back(a.coeffs()[0]);
    }
    return Poly(ctx.base(), std::move(coeffs));
}

Poly minimal_polynomial_of_power(const FieldCtx& ctx, std::int64_t j) {
    const auto n = static_cast<std::int64_t>(ctx.n());
    const auto r = ((j % n) + n) % n;
    return minimal_polynomial_of_element(ctx, ctx.alpha_pow(static_cast<std::uint64_t>(r)));
}

std::vector<CosetFactor> factor_xn_minus_1(const FieldCtx& ctx, std::uint64_t n) {
    if (n == 0 || ctx.n() % n != 0)
        throw std::invalid_argument(std::to_string(n) + " does not divide q^m - 1 = " + std::to_string(ctx.n()));
    const FieldElem beta = ctx.alpha_pow(ctx.n() / n);
    const CosetTable table(n, ctx.q());
    std::vector<CosetFactor> out;
    out.reserve(table.leaders().size());
    for (auto i : table.leaders()) out.push_back({i, minimal_polynomial_of_element(ctx, ctx.pow(beta, i))});
    return out;
}

}  // namespace seqcodes
