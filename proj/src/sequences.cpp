#include "seqcodes/sequences.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace seqcodes {

using boost::multiprecision::cpp_int;

PeriodicSequence::PeriodicSequence(BaseFieldPtr field, std::vector<Sym> symbols) : f_(std::move(field)), s_(std::move(symbols)) {
    if (s_.empty()) throw std::invalid_argument("sequence period must be positive");
    if (std::gcd<std::uint64_t, std::uint64_t>(s_.size(), f_->q()) != 1)
        throw std::invalid_argument("gcd(n, q) != 1 for n = " + std::to_string(s_.size()) + ", q = " + std::to_string(f_->q()));
    for (Sym c : s_) {
        if (!f_->contains(c)) throw std::invalid_argument("symbol " + std::to_string(c) + " outside GF(" + std::to_string(f_->q()) + ")");
    }
}

bool PeriodicSequence::is_zero() const {
    for (Sym c : s_) {
        if (c) return false;
    }
    return true;
}

PeriodicSequence PeriodicSequence::shifted(std::size_t k) const {
    std::vector<Sym> v(s_.size());
    for (std::size_t i = 0; i < s_.size(); ++i) v[i] = s_[(i + k) % s_.size()];
    return PeriodicSequence(f_, std::move(v));
}

Poly PeriodicSequence::generating_poly() const { return Poly(f_, s_); }

PeriodicSequence characteristic_sequence(const std::vector<std::uint64_t>& D, std::uint64_t n, BaseFieldPtr field) {
    if (n == 0) throw std::invalid_argument("sequence period must be positive");
    std::vector<Sym> s(n, 0);
    for (auto d : D) {
        if (d >= n) throw std::invalid_argument(std::to_string(d) + " is outside Z_" + std::to_string(n));
        s[d] = 1;
    }
    return PeriodicSequence(std::move(field), std::move(s));
}

PeriodicSequence trace_sequence(const FieldCtx& ctx, const FieldFn& f) {
    std::vector<Sym> s(ctx.n());
    FieldElem x = ctx.one();
    const FieldElem one = ctx.one();
    for (std::uint64_t i = 0; i < ctx.n(); ++i) {
        s[i] = ctx.trace(f(ctx.add(x, one)));
        x = ctx.mul(x, ctx.alpha());
    }
    return PeriodicSequence(ctx.base(), std::move(s));
}

PeriodicSequence trace_sequence_monomial(const FieldCtx& ctx, std::uint64_t e) {
    return trace_sequence(ctx, [&](const FieldElem& x) { return ctx.pow(x, e); });
}

PeriodicSequence trace_sequence_poly(const FieldCtx& ctx, const ExtPoly& f) {
    for (const auto& c : f) ctx.check(c);
    return trace_sequence(ctx, [&](const FieldElem& x) { return ext_poly_eval(ctx, f, x); });
}

namespace {

void trim(ExtPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

}  // namespace

ExtPoly dickson_poly(const FieldCtx& ctx, int kind, unsigned h, const FieldElem& a) {
    ctx.check(a);
    if (kind != 1 && kind != 2) throw std::invalid_argument("Dickson kind must be 1 or 2");
    const FieldElem two = ctx.from_base(ctx.base()->from_int(2));
    ExtPoly prev{kind == 1 ? two : ctx.one()};
    ExtPoly cur{ctx.zero(), ctx.one()};
    trim(prev);
    if (h == 0) return prev;
    for (unsigned k = 2; k <= h; ++k) {
        ExtPoly next(cur.size() + 1, ctx.zero());
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] = ctx.sub(next[i], ctx.mul(a, prev[i]));
        trim(next);
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (kind == 1 && dickson_closed_form(ctx, h, a) != cur)
        throw std::logic_error("Dickson recurrence disagrees with the closed form at h = " + std::to_string(h));
    return cur;
}

ExtPoly dickson_closed_form(const FieldCtx& ctx, unsigned h, const FieldElem& a) {
    ctx.check(a);
    const auto& F = *ctx.base();
    if (h == 0) {
        ExtPoly r{ctx.from_base(F.from_int(2))};
        trim(r);
        return r;
    }
    ExtPoly r(h + 1, ctx.zero());
    const FieldElem minus_a = ctx.neg(a);
    FieldElem pw = ctx.one();
    for (unsigned i = 0; 2 * i <= h; ++i) {
        // h/(h-i) * C(h-i, i) is an integer.
        cpp_int binom = 1;
        for (unsigned j = 0; j < i; ++j) binom = binom * (h - i - j) / (j + 1);
        const cpp_int coeff = binom * h / (h - i);
        const auto c = static_cast<std::int64_t>(coeff % ctx.p());
        r[h - 2 * i] = ctx.scale(pw, F.from_int(c));
        pw = ctx.mul(pw, minus_a);
    }
    trim(r);
    return r;
}

LfsrProfile berlekamp_massey(const PeriodicSequence& seq) {
    const auto& F = *seq.field();
    const std::size_t n = seq.n();
    const std::size_t N = 2 * n;
    std::vector<Sym> C{1}, B{1};
    std::size_t L = 0;
    std::size_t shift = 1;
    Sym b = 1;
    for (std::size_t i = 0; i < N; ++i) {
        Sym d = seq[i];
        for (std::size_t j = 1; j <= L && j < C.size(); ++j) {
            if (C[j]) d = F.add(d, F.mul(C[j], seq[i - j]));
        }
        if (d == 0) {
            ++shift;
            continue;
        }
        const Sym coef = F.div(d, b);
        std::vector<Sym> T = C;
        if (C.size() < B.size() + shift) C.resize(B.size() + shift, 0);
        for (std::size_t j = 0; j < B.size(); ++j) C[j + shift] = F.sub(C[j + shift], F.mul(coef, B[j]));
        if (2 * L <= i) {
            L = i + 1 - L;
            B = std::move(T);
            b = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    Poly conn(seq.field(), C);
    if (conn.degree() != static_cast<int>(L)) throw std::logic_error("connection polynomial degree differs from the linear span");
    return {L, conn.monic()};
}

Poly minimal_poly_via_gcd(const PeriodicSequence& seq) {
    const Poly xn = Poly::xn_minus_1(seq.field(), seq.n());
    const Poly S = seq.generating_poly();
    const Poly g = S.is_zero() ? xn : poly_gcd(S, xn);
    return exact_div(xn, g);
}

std::uint64_t differential_uniformity(const FieldCtx& ctx, const FieldFn& f) {
    const std::uint64_t Q = ctx.order();
    if (Q > (std::uint64_t{1} << 12)) throw std::invalid_argument("differential uniformity is exhaustive; field too large");
    std::vector<FieldElem> elems(Q);
    std::vector<FieldElem> fx(Q);
    for (std::uint64_t x = 0; x < Q; ++x) {
        elems[x] = ctx.decode(x);
        fx[x] = f(elems[x]);
    }
    std::uint64_t best = 0;
    std::vector<std::uint64_t> count(Q);
    for (std::uint64_t a = 1; a < Q; ++a) {
        std::fill(count.begin(), count.end(), 0);
        for (std::uint64_t x = 0; x < Q; ++x) {
            const auto xa = ctx.encode(ctx.add(elems[x], elems[a]));
            const auto b = ctx.encode(ctx.sub(fx[xa], fx[x]));
            best = std::max(best, ++count[b]);
        }
    }
    return best;
}

bool is_planar(const FieldCtx& ctx, const FieldFn& f) { return differential_uniformity(ctx, f) == 1; }

bool is_apn(const FieldCtx& ctx, const FieldFn& f) { return differential_uniformity(ctx, f) == 2; }

PeriodicSequence read_sequence(std::istream& in) {
    std::uint64_t p = 0, n = 0;
    unsigned s = 0;
    if (!(in >> p >> s >> n)) throw std::invalid_argument("sequence file: expected header \"p s n\"");
    auto field = BaseField::make(p, s);
    std::vector<Sym> v(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (!(in >> v[i])) throw std::invalid_argument("sequence file: expected " + std::to_string(n) + " symbols, got " + std::to_string(i));
    }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("sequence file: trailing data after " + std::to_string(n) + " symbols");
    return PeriodicSequence(std::move(field), std::move(v));
}

void write_sequence(std::ostream& out, const PeriodicSequence& seq) {
    out << seq.field()->p() << ' ' << seq.field()->s() << ' ' << seq.n() << '\n';
    for (std::size_t i = 0; i < seq.n(); ++i) out << (i ? " " : "") << seq[i];
    out << '\n';
}

}  // namespace seqcodes
