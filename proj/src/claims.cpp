#include "seqcodes/claims.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "seqcodes/combinatorics.hpp"
#include "seqcodes/cyclotomic.hpp"
#include "seqcodes/minpoly.hpp"

namespace seqcodes {

std::uint64_t ClaimParams::q() const { return checked_pow(p, s); }

nlohmann::ordered_json ClaimParams::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["s"] = s;
    j["m"] = m;
    if (h) j["h"] = *h;
    if (kappa) j["kappa"] = *kappa;
    if (u) j["u"] = *u;
    if (a) j["a"] = *a;
    return j;
}

std::string ClaimParams::to_text() const {
    std::ostringstream os;
    os << "p=" << p << " s=" << s << " m=" << m;
    if (h) os << " h=" << *h;
    if (kappa) os << " kappa=" << *kappa;
    if (u) os << " u=" << *u;
    if (a) os << " a=" << *a;
    return os.str();
}

Poly expand_mpoly(const FieldCtx& ctx, std::uint64_t n, const MpolySpec& spec) {
    if (n == 0 || ctx.n() % n != 0) throw std::invalid_argument("expand_mpoly needs n | q^m - 1");
    const CosetTable table(n, ctx.q());
    std::set<std::uint64_t> leaders;
    if (spec.x_minus_1) leaders.insert(0);
    for (auto e : spec.exponents) leaders.insert(table.leader_of((n - e % n) % n));
    const FieldElem beta = ctx.alpha_pow(ctx.n() / n);
    Poly out = Poly::constant(ctx.base(), 1);
    for (auto l : leaders) out = out * minimal_polynomial_of_element(ctx, ctx.pow(beta, l));
    return out;
}

std::string DistancePrediction::kind() const {
    if (exact()) return "exact";
    if (lower && upper) return "range";
    if (lower) return "at_least";
    if (even || quadratic) return "property";
    return "none";
}

std::string DistancePrediction::describe() const {
    std::ostringstream os;
    if (exact()) {
        os << "d = " << *lower;
    } else if (lower && upper) {
        os << *lower << " <= d <= " << *upper;
    } else if (lower) {
        os << "d >= " << *lower;
    } else if (upper) {
        os << "d <= " << *upper;
    }
    auto sep = [&] { return os.tellp() > 0 ? ", " : ""; };
    if (even) os << sep() << "d even";
    if (quadratic) os << sep() << "d^2 - d + 1 >= n";
    if (os.tellp() == 0) os << "no claim";
    if (open) os << " (open)";
    return os.str();
}

std::string to_string(DistanceTarget t) { return t == DistanceTarget::code ? "code" : "complement"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::bound_consistent: return "bound_consistent";
        case Verdict::mismatch: return "mismatch";
        case Verdict::not_computed: return "not_computed";
        case Verdict::exploratory: return "exploratory";
    }
    return "unknown";
}

namespace {

using Hyp = std::optional<std::string>;

std::uint64_t pow2(unsigned e) { return checked_pow(2, e); }

int Np(std::int64_t x, std::uint64_t p) { return np_indicator(x, static_cast<std::int64_t>(p)); }

// N(J, t) extended by zero for J < t.
std::uint64_t N(std::uint64_t J, std::uint64_t t) { return J < t ? 0 : count_vectors(J, t); }

FieldElem elem_a(const FieldCtx& ctx, const ClaimParams& P) {
    if (!P.a) throw std::invalid_argument("parameter a is required");
    if (*P.a >= ctx.order()) throw std::invalid_argument("a = " + std::to_string(*P.a) + " is not an element of GF(q^m)");
    return ctx.decode(*P.a);
}

FieldElem integer(const FieldCtx& ctx, std::int64_t v) { return ctx.from_base(ctx.base()->from_int(v)); }

// Linear combination c0 + c1 a + c2 a^2 + ... with integer coefficients.
FieldElem poly_in(const FieldCtx& ctx, const FieldElem& a, std::initializer_list<std::int64_t> c) {
    FieldElem acc = ctx.zero();
    FieldElem pw = ctx.one();
    for (auto ci : c) {
        acc = ctx.add(acc, ctx.mul(integer(ctx, ci), pw));
        pw = ctx.mul(pw, a);
    }
    return acc;
}

FieldElem frac(const FieldCtx& ctx, std::int64_t num, std::int64_t den) { return ctx.div(integer(ctx, num), integer(ctx, den)); }

DistancePrediction exactly(std::uint64_t v) { return {v, v, false, false, false}; }
DistancePrediction at_least(std::uint64_t v, bool open = true) { return {v, std::nullopt, false, false, open}; }
DistancePrediction between(std::uint64_t lo, std::uint64_t hi, bool open) { return {lo, hi, false, false, open}; }
DistancePrediction open_problem() { return {std::nullopt, std::nullopt, false, false, true}; }

Prediction make(std::string label, MpolySpec spec, std::uint64_t span, std::uint64_t n, DistancePrediction d) {
    Prediction p;
    p.case_label = std::move(label);
    p.mpoly_spec = std::move(spec);
    p.span = span;
    if (span > n) throw std::logic_error("predicted span exceeds the period");
    p.dimension = n - span;
    p.distance = d;
    return p;
}

std::string with_delta(const std::string& label, const std::string& arg, int d) {
    return label + ", delta(" + arg + ")=" + std::to_string(d);
}

Hyp binary(const ClaimParams& P) {
    if (P.p != 2 || P.s != 1) return "q = 2";
    return std::nullopt;
}

Hyp at_least_m(const ClaimParams& P, unsigned lo) {
    if (P.m < lo) return "m >= " + std::to_string(lo);
    return std::nullopt;
}

// 1 <= h <= (m-1)/2 for odd m, m/2 for even m.
unsigned half_bound(unsigned m) { return m % 2 ? (m - 1) / 2 : m / 2; }

PeriodicSequence monomial_seq(const FieldCtx& ctx, std::uint64_t e) { return trace_sequence_monomial(ctx, e); }

PeriodicSequence dickson_seq(const FieldCtx& ctx, const ClaimParams& P, unsigned h) {
    return trace_sequence_poly(ctx, dickson_poly(ctx, 1, h, elem_a(ctx, P)));
}

std::vector<std::uint64_t> kappa_odd(unsigned t, std::uint64_t first) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = first; a <= pow2(t) - 1; a += 2) {
        if (kappa(a, t) == 1) out.push_back(a);
    }
    return out;
}

// Exponents 1 + sum_{i in S} q^i + q^u for every S within {1..u-1}, over
// each u in 1..h-1 passing keep(u).
std::vector<std::uint64_t> chain_exponents(std::uint64_t q, std::uint64_t n, unsigned h, const std::function<bool(unsigned)>& keep) {
    std::vector<std::uint64_t> out;
    for (unsigned u = 1; u + 1 <= h; ++u) {
        if (!keep(u)) continue;
        const std::uint64_t top = (1 + powmod(q % n, u, n)) % n;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (u - 1)); ++mask) {
            std::uint64_t e = top;
            for (unsigned i = 1; i < u; ++i) {
                if (mask >> (i - 1) & 1) e = (e + powmod(q % n, i, n)) % n;
            }
            out.push_back(e);
        }
    }
    return out;
}

// ---- monomials ----

Claim welch() {
    Claim c;
    c.id = "welch";
    c.title = "f(x) = x^{2^t+3} over GF(2^m), m = 2t+1";
    c.notes = "d >= 8; exact distance open";
    c.needs = {"m"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto b = binary(P)) return b;
        if (P.m % 2 == 0 || P.m < 7) return "m = 2t+1 >= 7";
        return std::nullopt;
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return monomial_seq(ctx, pow2((P.m - 1) / 2) + 3); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const std::uint64_t T = pow2((P.m - 1) / 2);
        MpolySpec spec{true, {1, 3, T + 1, T + 2, T + 3}};
        return make("m=2t+1", spec, 5 * P.m + 1, ctx.n(), at_least(8));
    };
    return c;
}

Claim power_2h_1() {
    Claim c;
    c.id = "power-2h-1";
    c.title = "f(x) = x^{2^h-1} over GF(2^m)";
    c.notes = "d bound only; exact distance open";
    c.needs = {"m", "h"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto b = binary(P)) return b;
        if (*P.h < 2 || *P.h > (P.m + 1) / 2) return "2 <= h <= ceil(m/2)";
        return std::nullopt;
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return monomial_seq(ctx, pow2(*P.h) - 1); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const unsigned h = *P.h;
        const std::int64_t m = P.m;
        const std::int64_t sign = (h - 1) % 2 ? -1 : 1;
        const std::int64_t base = m * (static_cast<std::int64_t>(pow2(h)) + sign);
        const std::int64_t span = m % 2 ? (base + 3) / 3 : base / 3;
        MpolySpec spec{Np(m, 2) == 1, kappa_odd(h, 1)};
        const std::uint64_t lb = (m % 2 == 1 && h > 2) ? pow2(h - 2) + 2 : pow2(h - 2) + 1;
        return make(m % 2 ? "m odd" : "m even", spec, span, ctx.n(), at_least(lb));
    };
    return c;
}

Claim niho() {
    Claim c;
    c.id = "niho";
    c.title = "f(x) = x^e, e = 2^{(m-1)/2} + 2^{(m-1)/4} - 1, m = 1 mod 4";
    c.notes = "d bound only; exact distance open";
    c.needs = {"m"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto b = binary(P)) return b;
        if (P.m < 9 || P.m % 2 == 0) return "m >= 9 odd";
        if (P.m % 4 != 1) return "m = 1 (mod 4)";
        return std::nullopt;
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) {
        return monomial_seq(ctx, pow2((P.m - 1) / 2) + pow2((P.m - 1) / 4) - 1);
    };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const unsigned r = (P.m - 1) / 4;
        const std::int64_t m = P.m;
        const bool one = P.m % 8 == 1;
        const std::int64_t sign = ((m - 5) / 4) % 2 ? -1 : 1;
        const std::int64_t inner = static_cast<std::int64_t>(pow2((P.m + 7) / 4)) + sign - (one ? 0 : 6);
        MpolySpec spec{true, {}};
        for (std::uint64_t i = one ? 0 : 1; i <= pow2(r) - 1; ++i) spec.exponents.push_back(i + pow2((P.m - 1) / 2));
        for (auto a : kappa_odd(r, one ? 1 : 3)) spec.exponents.push_back(a);
        const std::uint64_t lb = one ? pow2(r) + 2 : pow2(r);
        return make(one ? "m = 1 (mod 8)" : "m = 5 (mod 8)", spec, (m * inner + 3) / 3, ctx.n(), at_least(lb));
    };
    return c;
}

Claim kasami() {
    Claim c;
    c.id = "kasami";
    c.title = "f(x) = x^{2^{2h}-2^h+1}, gcd(m, h) = 1";
    c.notes = "span exponent printed as 2^{(h+2}, read as 2^{h+2}; (x-1) is listed unconditionally, "
                  "but Tr(1) = 0 for even m, so even m reports a mismatch; exact distance open";
    c.needs = {"m", "h"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto b = binary(P)) return b;
        const unsigned h = *P.h;
        if (std::gcd(P.m, h) != 1) return "gcd(m, h) = 1";
        static const unsigned sub[4] = {4, 1, 2, 3};
        const unsigned m = P.m;
        if (h < 1 || m < sub[m % 4] || 4 * h > m - sub[m % 4]) return "1 <= h <= (m - " + std::to_string(sub[m % 4]) + ")/4";
        return std::nullopt;
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) {
        const unsigned h = *P.h;
        return monomial_seq(ctx, pow2(2 * h) - pow2(h) + 1);
    };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const unsigned h = *P.h;
        const std::int64_t m = P.m;
        const bool even = h % 2 == 0;
        const std::int64_t sign = (h - 1) % 2 ? -1 : 1;
        const std::int64_t inner = static_cast<std::int64_t>(pow2(h + 2)) + sign - (even ? 0 : 6);
        MpolySpec spec{true, {}};
        for (std::uint64_t i = even ? 0 : 1; i <= pow2(h) - 1; ++i) spec.exponents.push_back(i + pow2(P.m - h));
        for (auto a : kappa_odd(h, even ? 1 : 3)) spec.exponents.push_back(a);
        const std::uint64_t lb = even ? pow2(h) + 2 : pow2(h);
        return make(even ? "h even" : "h odd", spec, (m * inner + 3) / 3, ctx.n(), at_least(lb));
    };
    return c;
}

Claim inverse() {
    Claim c;
    c.id = "inverse";
    c.title = "f(x) = x^{2^m-2} over GF(2^m)";
    c.notes = "distance statement holds for odd m only";
    c.needs = {"m"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto b = binary(P)) return b;
        return at_least_m(P, 2);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return monomial_seq(ctx, pow2(P.m) - 2); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const CosetTable table(ctx.n(), 2);
        MpolySpec spec;
        for (auto j : table.leaders()) {
            if (nu(table, j, P.m) == 1) spec.exponents.push_back(j);
        }
        DistancePrediction d;
        if (P.m % 2) {
            d.even = true;
            d.quadratic = true;
        }
        return make(P.m % 2 ? "m odd" : "m even", spec, (ctx.n() + 1) / 2, ctx.n(), d);
    };
    return c;
}

Claim planar_gold() {
    Claim c;
    c.id = "planar-gold";
    c.title = "f(x) = x^{q^kappa+1}, m/gcd(m, kappa) and q odd";
    c.notes = "factor printed as m_{alpha^{-(p^kappa+1)}}; q^kappa is used so that q > p is covered";
    c.needs = {"m", "kappa"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (P.p == 2) return "q odd";
        if (P.m % 2 == 0) return "m odd";
        if ((P.m / std::gcd(P.m, *P.kappa)) % 2 == 0) return "m/gcd(m, kappa) odd";
        return std::nullopt;
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) {
        const std::uint64_t e = checked_pow(ctx.q(), *P.kappa % P.m) + 1;
        return monomial_seq(ctx, e);
    };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const std::uint64_t n = ctx.n();
        const int np = Np(P.m, P.p);
        MpolySpec spec{np == 1, {1, (powmod(ctx.q() % n, *P.kappa, n) + 1) % n}};
        DistancePrediction d;
        std::string label = ctx.q() == 3 ? "q=3" : "q>3";
        if (ctx.q() == 3) {
            d = np == 0 ? exactly(4) : between(4, 5, false);
        } else {
            d = np == 0 ? exactly(3) : between(3, 4, false);
        }
        label += np == 0 ? ", m = 0 (mod p)" : ", m != 0 (mod p)";
        return make(label, spec, 2 * P.m + np, n, d);
    };
    return c;
}

Claim qh_theorem() {
    Claim c;
    c.id = "qh-theorem";
    c.title = "f(x) = x^{(q^h-1)/(q-1)}";
    c.notes = "exact distance open";
    c.needs = {"m", "h"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (*P.h < 1 || *P.h > half_bound(P.m)) return "1 <= h <= (m-1)/2 (m odd) or m/2 (m even)";
        return std::nullopt;
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) {
        return monomial_seq(ctx, (checked_pow(ctx.q(), *P.h) - 1) / (ctx.q() - 1));
    };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const unsigned h = *P.h;
        const std::uint64_t p = P.p;
        std::uint64_t coef = Np(h, p);
        for (unsigned t = 1; t + 1 <= h; ++t) {
            for (unsigned u = 1; u + 1 <= h; ++u) coef += Np(h - u, p) * N(u, t);
        }
        MpolySpec spec{Np(P.m, p) == 1, {}};
        if (Np(h, p)) spec.exponents.push_back(1);
        for (auto e : chain_exponents(ctx.q(), ctx.n(), h, [&](unsigned u) { return Np(h - u, p) == 1; })) spec.exponents.push_back(e);
        return make("h=" + std::to_string(h), spec, coef * P.m + Np(P.m, p), ctx.n(), open_problem());
    };
    return c;
}

Claim qh_corollary() {
    Claim c;
    c.id = "qh-corollary";
    c.title = "f(x) = x^{(q^h-1)/(q-1)} with h = 3";
    c.notes = "the p != 3 branch lists m_{alpha^{-1-q}}, which the theorem excludes at p = 2";
    c.needs = {"m"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (P.h && *P.h != 3) return "h = 3";
        if (half_bound(P.m) < 3) return "3 <= (m-1)/2 (m odd) or m/2 (m even)";
        return std::nullopt;
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams&) {
        const std::uint64_t q = ctx.q();
        return monomial_seq(ctx, 1 + q + q * q);
    };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const std::uint64_t q = ctx.q();
        const int np = Np(P.m, P.p);
        MpolySpec spec{np == 1, {1 + q, 1 + q * q, 1 + q + q * q}};
        if (P.p != 3) spec.exponents.push_back(1);
        DistancePrediction d = open_problem();
        if (P.p == 3) d = between(3, np ? 8 : 6, true);
        if (P.p > 3) d = between(3, 8, true);
        std::string label = P.p == 3 ? "p=3" : "p!=3";
        label += ", N_p(m)=" + std::to_string(np);
        return make(label, spec, (P.p == 3 ? 3 : 4) * P.m + np, ctx.n(), d);
    };
    return c;
}

Hyp ternary(const ClaimParams& P) {
    if (P.p != 3 || P.s != 1) return "q = 3";
    return std::nullopt;
}

Claim cm_theorem() {
    Claim c;
    c.id = "cm-theorem";
    c.title = "f(x) = x^{(3^h+1)/2} over GF(3^m)";
    c.notes = "only the third condition on h is required; exact distance open";
    c.needs = {"m", "h"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto t = ternary(P)) return t;
        if (*P.h < 3 || *P.h > half_bound(P.m)) return "3 <= h <= (m-1)/2 (m odd) or m/2 (m even)";
        return std::nullopt;
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return monomial_seq(ctx, (checked_pow(3, *P.h) + 1) / 2); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const unsigned h = *P.h;
        const std::uint64_t n = ctx.n();
        std::uint64_t first = 0;
        for (unsigned i = 0; i <= h; ++i) first += Np(static_cast<std::int64_t>(h) - i + 1, 3);
        std::uint64_t second = 0;
        for (unsigned t = 2; t <= h; ++t) second += N(h, t);
        for (unsigned t = 2; t + 1 <= h; ++t) {
            for (unsigned it = t; it + 1 <= h; ++it) second += Np(h - it + 1, 3) * N(it, t);
        }
        MpolySpec spec{Np(P.m, 3) == 1, {2}};
        if (Np(h + 1, 3)) spec.exponents.push_back(1);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (h - 1)); ++mask) {
            std::uint64_t e = 2;
            for (unsigned i = 1; i < h; ++i) {
                if (mask >> (i - 1) & 1) e = (e + powmod(3 % n, i, n)) % n;
            }
            spec.exponents.push_back(e);
        }
        for (auto e : chain_exponents(3, n, h, [&](unsigned u) { return Np(h - u + 1, 3) == 1; })) spec.exponents.push_back(e);
        return make("h=" + std::to_string(h), spec, Np(P.m, 3) + (first + second) * P.m, n, open_problem());
    };
    return c;
}

Claim cm_corollary() {
    Claim c;
    c.id = "cm-corollary";
    c.title = "f(x) = x^{(3^h+1)/2} over GF(3^m) with h = 3";
    c.notes = "lower bounds 9 and 8 are conjectured, not claimed";
    c.needs = {"m"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto t = ternary(P)) return t;
        if (P.h && *P.h != 3) return "h = 3";
        if (half_bound(P.m) < 3) return "3 <= (m-1)/2 (m odd) or m/2 (m even)";
        return std::nullopt;
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams&) { return monomial_seq(ctx, 14); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const int n3 = Np(P.m, 3);
        MpolySpec spec{n3 == 1, {1, 2, 5, 10, 11, 13, 14}};
        return make("N_3(m)=" + std::to_string(n3), spec, 7 * P.m + n3, ctx.n(), between(n3 ? 5 : 4, 16, true));
    };
    return c;
}

// ---- Dickson polynomials ----

Claim dickson_pu() {
    Claim c;
    c.id = "dickson-pu";
    c.title = "f(x) = D_{p^u}(x, a) = x^{p^u}";
    c.needs = {"m", "u"};
    c.hypothesis = [](const ClaimParams&) -> Hyp { return std::nullopt; };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) {
        const std::uint64_t h = checked_pow(P.p, *P.u);
        if (h <= 1024) {
            ClaimParams Q = P;
            if (!Q.a) Q.a = 0;
            return dickson_seq(ctx, Q, static_cast<unsigned>(h));
        }
        return monomial_seq(ctx, h);
    };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const int d1 = ctx.delta(ctx.one());
        const std::uint64_t n = ctx.n();
        MpolySpec spec{d1 == 1, {powmod(P.p % n, *P.u, n)}};
        std::uint64_t d = ctx.q() == 2 ? (d1 ? 4 : 3) : (d1 ? 3 : 2);
        return make(with_delta(ctx.q() == 2 ? "q=2" : "q>2", "1", d1), spec, P.m + d1, n, exactly(d));
    };
    return c;
}

Claim dickson_d2() {
    Claim c;
    c.id = "dickson-d2";
    c.title = "f(x) = D_2(x, a) = x^2 - 2a";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (P.p <= 2) return "p > 2";
        return at_least_m(P, 3);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 2); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        const int dl = ctx.delta(poly_in(ctx, a, {1, -2}));
        std::uint64_t d = ctx.q() == 3 ? (dl ? 5 : 4) : (dl ? 4 : 3);
        return make(with_delta(ctx.q() == 3 ? "q=3" : "q>3", "1-2a", dl), MpolySpec{dl == 1, {1, 2}}, 2 * P.m + dl, ctx.n(), exactly(d));
    };
    return c;
}

Claim dickson_d3_q2() {
    Claim c;
    c.id = "dickson-d3-q2";
    c.title = "f(x) = D_3(x, a) = x^3 + ax over GF(2^m)";
    c.notes = "a = 1 gives the double-error-correcting BCH code or its even-like subcode";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto b = binary(P)) return b;
        return at_least_m(P, 4);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 3); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        if (a.is_zero()) {
            const int dl = ctx.delta(ctx.one());
            return make(with_delta("a=0", "1", dl), MpolySpec{dl == 1, {3}}, dl + P.m, ctx.n(), exactly(dl ? 4 : 2));
        }
        const int dl = ctx.delta(poly_in(ctx, a, {1, 1}));
        return make(with_delta("a!=0", "1+a", dl), MpolySpec{dl == 1, {1, 3}}, dl + 2 * P.m, ctx.n(), exactly(dl ? 6 : 5));
    };
    return c;
}

Claim dickson_d3_q() {
    Claim c;
    c.id = "dickson-d3-q";
    c.title = "f(x) = D_3(x, a) = x^3 - 3ax, p >= 5 or p = 2 and t >= 2";
    c.notes = "span printed with delta(1+a); delta(1-3a) from the minimal polynomial is used (they agree for p = 2); "
              "the q = 4 rows of the distance table are read as strengthenings";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (P.p >= 5 || (P.p == 2 && P.s >= 2)) return std::nullopt;
        return "p >= 5, or p = 2 and t >= 2";
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 3); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        if (a == ctx.one()) {
            const int dl = ctx.delta(integer(ctx, -2));
            return make(with_delta("a=1", "-2", dl), MpolySpec{dl == 1, {3, 2}}, dl + 2 * P.m, ctx.n(), at_least(3));
        }
        const int dl = ctx.delta(poly_in(ctx, a, {1, -3}));
        std::uint64_t lb = ctx.q() == 4 ? (dl ? 6 : 5) : (dl ? 5 : 4);
        return make(with_delta("a!=1", "1-3a", dl), MpolySpec{dl == 1, {3, 2, 1}}, dl + 3 * P.m, ctx.n(), at_least(lb));
    };
    return c;
}

Claim dickson_d4_q3() {
    Claim c;
    c.id = "dickson-d4-q3";
    c.title = "f(x) = D_4(x, a) = x^4 - 4ax^2 + 2a^2 over GF(3^m)";
    c.notes = "\"a=0 m = 0 (mod 6)\" is read as a conjunction";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto t = ternary(P)) return t;
        return at_least_m(P, 3);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 4); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        const int d1 = ctx.delta(ctx.one());
        if (a.is_zero()) {
            auto d = P.m % 6 == 0 ? exactly(3) : at_least(4);
            return make(P.m % 6 == 0 ? "a=0, m = 0 (mod 6)" : "a=0, m != 0 (mod 6)", MpolySpec{d1 == 1, {4, 1}}, d1 + 2 * P.m, ctx.n(), d);
        }
        if (a == ctx.one()) return make("a=1", MpolySpec{d1 == 1, {4, 2}}, d1 + 2 * P.m, ctx.n(), exactly(2));
        const int dl = ctx.delta(poly_in(ctx, a, {1, -1, -1}));
        auto d = dl ? exactly(6) : at_least(5);
        return make(with_delta("a^2!=a", "1-a-a^2", dl), MpolySpec{dl == 1, {4, 2, 1}}, dl + 3 * P.m, ctx.n(), d);
    };
    return c;
}

Claim dickson_d4_q() {
    Claim c;
    c.id = "dickson-d4-q";
    c.title = "f(x) = D_4(x, a), p >= 5 or p = 3 and t >= 2";
    c.notes = "the distance table prints delta(1-4a+a^2); delta(1-4a+2a^2) from the minimal polynomial is used; "
                  "the row d = 6 fails at q = 5, m = 2 ([24, 15, 7]) and is read as d >= 6";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (!(P.p >= 5 || (P.p == 3 && P.s >= 2))) return "p >= 5, or p = 3 and t >= 2";
        return at_least_m(P, 2);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 4); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        const int d1 = ctx.delta(ctx.one());
        if (a == frac(ctx, 3, 2)) return make("a=3/2", MpolySpec{d1 == 1, {4, 3, 1}}, d1 + 3 * P.m, ctx.n(), at_least(3));
        if (a == frac(ctx, 1, 2)) return make("a=1/2", MpolySpec{d1 == 1, {4, 3, 2}}, d1 + 3 * P.m, ctx.n(), at_least(4));
        const int dl = ctx.delta(poly_in(ctx, a, {1, -4, 2}));
        // The printed "d = 6" row fails at q=5, m=2 ([24,15,7]); read as d >= 6.
        auto d = at_least(dl ? 6 : 5);
        return make(with_delta("a not in {3/2, 1/2}", "1-4a+2a^2", dl), MpolySpec{dl == 1, {1, 2, 3, 4}}, dl + 4 * P.m, ctx.n(), d);
    };
    return c;
}

Claim dickson_d5_q2() {
    Claim c;
    c.id = "dickson-d5-q2";
    c.title = "f(x) = D_5(x, a) over GF(2^m)";
    c.notes = "m = 5, a = 1 gives [31, 15, 8]";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto b = binary(P)) return b;
        return at_least_m(P, 5);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 5); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        const int d1 = ctx.delta(ctx.one());
        const std::uint64_t n = ctx.n();
        if (a.is_zero()) {
            DistancePrediction d = d1 ? exactly(4) : exactly(n % 5 == 0 ? 2 : 3);
            return make(with_delta("a=0", "1", d1), MpolySpec{d1 == 1, {5}}, d1 + P.m, n, d);
        }
        if (poly_in(ctx, a, {1, 1, 0, 1}).is_zero()) {
            return make(with_delta("1+a+a^3=0", "1", d1), MpolySpec{d1 == 1, {5, 3}}, d1 + 2 * P.m, n, at_least(d1 ? 4 : 3));
        }
        return make(with_delta("a+a^2+a^4!=0", "1", d1), MpolySpec{d1 == 1, {1, 3, 5}}, d1 + 3 * P.m, n, d1 ? exactly(8) : at_least(7));
    };
    return c;
}

Claim dickson_d5_q4() {
    Claim c;
    c.id = "dickson-d5-q4";
    c.title = "f(x) = D_5(x, a) over GF(4^m)";
    c.notes = "span printed with delta(1) in the generic case; delta(1+a+a^2) from the minimal polynomial is used";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (P.p != 2 || P.s != 2) return "(p, q) = (2, 4)";
        return at_least_m(P, 3);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 5); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        const int d1 = ctx.delta(ctx.one());
        const std::uint64_t n = ctx.n();
        if (a.is_zero()) {
            DistancePrediction d;
            if (n % 5 != 0) {
                d = exactly(3);
            } else if (d1 == 0) {
                d = exactly(2);
            }
            return make(with_delta("a=0", "1", d1), MpolySpec{d1 == 1, {5}}, d1 + P.m, n, d);
        }
        if (a == ctx.one()) return make("a=1", MpolySpec{d1 == 1, {5, 3, 2}}, d1 + 3 * P.m, n, at_least(3));
        const int dl = ctx.delta(poly_in(ctx, a, {1, 1, 1}));
        std::string label = with_delta("a+a^2!=0", "1", d1) + ", delta(1+a+a^2)=" + std::to_string(dl);
        return make(label, MpolySpec{dl == 1, {5, 3, 2, 1}}, dl + 4 * P.m, n, at_least(d1 ? 7 : 6));
    };
    return c;
}

Claim dickson_d5_q2t() {
    Claim c;
    c.id = "dickson-d5-q2t";
    c.title = "f(x) = D_5(x, a) over GF(2^{tm}), t >= 3";
    c.notes = "spans printed with delta(1) in the last two cases; the minimal polynomial's delta(1+a+a^2) is used";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (P.p != 2 || P.s < 3) return "(p, q) = (2, 2^t), t >= 3";
        return at_least_m(P, 3);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 5); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        const int d1 = ctx.delta(ctx.one());
        const std::uint64_t n = ctx.n();
        if (a.is_zero()) return make(with_delta("a=0", "1", d1), MpolySpec{d1 == 1, {5, 4, 1}}, d1 + 3 * P.m, n, at_least(d1 ? 4 : 3));
        if (poly_in(ctx, a, {1, 1, 1}).is_zero()) return make("1+a+a^2=0", MpolySpec{false, {2, 3, 4, 5}}, 4 * P.m, n, at_least(5));
        const int dl = ctx.delta(poly_in(ctx, a, {1, 1, 1}));
        std::string label = with_delta("a+a^2+a^3!=0", "1", d1) + ", delta(1+a+a^2)=" + std::to_string(dl);
        return make(label, MpolySpec{dl == 1, {1, 2, 3, 4, 5}}, dl + 5 * P.m, n, at_least(d1 ? 7 : 6));
    };
    return c;
}

Claim dickson_d5_q3() {
    Claim c;
    c.id = "dickson-d5-q3";
    c.title = "f(x) = D_5(x, a) over GF(3^m)";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto t = ternary(P)) return t;
        return at_least_m(P, 3);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 5); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        const int dl = ctx.delta(poly_in(ctx, a, {1, 1, 2}));
        if (a == ctx.pow(a, 6)) return make(with_delta("a-a^6=0", "1+a+2a^2", dl), MpolySpec{dl == 1, {5, 4, 2}}, dl + 3 * P.m, ctx.n(), at_least(4));
        return make(with_delta("a-a^6!=0", "1+a+2a^2", dl), MpolySpec{dl == 1, {2, 3, 4, 5}}, dl + 4 * P.m, ctx.n(), at_least(dl ? 8 : 7));
    };
    return c;
}

Claim dickson_d5_q3t() {
    Claim c;
    c.id = "dickson-d5-q3t";
    c.title = "f(x) = D_5(x, a) over GF(3^{tm}), t >= 2";
    c.notes = "the theorem cites the lemma for (2, 2^t); the adjacent (3, 3^t) lemma is used";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (P.p != 3 || P.s < 2) return "(p, q) = (3, 3^t), t >= 2";
        return at_least_m(P, 2);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 5); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        const std::uint64_t n = ctx.n();
        if (poly_in(ctx, a, {1, 1}).is_zero()) {
            const int dl = ctx.delta(ctx.one());
            return make(with_delta("a=-1", "1", dl), MpolySpec{dl == 1, {5, 4, 2, 1}}, dl + 4 * P.m, n, at_least(dl ? 4 : 3));
        }
        if (poly_in(ctx, a, {1, 0, 1}).is_zero()) {
            const int dl = ctx.delta(poly_in(ctx, a, {-1, 1}));
            return make(with_delta("a^2=-1", "a-1", dl), MpolySpec{dl == 1, {5, 4, 3, 2}}, dl + 4 * P.m, n, at_least(dl ? 6 : 5));
        }
        const int dl = ctx.delta(poly_in(ctx, a, {1, 1, 2}));
        return make(with_delta("(a+1)(a^2+1)!=0", "1+a+2a^2", dl), MpolySpec{dl == 1, {1, 2, 3, 4, 5}}, dl + 5 * P.m, n, at_least(dl ? 7 : 6));
    };
    return c;
}

Claim dickson_d5_p7() {
    Claim c;
    c.id = "dickson-d5-p7";
    c.title = "f(x) = D_5(x, a), p >= 7";
    c.needs = {"m", "a"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (P.p < 7) return "p >= 7";
        return at_least_m(P, 2);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams& P) { return dickson_seq(ctx, P, 5); };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const auto a = elem_a(ctx, P);
        const std::uint64_t n = ctx.n();
        const int dl = ctx.delta(poly_in(ctx, a, {1, -5, 5}));
        const std::string arg = "1-5a+5a^2";
        if (a == integer(ctx, 2)) return make(with_delta("a=2", arg, dl), MpolySpec{dl == 1, {5, 4, 2, 1}}, dl + 4 * P.m, n, at_least(dl ? 4 : 3));
        if (a == frac(ctx, 2, 3)) return make(with_delta("a=2/3", arg, dl), MpolySpec{dl == 1, {5, 4, 3, 1}}, dl + 4 * P.m, n, at_least(dl ? 5 : 4));
        if (poly_in(ctx, a, {1, -3, 1}).is_zero()) {
            return make(with_delta("a^2-3a+1=0", arg, dl), MpolySpec{dl == 1, {5, 4, 3, 2}}, dl + 4 * P.m, n, at_least(dl ? 6 : 5));
        }
        return make(with_delta("generic a", arg, dl), MpolySpec{dl == 1, {1, 2, 3, 4, 5}}, dl + 5 * P.m, n, at_least(dl ? 7 : 6));
    };
    return c;
}

// ---- difference sets ----

Claim singer_hamming() {
    Claim c;
    c.id = "singer-hamming";
    c.title = "characteristic sequence of the Singer set {i : Tr(alpha^i) = 1} in Z_{2^m-1}";
    c.notes = "the code is the Hamming code";
    c.needs = {"m"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp {
        if (auto b = binary(P)) return b;
        return at_least_m(P, 2);
    };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams&) {
        return characteristic_sequence(singer_difference_set(ctx, SingerVariant::trace_one_binary), ctx.n(), ctx.base());
    };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) { return make("q=2", MpolySpec{false, {1}}, P.m, ctx.n(), exactly(3)); };
    return c;
}

Claim singer_projective() {
    Claim c;
    c.id = "singer-projective";
    c.title = "characteristic sequence of the Singer set {0 <= i < (q^m-1)/(q-1) : Tr(alpha^i) = 0}";
    c.notes = "the distance is claimed for the complement code; the distance of the code itself is open";
    c.needs = {"m"};
    c.hypothesis = [](const ClaimParams& P) -> Hyp { return at_least_m(P, 3); };
    c.sequence = [](const FieldCtx& ctx, const ClaimParams&) {
        const auto v = SingerVariant::trace_zero_projective;
        return characteristic_sequence(singer_difference_set(ctx, v), singer_length(ctx, v), ctx.base());
    };
    c.predict = [](const FieldCtx& ctx, const ClaimParams& P) {
        const std::uint64_t n = singer_length(ctx, SingerVariant::trace_zero_projective);
        BigInt binom = 1;
        for (std::uint64_t i = 1; i <= P.m - 1; ++i) binom = binom * (P.p + i - 1) / i;
        BigInt span = 1;
        for (unsigned i = 0; i < P.s; ++i) span *= binom;
        span += 1;
        Prediction pr;
        pr.case_label = "projective";
        pr.span = static_cast<std::uint64_t>(span);
        if (pr.span > n) throw std::logic_error("predicted span exceeds the period");
        pr.dimension = n - pr.span;
        pr.distance = exactly((checked_pow(ctx.q(), P.m - 1) - 1) / (ctx.q() - 1));
        pr.target = DistanceTarget::complement;
        return pr;
    };
    return c;
}

std::vector<Claim> build_registry() {
    return {welch(),          power_2h_1(),     niho(),          kasami(),        inverse(),          planar_gold(),
            qh_theorem(),     qh_corollary(),   cm_theorem(),    cm_corollary(),  dickson_pu(),       dickson_d2(),
            dickson_d3_q2(),  dickson_d3_q(),   dickson_d4_q3(), dickson_d4_q(),  dickson_d5_q2(),    dickson_d5_q4(),
            dickson_d5_q2t(), dickson_d5_q3(),  dickson_d5_q3t(), dickson_d5_p7(), singer_hamming(),  singer_projective()};
}

std::string umbrella(const std::string& id, const ClaimParams& P) {
    if (id == "dickson-d3") {
        if (P.p == 2) return P.s == 1 ? "dickson-d3-q2" : "dickson-d3-q";
        if (P.p >= 5) return "dickson-d3-q";
        throw std::invalid_argument("dickson-d3 with p = 3 is covered by dickson-pu");
    }
    if (id == "dickson-d4") {
        if (P.p == 3) return P.s == 1 ? "dickson-d4-q3" : "dickson-d4-q";
        if (P.p >= 5) return "dickson-d4-q";
        throw std::invalid_argument("dickson-d4 with p = 2 is covered by dickson-pu");
    }
    if (id == "dickson-d5") {
        if (P.p == 2) return P.s == 1 ? "dickson-d5-q2" : P.s == 2 ? "dickson-d5-q4" : "dickson-d5-q2t";
        if (P.p == 3) return P.s == 1 ? "dickson-d5-q3" : "dickson-d5-q3t";
        if (P.p >= 7) return "dickson-d5-p7";
        throw std::invalid_argument("dickson-d5 with p = 5 is covered by dickson-pu");
    }
    return id;
}

Prediction predict_in(const Claim& c, const FieldCtx& ctx, const ClaimParams& P, std::uint64_t n) {
    Prediction pr = c.predict(ctx, P);
    if (pr.mpoly_spec) {
        pr.mpoly = expand_mpoly(ctx, n, *pr.mpoly_spec);
    }
    return pr;
}

}  // namespace

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = build_registry();
    return claims;
}

const Claim& lookup(const std::string& id, const ClaimParams& params) {
    const std::string key = umbrella(id, params);
    for (const auto& c : registry()) {
        if (c.id == key) return c;
    }
    throw std::invalid_argument("unknown claim id: " + id);
}

bool is_known_claim(const std::string& id) {
    if (id == "dickson-d3" || id == "dickson-d4" || id == "dickson-d5") return true;
    return std::any_of(registry().begin(), registry().end(), [&](const Claim& c) { return c.id == id; });
}

void require_params(const Claim& c, const ClaimParams& P) {
    if (!is_prime(P.p)) throw std::invalid_argument("p = " + std::to_string(P.p) + " is not prime");
    if (P.s < 1) throw std::invalid_argument("s must be at least 1");
    for (const auto& name : c.needs) {
        const bool ok = name == "m" ? P.m >= 1 : name == "h" ? P.h.has_value() : name == "kappa" ? P.kappa.has_value() : name == "u" ? P.u.has_value() : name == "a" ? P.a.has_value() : true;
        if (!ok) throw std::invalid_argument(c.id + " needs parameter " + name);
    }
}

std::optional<std::string> check_hypotheses(const Claim& c, const ClaimParams& P) {
    require_params(c, P);
    return c.hypothesis(P);
}

Prediction predict(const Claim& c, const ClaimParams& P) {
    if (auto failed = check_hypotheses(c, P)) throw HypothesisError(c.id + ": hypothesis fails: " + *failed);
    const auto ctx = build_field(P.p, P.s, P.m);
    const std::uint64_t n = c.sequence ? c.sequence(*ctx, P).n() : ctx->n();
    return predict_in(c, *ctx, P, n);
}

Verdict distance_verdict(const DistancePrediction& pred, const DistanceResult& d, std::uint64_t n) {
    if (pred.empty()) return Verdict::not_computed;
    std::optional<std::uint64_t> lo = pred.lower;
    if (pred.quadratic) {
        std::uint64_t d0 = 1;
        while (d0 * d0 - d0 + 1 < n) ++d0;
        if (pred.even && d0 % 2) ++d0;
        lo = std::max(lo.value_or(0), d0);
    }
    if (d.exact) {
        const std::uint64_t v = d.lower;
        const bool ok = (!pred.lower || v >= *pred.lower) && (!pred.upper || v <= *pred.upper) && (!pred.even || v % 2 == 0) &&
                        (!pred.quadratic || v * v - v + 1 >= n);
        if (!ok) return Verdict::mismatch;
        if (pred.exact() || (!pred.lower && !pred.upper)) return Verdict::match;
        return Verdict::bound_consistent;
    }
    if ((lo && d.upper < *lo) || (pred.upper && d.lower > *pred.upper)) return Verdict::mismatch;
    if (pred.exact() || pred.even) return Verdict::not_computed;
    const bool lower_ok = !lo || d.lower >= *lo;
    const bool upper_ok = !pred.upper || d.upper <= *pred.upper;
    return lower_ok && upper_ok ? Verdict::bound_consistent : Verdict::not_computed;
}

bool ClaimReport::has_mismatch() const {
    return mpoly == Verdict::mismatch || span == Verdict::mismatch || dimension == Verdict::mismatch || distance == Verdict::mismatch;
}

namespace {

nlohmann::ordered_json prediction_json(const Prediction& p) {
    nlohmann::ordered_json j;
    j["case"] = p.case_label;
    if (p.mpoly_spec) {
        j["x_minus_1"] = p.mpoly_spec->x_minus_1 ? 1 : 0;
        j["exponents"] = p.mpoly_spec->exponents;
    }
    j["mpoly"] = p.mpoly ? nlohmann::ordered_json(p.mpoly->to_text()) : nlohmann::ordered_json(nullptr);
    j["span"] = p.span;
    j["dimension"] = p.dimension;
    nlohmann::ordered_json d;
    d["target"] = to_string(p.target);
    d["kind"] = p.distance.kind();
    d["lower"] = p.distance.lower ? nlohmann::ordered_json(*p.distance.lower) : nlohmann::ordered_json(nullptr);
    d["upper"] = p.distance.upper ? nlohmann::ordered_json(*p.distance.upper) : nlohmann::ordered_json(nullptr);
    d["even"] = p.distance.even;
    d["quadratic"] = p.distance.quadratic;
    d["open"] = p.distance.open;
    j["distance"] = d;
    return j;
}

std::string distance_text(const std::optional<DistanceResult>& d) {
    if (!d) return "-";
    if (d->exact) return std::to_string(d->lower);
    return "[" + std::to_string(d->lower) + "," + std::to_string(d->upper) + "]";
}

}  // namespace

nlohmann::ordered_json ClaimReport::to_json() const {
    nlohmann::ordered_json j;
    j["claim"] = claim_id;
    j["params"] = params.to_json();
    j["exploratory"] = exploratory;
    j["n"] = n;
    if (predicted) {
        j["predicted"] = prediction_json(*predicted);
    } else {
        j["predicted"] = nullptr;
        j["prediction_error"] = prediction_error;
    }
    nlohmann::ordered_json c;
    c["mpoly"] = computed_mpoly ? computed_mpoly->to_text() : "";
    c["span"] = computed_span;
    c["dimension"] = computed_dimension;
    c["distance"] = computed_distance ? distance_record(*computed_distance) : nlohmann::ordered_json(nullptr);
    j["computed"] = c;
    nlohmann::ordered_json v;
    v["mpoly"] = to_string(mpoly);
    v["span"] = to_string(span);
    v["dimension"] = to_string(dimension);
    v["distance"] = to_string(distance);
    j["verdicts"] = v;
    if (seconds) j["seconds"] = *seconds;
    return j;
}

std::string ClaimReport::to_text() const {
    std::ostringstream os;
    os << claim_id << " [" << params.to_text() << "]";
    if (exploratory) os << " (exploratory)";
    os << "\n";
    if (predicted) {
        os << "  case: " << predicted->case_label << "\n";
    } else if (!prediction_error.empty()) {
        os << "  prediction unavailable: " << prediction_error << "\n";
    }
    os << "  code: [" << n << ", " << computed_dimension << "], span " << computed_span;
    if (predicted) os << " (predicted " << predicted->span << ")";
    os << "\n";
    os << "  mpoly: " << to_string(mpoly) << ", span: " << to_string(span) << ", dimension: " << to_string(dimension) << "\n";
    os << "  distance";
    if (predicted && predicted->target == DistanceTarget::complement) os << " of the complement";
    os << ": " << distance_text(computed_distance);
    if (computed_distance) os << " via " << seqcodes::to_string(computed_distance->method);
    if (predicted) os << "; claimed " << predicted->distance.describe();
    os << " -> " << to_string(distance) << "\n";
    if (seconds) os << "  seconds: " << *seconds << "\n";
    return os.str();
}

std::string ClaimReport::csv_header() { return "claim,params,n,k,span_verdict,mpoly_verdict,d_computed,d_verdict,seconds"; }

std::string ClaimReport::csv_row() const {
    std::string ps = params.to_text();
    std::replace(ps.begin(), ps.end(), ' ', ';');
    std::ostringstream os;
    os << claim_id << "," << ps << "," << n << "," << computed_dimension << "," << to_string(span) << "," << to_string(mpoly) << ","
       << distance_text(computed_distance) << "," << to_string(distance) << ",";
    if (seconds) os << *seconds;
    return os.str();
}

ClaimReport verify_claim(const Claim& c, const ClaimParams& P, const VerifyOptions& opt) {
    require_params(c, P);
    if (opt.check_hypotheses) {
        if (auto failed = c.hypothesis(P)) throw HypothesisError(c.id + ": hypothesis fails: " + *failed);
    }
    const auto t0 = std::chrono::steady_clock::now();
    ClaimReport R;
    R.claim_id = c.id;
    R.params = P;
    R.exploratory = !opt.check_hypotheses;

    const auto ctx = build_field(P.p, P.s, P.m);
    const PeriodicSequence seq = c.sequence(*ctx, P);
    R.n = seq.n();
    if (R.exploratory) {
        try {
            R.predicted = predict_in(c, *ctx, P, R.n);
        } catch (const std::exception& e) {
            R.prediction_error = e.what();
        }
    } else {
        R.predicted = predict_in(c, *ctx, P, R.n);
    }

    const auto bm = berlekamp_massey(seq);
    const Poly via_gcd = minimal_poly_via_gcd(seq);
    if (bm.minimal_poly != via_gcd) throw std::logic_error(c.id + ": Berlekamp-Massey and the gcd route disagree");
    R.computed_mpoly = bm.minimal_poly;
    R.computed_span = bm.linear_span;
    R.computed_dimension = R.n - R.computed_span;

    const CyclicCode code = code_from_sequence(seq, ctx);
    if (code.k() != R.computed_dimension) throw std::logic_error(c.id + ": code dimension differs from n - span");
    const bool to_complement = R.predicted && R.predicted->target == DistanceTarget::complement;
    const CyclicCode target = to_complement ? complement(code) : code;
    if (target.k() > 0) {
        EnumOptions eo;
        eo.budget = opt.budget;
        eo.threads = opt.threads;
        try {
            R.computed_distance = min_distance(target, eo);
        } catch (const BudgetExceeded&) {
        }
    }

    if (R.exploratory) {
        R.mpoly = R.span = R.dimension = R.distance = Verdict::exploratory;
    } else {
        const auto& pr = *R.predicted;
        R.mpoly = pr.mpoly ? (*pr.mpoly == *R.computed_mpoly ? Verdict::match : Verdict::mismatch) : Verdict::not_computed;
        R.span = pr.span == R.computed_span ? Verdict::match : Verdict::mismatch;
        R.dimension = pr.dimension == R.computed_dimension ? Verdict::match : Verdict::mismatch;
        R.distance = R.computed_distance ? distance_verdict(pr.distance, *R.computed_distance, target.n()) : Verdict::not_computed;
    }
    if (opt.timing) R.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return R;
}

}  // namespace seqcodes
