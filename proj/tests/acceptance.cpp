#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "seqcodes/claims.hpp"
#include "seqcodes/codes.hpp"
#include "seqcodes/combinatorics.hpp"
#include "seqcodes/cyclotomic.hpp"
#include "seqcodes/minpoly.hpp"
#include "seqcodes/sequences.hpp"

using namespace seqcodes;

namespace {

// Collects failed checks for one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok && failures_.size() < 8) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream os;
        os << total_ - failed_ << "/" << total_ << " checks";
        for (const auto& n : notes_) os << "; " << n;
        for (const auto& f : failures_) os << "\n    failed: " << f;
        return os.str();
    }

private:
    std::size_t total_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string code_text(std::uint64_t n, std::uint64_t k, const DistanceResult& d) {
    std::ostringstream os;
    os << "[" << n << "," << k << ",";
    if (d.exact) {
        os << d.lower;
    } else {
        os << d.lower << ".." << d.upper;
    }
    os << "]";
    return os.str();
}

EnumOptions route(Strategy s, std::uint64_t budget = kDefaultBudget) { return EnumOptions{budget, s, 1}; }

// Minimum weight over all q^k codewords m(x) g(x), computed here without the
// codes module. Binary only.
std::uint64_t brute_binary_distance(const CyclicCode& c) {
    const std::size_t n = c.n();
    const std::size_t k = c.k();
    std::vector<std::uint64_t> rows(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < c.generator().coeffs().size(); ++j) {
            if (c.generator().coeffs()[j]) rows[i] |= std::uint64_t{1} << (i + j);
        }
    }
    std::uint64_t best = n + 1;
    std::uint64_t word = 0;
    // Gray code walk over all messages.
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        word ^= rows[static_cast<std::size_t>(__builtin_ctzll(i))];
        best = std::min<std::uint64_t>(best, static_cast<std::uint64_t>(__builtin_popcountll(word)));
    }
    return best;
}

// ---- A1 ----

bool a1(Check& ck) {
    for (unsigned m : {3u, 4u, 5u}) {
        const auto ctx = build_field(2, 1, m);
        const auto D = singer_difference_set(*ctx, SingerVariant::trace_one_binary);
        const auto code = code_from_sequence(characteristic_sequence(D, ctx->n(), ctx->base()), ctx);
        const std::uint64_t n = ctx->n();
        const auto d = min_distance(code, route(Strategy::dual));
        const std::string tag = "m=" + std::to_string(m);
        ck.expect(code.n() == n && code.k() == n - m, tag + " dimension");
        ck.expect(code.generator() == minimal_polynomial_of_power(*ctx, -1), tag + " generator m_{alpha^-1}");
        ck.expect(d.exact && d.lower == 3 && d.method == DistanceMethod::dual_macwilliams, tag + " d=3 via dual");
        ck.expect(sphere_packing_check(n, code.k(), d.lower, 2) == PackingVerdict::perfect, tag + " perfect");
        if (m <= 4) {
            const auto dm = min_distance(code, route(Strategy::message));
            ck.expect(dm.exact && dm.lower == 3, tag + " message route agrees");
        }
        ck.note(code_text(n, code.k(), d));
    }
    return ck.ok();
}

// ---- A2 ----

bool a2(Check& ck) {
    const auto& claim = lookup("inverse");
    for (unsigned m : {3u, 5u, 7u}) {
        const auto ctx = build_field(2, 1, m);
        const std::uint64_t n = ctx->n();
        const auto seq = trace_sequence_monomial(*ctx, checked_pow(2, m) - 2);
        const auto bm = berlekamp_massey(seq);
        const auto code = code_from_sequence(seq, ctx);
        const std::string tag = "m=" + std::to_string(m);
        ck.expect(bm.linear_span == (n + 1) / 2, tag + " span (n+1)/2");
        ck.expect(code.k() == checked_pow(2, m - 1) - 1, tag + " dimension 2^{m-1}-1");

        const CosetTable table(n, 2);
        Poly g = Poly::constant(ctx->base(), 1);
        for (auto j : table.leaders()) {
            if (nu(table, j, m) == 1) g = g * minimal_polynomial_of_power(*ctx, -static_cast<std::int64_t>(j));
        }
        ck.expect(code.generator() == g, tag + " generator from the nu table");

        ClaimParams P;
        P.m = m;
        const auto r = verify_claim(claim, P);
        ck.expect(!r.has_mismatch(), tag + " no mismatch");
        const auto& d = *r.computed_distance;
        if (m <= 5) {
            const auto dd = min_distance(code, route(Strategy::dual));
            ck.expect(dd.exact && dd.method == DistanceMethod::dual_macwilliams, tag + " exact via dual");
            ck.expect(dd.lower % 2 == 0 && dd.lower * dd.lower - dd.lower + 1 >= n, tag + " d even, d^2-d+1 >= n");
            ck.expect(r.distance == Verdict::match, tag + " distance verdict match");
            if (m == 3) ck.expect(dd.lower == 4 && brute_binary_distance(code) == 4, "m=3 d=4 by brute force");
        } else {
            ck.expect(!d.exact && r.distance == Verdict::not_computed, tag + " bounds only");
            std::uint64_t need = 1;
            while (need * need - need + 1 < n || need % 2) ++need;
            ck.expect(d.upper >= need, tag + " bounds admit an even d with d^2-d+1 >= n");
        }
        ck.note(code_text(n, code.k(), d));
    }
    return ck.ok();
}

// ---- A3 ----

bool a3(Check& ck) {
    const auto& claim = lookup("welch");
    for (unsigned m : {7u, 9u}) {
        ClaimParams P;
        P.m = m;
        const auto r = verify_claim(claim, P);
        const std::string tag = "m=" + std::to_string(m);
        ck.expect(r.computed_span == 5 * m + 1, tag + " BM span 5m+1");
        ck.expect(r.mpoly == Verdict::match && r.predicted->mpoly && *r.predicted->mpoly == *r.computed_mpoly, tag + " product equals M_s");
        const auto ctx = build_field(2, 1, m);
        const CyclicCode code(ctx->n(), *r.computed_mpoly, ctx);
        const auto bch = bch_bound(code);
        const Verdict want = bch >= 8 ? Verdict::bound_consistent : Verdict::not_computed;
        ck.expect(r.distance == want, tag + " distance " + to_string(want));
        ck.note(tag + " BCH " + std::to_string(bch) + " -> " + to_string(r.distance));
    }
    return ck.ok();
}

// ---- A4 ----

bool a4(Check& ck) {
    const auto& claim = lookup("planar-gold");
    for (unsigned m : {3u, 5u}) {
        ClaimParams P;
        P.p = 3;
        P.m = m;
        P.kappa = 1;
        const auto r = verify_claim(claim, P);
        const std::string tag = "m=" + std::to_string(m);
        ck.expect(r.span == Verdict::match && r.mpoly == Verdict::match && r.dimension == Verdict::match, tag + " span and mpoly");
        const auto& d = *r.computed_distance;
        ck.expect(d.exact, tag + " exact d");
        if (m == 3) {
            ck.expect(r.n == 26 && r.computed_dimension == 20, "m=3 [26,20]");
            ck.expect(d.lower == 4 && r.distance == Verdict::match, "m=3 d=4 matches its row");
        } else {
            ck.expect(d.lower >= 4 && d.lower <= 5 && r.distance == Verdict::bound_consistent, "m=5 d in {4,5}");
            ck.expect(d.method == DistanceMethod::dual_macwilliams, "m=5 via dual enumeration");
        }
        ck.note(code_text(r.n, r.computed_dimension, d) + " (" + r.predicted->case_label + ")");
    }
    return ck.ok();
}

// ---- A5 ----

struct Field {
    std::uint64_t p;
    unsigned s;
    unsigned m;
};

std::vector<std::uint64_t> sweep_values(const Claim& c, const FieldCtx& ctx, const ClaimParams& base) {
    std::set<std::uint64_t> out;
    if (ctx.order() <= 64) {
        for (std::uint64_t a = 0; a < ctx.order(); ++a) out.insert(a);
        return {out.begin(), out.end()};
    }
    out.insert(0);
    out.insert(1);
    out.insert(ctx.encode(ctx.alpha()));
    std::set<std::string> seen;
    for (std::uint64_t a = 0; a < ctx.order(); ++a) {
        ClaimParams P = base;
        P.a = a;
        if (c.hypothesis(P)) continue;
        if (seen.insert(c.predict(ctx, P).case_label).second) out.insert(a);
    }
    return {out.begin(), out.end()};
}

bool a5(Check& ck) {
    struct Family {
        std::string id;
        std::vector<Field> fields;
        bool uses_a;
    };
    const std::vector<Family> families = {
        {"dickson-pu", {{2, 1, 3}, {2, 1, 4}, {2, 1, 5}}, false},
        {"dickson-d2", {{3, 1, 3}, {5, 1, 3}}, true},
        {"dickson-d3", {{2, 1, 4}, {2, 1, 5}, {2, 1, 6}}, true},
        {"dickson-d4", {{3, 1, 3}, {3, 1, 4}, {5, 1, 2}, {5, 1, 3}}, true},
        {"dickson-d5", {{2, 1, 5}, {2, 1, 6}, {2, 1, 7}, {2, 2, 3}, {2, 3, 3}, {3, 1, 3}, {3, 1, 4}, {3, 2, 2}, {7, 1, 2}}, true},
    };
    VerifyOptions opt;
    opt.budget = kDefaultBudget;
    std::size_t points = 0, exact = 0, exact_claims = 0, skipped = 0;
    std::map<std::string, std::size_t> per_family;
    for (const auto& fam : families) {
        for (const auto& f : fam.fields) {
            const auto ctx = build_field(f.p, f.s, f.m);
            ClaimParams base;
            base.p = f.p;
            base.s = f.s;
            base.m = f.m;
            std::vector<ClaimParams> pts;
            if (!fam.uses_a) {
                for (unsigned u : {0u, 1u}) {
                    ClaimParams P = base;
                    P.u = u;
                    pts.push_back(P);
                }
            } else {
                const auto& c = lookup(fam.id, base);
                for (auto a : sweep_values(c, *ctx, base)) {
                    ClaimParams P = base;
                    P.a = a;
                    pts.push_back(P);
                }
            }
            for (const auto& P : pts) {
                const auto& c = lookup(fam.id, P);
                if (check_hypotheses(c, P)) {
                    ++skipped;
                    continue;
                }
                const auto r = verify_claim(c, P, opt);
                ++points;
                ++per_family[fam.id];
                const std::string tag = c.id + " [" + P.to_text() + "]";
                ck.expect(r.mpoly == Verdict::match, tag + " mpoly " + to_string(r.mpoly));
                ck.expect(r.span == Verdict::match, tag + " span " + to_string(r.span));
                ck.expect(r.dimension == Verdict::match, tag + " dimension " + to_string(r.dimension));
                ck.expect(r.distance != Verdict::mismatch,
                          tag + " distance " + r.predicted->distance.describe() + " vs " + code_text(r.n, r.computed_dimension, *r.computed_distance));
                const BigInt small = std::min(big_pow(ctx->q(), r.computed_dimension), big_pow(ctx->q(), r.n - r.computed_dimension));
                if (r.computed_distance) {
                    if (small <= BigInt(kDefaultBudget)) {
                        ck.expect(r.computed_distance->exact, tag + " exact distance within budget");
                        if (!r.predicted->distance.empty()) {
                            ck.expect(r.distance == Verdict::match || r.distance == Verdict::bound_consistent, tag + " distance verdict " + to_string(r.distance));
                        }
                    }
                    exact += r.computed_distance->exact;
                    if (r.predicted->distance.exact()) ++exact_claims;
                }
            }
        }
    }

    // Anchors.
    ClaimParams P;
    P.m = 5;
    P.a = 1;
    auto r = verify_claim(lookup("dickson-d5", P), P);
    const auto ctx5 = build_field(2, 1, 5);
    const CyclicCode anchor(31, *r.computed_mpoly, ctx5);
    ck.expect(r.computed_span == 16 && r.computed_dimension == 15, "anchor D5 q=2 m=5 a=1 span 16");
    ck.expect(r.computed_distance->exact && r.computed_distance->lower == 8, "anchor [31,15,8]");
    ck.expect(brute_binary_distance(anchor) == 8, "anchor d=8 by brute force over 2^15 codewords");

    P.m = 4;
    r = verify_claim(lookup("dickson-d3", P), P);
    const CyclicCode bch(15, *r.computed_mpoly, build_field(2, 1, 4));
    ck.expect(r.n == 15 && r.computed_dimension == 7 && brute_binary_distance(bch) == 5 && r.distance == Verdict::match, "D3 q=2 m=4 a=1 [15,7,5]");

    std::ostringstream os;
    os << points << " points (";
    bool first = true;
    for (const auto& [id, count] : per_family) {
        os << (first ? "" : ", ") << id << " " << count;
        first = false;
    }
    os << "), " << exact << " exact distances, " << exact_claims << " exact-d claims, " << skipped << " outside hypotheses";
    ck.note(os.str());
    return ck.ok();
}

// ---- A6 ----

bool a6(Check& ck) {
    std::mt19937_64 rng(20240611);
    std::size_t count = 0;
    for (std::uint64_t q : {2u, 3u, 4u}) {
        const std::uint64_t p = q == 3 ? 3 : 2;
        const unsigned s = q == 4 ? 2 : 1;
        const auto F = BaseField::make(p, s);
        for (std::uint64_t n : {7u, 9u, 11u, 13u, 15u, 21u, 63u}) {
            if (std::gcd(n, q) != 1) continue;
            const auto ctx = build_field(p, s, multiplicative_order(q, n));
            const auto factors = factor_xn_minus_1(*ctx, n);
            const Poly xn = Poly::xn_minus_1(F, n);
            for (int trial = 0; trial < 14; ++trial) {
                std::vector<Sym> v(n);
                if (trial % 2 == 0) {
                    for (auto& x : v) x = rng() % q;
                } else {
                    // S(x) = r(x) (x^n - 1)/g(x) mod x^n - 1 for a random factor g.
                    Poly g = Poly::constant(F, 1);
                    for (const auto& f : factors) {
                        if (rng() % 3 == 0) g = g * f.factor;
                    }
                    std::vector<Sym> rc(n);
                    for (auto& x : rc) x = rng() % q;
                    const Poly S = (Poly(F, rc) * exact_div(xn, g)) % xn;
                    for (std::size_t i = 0; i < n; ++i) v[i] = S[i];
                }
                const PeriodicSequence seq(F, v);
                const auto bm = berlekamp_massey(seq);
                const auto viagcd = minimal_poly_via_gcd(seq);
                const std::string tag = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " trial " + std::to_string(trial);
                ck.expect(bm.minimal_poly == viagcd, tag + " BM vs gcd");
                ck.expect(code_from_sequence(seq).k() == n - bm.linear_span, tag + " dimension n - span");
                ++count;
            }
        }
    }
    ck.expect(count >= 200, "at least 200 sequences");
    ck.note(std::to_string(count) + " sequences");
    return ck.ok();
}

// ---- A7 ----

bool a7(Check& ck) {
    std::mt19937_64 rng(7);
    for (auto [n, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{7, 2}, {15, 2}, {13, 3}, {21, 2}}) {
        const auto F = BaseField::make(q, 1);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::uint64_t> D;
            for (std::uint64_t i = 0; i < n; ++i) {
                if (rng() % 2) D.push_back(i);
            }
            const auto seq_code = code_from_sequence(characteristic_sequence(D, n, F));
            ck.expect(seq_code == complement(classical_code(D, n, F)), "n=" + std::to_string(n) + " code relation");
        }
    }

    // Dual and complement codes of the small Dickson corpus.
    std::size_t codes = 0, direct = 0;
    auto compare = [&](const CyclicCode& c, const std::string& tag) {
        const auto du = dual(c);
        const auto co = complement(c);
        if (big_pow(c.q(), du.k()) <= BigInt(kDefaultBudget)) {
            ck.expect(enumerate_weights(du, kDefaultBudget) == enumerate_weights(co, kDefaultBudget), tag + " dual/complement by enumeration");
            ++direct;
        } else {
            ck.expect(weight_distribution(du) == weight_distribution(co), tag + " dual/complement");
        }
        ++codes;
    };
    struct Pt {
        std::string id;
        std::uint64_t p;
        unsigned s, m;
        bool uses_a;
    };
    const std::vector<Pt> corpus = {
        {"dickson-pu", 2, 1, 3, false}, {"dickson-pu", 2, 1, 4, false}, {"dickson-pu", 2, 1, 5, false}, {"dickson-d2", 3, 1, 3, true},
        {"dickson-d3", 2, 1, 4, true},  {"dickson-d3", 2, 1, 5, true},  {"dickson-d4", 3, 1, 3, true},  {"dickson-d4", 5, 1, 2, true},
        {"dickson-d5", 2, 1, 5, true},
    };
    for (const auto& pt : corpus) {
        const auto ctx = build_field(pt.p, pt.s, pt.m);
        std::set<std::string> gens;
        const std::uint64_t count = pt.uses_a ? ctx->order() : 2;
        for (std::uint64_t i = 0; i < count; ++i) {
            ClaimParams P;
            P.p = pt.p;
            P.s = pt.s;
            P.m = pt.m;
            if (pt.uses_a) {
                P.a = i;
            } else {
                P.u = static_cast<unsigned>(i);
            }
            const auto& c = lookup(pt.id, P);
            if (check_hypotheses(c, P)) continue;
            const auto code = code_from_sequence(c.sequence(*ctx, P), ctx);
            if (code.n() > 31 || !gens.insert(code.generator().to_text()).second) continue;
            compare(code, c.id + " [" + P.to_text() + "]");
        }
    }

    std::size_t inv = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const std::uint64_t n = std::vector<std::uint64_t>{7, 9, 15, 13}[trial % 4];
        const std::uint64_t q = n == 13 ? 3 : 2;
        const auto ctx = build_field(q, 1, multiplicative_order(q, n));
        Poly g = Poly::constant(ctx->base(), 1);
        for (const auto& f : factor_xn_minus_1(*ctx, n)) {
            if (rng() % 2) g = g * f.factor;
        }
        const CyclicCode c(n, g, ctx);
        if (c.k() == 0) continue;
        const auto A = enumerate_weights(c, kDefaultBudget);
        const auto B = macwilliams_transform(A, n, q, c.k());
        ck.expect(macwilliams_transform(B, n, q, n - c.k()) == A, "MacWilliams involution n=" + std::to_string(n));
        ck.expect(B == enumerate_weights(dual(c), kDefaultBudget), "MacWilliams equals dual enumeration n=" + std::to_string(n));
        ++inv;
    }
    ck.note(std::to_string(codes) + " corpus codes (" + std::to_string(direct) + " by direct enumeration), " + std::to_string(inv) + " involutions");
    return ck.ok();
}

// ---- A8 ----

std::uint64_t tuples(std::uint64_t J, std::uint64_t len) {
    std::uint64_t count = 0;
    std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t lo, std::uint64_t left) {
        if (left == 0) {
            ++count;
            return;
        }
        for (std::uint64_t v = lo; v < J; ++v) rec(v + 1, left - 1);
    };
    rec(1, len);
    return count;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool a8(Check& ck) {
    for (std::uint64_t J = 2; J <= 12; ++J) {
        for (std::uint64_t t = 2; t <= J; ++t) ck.expect(count_vectors(J, t) == tuples(J, t - 1), "N(" + std::to_string(J) + "," + std::to_string(t) + ")");
    }
    auto singer = [&](std::uint64_t q, unsigned m) {
        const auto ctx = build_field(q, 1, m);
        const auto D = singer_difference_set(*ctx, SingerVariant::trace_zero_projective);
        const std::uint64_t n = (checked_pow(q, m) - 1) / (q - 1);
        const std::uint64_t k = (checked_pow(q, m - 1) - 1) / (q - 1);
        const std::uint64_t lambda = (checked_pow(q, m - 2) - 1) / (q - 1);
        const auto rep = classify_subset(D, n);
        const std::string tag = "q=" + std::to_string(q) + " m=" + std::to_string(m);
        ck.expect(singer_length(*ctx, SingerVariant::trace_zero_projective) == n && D.size() == k, tag + " Singer (n,k)");
        ck.expect(rep.kind == DesignKind::difference_set && rep.lambda == lambda, tag + " Singer lambda");
        if (q == 2) {
            const auto B = singer_difference_set(*ctx, SingerVariant::trace_one_binary);
            const auto rb = classify_subset(B, n);
            ck.expect(B.size() == checked_pow(2, m - 1) && rb.kind == DesignKind::difference_set && rb.lambda == checked_pow(2, m - 2),
                      tag + " trace-one set");
        }
    };
    for (unsigned m = 3; m <= 7; ++m) singer(2, m);
    for (unsigned m = 3; m <= 4; ++m) singer(3, m);

    for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {2, 4}, {3, 3}}) {
        const auto ctx = build_field(q, 1, m);
        const auto D = singer_difference_set(*ctx, SingerVariant::trace_zero_projective);
        const std::uint64_t n = (checked_pow(q, m) - 1) / (q - 1);
        const std::uint64_t want = binom(q + m - 2, m - 1) + 1;
        const std::size_t rank = incidence_rank(D, n, ctx->base());
        const auto co = complement(code_from_sequence(characteristic_sequence(D, n, ctx->base())));
        const std::string tag = "q=" + std::to_string(q) + " m=" + std::to_string(m);
        ck.expect(rank == want, tag + " incidence rank " + std::to_string(rank) + " vs " + std::to_string(want));
        ck.expect(co.k() == want, tag + " complement dimension");
    }
    return ck.ok();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool(Check&)>>> criteria = {
        {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5}, {"A6", a6}, {"A7", a7}, {"A8", a8},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Check ck;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = fn(ck);
        } catch (const std::exception& e) {
            ck.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream t;
        t.setf(std::ios::fixed);
        t.precision(1);
        t << secs;
        std::cout << name << " " << (ok ? "PASS" : "FAIL") << " (" << t.str() << " s) " << ck.summary() << std::endl;
        failed += !ok;
    }
    return failed == 0 ? 0 : 1;
}
