#include "seqcodes/codes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "seqcodes/cyclotomic.hpp"
#include "seqcodes/minpoly.hpp"

namespace seqcodes {

CyclicCode::CyclicCode(std::size_t n, Poly generator, FieldCtxPtr ctx) : n_(n), g_(std::move(generator)), ctx_(std::move(ctx)) {
    if (n_ == 0) throw std::invalid_argument("code length must be positive");
    if (std::gcd<std::uint64_t, std::uint64_t>(n_, q()) != 1)
        throw std::invalid_argument("gcd(n, q) != 1 for n = " + std::to_string(n_) + ", q = " + std::to_string(q()));
    if (g_.is_zero()) throw std::invalid_argument("generator polynomial is zero");
    g_ = g_.monic();
    if (!divides(g_, Poly::xn_minus_1(field(), n_)))
        throw std::invalid_argument("generator " + g_.to_text() + " does not divide x^" + std::to_string(n_) + " - 1");
    if (ctx_) {
        if (ctx_->base()->tag() != tag()) throw std::invalid_argument("code context has a different base field");
        if (ctx_->n() % n_ != 0) throw std::invalid_argument("code length does not divide q^m - 1 of its context");
    }
}

Poly CyclicCode::check_poly() const { return exact_div(Poly::xn_minus_1(field(), n_), g_); }

unsigned CyclicCode::root_degree() const { return ctx_ ? ctx_->m() : multiplicative_order(q(), n_); }

FieldCtxPtr CyclicCode::root_field() const {
    if (ctx_) return ctx_;
    try {
        return build_field(tag().p, tag().s, root_degree());
    } catch (const std::invalid_argument& e) {
        throw std::domain_error(std::string("code context lacks root field: ") + e.what());
    }
}

std::string to_string(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::full_enumeration: return "full_enumeration";
        case DistanceMethod::dual_macwilliams: return "dual_macwilliams";
        case DistanceMethod::bch_bound: return "bch_bound";
        case DistanceMethod::random_search: return "random_search";
        case DistanceMethod::combined: return "combined";
    }
    return "unknown";
}

std::string to_string(PackingVerdict v) {
    switch (v) {
        case PackingVerdict::perfect: return "perfect";
        case PackingVerdict::tight_or_unknown: return "tight_or_unknown";
        case PackingVerdict::violates: return "violates";
    }
    return "unknown";
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& a : counts) t += a;
    return t;
}

std::uint64_t WeightDistribution::min_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w) {
        if (counts[w] != 0) return w;
    }
    return 0;
}

BigInt big_pow(std::uint64_t q, std::uint64_t e) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= q;
    return r;
}

CyclicCode code_from_sequence(const PeriodicSequence& seq, FieldCtxPtr ctx) {
    return CyclicCode(seq.n(), minimal_poly_via_gcd(seq), std::move(ctx));
}

CyclicCode classical_code(const std::vector<std::uint64_t>& D, std::uint64_t n, BaseFieldPtr field) {
    const auto s = characteristic_sequence(D, n, field);
    const Poly xn = Poly::xn_minus_1(field, n);
    const Poly S = s.generating_poly();
    return CyclicCode(n, S.is_zero() ? xn : poly_gcd(xn, S));
}

CyclicCode dual(const CyclicCode& c) { return CyclicCode(c.n(), reciprocal(c.check_poly()), c.context()); }

CyclicCode complement(const CyclicCode& c) { return CyclicCode(c.n(), c.check_poly(), c.context()); }

CyclicCode even_like_subcode(const CyclicCode& c) {
    const Poly x_minus_1 = Poly::xn_minus_1(c.field(), 1);
    if (divides(x_minus_1, c.generator())) return c;
    return CyclicCode(c.n(), c.generator() * x_minus_1, c.context());
}

namespace {

// Generator vectors spanning the code over GF(p): u^j x^i g(x).
std::vector<std::vector<Sym>> prime_generators(const CyclicCode& c) {
    const auto& F = *c.field();
    const auto& g = c.generator().coeffs();
    std::vector<std::vector<Sym>> out;
    Sym u_pow = 1;
    std::vector<Sym> scalars;
    for (unsigned j = 0; j < F.s(); ++j) {
        scalars.push_back(u_pow);
        u_pow *= F.p();
    }
    for (std::size_t i = 0; i < c.k(); ++i) {
        for (Sym a : scalars) {
            std::vector<Sym> v(c.n(), 0);
            for (std::size_t t = 0; t < g.size(); ++t) v[i + t] = F.mul(a, g[t]);
            out.push_back(std::move(v));
        }
    }
    return out;
}

using Hist = std::vector<std::uint64_t>;

void run_tasks(std::size_t tasks, unsigned threads, Hist& hist, const std::function<void(std::size_t, Hist&)>& work) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks)));
    if (threads == 1) {
        for (std::size_t t = 0; t < tasks; ++t) work(t, hist);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            Hist local(hist.size(), 0);
            for (std::size_t t; (t = next.fetch_add(1)) < tasks;) work(t, local);
            std::lock_guard lock(mu);
            for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += local[i];
        });
    }
    for (auto& th : pool) th.join();
}

// Splits G generators into `top` fixed digits per task and a Gray-code walk
// over the remaining ones.
std::size_t split_top(std::size_t G, std::uint64_t p, unsigned threads) {
    if (threads <= 1) return 0;
    std::size_t top = 0;
    std::uint64_t tasks = 1;
    while (top < G && tasks < 8ull * threads) {
        tasks *= p;
        ++top;
    }
    return top;
}

Hist enumerate_binary(const std::vector<std::vector<Sym>>& gens, std::size_t n, unsigned threads) {
    const std::size_t W = (n + 63) / 64;
    const std::size_t G = gens.size();
    std::vector<std::vector<std::uint64_t>> bits(G, std::vector<std::uint64_t>(W, 0));
    for (std::size_t i = 0; i < G; ++i) {
        for (std::size_t t = 0; t < n; ++t) {
            if (gens[i][t]) bits[i][t / 64] |= std::uint64_t{1} << (t % 64);
        }
    }
    const std::size_t top = split_top(G, 2, threads);
    const std::size_t low = G - top;
    Hist hist(n + 1, 0);
    run_tasks(std::size_t{1} << top, threads, hist, [&](std::size_t task, Hist& h) {
        std::vector<std::uint64_t> cw(W, 0);
        for (std::size_t b = 0; b < top; ++b) {
            if (task >> b & 1) {
                for (std::size_t w = 0; w < W; ++w) cw[w] ^= bits[low + b][w];
            }
        }
        auto weight = [&] {
            std::uint64_t wt = 0;
            for (auto x : cw) wt += std::popcount(x);
            return wt;
        };
        ++h[weight()];
        const std::uint64_t count = std::uint64_t{1} << low;
        for (std::uint64_t t = 1; t < count; ++t) {
            const auto& row = bits[std::countr_zero(t)];
            std::uint64_t wt = 0;
            for (std::size_t w = 0; w < W; ++w) {
                cw[w] ^= row[w];
                wt += std::popcount(cw[w]);
            }
            ++h[wt];
        }
    });
    return hist;
}

Hist enumerate_pary(const BaseField& F, const std::vector<std::vector<Sym>>& gens, std::size_t n, unsigned threads) {
    const std::uint64_t p = F.p();
    const std::size_t G = gens.size();
    std::vector<std::vector<std::pair<std::size_t, Sym>>> support(G);
    for (std::size_t i = 0; i < G; ++i) {
        for (std::size_t t = 0; t < n; ++t) {
            if (gens[i][t]) support[i].emplace_back(t, gens[i][t]);
        }
    }
    const std::size_t top = split_top(G, p, threads);
    const std::size_t low = G - top;
    std::uint64_t tasks = 1, count = 1;
    for (std::size_t i = 0; i < top; ++i) tasks *= p;
    for (std::size_t i = 0; i < low; ++i) count *= p;
    Hist hist(n + 1, 0);
    run_tasks(tasks, threads, hist, [&](std::size_t task, Hist& h) {
        std::vector<Sym> cw(n, 0);
        std::uint64_t rest = task;
        for (std::size_t b = 0; b < top; ++b, rest /= p) {
            for (std::uint64_t r = 0; r < rest % p; ++r) {
                for (auto [t, v] : support[low + b]) cw[t] = F.add(cw[t], v);
            }
        }
        std::uint64_t wt = 0;
        for (Sym c : cw) wt += c != 0;
        ++h[wt];
        // Modular p-ary Gray code: step t adds generator v_p(t).
        for (std::uint64_t t = 1; t < count; ++t) {
            std::size_t i = 0;
            for (std::uint64_t u = t; u % p == 0; u /= p) ++i;
            for (auto [pos, v] : support[i]) {
                const Sym old = cw[pos];
                const Sym now = F.add(old, v);
                cw[pos] = now;
                wt += (now != 0);
                wt -= (old != 0);
            }
            ++h[wt];
        }
    });
    return hist;
}

WeightDistribution to_distribution(const Hist& h) {
    WeightDistribution wd;
    wd.counts.reserve(h.size());
    for (auto c : h) wd.counts.emplace_back(c);
    return wd;
}

enum class Route { message, dual };

std::optional<Route> choose_route(const CyclicCode& c, const EnumOptions& opt) {
    const BigInt budget = opt.budget;
    const BigInt qk = big_pow(c.q(), c.k());
    const BigInt qnk = big_pow(c.q(), c.n() - c.k());
    switch (opt.strategy) {
        case Strategy::message:
            if (qk <= budget) return Route::message;
            return std::nullopt;
        case Strategy::dual:
            if (qnk <= budget) return Route::dual;
            return std::nullopt;
        case Strategy::automatic:
            break;
    }
    if (qk <= budget && qk <= qnk) return Route::message;
    if (qnk <= budget) return Route::dual;
    if (qk <= budget) return Route::message;
    return std::nullopt;
}

WeightDistribution distribution_by(const CyclicCode& c, Route r, const EnumOptions& opt) {
    if (r == Route::message) return enumerate_weights(c, opt.budget, opt.threads);
    const CyclicCode d = dual(c);
    return macwilliams_transform(enumerate_weights(d, opt.budget, opt.threads), c.n(), c.q(), d.k());
}

// Best codeword weight found from low-weight messages and a seeded random
// walk through the code.
std::uint64_t search_upper(const CyclicCode& c, std::uint64_t steps) {
    const auto& F = *c.field();
    const auto& g = c.generator().coeffs();
    const std::size_t n = c.n(), k = c.k();
    std::uint64_t best = 0;
    for (Sym x : g) best += x != 0;

    std::vector<Sym> cw(n);
    for (std::size_t j = 1; j < k; ++j) {
        for (Sym a = 1; a < F.q(); ++a) {
            std::fill(cw.begin(), cw.end(), 0);
            for (std::size_t t = 0; t < g.size(); ++t) {
                cw[t] = F.add(cw[t], g[t]);
                cw[t + j] = F.add(cw[t + j], F.mul(a, g[t]));
            }
            std::uint64_t wt = 0;
            for (Sym x : cw) wt += x != 0;
            if (wt) best = std::min(best, wt);
        }
    }

    std::mt19937_64 rng(0x5eedc0de);
    std::fill(cw.begin(), cw.end(), 0);
    std::uint64_t wt = 0;
    for (std::uint64_t step = 0; step < steps; ++step) {
        const std::size_t i = rng() % k;
        const Sym a = 1 + rng() % (F.q() - 1);
        for (std::size_t t = 0; t < g.size(); ++t) {
            if (!g[t]) continue;
            const Sym old = cw[i + t];
            const Sym now = F.add(old, F.mul(a, g[t]));
            cw[i + t] = now;
            wt += (now != 0);
            wt -= (old != 0);
        }
        if (wt) best = std::min(best, wt);
    }
    return best;
}

}  // namespace

WeightDistribution enumerate_weights(const CyclicCode& c, std::uint64_t budget, unsigned threads) {
    if (big_pow(c.q(), c.k()) > budget)
        throw BudgetExceeded("enumerating " + std::to_string(c.q()) + "^" + std::to_string(c.k()) + " codewords exceeds the budget " + std::to_string(budget));
    if (c.k() == 0) {
        Hist h(c.n() + 1, 0);
        h[0] = 1;
        return to_distribution(h);
    }
    const auto gens = prime_generators(c);
    if (c.q() == 2) return to_distribution(enumerate_binary(gens, c.n(), threads));
    return to_distribution(enumerate_pary(*c.field(), gens, c.n(), threads));
}

WeightDistribution weight_distribution(const CyclicCode& c, const EnumOptions& opt) {
    const auto route = choose_route(c, opt);
    if (!route) throw BudgetExceeded("min(q^k, q^(n-k)) exceeds the budget " + std::to_string(opt.budget));
    return distribution_by(c, *route, opt);
}

WeightDistribution macwilliams_transform(const WeightDistribution& A, std::size_t n, std::uint64_t q, std::size_t k_dual) {
    if (A.counts.size() != n + 1) throw std::invalid_argument("weight distribution must have n + 1 entries");
    const BigInt size = big_pow(q, k_dual);
    if (A.total() != size) throw std::invalid_argument("weight distribution does not sum to q^k");
    const BigInt q1 = q - 1;
    std::vector<BigInt> acc(n + 1, 0);
    std::vector<BigInt> K(n + 1);
    for (std::size_t x = 0; x <= n; ++x) {
        if (A.counts[x] == 0) continue;
        // Krawtchouk values K_j(x) by the three-term recurrence in j.
        K[0] = 1;
        if (n >= 1) K[1] = BigInt(n) * q1 - BigInt(q) * x;
        for (std::size_t j = 1; j < n; ++j) {
            BigInt num = (BigInt(n - j) * q1 + j - BigInt(q) * x) * K[j] - q1 * (n - j + 1) * K[j - 1];
            BigInt rem;
            BigInt quo;
            boost::multiprecision::divide_qr(num, BigInt(j + 1), quo, rem);
            if (rem != 0) throw std::logic_error("Krawtchouk recurrence produced a non-integer");
            K[j + 1] = std::move(quo);
        }
        for (std::size_t j = 0; j <= n; ++j) acc[j] += A.counts[x] * K[j];
    }
    WeightDistribution out;
    out.counts.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt quo, rem;
        boost::multiprecision::divide_qr(acc[j], size, quo, rem);
        if (rem != 0) throw std::invalid_argument("MacWilliams transform is not integral at weight " + std::to_string(j));
        if (quo < 0) throw std::invalid_argument("MacWilliams transform is negative at weight " + std::to_string(j));
        out.counts[j] = std::move(quo);
    }
    return out;
}

DistanceResult min_distance(const CyclicCode& c, const EnumOptions& opt) {
    if (c.k() == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
    if (const auto route = choose_route(c, opt)) {
        const auto wd = distribution_by(c, *route, opt);
        const auto d = wd.min_weight();
        return {d, d, true, *route == Route::message ? DistanceMethod::full_enumeration : DistanceMethod::dual_macwilliams};
    }
    DistanceResult r;
    r.upper = search_upper(c, opt.budget);
    try {
        r.lower = bch_bound(c);
        r.method = DistanceMethod::combined;
    } catch (const std::domain_error&) {
        r.lower = 1;
        r.method = DistanceMethod::random_search;
    }
    if (r.lower > r.upper) throw std::logic_error("BCH bound exceeds the weight of a codeword");
    r.exact = r.lower == r.upper;
    return r;
}

namespace {

BigInt ball_volume(std::uint64_t n, std::uint64_t t, std::uint64_t q) {
    BigInt volume = 0;
    BigInt binom = 1;
    BigInt qpow = 1;
    for (std::uint64_t i = 0; i <= t && i <= n; ++i) {
        volume += binom * qpow;
        binom = binom * (n - i) / (i + 1);
        qpow *= q - 1;
    }
    return volume;
}

}  // namespace

PackingVerdict sphere_packing_check(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
    if (d < 1 || d > n) throw std::invalid_argument("sphere packing check needs 1 <= d <= n");
    if (k > n) throw std::invalid_argument("sphere packing check needs k <= n");
    const BigInt redundancy = big_pow(q, n - k);
    const BigInt volume = ball_volume(n, (d - 1) / 2, q);
    if (redundancy < volume) return PackingVerdict::violates;
    // Even d: the punctured [n-1, k, d-1] code must also pack.
    if (d % 2 == 0 && k < n && big_pow(q, n - 1 - k) < ball_volume(n - 1, (d - 2) / 2, q)) return PackingVerdict::violates;
    if (redundancy == volume) return PackingVerdict::perfect;
    return PackingVerdict::tight_or_unknown;
}

std::uint64_t bch_bound(const CyclicCode& c) {
    const auto ctx = c.root_field();
    const std::size_t n = c.n();
    const FieldElem beta = ctx->alpha_pow(ctx->n() / n);
    const CosetTable table(n, c.q());
    std::vector<char> root(n, 0);
    for (auto l : table.leaders()) {
        if (eval_in_extension(*ctx, c.generator(), ctx->pow(beta, l)).is_zero()) {
            for (auto j : table.members(l)) root[j] = 1;
        }
    }
    if (std::all_of(root.begin(), root.end(), [](char r) { return r; })) return n + 1;
    // Longest cyclic run, starting the scan just after a non-root.
    std::size_t start = 0;
    while (root[start]) ++start;
    std::size_t best = 0, run = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (root[(start + i) % n]) {
            best = std::max(best, ++run);
        } else {
            run = 0;
        }
    }
    return best + 1;
}

nlohmann::ordered_json distance_record(const DistanceResult& d) {
    nlohmann::ordered_json j;
    j["lower"] = d.lower;
    j["upper"] = d.upper;
    j["exact"] = d.exact;
    j["method"] = to_string(d.method);
    return j;
}

nlohmann::ordered_json code_record(const CyclicCode& c, const std::optional<DistanceResult>& d) {
    nlohmann::ordered_json j;
    j["p"] = c.tag().p;
    j["s"] = c.tag().s;
    j["m"] = c.root_degree();
    j["n"] = c.n();
    j["k"] = c.k();
    j["generator"] = c.generator().to_text();
    j["distance"] = d ? distance_record(*d) : nlohmann::ordered_json(nullptr);
    return j;
}

}  // namespace seqcodes
