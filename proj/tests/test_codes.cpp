#include <doctest.h>

#include <random>

#include "seqcodes/codes.hpp"
#include "seqcodes/minpoly.hpp"

using namespace seqcodes;

namespace {

WeightDistribution wd(std::initializer_list<int> v) {
    WeightDistribution w;
    for (int x : v) w.counts.emplace_back(x);
    return w;
}

// All q^k products m(x) g(x), weights counted directly.
WeightDistribution bruteforce_weights(const CyclicCode& c) {
    const auto F = c.field();
    std::vector<BigInt> counts(c.n() + 1, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k(); ++i) total *= F->q();
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Sym> msg(c.k());
        std::uint64_t v = code;
        for (auto& x : msg) {
            x = v % F->q();
            v /= F->q();
        }
        Poly cw = Poly(F, msg) * c.generator();
        std::size_t w = 0;
        for (Sym x : cw.coeffs()) w += x != 0;
        counts[w] += 1;
    }
    return {counts};
}

CyclicCode random_code(const FieldCtxPtr& ctx, std::uint64_t n, std::mt19937_64& rng) {
    Poly g = Poly::constant(ctx->base(), 1);
    for (auto& [leader, f] : factor_xn_minus_1(*ctx, n)) {
        if (rng() % 2) g = g * f;
    }
    return CyclicCode(n, g, ctx);
}

}  // namespace

TEST_CASE("codes from sequences and subsets") {
    auto f2 = BaseField::make(2, 1);
    auto ham = code_from_sequence(characteristic_sequence({0, 3, 5, 6}, 7, f2));
    CHECK(ham.generator().to_text() == "1,0,1,1");
    CHECK(ham.k() == 4);
    CHECK(code_from_sequence(characteristic_sequence({}, 7, f2)).k() == 7);
    CHECK(code_from_sequence(characteristic_sequence({0, 1, 2, 3, 4, 5, 6}, 7, f2)).generator().to_text() == "1,1");

    CHECK(classical_code({0}, 9, f2).k() == 9);
    auto rep = classical_code({0, 1, 2, 3, 4, 5, 6}, 7, f2);
    CHECK(rep.k() == 1);
    CHECK(rep.generator().to_text() == "1,1,1,1,1,1,1");
    auto cls = classical_code({0, 3, 5, 6}, 7, f2);
    CHECK(cls.generator().degree() == 4);
    CHECK(complement(cls) == ham);
    CHECK_THROWS(CyclicCode(7, Poly::parse(f2, "1,1,1")));
}

TEST_CASE("dual, complement and even-like subcodes") {
    auto f2 = BaseField::make(2, 1);
    CyclicCode ham(7, Poly::parse(f2, "1,0,1,1"));
    CHECK(complement(ham).generator().to_text() == "1,0,1,1,1");
    CHECK(dual(ham).generator().to_text() == "1,1,1,0,1");
    CyclicCode full(7, Poly::constant(f2, 1));
    CHECK(dual(full).k() == 0);
    CHECK(complement(full).k() == 0);
    auto ev = even_like_subcode(ham);
    CHECK(ev.k() == 3);
    CHECK(ev.generator() == Poly::parse(f2, "1,1") * Poly::parse(f2, "1,0,1,1"));
    CyclicCode par(7, Poly::parse(f2, "1,1"));
    CHECK(even_like_subcode(par) == par);
    CyclicCode rep(7, Poly::parse(f2, "1,1,1,1,1,1,1"));
    CHECK(even_like_subcode(rep).k() == 0);

    std::mt19937_64 rng(3);
    for (auto [p, s, m, n] : std::vector<std::tuple<int, int, int, int>>{{2, 1, 5, 31}, {2, 1, 4, 15}, {3, 1, 3, 13}, {2, 2, 2, 15}}) {
        auto ctx = build_field(p, s, m);
        for (int i = 0; i < 5; ++i) {
            auto c = random_code(ctx, n, rng);
            CHECK(dual(dual(c)) == c);
        }
    }
}

TEST_CASE("weight distributions") {
    auto f2 = BaseField::make(2, 1);
    CyclicCode ham(7, Poly::parse(f2, "1,0,1,1"));
    CHECK(weight_distribution(ham) == wd({1, 0, 0, 7, 7, 0, 0, 1}));
    CHECK(weight_distribution(dual(ham)) == wd({1, 0, 0, 0, 7, 0, 0, 0}));
    CyclicCode zero(7, Poly::xn_minus_1(f2, 7));
    CHECK(weight_distribution(zero) == wd({1, 0, 0, 0, 0, 0, 0, 0}));
    for (auto st : {Strategy::message, Strategy::dual}) {
        EnumOptions o;
        o.strategy = st;
        CHECK(weight_distribution(ham, o) == wd({1, 0, 0, 7, 7, 0, 0, 1}));
    }
    EnumOptions tiny;
    tiny.budget = 4;
    CHECK_THROWS_AS(weight_distribution(ham, tiny), BudgetExceeded);
}

TEST_CASE("enumeration engine matches brute force, with and without threads") {
    std::mt19937_64 rng(9);
    for (auto [p, s, m, n] : std::vector<std::tuple<int, int, int, int>>{{2, 1, 4, 15}, {2, 1, 6, 21}, {3, 1, 2, 8}, {3, 1, 3, 13}, {2, 2, 2, 5}, {5, 1, 1, 4}, {3, 2, 1, 8}}) {
        auto ctx = build_field(p, s, m);
        for (int i = 0; i < 4; ++i) {
            auto c = random_code(ctx, n, rng);
            if (big_pow(c.q(), c.k()) > 200000) continue;
            auto oracle = bruteforce_weights(c);
            CHECK(enumerate_weights(c, kDefaultBudget, 1) == oracle);
            CHECK(enumerate_weights(c, kDefaultBudget, 3) == oracle);
        }
    }
}

TEST_CASE("MacWilliams transform") {
    auto ham = macwilliams_transform(wd({1, 0, 0, 0, 7, 0, 0, 0}), 7, 2, 3);
    CHECK(ham == wd({1, 0, 0, 7, 7, 0, 0, 1}));
    std::vector<int> full{1, 7, 21, 35, 35, 21, 7, 1};
    WeightDistribution f;
    for (int x : full) f.counts.emplace_back(x);
    CHECK(macwilliams_transform(f, 7, 2, 7) == wd({1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_THROWS(macwilliams_transform(wd({1, 3, 0, 0}), 3, 2, 2));
    CHECK_THROWS(macwilliams_transform(wd({1, 0, 0}), 7, 2, 0));

    std::mt19937_64 rng(21);
    for (auto [p, m, n] : std::vector<std::tuple<int, int, int>>{{2, 4, 15}, {3, 3, 13}, {2, 6, 21}}) {
        auto ctx = build_field(p, 1, m);
        for (int i = 0; i < 4; ++i) {
            auto c = random_code(ctx, n, rng);
            auto A = enumerate_weights(c, kDefaultBudget);
            auto B = macwilliams_transform(A, n, c.q(), c.k());
            CHECK(macwilliams_transform(B, n, c.q(), n - c.k()) == A);
            if (big_pow(c.q(), n - c.k()) <= 100000) CHECK(B == enumerate_weights(dual(c), kDefaultBudget));
        }
    }
}

TEST_CASE("minimum distance") {
    auto f2 = BaseField::make(2, 1);
    CyclicCode ham(7, Poly::parse(f2, "1,0,1,1"));
    auto d = min_distance(ham);
    CHECK(d.exact);
    CHECK(d.lower == 3);
    CHECK(d.upper == 3);
    auto ctx = build_field(2, 1, 3);
    auto inv = code_from_sequence(trace_sequence_monomial(*ctx, 6), ctx);
    CHECK(inv.k() == 3);
    CHECK(min_distance(inv).lower == 4);
    CyclicCode rep(7, Poly::parse(f2, "1,1,1,1,1,1,1"));
    CHECK(min_distance(rep).lower == 7);
    CHECK_THROWS(min_distance(CyclicCode(7, Poly::xn_minus_1(f2, 7))));

    EnumOptions m, du;
    m.strategy = Strategy::message;
    du.strategy = Strategy::dual;
    CHECK(min_distance(ham, m).method == DistanceMethod::full_enumeration);
    CHECK(min_distance(ham, du).method == DistanceMethod::dual_macwilliams);
    CHECK(min_distance(ham, du).lower == 3);

    auto c7 = build_field(2, 1, 7);
    CyclicCode bch(127, minimal_polynomial_of_power(*c7, 1) * minimal_polynomial_of_power(*c7, 3), c7);
    EnumOptions small;
    small.budget = 1 << 12;
    auto r = min_distance(bch, small);
    CHECK(r.method == DistanceMethod::combined);
    CHECK(r.lower == 5);
    CHECK(r.upper >= 5);
}

TEST_CASE("exact distance does not depend on the strategy") {
    std::mt19937_64 rng(4);
    for (auto [p, m, n] : std::vector<std::tuple<int, int, int>>{{2, 5, 31}, {3, 3, 13}, {2, 4, 15}}) {
        auto ctx = build_field(p, 1, m);
        for (int i = 0; i < 6; ++i) {
            auto c = random_code(ctx, n, rng);
            if (c.k() == 0) continue;
            EnumOptions a, b;
            a.strategy = Strategy::message;
            b.strategy = Strategy::dual;
            CHECK(min_distance(c, a).lower == min_distance(c, b).lower);
            CHECK(bch_bound(c) <= min_distance(c).lower);
        }
    }
}

TEST_CASE("sphere packing") {
    CHECK(sphere_packing_check(7, 4, 3, 2) == PackingVerdict::perfect);
    CHECK(sphere_packing_check(7, 3, 4, 2) == PackingVerdict::tight_or_unknown);
    CHECK(sphere_packing_check(7, 4, 4, 2) == PackingVerdict::violates);
    CHECK(sphere_packing_check(23, 12, 7, 2) == PackingVerdict::perfect);
    CHECK(sphere_packing_check(11, 6, 5, 3) == PackingVerdict::perfect);
    CHECK(sphere_packing_check(7, 1, 7, 2) == PackingVerdict::perfect);
    CHECK(sphere_packing_check(8, 4, 4, 2) == PackingVerdict::tight_or_unknown);
    CHECK(sphere_packing_check(7, 7, 1, 2) == PackingVerdict::perfect);
    CHECK_THROWS(sphere_packing_check(7, 4, 0, 2));
}

TEST_CASE("BCH bound") {
    auto f2 = BaseField::make(2, 1);
    auto ctx = build_field(2, 1, 3);
    CHECK(bch_bound(CyclicCode(7, Poly::parse(f2, "1,0,1,1"), ctx)) == 3);
    CHECK(bch_bound(CyclicCode(7, Poly::constant(f2, 1))) == 1);
    CHECK(bch_bound(CyclicCode(7, Poly::parse(f2, "1,1") * Poly::parse(f2, "1,0,1,1"))) == 4);
    // x^23 - 1 over GF(2): roots need GF(2^11); the Golay factor has BCH bound 5.
    auto c11 = build_field(2, 1, 11);
    auto factors = factor_xn_minus_1(*c11, 23);
    REQUIRE(factors.size() == 3);
    CHECK(bch_bound(CyclicCode(23, factors[1].factor)) == 5);
}

TEST_CASE("code record") {
    auto ctx = build_field(2, 1, 3);
    auto f2 = ctx->base();
    CyclicCode ham(7, Poly::parse(f2, "1,0,1,1"), ctx);
    auto j = code_record(ham, min_distance(ham));
    CHECK(j.dump() == R"({"p":2,"s":1,"m":3,"n":7,"k":4,"generator":"1,0,1,1","distance":{"lower":3,"upper":3,"exact":true,"method":"dual_macwilliams"}})");
    CyclicCode zero(7, Poly::xn_minus_1(f2, 7));
    CHECK(code_record(zero, std::nullopt)["distance"].is_null());
}
