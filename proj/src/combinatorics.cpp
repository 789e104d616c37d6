#include "seqcodes/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace seqcodes {

std::string to_string(DesignKind k) {
    switch (k) {
        case DesignKind::difference_set: return "difference_set";
        case DesignKind::almost_difference_set: return "almost_difference_set";
        case DesignKind::neither: return "neither";
    }
    return "unknown";
}

DesignReport classify_subset(const std::vector<std::uint64_t>& D, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    const std::set<std::uint64_t> set(D.begin(), D.end());
    for (auto d : set) {
        if (d >= n) throw std::invalid_argument(std::to_string(d) + " is outside Z_" + std::to_string(n));
    }
    std::vector<std::uint64_t> mult(n, 0);
    for (auto x : set) {
        for (auto y : set) {
            if (x != y) ++mult[(x + n - y) % n];
        }
    }
    if (n == 1) return {DesignKind::difference_set, 0, std::nullopt};
    const auto [lo, hi] = std::minmax_element(mult.begin() + 1, mult.end());
    if (*lo == *hi) return {DesignKind::difference_set, *lo, std::nullopt};
    if (*hi == *lo + 1) {
        const auto t = static_cast<std::uint64_t>(std::count(mult.begin() + 1, mult.end(), *lo));
        return {DesignKind::almost_difference_set, *lo, t};
    }
    return {};
}

std::uint64_t singer_length(const FieldCtx& ctx, SingerVariant variant) {
    if (variant == SingerVariant::trace_one_binary) {
        if (ctx.q() != 2) throw std::invalid_argument("the trace-one Singer set needs q = 2");
        return ctx.n();
    }
    if (ctx.m() < 3) throw std::invalid_argument("the projective Singer set needs m >= 3");
    return ctx.n() / (ctx.q() - 1);
}

std::vector<std::uint64_t> singer_difference_set(const FieldCtx& ctx, SingerVariant variant) {
    const std::uint64_t n = singer_length(ctx, variant);
    const Sym want = variant == SingerVariant::trace_one_binary ? 1 : 0;
    std::vector<std::uint64_t> D;
    FieldElem x = ctx.one();
    for (std::uint64_t i = 0; i < n; ++i) {
        if (ctx.trace(x) == want) D.push_back(i);
        x = ctx.mul(x, ctx.alpha());
    }
    return D;
}

std::uint64_t count_vectors(std::uint64_t J, std::uint64_t t) {
    if (t < 1) throw std::invalid_argument("count_vectors needs t >= 1");
    if (J < t) throw std::invalid_argument("count_vectors needs J >= t");
    // row[j] holds N(j, level) for j < J.
    std::vector<std::uint64_t> row(J + 1, 1);
    for (std::uint64_t level = 2; level <= t; ++level) {
        std::vector<std::uint64_t> next(J + 1, 0);
        std::uint64_t acc = 0;
        for (std::uint64_t j = level; j <= J; ++j) {
            acc += row[j - 1];
            next[j] = acc;
        }
        row = std::move(next);
    }
    return row[J];
}

int kappa(std::uint64_t a, unsigned t) {
    if (t == 0 || t >= 63) throw std::invalid_argument("kappa needs 1 <= t <= 62");
    const std::uint64_t T = (std::uint64_t{1} << t) - 1;
    if (a % 2 == 0 || a < 1 || a > T) throw std::invalid_argument("kappa needs odd a with 1 <= a <= 2^t - 1");
    if (a == T) return 1;
    unsigned e = 0;
    while ((a << e) < T) ++e;
    return static_cast<int>(e % 2);
}

std::size_t incidence_rank(const std::vector<std::uint64_t>& D, std::uint64_t n, const BaseFieldPtr& field) {
    const auto& F = *field;
    const std::set<std::uint64_t> set(D.begin(), D.end());
    std::vector<std::vector<Sym>> M(n, std::vector<Sym>(n, 0));
    for (std::uint64_t i = 0; i < n; ++i) {
        for (auto d : set) {
            if (d >= n) throw std::invalid_argument(std::to_string(d) + " is outside Z_" + std::to_string(n));
            M[i][(d + i) % n] = 1;
        }
    }
    std::size_t rank = 0;
    for (std::uint64_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(M[piv], M[rank]);
        const Sym inv = F.inv(M[rank][col]);
        for (auto& v : M[rank]) v = F.mul(v, inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            const Sym f = M[r][col];
            for (std::uint64_t c = col; c < n; ++c) M[r][c] = F.sub(M[r][c], F.mul(f, M[rank][c]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace seqcodes
