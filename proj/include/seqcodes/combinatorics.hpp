#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqcodes/field.hpp"

namespace seqcodes {

enum class DesignKind { difference_set, almost_difference_set, neither };
std::string to_string(DesignKind k);

struct DesignReport {
    DesignKind kind = DesignKind::neither;
    std::optional<std::uint64_t> lambda;
    std::optional<std::uint64_t> t;
};

// Classifies D by the multiplicities of its nonzero differences in Z_n.
DesignReport classify_subset(const std::vector<std::uint64_t>& D, std::uint64_t n);

enum class SingerVariant { trace_one_binary, trace_zero_projective };

// trace_one_binary: {i : Tr(alpha^i) = 1} in Z_{2^m-1}, q = 2.
// trace_zero_projective: {0 <= i < (q^m-1)/(q-1) : Tr(alpha^i) = 0}, m >= 3.
std::vector<std::uint64_t> singer_difference_set(const FieldCtx& ctx, SingerVariant variant);
std::uint64_t singer_length(const FieldCtx& ctx, SingerVariant variant);

// N(J, t) from N(J, t) = sum_{j=t-1}^{J-1} N(j, t-1), N(J, 1) = 1.
std::uint64_t count_vectors(std::uint64_t J, std::uint64_t t);

// kappa_a^{(t)} for odd 1 <= a <= 2^t - 1.
int kappa(std::uint64_t a, unsigned t);

// Rank over GF(q) of the n x n incidence matrix with rows D + i.
std::size_t incidence_rank(const std::vector<std::uint64_t>& D, std::uint64_t n, const BaseFieldPtr& field);

}  // namespace seqcodes
