#include <doctest.h>

#include <functional>

#include "seqcodes/combinatorics.hpp"

using namespace seqcodes;

namespace {

std::uint64_t increasing_tuples(std::uint64_t J, std::uint64_t len) {
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

}  // namespace

TEST_CASE("classify subsets") {
    auto r = classify_subset({0, 3, 5, 6}, 7);
    CHECK(r.kind == DesignKind::difference_set);
    CHECK(r.lambda == 2u);
    auto s = classify_subset({0}, 5);
    CHECK(s.kind == DesignKind::difference_set);
    CHECK(s.lambda == 0u);
    auto a = classify_subset({0, 1}, 5);
    CHECK(a.kind == DesignKind::almost_difference_set);
    CHECK(a.lambda == 0u);
    CHECK(a.t == 2u);
    CHECK(classify_subset({0, 1, 2, 4}, 13).kind == DesignKind::neither);
    for (std::uint64_t c = 0; c < 13; ++c) {
        std::vector<std::uint64_t> D;
        for (auto d : {0, 1, 3, 9}) D.push_back((d + c) % 13);
        auto rep = classify_subset(D, 13);
        CHECK(rep.kind == DesignKind::difference_set);
        CHECK(rep.lambda == 1u);
    }
}

TEST_CASE("Singer difference sets") {
    auto f8 = build_field(2, 1, 3);
    CHECK(singer_difference_set(*f8, SingerVariant::trace_one_binary) == std::vector<std::uint64_t>{0, 3, 5, 6});
    auto f16 = build_field(2, 1, 4);
    auto D = singer_difference_set(*f16, SingerVariant::trace_one_binary);
    CHECK(D.size() == 8);
    CHECK(classify_subset(D, 15).lambda == 4u);
    auto f27 = build_field(3, 1, 3);
    auto P = singer_difference_set(*f27, SingerVariant::trace_zero_projective);
    CHECK(singer_length(*f27, SingerVariant::trace_zero_projective) == 13);
    CHECK(P.size() == 4);
    auto rep = classify_subset(P, 13);
    CHECK(rep.kind == DesignKind::difference_set);
    CHECK(rep.lambda == 1u);
    CHECK_THROWS(singer_difference_set(*f27, SingerVariant::trace_one_binary));
    CHECK_THROWS(singer_difference_set(*build_field(2, 1, 2), SingerVariant::trace_zero_projective));
}

TEST_CASE("count_vectors") {
    CHECK(count_vectors(4, 2) == 3);
    CHECK(count_vectors(4, 3) == 3);
    CHECK(count_vectors(5, 4) == 4);
    for (std::uint64_t t = 2; t <= 6; ++t) CHECK(count_vectors(t, t) == 1);
    for (std::uint64_t J = 2; J <= 12; ++J) {
        CHECK(count_vectors(J, 2) == J - 1);
        if (J >= 3) CHECK(count_vectors(J, 3) == (J - 1) * (J - 2) / 2);
        if (J >= 4) CHECK(count_vectors(J, 4) == (J * J * J - 6 * J * J + 11 * J - 6) / 6);
        for (std::uint64_t t = 1; t <= J; ++t) CHECK(count_vectors(J, t) == increasing_tuples(J, t - 1));
    }
    CHECK_THROWS(count_vectors(2, 3));
    CHECK_THROWS(count_vectors(2, 0));
}

TEST_CASE("kappa") {
    CHECK(kappa(1, 3) == 1);
    CHECK(kappa(5, 3) == 1);
    CHECK(kappa(3, 4) == 1);
    CHECK(kappa(7, 3) == 1);
    CHECK(kappa(3, 3) == 0);
    CHECK_THROWS(kappa(2, 3));
    CHECK_THROWS(kappa(9, 3));
    CHECK_THROWS(kappa(0, 3));
}

TEST_CASE("incidence rank") {
    auto f2 = BaseField::make(2, 1);
    CHECK(incidence_rank({0, 1, 3}, 7, f2) == 4);
    CHECK(incidence_rank({0}, 5, BaseField::make(3, 1)) == 5);
    CHECK(incidence_rank({0, 1, 2, 3, 4, 5, 6}, 7, f2) == 1);
}
