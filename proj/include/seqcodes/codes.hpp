#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqcodes/field.hpp"
#include "seqcodes/poly.hpp"
#include "seqcodes/sequences.hpp"

namespace seqcodes {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cyclic code of length n over GF(q) with monic generator g | x^n - 1. The
// optional context names the field holding the roots of x^n - 1.
class CyclicCode {
public:
    CyclicCode(std::size_t n, Poly generator, FieldCtxPtr ctx = nullptr);

    std::size_t n() const { return n_; }
    std::size_t k() const { return n_ - static_cast<std::size_t>(g_.degree()); }
    const Poly& generator() const { return g_; }
    Poly check_poly() const;
    const BaseFieldPtr& field() const { return g_.field(); }
    FieldTag tag() const { return g_.tag(); }
    std::uint64_t q() const { return field()->q(); }

    // Extension GF(q^m) with n | q^m - 1: the attached context when present,
    // otherwise the smallest such m. Throws std::domain_error past the budget.
    FieldCtxPtr root_field() const;
    unsigned root_degree() const;
    const FieldCtxPtr& context() const { return ctx_; }

    bool operator==(const CyclicCode& o) const { return n_ == o.n_ && g_ == o.g_; }

private:
    std::size_t n_;
    Poly g_;
    FieldCtxPtr ctx_;
};

enum class DistanceMethod { full_enumeration, dual_macwilliams, bch_bound, random_search, combined };
std::string to_string(DistanceMethod m);

struct DistanceResult {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    bool exact = false;
    DistanceMethod method = DistanceMethod::full_enumeration;
};

struct WeightDistribution {
    std::vector<BigInt> counts;  // A_0..A_n

    BigInt total() const;
    // Smallest nonzero weight with A_w > 0, or 0 when there is none.
    std::uint64_t min_weight() const;
    bool operator==(const WeightDistribution&) const = default;
};

enum class Strategy { automatic, message, dual };

struct EnumOptions {
    std::uint64_t budget = kDefaultBudget;
    Strategy strategy = Strategy::automatic;
    unsigned threads = 1;
};

CyclicCode code_from_sequence(const PeriodicSequence& seq, FieldCtxPtr ctx = nullptr);
CyclicCode classical_code(const std::vector<std::uint64_t>& D, std::uint64_t n, BaseFieldPtr field);
CyclicCode dual(const CyclicCode& c);
CyclicCode complement(const CyclicCode& c);
CyclicCode even_like_subcode(const CyclicCode& c);

// Histogram of all q^k codewords generated by x^i g(x), i < k. Throws
// BudgetExceeded when q^k > budget.
WeightDistribution enumerate_weights(const CyclicCode& c, std::uint64_t budget, unsigned threads = 1);

WeightDistribution weight_distribution(const CyclicCode& c, const EnumOptions& opt = {});
WeightDistribution macwilliams_transform(const WeightDistribution& A, std::size_t n, std::uint64_t q, std::size_t k_dual);

DistanceResult min_distance(const CyclicCode& c, const EnumOptions& opt = {});

enum class PackingVerdict { perfect, tight_or_unknown, violates };
std::string to_string(PackingVerdict v);
PackingVerdict sphere_packing_check(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q);

std::uint64_t bch_bound(const CyclicCode& c);

// q^e, compared against budgets without overflow.
BigInt big_pow(std::uint64_t q, std::uint64_t e);

nlohmann::ordered_json code_record(const CyclicCode& c, const std::optional<DistanceResult>& d);
nlohmann::ordered_json distance_record(const DistanceResult& d);

}  // namespace seqcodes
