#pragma once

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqcodes/codes.hpp"
#include "seqcodes/field.hpp"
#include "seqcodes/poly.hpp"
#include "seqcodes/sequences.hpp"

namespace seqcodes {

// Raised when a parameter point violates a theorem's hypotheses.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ClaimParams {
    std::uint64_t p = 2;
    unsigned s = 1;
    unsigned m = 0;
    std::optional<unsigned> h;
    std::optional<unsigned> kappa;
    std::optional<unsigned> u;
    std::optional<std::uint64_t> a;  // canonical encoding in GF(q^m)

    std::uint64_t q() const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
    bool operator==(const ClaimParams&) const = default;
};

// (x-1)^{x_minus_1} * prod_e m_{alpha^{-e}}(x), exponents reduced mod n.
struct MpolySpec {
    bool x_minus_1 = false;
    std::vector<std::uint64_t> exponents;
};

// Expands over distinct cyclotomic cosets; the zero coset becomes (x-1).
Poly expand_mpoly(const FieldCtx& ctx, std::uint64_t n, const MpolySpec& spec);

struct DistancePrediction {
    std::optional<std::uint64_t> lower;
    std::optional<std::uint64_t> upper;
    bool even = false;       // d is even
    bool quadratic = false;  // d^2 - d + 1 >= n
    bool open = false;       // exact d left open

    bool exact() const { return lower && upper && *lower == *upper; }
    bool empty() const { return !lower && !upper && !even && !quadratic; }
    std::string kind() const;
    std::string describe() const;
};

enum class DistanceTarget { code, complement };
std::string to_string(DistanceTarget t);

struct Prediction {
    std::string case_label;
    std::optional<MpolySpec> mpoly_spec;
    std::optional<Poly> mpoly;
    std::uint64_t span = 0;
    std::uint64_t dimension = 0;
    DistancePrediction distance;
    DistanceTarget target = DistanceTarget::code;
};

struct Claim {
    std::string id;
    std::string title;
    std::string notes;
    // Parameters the claim reads, e.g. {"m", "h"}.
    std::vector<std::string> needs;
    // Empty when every hypothesis holds, else the first failed one.
    std::function<std::optional<std::string>(const ClaimParams&)> hypothesis;
    std::function<PeriodicSequence(const FieldCtx&, const ClaimParams&)> sequence;
    // Fills everything except the expanded polynomial.
    std::function<Prediction(const FieldCtx&, const ClaimParams&)> predict;
};

const std::vector<Claim>& registry();

// Resolves an id, including the umbrella ids dickson-d3, dickson-d4 and
// dickson-d5, which select a family member by (p, q). Throws
// std::invalid_argument for unknown ids.
const Claim& lookup(const std::string& id, const ClaimParams& params = {});
bool is_known_claim(const std::string& id);

// Missing parameters throw std::invalid_argument.
void require_params(const Claim& c, const ClaimParams& params);
std::optional<std::string> check_hypotheses(const Claim& c, const ClaimParams& params);

// Throws HypothesisError when a hypothesis fails.
Prediction predict(const Claim& c, const ClaimParams& params);

enum class Verdict { match, bound_consistent, mismatch, not_computed, exploratory };
std::string to_string(Verdict v);

// Compares a computed distance against a prediction for length n.
Verdict distance_verdict(const DistancePrediction& pred, const DistanceResult& d, std::uint64_t n);

struct VerifyOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
    bool check_hypotheses = true;
    bool timing = false;
};

struct ClaimReport {
    std::string claim_id;
    ClaimParams params;
    bool exploratory = false;
    std::uint64_t n = 0;
    std::optional<Prediction> predicted;
    std::string prediction_error;
    std::optional<Poly> computed_mpoly;
    std::uint64_t computed_span = 0;
    std::uint64_t computed_dimension = 0;
    std::optional<DistanceResult> computed_distance;
    Verdict mpoly = Verdict::not_computed;
    Verdict span = Verdict::not_computed;
    Verdict dimension = Verdict::not_computed;
    Verdict distance = Verdict::not_computed;
    std::optional<double> seconds;

    bool has_mismatch() const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
    std::string csv_row() const;
    static std::string csv_header();
};

ClaimReport verify_claim(const Claim& c, const ClaimParams& params, const VerifyOptions& opt = {});

}  // namespace seqcodes
