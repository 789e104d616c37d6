#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqcodes {

// Canonical integer encoding of a GF(q) element: sum of c_i p^i over its
// GF(p) digits c_0..c_{s-1}.
using Sym = std::uint64_t;

struct FieldTag {
    std::uint64_t p = 0;
    unsigned s = 0;

    auto operator<=>(const FieldTag&) const = default;
    std::string to_string() const;
};

class Poly;

// GF(q), q = p^s, built as GF(p)[u]/(base modulus). The modulus is the monic
// irreducible of degree s with the smallest little-endian base-p encoding, so
// two fields with equal (p, s) are identical.
class BaseField {
public:
    static std::shared_ptr<const BaseField> make(std::uint64_t p, unsigned s);

    std::uint64_t p() const { return p_; }
    unsigned s() const { return s_; }
    std::uint64_t q() const { return q_; }
    FieldTag tag() const { return {p_, s_}; }

    // Digits of the modulus over GF(p), lowest degree first, length s + 1.
    const std::vector<Sym>& modulus_digits() const { return modulus_; }

    Sym add(Sym a, Sym b) const;
    Sym sub(Sym a, Sym b) const;
    Sym neg(Sym a) const;
    Sym mul(Sym a, Sym b) const;
    Sym inv(Sym a) const;
    Sym div(Sym a, Sym b) const { return mul(a, inv(b)); }
    Sym pow(Sym a, std::uint64_t e) const;

    // Image of an integer in the prime subfield.
    Sym from_int(std::int64_t v) const;

    bool contains(Sym a) const { return a < q_; }
    std::vector<std::uint64_t> digits(Sym a) const;
    Sym from_digits(const std::vector<std::uint64_t>& d) const;

private:
    BaseField(std::uint64_t p, unsigned s);

    Sym mul_slow(Sym a, Sym b) const;
    void build_tables();

    std::uint64_t p_;
    unsigned s_;
    std::uint64_t q_;
    std::vector<Sym> modulus_;

    // Full tables for q <= kFullTableLimit; log/exp tables up to kLogTableLimit.
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

using BaseFieldPtr = std::shared_ptr<const BaseField>;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// x^e with overflow detection; throws std::overflow_error past 2^63.
std::uint64_t checked_pow(std::uint64_t x, unsigned e);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace seqcodes
