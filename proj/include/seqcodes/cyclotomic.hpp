#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace seqcodes {

// q-cyclotomic cosets modulo n. Members are stored sorted ascending; the
// leader of each coset is its smallest member.
class CosetTable {
public:
    CosetTable(std::uint64_t n, std::uint64_t q);

    std::uint64_t n() const { return n_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint64_t>& leaders() const { return leaders_; }
    const std::vector<std::uint64_t>& members(std::uint64_t leader) const;
    std::size_t size(std::uint64_t leader) const { return members(leader).size(); }
    std::uint64_t leader_of(std::uint64_t j) const { return leader_of_[j % n_]; }
    bool is_leader(std::uint64_t j) const { return j < n_ && leader_of_[j] == j; }

private:
    std::uint64_t n_;
    std::uint64_t q_;
    std::vector<std::uint64_t> leaders_;
    std::vector<std::uint64_t> leader_of_;
    std::map<std::uint64_t, std::vector<std::uint64_t>> cosets_;
};

CosetTable cosets(std::uint64_t n, std::uint64_t q);

// The parity statistic of the inverse-monomial code: (m * rho / ell) mod 2
// where rho counts the even members of the 2-cyclotomic coset of `leader`
// modulo 2^m - 1 and ell is its size.
int nu(const CosetTable& table, std::uint64_t leader, unsigned m);

// Multiplicative order of q modulo n (n >= 1, gcd(n, q) = 1).
unsigned multiplicative_order(std::uint64_t q, std::uint64_t n);

}  // namespace seqcodes
