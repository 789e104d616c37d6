#include "seqcodes/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "seqcodes/base_field.hpp"

namespace seqcodes {

CosetTable::CosetTable(std::uint64_t n, std::uint64_t q) : n_(n), q_(q) {
    if (n == 0) throw std::invalid_argument("coset modulus must be positive");
    if (std::gcd(n, q) != 1)
        throw std::invalid_argument("gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
    constexpr std::uint64_t kUnset = ~std::uint64_t{0};
    leader_of_.assign(n, kUnset);
    for (std::uint64_t j = 0; j < n; ++j) {
        if (leader_of_[j] != kUnset) continue;
        std::vector<std::uint64_t> orbit;
        std::uint64_t x = j;
        do {
            orbit.push_back(x);
            leader_of_[x] = j;
            x = mulmod(x, q, n);
        } while (x != j);
        std::sort(orbit.begin(), orbit.end());
        leaders_.push_back(j);
        cosets_.emplace(j, std::move(orbit));
    }
}

const std::vector<std::uint64_t>& CosetTable::members(std::uint64_t leader) const {
    auto it = cosets_.find(leader);
    if (it == cosets_.end()) throw std::invalid_argument(std::to_string(leader) + " is not a coset leader");
    return it->second;
}

CosetTable cosets(std::uint64_t n, std::uint64_t q) { return CosetTable(n, q); }

int nu(const CosetTable& table, std::uint64_t leader, unsigned m) {
    if (table.q() != 2) throw std::invalid_argument("nu is defined for 2-cyclotomic cosets only");
    if (m == 0 || m >= 63 || table.n() != (std::uint64_t{1} << m) - 1)
        throw std::invalid_argument("nu needs the coset table modulo 2^m - 1");
    if (!table.is_leader(leader)) throw std::invalid_argument(std::to_string(leader) + " is not a coset leader");
    const auto& members = table.members(leader);
    const auto rho = static_cast<std::uint64_t>(std::count_if(members.begin(), members.end(), [](auto j) { return j % 2 == 0; }));
    const std::uint64_t ell = members.size();
    if ((m * rho) % ell != 0) throw std::logic_error("m*rho/ell is not integral");
    return static_cast<int>((m * rho / ell) % 2);
}

unsigned multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 1) return 1;
    if (std::gcd(n, q) != 1) throw std::invalid_argument("order of q modulo n needs gcd(n, q) = 1");
    unsigned k = 1;
    std::uint64_t x = q % n;
    while (x != 1) {
        x = mulmod(x, q, n);
        ++k;
    }
    return k;
}

}  // namespace seqcodes
