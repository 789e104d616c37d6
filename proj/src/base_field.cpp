#include "seqcodes/base_field.hpp"

#include <map>
#include <mutex>

#include "seqcodes/poly.hpp"

namespace seqcodes {

namespace {

constexpr std::uint64_t kFullTableLimit = 256;
constexpr std::uint64_t kLogTableLimit = 1u << 20;
constexpr std::uint64_t kMaxBaseOrder = std::uint64_t{1} << 40;

}  // namespace

std::string FieldTag::to_string() const {
    return "GF(" + std::to_string(p) + "^" + std::to_string(s) + ")";
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t checked_pow(std::uint64_t x, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (x != 0 && r > (std::uint64_t{1} << 63) / x) throw std::overflow_error("integer power overflow");
        r *= x;
    }
    return r;
}

std::shared_ptr<const BaseField> BaseField::make(std::uint64_t p, unsigned s) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (s == 0) throw std::invalid_argument("extension degree s must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < s; ++i) {
        if (q > kMaxBaseOrder / p) throw std::invalid_argument("field size exceeds the 2^40 budget");
        q *= p;
    }

    static std::mutex mu;
    static std::map<FieldTag, std::shared_ptr<const BaseField>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, s}); it != cache.end()) return it->second;
    }
    auto field = std::shared_ptr<const BaseField>(new BaseField(p, s));
    std::lock_guard lock(mu);
    return cache.try_emplace({p, s}, std::move(field)).first->second;
}

BaseField::BaseField(std::uint64_t p, unsigned s) : p_(p), s_(s), q_(checked_pow(p, s)) {
    if (s_ == 1) {
        modulus_ = {0, 1};
    } else {
        auto prime = make(p_, 1);
        const std::uint64_t count = q_;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<Sym> c(s_ + 1, 0);
            std::uint64_t v = code;
            for (unsigned i = 0; i < s_; ++i) {
                c[i] = v % p_;
                v /= p_;
            }
            c[s_] = 1;
            if (c[0] == 0) continue;
            Poly cand(prime, c);
            if (is_irreducible(cand)) {
                modulus_ = std::move(c);
                break;
            }
        }
        if (modulus_.empty()) throw std::logic_error("no irreducible modulus found for " + tag().to_string());
    }
    build_tables();
}

void BaseField::build_tables() {
    if (s_ == 1 && q_ > kFullTableLimit) return;
    if (q_ <= kFullTableLimit) {
        add_table_.resize(q_ * q_);
        mul_table_.resize(q_ * q_);
        for (Sym a = 0; a < q_; ++a) {
            const auto da = digits(a);
            for (Sym b = 0; b < q_; ++b) {
                const auto db = digits(b);
                std::vector<std::uint64_t> sum(s_);
                for (unsigned i = 0; i < s_; ++i) sum[i] = (da[i] + db[i]) % p_;
                add_table_[a * q_ + b] = static_cast<std::uint32_t>(from_digits(sum));
                mul_table_[a * q_ + b] = static_cast<std::uint32_t>(mul_slow(a, b));
            }
        }
        return;
    }
    if (q_ > kLogTableLimit) return;
    // Smallest generator of GF(q)^* by encoding.
    const auto factors = prime_factors(q_ - 1);
    auto slow_pow = [&](Sym a, std::uint64_t e) {
        Sym r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };
    Sym gen = 0;
    for (Sym g = 2; g < q_ && gen == 0; ++g) {
        bool ok = true;
        for (auto r : factors) {
            if (slow_pow(g, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) gen = g;
    }
    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    Sym x = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = static_cast<std::uint32_t>(x);
        log_[x] = static_cast<std::uint32_t>(i);
        x = mul_slow(x, gen);
    }
    for (std::uint64_t i = q_ - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

std::vector<std::uint64_t> BaseField::digits(Sym a) const {
    std::vector<std::uint64_t> d(s_);
    for (unsigned i = 0; i < s_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Sym BaseField::from_digits(const std::vector<std::uint64_t>& d) const {
    Sym v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return v;
}

Sym BaseField::add(Sym a, Sym b) const {
    if (s_ == 1) {
        const Sym r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    Sym out = 0, scale = 1;
    while (a || b) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Sym BaseField::neg(Sym a) const {
    if (s_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    Sym out = 0, scale = 1;
    while (a) {
        const Sym d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

Sym BaseField::sub(Sym a, Sym b) const { return add(a, neg(b)); }

Sym BaseField::mul_slow(Sym a, Sym b) const {
    if (s_ == 1) return mulmod(a, b, p_);
    const auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * s_ - 1, 0);
    for (unsigned i = 0; i < s_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
    }
    for (std::size_t k = prod.size(); k-- > s_;) {
        const std::uint64_t c = prod[k];
        if (!c) continue;
        // x^s == -(modulus_0 + ... + modulus_{s-1} x^{s-1})
        for (unsigned i = 0; i < s_; ++i) {
            const std::uint64_t t = mulmod(c, modulus_[i], p_);
            prod[k - s_ + i] = (prod[k - s_ + i] + p_ - t) % p_;
        }
        prod[k] = 0;
    }
    prod.resize(s_);
    return from_digits(prod);
}

Sym BaseField::mul(Sym a, Sym b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    if (!log_.empty()) {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    return mul_slow(a, b);
}

Sym BaseField::pow(Sym a, std::uint64_t e) const {
    Sym r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Sym BaseField::inv(Sym a) const {
    if (a == 0) throw std::domain_error("inverse of zero in " + tag().to_string());
    if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

Sym BaseField::from_int(std::int64_t v) const {
    const auto pm = static_cast<std::int64_t>(p_);
    std::int64_t r = v % pm;
    if (r < 0) r += pm;
    return static_cast<Sym>(r);
}

}  // namespace seqcodes
