#include "solenoid/arith.hpp"

#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace solenoid::arith {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    if (m == 1)
        return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a proven witness set below 3.3e24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    if (n < 2)
        return out;
    const auto f = Factorization::of(n);
    for (const auto& [p, k] : f.factors())
        out.push_back(p);
    return out;
}

Factorization Factorization::of(std::uint64_t n)
{
    assert(n >= 1);
    Factorization f;
    if (n > 1 && is_prime(n)) {
        f.add(n, 1);
        return f;
    }
    for (std::uint64_t p = 2; n > 1; p += (p == 2 ? 1 : 2)) {
        if (p > n / p) {
            f.add(n, 1);
            break;
        }
        std::uint64_t k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k == 0)
            continue;
        f.add(p, k);
        if (n > 1 && is_prime(n)) {
            f.add(n, 1);
            break;
        }
    }
    return f;
}

std::uint64_t Factorization::multiplicity(std::uint64_t prime) const
{
    auto it = factors_.find(prime);
    return it == factors_.end() ? 0 : it->second;
}

Factorization& Factorization::operator*=(const Factorization& other)
{
    for (const auto& [p, k] : other.factors_)
        add(p, k);
    return *this;
}

Factorization Factorization::pow(std::uint64_t k) const
{
    Factorization out;
    if (k == 0)
        return out;
    for (const auto& [p, m] : factors_) {
        assert(m <= std::numeric_limits<std::uint64_t>::max() / k);
        out.factors_.emplace(p, m * k);
    }
    return out;
}

void Factorization::add(std::uint64_t prime, std::uint64_t k)
{
    if (k == 0)
        return;
    factors_[prime] += k;
}

void Factorization::remove(std::uint64_t prime, std::uint64_t k)
{
    if (k == 0)
        return;
    auto it = factors_.find(prime);
    if (it == factors_.end() || it->second < k)
        throw std::logic_error("removing a factor that is not present");
    it->second -= k;
    if (it->second == 0)
        factors_.erase(it);
}

bool Factorization::divides(const Factorization& other) const
{
    for (const auto& [p, k] : factors_) {
        if (other.multiplicity(p) < k)
            return false;
    }
    return true;
}

std::uint64_t Factorization::residue(std::uint64_t m) const
{
    assert(m >= 1);
    std::uint64_t r = 1 % m;
    for (const auto& [p, k] : factors_)
        r = mulmod(r, powmod(p, k, m), m);
    return r;
}

std::uint64_t Factorization::gcd_with(std::uint64_t n) const
{
    assert(n >= 1);
    return std::gcd(n, residue(n));
}

std::optional<std::uint64_t> Factorization::value() const
{
    unsigned __int128 v = 1;
    constexpr auto limit = std::numeric_limits<std::uint64_t>::max();
    for (const auto& [p, k] : factors_) {
        for (std::uint64_t i = 0; i < k; ++i) {
            v *= p;
            if (v > limit)
                return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(v);
}

std::string Factorization::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string s;
    for (const auto& [p, k] : factors_) {
        if (!s.empty())
            s += '*';
        s += std::to_string(p);
        if (k > 1)
            s += '^' + std::to_string(k);
    }
    return s;
}

} // namespace solenoid::arith
