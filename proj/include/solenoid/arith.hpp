#pragma once

// Word-sized number theory and factored integers.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace solenoid::arith {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order. n = 0 or 1 yields none.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// A positive integer stored as prime -> multiplicity. The empty map is 1.
///
/// Multiplicities are never zero. The value itself is never needed: callers
/// ask for residues, gcds with word-sized integers, or divisibility.
class Factorization {
public:
    using Map = std::map<std::uint64_t, std::uint64_t>;

    Factorization() = default;

    /// Trial division with a primality short-cut; n must be >= 1.
    static Factorization of(std::uint64_t n);

    const Map& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    std::uint64_t multiplicity(std::uint64_t prime) const;

    Factorization& operator*=(const Factorization& other);
    friend Factorization operator*(Factorization a, const Factorization& b) { return a *= b; }

    /// this^k
    Factorization pow(std::uint64_t k) const;

    /// Multiplies in prime^k; k = 0 is a no-op.
    void add(std::uint64_t prime, std::uint64_t k);

    /// Removes prime^k; the multiplicity must be at least k.
    void remove(std::uint64_t prime, std::uint64_t k);

    /// True iff this divides other.
    bool divides(const Factorization& other) const;

    /// value mod m, m >= 1.
    std::uint64_t residue(std::uint64_t m) const;

    /// gcd(value, n) for n >= 1.
    std::uint64_t gcd_with(std::uint64_t n) const;

    /// The value when it fits in 64 bits.
    std::optional<std::uint64_t> value() const;

    /// "1", "2^3", "2^3*5".
    std::string to_string() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    Map factors_;
};

} // namespace solenoid::arith
