#pragma once

// Solenoid types (the bonding sequence w1, w2, ...) and their supernatural
// numbers.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "solenoid/arith.hpp"

namespace solenoid {

/// Stage index. Stage 0 is the untouched circle; entry w_n bonds stage n-1 to n.
using Stage = std::uint64_t;

/// The bonding sequence of a solenoid, either fully known (prefix followed by
/// a repeated period) or known only up to a finite horizon (prefix alone).
///
/// Entries are 1-indexed: term(1) is w1. Every entry is at least 2.
class SolenoidType {
public:
    using Entries = std::vector<std::uint64_t>;

    /// Throws DomainError on an entry < 2, an empty period, or an empty type.
    SolenoidType(Entries prefix, std::optional<Entries> period);

    const Entries& prefix() const { return prefix_; }
    const std::optional<Entries>& period() const { return period_; }
    bool has_period() const { return period_.has_value(); }
    std::size_t period_length() const { return period_ ? period_->size() : 0; }

    /// Last stage whose entry is known; nullopt when the period makes it unbounded.
    std::optional<Stage> horizon() const;
    bool covers(Stage n) const { return has_period() || n <= prefix_.size(); }

    /// w_n for n >= 1. Throws HorizonError past the horizon.
    std::uint64_t term(Stage n) const;
    const arith::Factorization& term_factors(Stage n) const;

    /// w_first * ... * w_last (1 when last < first), never materialized.
    /// Throws HorizonError when the range leaves the horizon.
    arith::Factorization product(Stage first, Stage last) const;

    /// w_1 * ... * w_n.
    arith::Factorization stage_product(Stage n) const { return product(1, n); }

    /// Primes dividing some w_{n'} with n' > n. Requires a period.
    std::set<std::uint64_t> tail_primes(Stage n) const;

    /// Primes dividing some period entry. Requires a period.
    std::set<std::uint64_t> period_primes() const;

    friend bool operator==(const SolenoidType& a, const SolenoidType& b)
    {
        return a.prefix_ == b.prefix_ && a.period_ == b.period_;
    }

private:
    void require_period(const char* what) const;

    Entries prefix_;
    std::optional<Entries> period_;
    std::vector<arith::Factorization> prefix_factors_;
    std::vector<arith::Factorization> period_factors_;
    arith::Factorization period_total_;
};

/// Grammar: prefix "|" period, each side a comma-separated list of decimal
/// integers >= 2, at most one side empty, whitespace around tokens ignored.
/// An empty period side means the type is known only through its prefix.
SolenoidType parse_type(std::string_view text);

/// Canonical form without whitespace; parse_type(format_type(t)) == t.
std::string format_type(const SolenoidType& type);

/// Exponent of one prime in a supernatural number.
struct SupernaturalExponent {
    std::uint64_t value = 0;
    bool infinite = false;

    static SupernaturalExponent finite(std::uint64_t v) { return {v, false}; }
    static SupernaturalExponent infinity() { return {0, true}; }

    friend bool operator==(const SupernaturalExponent&, const SupernaturalExponent&) = default;
};

/// Formal product of primes with exponents in {1, 2, ...} or infinity.
class SupernaturalNumber {
public:
    using Map = std::map<std::uint64_t, SupernaturalExponent>;

    SupernaturalNumber() = default;
    explicit SupernaturalNumber(Map exponents);

    const Map& exponents() const { return exponents_; }
    SupernaturalExponent exponent(std::uint64_t prime) const;
    std::set<std::uint64_t> infinite_primes() const;

    /// "{2:inf,3:1,5:inf}"
    std::string to_string() const;

    friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;

private:
    Map exponents_;
};

/// prod w_n over the whole sequence. Throws HorizonError without a period.
SupernaturalNumber supernatural_of(const SolenoidType& type);

/// Three-valued answer for questions about the infinite tail of a type.
enum class Decision { DecidedTrue, DecidedFalse, HorizonLimited };

std::string to_string(Decision d);

struct TailVerdict {
    Decision decision = Decision::HorizonLimited;
    /// For HorizonLimited only: whether r is coprime to the last known entry,
    /// i.e. whether the shared factors end before the horizon.
    bool at_horizon = false;

    bool decided_true() const { return decision == Decision::DecidedTrue; }
    friend bool operator==(const TailVerdict&, const TailVerdict&) = default;
};

/// Is r coprime to all but finitely many w_n? Throws DomainError for r < 1.
TailVerdict tail_coprime(const SolenoidType& type, std::uint64_t r);

/// Largest n within the prefix with gcd(r, w_n) > 1, or 0 when there is none.
Stage last_shared_stage(const SolenoidType& type, std::uint64_t r);

/// Same set of infinite-exponent primes. Both types need periods.
bool types_equivalent(const SolenoidType& a, const SolenoidType& b);

} // namespace solenoid
