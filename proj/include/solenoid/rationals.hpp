#pragma once

// The direct limit R -w1-> R -w2-> R -> ... for R = Z and R = Q, realized
// inside the rational line.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "solenoid/arith.hpp"
#include "solenoid/typealg.hpp"

namespace solenoid {

using BigInt = boost::multiprecision::cpp_int;

/// The value of a factored integer.
BigInt to_bigint(const arith::Factorization& f);

/// Reduced fraction with the denominator kept as a prime multiset.
class Fraction {
public:
    Fraction() = default;
    Fraction(BigInt numerator, arith::Factorization denominator);
    explicit Fraction(BigInt integer) : numerator_(std::move(integer)) {}

    /// Accepts "a/b" or "a"; b must be positive.
    static Fraction parse(std::string_view text);

    const BigInt& numerator() const { return numerator_; }
    const arith::Factorization& denominator_factors() const { return denominator_; }
    BigInt denominator() const;

    bool is_zero() const { return numerator_ == 0; }
    int sign() const { return numerator_.sign(); }
    Fraction abs() const;

    /// Always "a/b", including b = 1.
    std::string to_string() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;

private:
    BigInt numerator_{0};
    arith::Factorization denominator_;
};

/// {k * generator : k in Z}; a zero generator is the trivial group.
class RationalCyclicSubgroup {
public:
    RationalCyclicSubgroup() = default;
    /// Uses |generator|.
    explicit RationalCyclicSubgroup(const Fraction& generator) : generator_(generator.abs()) {}

    const Fraction& generator() const { return generator_; }
    bool is_trivial() const { return generator_.is_zero(); }

    friend bool operator==(const RationalCyclicSubgroup&, const RationalCyclicSubgroup&) = default;

private:
    Fraction generator_;
};

/// The stage-n coordinate a of the class a / (w1 ... wn).
struct LimitElement {
    Stage stage = 0;
    BigInt value{0};
};

/// a / (w1 ... wn) reduced. Throws HorizonError past a period-free horizon.
Fraction inject(const SolenoidType& type, const LimitElement& elem);

/// "stage=n value=a (= a/b)"
std::string format_limit_element(const SolenoidType& type, const LimitElement& elem);

/// The subgroup of Q generated by the inputs, in cyclic normal form.
RationalCyclicSubgroup span(const std::vector<Fraction>& generators);

bool contains(const RationalCyclicSubgroup& group, const Fraction& x);

/// Least stage n >= 1 with 1 / (w1 ... wn) outside the candidate.
/// Throws HorizonError without a period.
LimitElement non_fg_witness(const SolenoidType& type, const RationalCyclicSubgroup& candidate);

/// Least stage n with x = a / (w1 ... wn) for an integer a, scanning at most
/// through max_stage; nullopt if none.
std::optional<Stage> expressible_stage(const SolenoidType& type, const Fraction& x, Stage max_stage);

/// Rank of the Q-coefficient limit after checking every connecting map up to
/// the horizon is invertible on Q. Throws HorizonError past the horizon.
int limit_rank_over_Q(const SolenoidType& type, Stage stages);

} // namespace solenoid
