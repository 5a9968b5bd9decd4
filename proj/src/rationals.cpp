#include "solenoid/rationals.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "solenoid/error.hpp"

namespace solenoid {

BigInt to_bigint(const arith::Factorization& f)
{
    BigInt v = 1;
    for (const auto& [p, k] : f.factors())
        v *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k));
    return v;
}

namespace {

BigInt parse_bigint(std::string_view s, std::string_view whole)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("invalid fraction '" + std::string(whole) + "'");
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
}

} // namespace

Fraction::Fraction(BigInt numerator, arith::Factorization denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator))
{
    if (numerator_ == 0) {
        denominator_ = {};
        return;
    }
    // Only primes of the denominator can be shared, so reduce prime by prime.
    auto factors = denominator_.factors();
    for (const auto& [p, k] : factors) {
        std::uint64_t removed = 0;
        const BigInt bp(p);
        while (removed < k) {
            BigInt q, r;
            boost::multiprecision::divide_qr(numerator_, bp, q, r);
            if (r != 0)
                break;
            numerator_ = std::move(q);
            ++removed;
        }
        denominator_.remove(p, removed);
    }
}

Fraction Fraction::parse(std::string_view text)
{
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
        t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
        t.remove_suffix(1);
    auto slash = t.find('/');
    BigInt num = parse_bigint(t.substr(0, slash), text);
    if (slash == std::string_view::npos)
        return Fraction(num);
    BigInt den = parse_bigint(t.substr(slash + 1), text);
    if (den <= 0)
        throw ParseError("fraction '" + std::string(text) + "' needs a positive denominator");
    if (den > std::numeric_limits<std::uint64_t>::max())
        throw ParseError("denominator of '" + std::string(text) + "' exceeds 64 bits");
    return Fraction(num, arith::Factorization::of(den.convert_to<std::uint64_t>()));
}

BigInt Fraction::denominator() const { return to_bigint(denominator_); }

Fraction Fraction::abs() const
{
    Fraction out = *this;
    if (out.numerator_ < 0)
        out.numerator_ = -out.numerator_;
    return out;
}

std::string Fraction::to_string() const
{
    return numerator_.str() + "/" + denominator().str();
}

Fraction inject(const SolenoidType& type, const LimitElement& elem)
{
    if (!type.covers(elem.stage))
        throw HorizonError("stage " + std::to_string(elem.stage) + " is beyond the horizon of '" +
                           format_type(type) + "'");
    return Fraction(elem.value, type.stage_product(elem.stage));
}

std::string format_limit_element(const SolenoidType& type, const LimitElement& elem)
{
    return "stage=" + std::to_string(elem.stage) + " value=" + elem.value.str() + " (= " +
           inject(type, elem).to_string() + ")";
}

RationalCyclicSubgroup span(const std::vector<Fraction>& generators)
{
    arith::Factorization lcm;
    for (const auto& g : generators) {
        for (const auto& [p, k] : g.denominator_factors().factors()) {
            auto have = lcm.multiplicity(p);
            if (k > have)
                lcm.add(p, k - have);
        }
    }
    BigInt g = 0;
    for (const auto& x : generators) {
        if (x.is_zero())
            continue;
        arith::Factorization cofactor = lcm;
        for (const auto& [p, k] : x.denominator_factors().factors())
            cofactor.remove(p, k);
        BigInt scaled = x.numerator() * to_bigint(cofactor);
        g = boost::multiprecision::gcd(g, scaled);
    }
    if (g == 0)
        return {};
    return RationalCyclicSubgroup(Fraction(boost::multiprecision::abs(g), lcm));
}

bool contains(const RationalCyclicSubgroup& group, const Fraction& x)
{
    if (group.is_trivial())
        return x.is_zero();
    // x = a/b, generator = c/d, both reduced: x/generator = a*d / (b*c) is an
    // integer iff b | d and c | a * (d/b).
    const auto& b = x.denominator_factors();
    const auto& d = group.generator().denominator_factors();
    if (!b.divides(d))
        return false;
    arith::Factorization quotient = d;
    for (const auto& [p, k] : b.factors())
        quotient.remove(p, k);
    BigInt scaled = x.numerator() * to_bigint(quotient);
    return scaled % group.generator().numerator() == 0;
}

LimitElement non_fg_witness(const SolenoidType& type, const RationalCyclicSubgroup& candidate)
{
    if (!type.has_period())
        throw HorizonError("non_fg_witness needs a periodic type, got '" + format_type(type) + "'");
    // Some period prime p occurs once per period; after the prefix plus
    // (v_p(d) + 1) periods the p-adic valuation of 1/(w1...wn) is below that
    // of every element of the candidate.
    const auto& d = candidate.generator().denominator_factors();
    std::uint64_t worst = 0;
    for (auto p : type.period_primes())
        worst = std::max(worst, d.multiplicity(p));
    const Stage bound = type.prefix().size() + (worst + 1) * type.period_length() + 1;

    arith::Factorization q;
    for (Stage n = 1; n <= bound; ++n) {
        q *= type.term_factors(n);
        if (!contains(candidate, Fraction(BigInt(1), q)))
            return {n, BigInt(1)};
    }
    throw CrossCheckError("no witness found within the valuation bound");
}

std::optional<Stage> expressible_stage(const SolenoidType& type, const Fraction& x, Stage max_stage)
{
    const auto& b = x.denominator_factors();
    if (type.horizon()) {
        max_stage = std::min(max_stage, *type.horizon());
    } else {
        // Past the prefix every period prime gains a factor each period.
        std::uint64_t most = 0;
        for (const auto& [p, k] : b.factors())
            most = std::max(most, k);
        max_stage = std::min<Stage>(max_stage, type.prefix().size() + most * type.period_length());
    }
    arith::Factorization q;
    for (Stage n = 0; n <= max_stage; ++n) {
        if (n > 0)
            q *= type.term_factors(n);
        if (b.divides(q))
            return n;
    }
    return std::nullopt;
}

int limit_rank_over_Q(const SolenoidType& type, Stage stages)
{
    if (!type.covers(stages))
        throw HorizonError("horizon " + std::to_string(stages) + " exceeds the description of '" +
                           format_type(type) + "'");
    for (Stage n = 1; n <= stages; ++n) {
        // Multiplication by w_n on Q is invertible iff w_n != 0.
        if (type.term(n) == 0)
            throw CrossCheckError("connecting map " + std::to_string(n) + " is not invertible over Q");
    }
    return 1;
}

} // namespace solenoid
