#include "solenoid/typealg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

void check_entries(const SolenoidType::Entries& entries, const char* side)
{
    for (auto w : entries) {
        if (w < 2)
            throw DomainError(std::string(side) + " entry " + std::to_string(w) + " is less than 2");
    }
}

std::vector<arith::Factorization> factor_all(const SolenoidType::Entries& entries)
{
    std::vector<arith::Factorization> out;
    out.reserve(entries.size());
    for (auto w : entries)
        out.push_back(arith::Factorization::of(w));
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

SolenoidType::Entries parse_list(std::string_view side, std::string_view text)
{
    SolenoidType::Entries out;
    side = trim(side);
    if (side.empty())
        return out;
    while (true) {
        auto comma = side.find(',');
        auto token = trim(side.substr(0, comma));
        if (token.empty())
            throw ParseError("empty entry in type descriptor '" + std::string(text) + "'");
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec == std::errc::result_out_of_range)
            throw ParseError("entry '" + std::string(token) + "' exceeds 64 bits");
        if (ec != std::errc() || end != token.data() + token.size())
            throw ParseError("invalid entry '" + std::string(token) + "' in type descriptor");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        side.remove_prefix(comma + 1);
    }
    return out;
}

std::string join(const SolenoidType::Entries& entries)
{
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0)
            s += ',';
        s += std::to_string(entries[i]);
    }
    return s;
}

} // namespace

SolenoidType::SolenoidType(Entries prefix, std::optional<Entries> period)
    : prefix_(std::move(prefix)), period_(std::move(period))
{
    check_entries(prefix_, "prefix");
    if (period_) {
        if (period_->empty())
            throw DomainError("period block is empty");
        check_entries(*period_, "period");
    } else if (prefix_.empty()) {
        throw DomainError("type has neither prefix nor period");
    }
    prefix_factors_ = factor_all(prefix_);
    if (period_) {
        period_factors_ = factor_all(*period_);
        for (const auto& f : period_factors_)
            period_total_ *= f;
    }
}

std::optional<Stage> SolenoidType::horizon() const
{
    if (period_)
        return std::nullopt;
    return prefix_.size();
}

void SolenoidType::require_period(const char* what) const
{
    if (!period_)
        throw HorizonError(std::string(what) + " needs a periodic type, got '" + format_type(*this) + "'");
}

const arith::Factorization& SolenoidType::term_factors(Stage n) const
{
    if (n == 0)
        throw DomainError("entries are indexed from 1");
    if (n <= prefix_.size())
        return prefix_factors_[n - 1];
    if (!period_)
        throw HorizonError("stage " + std::to_string(n) + " is beyond the horizon " +
                           std::to_string(prefix_.size()));
    return period_factors_[(n - prefix_.size() - 1) % period_->size()];
}

std::uint64_t SolenoidType::term(Stage n) const
{
    if (n == 0)
        throw DomainError("entries are indexed from 1");
    if (n <= prefix_.size())
        return prefix_[n - 1];
    if (!period_)
        throw HorizonError("stage " + std::to_string(n) + " is beyond the horizon " +
                           std::to_string(prefix_.size()));
    return (*period_)[(n - prefix_.size() - 1) % period_->size()];
}

arith::Factorization SolenoidType::product(Stage first, Stage last) const
{
    arith::Factorization out;
    first = std::max<Stage>(first, 1);
    if (last < first)
        return out;
    if (!covers(last))
        throw HorizonError("stage " + std::to_string(last) + " is beyond the horizon " +
                           std::to_string(prefix_.size()));

    const Stage p = prefix_.size();
    for (Stage n = first; n <= std::min(last, p); ++n)
        out *= prefix_factors_[n - 1];

    const Stage start = std::max(first, p + 1);
    if (start > last)
        return out;
    const Stage len = period_->size();
    Stage idx = start - p - 1;
    Stage remaining = last - start + 1;
    while (remaining > 0 && idx % len != 0) {
        out *= period_factors_[idx % len];
        ++idx;
        --remaining;
    }
    out *= period_total_.pow(remaining / len);
    for (Stage i = 0; i < remaining % len; ++i)
        out *= period_factors_[i];
    return out;
}

std::set<std::uint64_t> SolenoidType::period_primes() const
{
    require_period("period_primes");
    std::set<std::uint64_t> out;
    for (const auto& [q, k] : period_total_.factors())
        out.insert(q);
    return out;
}

std::set<std::uint64_t> SolenoidType::tail_primes(Stage n) const
{
    auto out = period_primes();
    for (Stage i = n + 1; i <= prefix_.size(); ++i) {
        for (const auto& [q, k] : prefix_factors_[i - 1].factors())
            out.insert(q);
    }
    return out;
}

SolenoidType parse_type(std::string_view text)
{
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw ParseError("type descriptor '" + std::string(text) + "' lacks '|'");
    if (text.find('|', bar + 1) != std::string_view::npos)
        throw ParseError("type descriptor '" + std::string(text) + "' has more than one '|'");
    auto prefix = parse_list(text.substr(0, bar), text);
    auto period = parse_list(text.substr(bar + 1), text);
    if (prefix.empty() && period.empty())
        throw ParseError("type descriptor '" + std::string(text) + "' is empty on both sides");
    std::optional<SolenoidType::Entries> tail;
    if (!period.empty())
        tail = std::move(period);
    return SolenoidType(std::move(prefix), std::move(tail));
}

std::string format_type(const SolenoidType& type)
{
    std::string s = join(type.prefix()) + "|";
    if (type.period())
        s += join(*type.period());
    return s;
}

SupernaturalNumber::SupernaturalNumber(Map exponents) : exponents_(std::move(exponents))
{
    for (const auto& [p, e] : exponents_) {
        if (!arith::is_prime(p))
            throw DomainError(std::to_string(p) + " is not prime");
        if (!e.infinite && e.value == 0)
            throw DomainError("zero exponent stored for prime " + std::to_string(p));
    }
}

SupernaturalExponent SupernaturalNumber::exponent(std::uint64_t prime) const
{
    auto it = exponents_.find(prime);
    return it == exponents_.end() ? SupernaturalExponent{} : it->second;
}

std::set<std::uint64_t> SupernaturalNumber::infinite_primes() const
{
    std::set<std::uint64_t> out;
    for (const auto& [p, e] : exponents_) {
        if (e.infinite)
            out.insert(p);
    }
    return out;
}

std::string SupernaturalNumber::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (const auto& [p, e] : exponents_) {
        if (!first)
            s += ',';
        first = false;
        s += std::to_string(p) + ':' + (e.infinite ? std::string("inf") : std::to_string(e.value));
    }
    return s + "}";
}

SupernaturalNumber supernatural_of(const SolenoidType& type)
{
    if (!type.has_period())
        throw HorizonError("supernatural number needs a periodic type, got '" + format_type(type) + "'");
    SupernaturalNumber::Map exps;
    for (auto p : type.period_primes())
        exps[p] = SupernaturalExponent::infinity();
    const auto prefix_product = type.stage_product(type.prefix().size());
    for (const auto& [p, k] : prefix_product.factors()) {
        if (!exps.contains(p))
            exps[p] = SupernaturalExponent::finite(k);
    }
    return SupernaturalNumber(std::move(exps));
}

std::string to_string(Decision d)
{
    switch (d) {
    case Decision::DecidedTrue:
        return "true";
    case Decision::DecidedFalse:
        return "false";
    case Decision::HorizonLimited:
        return "horizon-limited";
    }
    return "?";
}

TailVerdict tail_coprime(const SolenoidType& type, std::uint64_t r)
{
    if (r < 1)
        throw DomainError("degree must be at least 1");
    if (r == 1)
        return {Decision::DecidedTrue, true};
    if (type.has_period()) {
        for (auto w : *type.period()) {
            if (arith::gcd(r, w) != 1)
                return {Decision::DecidedFalse, false};
        }
        return {Decision::DecidedTrue, true};
    }
    return {Decision::HorizonLimited, arith::gcd(r, type.prefix().back()) == 1};
}

Stage last_shared_stage(const SolenoidType& type, std::uint64_t r)
{
    const auto& prefix = type.prefix();
    for (Stage n = prefix.size(); n > 0; --n) {
        if (arith::gcd(r, prefix[n - 1]) != 1)
            return n;
    }
    return 0;
}

bool types_equivalent(const SolenoidType& a, const SolenoidType& b)
{
    return supernatural_of(a).infinite_primes() == supernatural_of(b).infinite_primes();
}

} // namespace solenoid
