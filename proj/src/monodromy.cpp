#include "solenoid/monodromy.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "solenoid/error.hpp"

namespace solenoid {

Permutation::Permutation(std::size_t degree) : images_(degree)
{
    if (degree < 1)
        throw DomainError("permutation degree must be at least 1");
    for (std::size_t i = 0; i < degree; ++i)
        images_[i] = static_cast<Point>(i + 1);
    build_cycles();
}

Permutation::Permutation(std::vector<Point> images, bool) : images_(std::move(images)) { build_cycles(); }

void Permutation::build_cycles()
{
    cycles_.clear();
    std::vector<bool> seen(images_.size(), false);
    for (Point start = 1; start <= images_.size(); ++start) {
        if (seen[start - 1])
            continue;
        Cycle c;
        for (Point p = start; !seen[p - 1]; p = images_[p - 1]) {
            seen[p - 1] = true;
            c.push_back(p);
        }
        cycles_.push_back(std::move(c));
    }
}

Permutation Permutation::from_images(std::vector<Point> images)
{
    if (images.empty())
        throw DomainError("permutation degree must be at least 1");
    std::vector<bool> hit(images.size(), false);
    for (auto p : images) {
        if (p < 1 || p > images.size() || hit[p - 1])
            throw DomainError("image table is not a bijection");
        hit[p - 1] = true;
    }
    return Permutation(std::move(images), true);
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<Cycle>& cycles)
{
    if (degree < 1)
        throw DomainError("permutation degree must be at least 1");
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
        images[i] = static_cast<Point>(i + 1);
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
        if (c.empty())
            throw DomainError("empty cycle");
        for (std::size_t i = 0; i < c.size(); ++i) {
            Point p = c[i];
            if (p < 1 || p > degree)
                throw DomainError("point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
            if (used[p - 1])
                throw DomainError("point " + std::to_string(p) + " repeats");
            used[p - 1] = true;
            images[p - 1] = c[(i + 1) % c.size()];
        }
    }
    return Permutation(std::move(images), true);
}

Permutation Permutation::full_cycle(std::size_t r)
{
    Cycle c(r);
    for (std::size_t i = 0; i < r; ++i)
        c[i] = static_cast<Point>(i + 1);
    return from_cycles(r, {c});
}

Permutation Permutation::parse(std::string_view text)
{
    const std::string whole(text);
    auto skip_space = [&] {
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
            text.remove_prefix(1);
    };
    auto read_number = [&]() -> std::uint64_t {
        std::uint64_t v = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || v > std::numeric_limits<Point>::max())
            throw ParseError("expected a point in '" + whole + "'");
        text.remove_prefix(static_cast<std::size_t>(end - text.data()));
        return v;
    };

    skip_space();
    if (text.starts_with("id:")) {
        text.remove_prefix(3);
        auto r = read_number();
        skip_space();
        if (!text.empty())
            throw ParseError("trailing text in '" + whole + "'");
        if (r < 1)
            throw DomainError("identity degree must be at least 1");
        return Permutation(r);
    }

    std::vector<Cycle> cycles;
    std::size_t degree = 0;
    while (!text.empty()) {
        if (text.front() != '(')
            throw ParseError("expected '(' in '" + whole + "'");
        text.remove_prefix(1);
        Cycle c;
        skip_space();
        while (!text.empty() && text.front() != ')') {
            auto p = read_number();
            if (p < 1)
                throw ParseError("points start at 1 in '" + whole + "'");
            c.push_back(static_cast<Point>(p));
            degree = std::max<std::size_t>(degree, p);
            skip_space();
        }
        if (text.empty())
            throw ParseError("unclosed cycle in '" + whole + "'");
        text.remove_prefix(1);
        if (c.empty())
            throw ParseError("empty cycle in '" + whole + "'");
        cycles.push_back(std::move(c));
        skip_space();
    }
    if (cycles.empty())
        throw ParseError("no cycles in '" + whole + "'");
    return from_cycles(degree, cycles);
}

std::vector<std::size_t> Permutation::cycle_lengths() const
{
    std::vector<std::size_t> out;
    out.reserve(cycles_.size());
    for (const auto& c : cycles_)
        out.push_back(c.size());
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.degree() != b.degree())
        throw DomainError("composing permutations of different degree");
    std::vector<Point> images(a.degree());
    for (Point p = 1; p <= a.degree(); ++p)
        images[p - 1] = a(b(p));
    return Permutation(std::move(images), true);
}

std::string Permutation::to_string() const
{
    if (is_identity())
        return "id:" + std::to_string(degree());
    std::string s;
    for (const auto& c : cycles_) {
        if (c.size() == 1)
            continue;
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i > 0)
                s += ' ';
            s += std::to_string(c[i]);
        }
        s += ')';
    }
    if (images_.back() == degree())
        s += "(" + std::to_string(degree()) + ")";
    return s;
}

std::vector<Permutation> all_permutations(std::size_t r)
{
    std::vector<Point> images(r);
    for (std::size_t i = 0; i < r; ++i)
        images[i] = static_cast<Point>(i + 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

namespace {

template <class ResidueFn>
Permutation power_impl(const Permutation& sigma, ResidueFn residue)
{
    std::vector<Point> images(sigma.degree());
    for (const auto& c : sigma.cycles()) {
        const std::size_t len = c.size();
        const std::size_t shift = static_cast<std::size_t>(residue(len));
        for (std::size_t i = 0; i < len; ++i)
            images[c[i] - 1] = c[(i + shift) % len];
    }
    return Permutation::from_images(std::move(images));
}

} // namespace

Permutation power(const Permutation& sigma, const FactoredExponent& e)
{
    return power_impl(sigma, [&](std::size_t len) { return e.residue(len); });
}

Permutation power(const Permutation& sigma, std::uint64_t e)
{
    return power_impl(sigma, [&](std::size_t len) { return e % len; });
}

Permutation sigma_at_stage(const SolenoidType& type, const Permutation& sigma, Stage n, Stage base_stage)
{
    if (n < base_stage)
        throw DomainError("stage " + std::to_string(n) + " precedes the base stage " + std::to_string(base_stage));
    if (!type.covers(n))
        throw HorizonError("stage " + std::to_string(n) + " is beyond the horizon of '" + format_type(type) + "'");
    return power(sigma, type.product(base_stage + 1, n));
}

namespace {

bool lengths_coprime_to(const Permutation& sigma, const std::set<std::uint64_t>& primes)
{
    for (const auto& c : sigma.cycles()) {
        for (auto p : primes) {
            if (c.size() % p == 0)
                return false;
        }
    }
    return true;
}

} // namespace

Stabilization stabilization_stage(const SolenoidType& type, const Permutation& sigma, Stage base_stage)
{
    if (!type.covers(base_stage))
        throw HorizonError("base stage " + std::to_string(base_stage) + " is beyond the horizon of '" +
                           format_type(type) + "'");

    if (!type.has_period()) {
        const Stage horizon = *type.horizon();
        Stabilization out{base_stage, false};
        Permutation current = sigma;
        for (Stage n = base_stage + 1; n <= horizon; ++n) {
            Permutation next = power(current, type.term(n));
            if (next.orbit_count() > current.orbit_count())
                out.stage = n;
            current = std::move(next);
        }
        return out;
    }

    // Past the prefix, each full period without success splits some orbit,
    // and an r-point permutation splits at most r - 1 times.
    const Stage bound = std::max<Stage>(base_stage, type.prefix().size()) +
                        static_cast<Stage>(sigma.degree()) * type.period_length();
    Permutation current = sigma;
    for (Stage n = base_stage;; ++n) {
        if (lengths_coprime_to(current, type.tail_primes(n)))
            return {n, true};
        if (n >= bound)
            throw CrossCheckError("orbit splitting exceeded its bound");
        current = power(current, type.term(n + 1));
    }
}

CoveringReport classify(const SolenoidType& type, const Permutation& sigma, Stage base_stage)
{
    const auto stab = stabilization_stage(type, sigma, base_stage);
    const auto at = sigma_at_stage(type, sigma, stab.stage, base_stage);

    CoveringReport report{sigma.degree(), type, sigma, base_stage, stab, {}, false};
    for (const auto& c : at.cycles()) {
        CoveringComponent comp;
        comp.length = c.size();
        comp.sheets = c;
        std::sort(comp.sheets.begin(), comp.sheets.end());
        comp.coprime = tail_coprime(type, comp.length);
        // Orbits coprime to every later entry give a mapping torus of an
        // l-th power of the base odometer, which is conjugate to the odometer.
        comp.homeomorphic_to_base = stab.decided && comp.coprime.decided_true();
        report.components.push_back(std::move(comp));
    }
    report.connected = report.components.size() == 1;
    return report;
}

ExistenceVerdict connected_covering_exists(const SolenoidType& type, std::uint64_t r)
{
    ExistenceVerdict out{tail_coprime(type, r), std::nullopt, 0};
    if (out.verdict.decided_true()) {
        out.witness = Permutation::full_cycle(r);
        out.witness_base_stage = last_shared_stage(type, r);
    }
    return out;
}

bool power_map_bijective(std::uint64_t modulus, std::uint64_t l)
{
    if (modulus < 1 || l < 1)
        throw DomainError("modulus and exponent must be at least 1");
    return arith::gcd(l, modulus) == 1;
}

} // namespace solenoid
