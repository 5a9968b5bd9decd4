#include "solenoid/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "solenoid/error.hpp"

namespace solenoid::oracle {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n)
{
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x)
{
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b)
{
    a = find(a);
    b = find(b);
    if (a == b)
        return false;
    if (size_[a] < size_[b])
        std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
}

StageGroup StageGroup::at(const SolenoidType& type, Stage stage, Stage base_stage)
{
    if (!type.covers(stage))
        throw HorizonError("stage " + std::to_string(stage) + " is beyond the horizon of '" + format_type(type) + "'");
    return {base_stage, stage, type.product(base_stage + 1, stage)};
}

StageGroup StageGroup::of_order(std::uint64_t q)
{
    if (q < 1)
        throw DomainError("group order must be at least 1");
    return {0, 0, arith::Factorization::of(q)};
}

std::uint64_t orbit_count_enumerated(const ProductSystem& system, std::uint64_t budget)
{
    const std::uint64_t r = system.sheets();
    const auto q = system.group.order.value();
    if (!q || *q > budget / r)
        throw BudgetError("enumeration of " + system.group.order.to_string() + " x " + std::to_string(r) +
                          " states exceeds the budget of " + std::to_string(budget));
    // state (x, j) lives at index x * r + (j - 1)
    UnionFind uf(static_cast<std::size_t>(*q * r));
    for (std::uint64_t x = 0; x < *q; ++x) {
        const std::uint64_t next_x = (x + 1) % *q;
        for (Point j = 1; j <= r; ++j)
            uf.unite(x * r + (j - 1), next_x * r + (system.sigma(j) - 1));
    }
    return uf.set_count();
}

std::uint64_t orbit_count_closed_form(const ProductSystem& system)
{
    std::uint64_t total = 0;
    for (const auto& c : system.sigma.cycles())
        total += system.group.order.gcd_with(c.size());
    return total;
}

std::uint64_t orbit_count(const ProductSystem& system, std::uint64_t budget)
{
    const auto closed = orbit_count_closed_form(system);
    const auto q = system.group.order.value();
    if (q && *q <= budget / system.sheets()) {
        const auto counted = orbit_count_enumerated(system, budget);
        if (counted != closed)
            throw CrossCheckError("orbit enumeration found " + std::to_string(counted) +
                                  " orbits, closed form gives " + std::to_string(closed));
    }
    return closed;
}

ComponentLimit component_limit(const SolenoidType& type, const Permutation& sigma, Stage horizon, Stage base_stage,
                               std::uint64_t budget)
{
    if (horizon < 1)
        throw DomainError("horizon must be at least 1");
    ComponentLimit out;
    for (Stage n = 1; n <= horizon; ++n) {
        const auto group = n <= base_stage ? StageGroup{base_stage, n, {}} : StageGroup::at(type, n, base_stage);
        out.per_stage.push_back(orbit_count(ProductSystem{group, sigma}, budget));
    }
    out.count = out.per_stage.back();

    const auto at_stage = [&](Stage n) {
        return n == 0 ? orbit_count(ProductSystem{StageGroup{base_stage, 0, {}}, sigma}) : out.per_stage[n - 1];
    };
    Stage settled = horizon;  // first stage of the final constant run
    while (settled > 0 && at_stage(settled - 1) == out.count)
        --settled;
    if (type.has_period()) {
        const Stage from = std::max({settled, static_cast<Stage>(type.prefix().size()), base_stage});
        out.stabilized = horizon >= from && horizon - from >= type.period_length();
    } else {
        out.stabilized = horizon >= 2 && out.per_stage[horizon - 2] == out.count;
    }
    return out;
}

std::vector<std::uint64_t> translation_cycle_type(std::uint64_t m, std::uint64_t step)
{
    std::vector<bool> seen(m, false);
    std::vector<std::uint64_t> lengths;
    for (std::uint64_t start = 0; start < m; ++start) {
        if (seen[start])
            continue;
        std::uint64_t len = 0;
        for (std::uint64_t x = start; !seen[x]; x = (x + step) % m) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

namespace {

bool multiplication_bijective_explicit(std::uint64_t m, std::uint64_t l)
{
    std::vector<bool> hit(m, false);
    const std::uint64_t step = l % m;
    for (std::uint64_t x = 0; x < m; ++x) {
        const std::uint64_t y = arith::mulmod(x, step, m);
        if (hit[y])
            return false;
        hit[y] = true;
    }
    return true;
}

void require_floors(const SolenoidType& type, Stage base_stage, Stage depth)
{
    if (!type.covers(base_stage + depth))
        throw HorizonError("stage " + std::to_string(base_stage + depth) + " is beyond the horizon of '" +
                           format_type(type) + "'");
}

} // namespace

bool tower_power_bijective(const SolenoidType& type, Stage base_stage, Stage depth, std::uint64_t l,
                           std::uint64_t budget)
{
    if (l < 1)
        throw DomainError("exponent must be at least 1");
    require_floors(type, base_stage, depth);
    arith::Factorization m;
    for (Stage j = 1; j <= depth; ++j) {
        m *= type.term_factors(base_stage + j);
        const auto value = m.value();
        const bool ok = value && *value <= budget ? multiplication_bijective_explicit(*value, l)
                                                  : m.gcd_with(l) == 1;
        if (!ok)
            return false;
    }
    return true;
}

bool conjugacy_orbit_check(const SolenoidType& type, Stage base_stage, std::uint64_t l, Stage depth,
                           std::uint64_t budget)
{
    if (l < 1)
        throw DomainError("exponent must be at least 1");
    require_floors(type, base_stage, depth);
    for (Stage n = base_stage + 1; n <= base_stage + depth; ++n) {
        const auto w = type.term(n);
        if (arith::gcd(l, w) != 1)
            throw PreconditionError("w" + std::to_string(n) + " = " + std::to_string(w) +
                                    " shares a factor with l = " + std::to_string(l));
    }
    arith::Factorization m;
    for (Stage j = 1; j <= depth; ++j) {
        m *= type.term_factors(base_stage + j);
        const auto value = m.value();
        if (value && *value <= budget) {
            const auto unit = translation_cycle_type(*value, 1);
            const auto shifted = translation_cycle_type(*value, l % *value);
            if (unit != shifted)
                return false;
        } else if (m.gcd_with(l) != 1) {
            return false;
        }
    }
    return true;
}

} // namespace solenoid::oracle
