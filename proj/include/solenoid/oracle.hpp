#pragma once

// Brute-force finite model of a covering: the odometer on Z/q lifted to
// Z/q x {1..r} by the monodromy. Components of the suspension of a finite
// bijection are its orbits, so counting orbits at each stage gives an
// independent count of covering components.

#include <cstdint>
#include <optional>
#include <vector>

#include "solenoid/arith.hpp"
#include "solenoid/monodromy.hpp"
#include "solenoid/typealg.hpp"

namespace solenoid::oracle {

/// Default cap on q * r for explicit enumeration.
inline constexpr std::uint64_t kStateBudget = 10'000'000;

/// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);

    std::size_t find(std::size_t x);
    /// Returns true if two distinct sets were merged.
    bool unite(std::size_t a, std::size_t b);
    std::size_t set_count() const { return sets_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t sets_;
};

/// Z/q with q = w_{base+1} ... w_stage.
struct StageGroup {
    Stage base_stage = 0;
    Stage stage = 0;
    arith::Factorization order;

    static StageGroup at(const SolenoidType& type, Stage stage, Stage base_stage = 0);
    /// A bare cyclic group of order q (>= 1).
    static StageGroup of_order(std::uint64_t q);
};

/// (x, j) -> (x + 1 mod q, sigma(j)) on Z/q x {1..r}.
struct ProductSystem {
    StageGroup group;
    Permutation sigma;

    std::size_t sheets() const { return sigma.degree(); }
};

/// Union-find over all q * r states. Throws BudgetError when q * r > budget.
std::uint64_t orbit_count_enumerated(const ProductSystem& system, std::uint64_t budget = kStateBudget);

/// Sum over cycles c of sigma of gcd(|c|, q), with q never materialized.
std::uint64_t orbit_count_closed_form(const ProductSystem& system);

/// Closed form, cross-checked against enumeration whenever the state space
/// fits the budget. Throws CrossCheckError on disagreement.
std::uint64_t orbit_count(const ProductSystem& system, std::uint64_t budget = kStateBudget);

struct ComponentLimit {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> per_stage;  ///< counts at stages 1..horizon
    /// The final count held, past the prefix and base stage, for a full
    /// period; with no period, the last two counts agree.
    bool stabilized = false;
};

/// Orbit counts at stages 1..horizon (q = 1 at stages up to the base).
/// Throws DomainError for horizon < 1 and HorizonError past the description.
ComponentLimit component_limit(const SolenoidType& type, const Permutation& sigma, Stage horizon,
                               Stage base_stage = 0, std::uint64_t budget = kStateBudget);

/// Multiplication by l is a bijection of Z/(w_{n+1} ... w_{n+j}) for each
/// j in 1..depth. Moduli up to the budget are checked by explicit traversal.
bool tower_power_bijective(const SolenoidType& type, Stage base_stage, Stage depth, std::uint64_t l,
                           std::uint64_t budget = kStateBudget);

/// On each floor Z/m, m = w_{n+1} ... w_{n+j} for j in 1..depth, checks that
/// x -> x + 1 and x -> x + l have the same cycle type (one m-cycle).
/// Throws PreconditionError naming the first entry sharing a factor with l.
bool conjugacy_orbit_check(const SolenoidType& type, Stage base_stage, std::uint64_t l, Stage depth,
                           std::uint64_t budget = kStateBudget);

/// Cycle lengths of x -> x + step on Z/m, by explicit traversal.
std::vector<std::uint64_t> translation_cycle_type(std::uint64_t m, std::uint64_t step);

} // namespace solenoid::oracle
