#pragma once

// Finite-fold coverings of a solenoid described by a monodromy permutation
// of the sheets: the stage dynamics sigma_n, orbit stabilization, and the
// resulting component decomposition.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solenoid/arith.hpp"
#include "solenoid/typealg.hpp"

namespace solenoid {

/// Sheet label, 1-based.
using Point = std::uint32_t;

/// Exponent tower w_{m+1} ... w_n kept as a prime multiset.
using FactoredExponent = arith::Factorization;

/// Bijection of {1, ..., degree} kept both as an image table and as its
/// canonical disjoint cycles (each cycle starts at its least point, cycles
/// ordered by least point, fixed points included as 1-cycles).
class Permutation {
public:
    using Cycle = std::vector<Point>;

    /// Identity of the given degree (>= 1).
    explicit Permutation(std::size_t degree = 1);

    /// images[i - 1] = sigma(i). Throws DomainError if not a bijection of 1..n.
    static Permutation from_images(std::vector<Point> images);

    /// Points not mentioned are fixed. Throws DomainError on repeated or
    /// out-of-range points.
    static Permutation from_cycles(std::size_t degree, const std::vector<Cycle>& cycles);

    /// The cycle (1 2 ... r).
    static Permutation full_cycle(std::size_t r);

    /// "(1 2)(3 4 5)" with degree = largest point, or "id:r". Throws ParseError
    /// on malformed text and DomainError on repeated points.
    static Permutation parse(std::string_view text);

    std::size_t degree() const { return images_.size(); }
    Point operator()(Point p) const { return images_[p - 1]; }
    const std::vector<Point>& images() const { return images_; }
    const std::vector<Cycle>& cycles() const { return cycles_; }
    std::size_t orbit_count() const { return cycles_.size(); }
    std::vector<std::size_t> cycle_lengths() const;
    bool is_identity() const { return cycles_.size() == images_.size(); }

    /// (a * b)(p) = a(b(p)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    /// Nontrivial cycles, plus "(r)" when r is fixed so the degree survives a
    /// round trip; "id:r" for the identity.
    std::string to_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

private:
    explicit Permutation(std::vector<Point> images, bool);
    void build_cycles();

    std::vector<Point> images_;
    std::vector<Cycle> cycles_;
};

/// Every permutation of degree r in lexicographic order of image tables.
std::vector<Permutation> all_permutations(std::size_t r);

/// sigma^e, cycle by cycle, reducing e modulo each cycle length.
Permutation power(const Permutation& sigma, const FactoredExponent& e);
Permutation power(const Permutation& sigma, std::uint64_t e);

/// sigma_n = sigma^(w_{m+1} ... w_n) where sigma is the monodromy at base
/// stage m; sigma_m = sigma. Throws HorizonError past the horizon and
/// DomainError for n < m.
Permutation sigma_at_stage(const SolenoidType& type, const Permutation& sigma, Stage n, Stage base_stage = 0);

struct Stabilization {
    Stage stage = 0;
    /// False when the type has no period; then `stage` is the last stage
    /// within the horizon at which an orbit split (or the base stage).
    bool decided = false;
};

/// Least n >= base_stage such that every orbit length of sigma_n is coprime
/// to every later entry.
Stabilization stabilization_stage(const SolenoidType& type, const Permutation& sigma, Stage base_stage = 0);

struct CoveringComponent {
    std::uint64_t length = 0;     ///< covering degree of the component
    std::vector<Point> sheets;    ///< ascending
    TailVerdict coprime;          ///< tail_coprime(type, length)
    bool homeomorphic_to_base = false;
};

struct CoveringReport {
    std::size_t degree = 0;
    SolenoidType type;
    Permutation monodromy;
    Stage base_stage = 0;
    Stabilization stabilization;
    std::vector<CoveringComponent> components;  ///< ordered by least sheet
    bool connected = false;
};

/// Components are the orbits of sigma at the stabilization stage.
CoveringReport classify(const SolenoidType& type, const Permutation& sigma, Stage base_stage = 0);

struct ExistenceVerdict {
    TailVerdict verdict;
    /// On DecidedTrue: the r-cycle, placed at a base stage past every entry
    /// sharing a factor with r.
    std::optional<Permutation> witness;
    Stage witness_base_stage = 0;
};

/// Does the type admit a connected r-fold covering? Throws DomainError for r < 1.
ExistenceVerdict connected_covering_exists(const SolenoidType& type, std::uint64_t r);

/// Multiplication by l is a bijection of Z/m. Throws DomainError on m or l < 1.
bool power_map_bijective(std::uint64_t modulus, std::uint64_t l);

} // namespace solenoid
