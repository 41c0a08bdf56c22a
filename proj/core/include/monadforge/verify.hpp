#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monadforge/field.hpp"
#include "monadforge/monad.hpp"

namespace monadforge {

/// First nonzero entry of a product that should vanish.
struct CompositionWitness {
    std::size_t row = 0;
    std::size_t col = 0;
    std::string entry;
};

/// Symbolic B*A; std::nullopt iff every entry is the zero polynomial.
std::optional<CompositionWitness> composition_witness(const LinearMatrix& b, const LinearMatrix& a);

/// True iff B-bar * A-bar is identically zero on X.
bool check_composition_zero(const Monad& monad);
/// Same check for the banded pair on P^N.
bool check_composition_zero(const BandedPair& pair);

/// Canonical F_q-points of a product of projective spaces, addressable by index.
///
/// Points are ordered by mixed radix over factors (first factor most
/// significant); within a factor, tuples are ordered by position of the
/// leading one, then lexicographically.
class PointEnumerator {
public:
    /// Throws DomainError when q is not prime.
    PointEnumerator(SpaceSpec space, std::uint64_t q);

    /// prod (q^{a_i+1} - 1)/(q - 1); saturates at UINT64_MAX.
    std::uint64_t count() const noexcept { return count_; }
    ProjectivePoint<PrimeField> at(std::uint64_t index) const;
    /// Flat coordinates of point `index`, without building a ProjectivePoint.
    void flat_at(std::uint64_t index, std::vector<std::uint64_t>& out) const;

    const PrimeField& field() const noexcept { return field_; }
    const SpaceSpec& space() const noexcept { return space_; }

private:
    SpaceSpec space_;
    PrimeField field_;
    std::vector<std::vector<std::vector<std::uint64_t>>> factor_points_;
    std::uint64_t count_ = 1;
};

/// Number of F_q-points of the space, or std::nullopt on uint64 overflow.
std::optional<std::uint64_t> point_count(const SpaceSpec& space, std::uint64_t q);

/// Every F_q-point of X exactly once (canonical form).
std::vector<ProjectivePoint<PrimeField>> enumerate_points(const SpaceSpec& space, std::uint64_t q);

struct FiberFailure {
    /// Enumeration index (exhaustive) or sample number (random).
    std::uint64_t index = 0;
    std::string point;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
    /// B(p) * A(p) != 0 at this point.
    bool composition_nonzero = false;

    friend auto operator<=>(const FiberFailure&, const FiberFailure&) = default;
};

struct VerifierOptions {
    std::uint64_t point_budget = 10'000'000;
    /// 0 = MONADFORGE_THREADS, else hardware concurrency.
    unsigned threads = 0;
    /// Failures kept in the report; the count is always exact.
    std::size_t max_witnesses = 32;
    /// Coordinates of random rational points are drawn from [-bound, bound].
    std::int64_t sample_bound = 1000;
};

struct VerificationReport {
    std::string field;
    bool exhaustive = false;
    std::uint64_t points_checked = 0;
    std::uint64_t failure_count = 0;
    /// Sorted canonically; at most VerifierOptions::max_witnesses entries.
    std::vector<FiberFailure> failures;
    /// Largest rank observed over the checked points.
    std::size_t generic_rank_a = 0;
    std::size_t generic_rank_b = 0;
    std::int64_t expected_rank_a = 0;
    std::int64_t expected_rank_b = 0;
    bool composition_zero = false;
    std::optional<std::uint64_t> seed;

    bool valid() const noexcept {
        return composition_zero && failure_count == 0 &&
               static_cast<std::int64_t>(generic_rank_a) == expected_rank_a &&
               static_cast<std::int64_t>(generic_rank_b) == expected_rank_b;
    }
};

/// Rank of A-bar and B-bar at every F_q-point of X. Throws BudgetExceeded when
/// the point count exceeds options.point_budget.
VerificationReport exhaustive_fiber_check(const Monad& monad, std::uint64_t q,
                                          const VerifierOptions& options = {});

/// Rank checks at `samples` pseudo-random integral (hence rational) points;
/// deterministic given the seed, independent of thread count.
VerificationReport random_fiber_check(const Monad& monad, std::size_t samples, std::uint64_t seed,
                                      const VerifierOptions& options = {});

/// Human label of the combined evidence. Never claims a proof.
/// "verified at desk scale" needs composition zero and clean exhaustive
/// sweeps over both F_2 and F_3.
std::string evidence_label(const std::vector<VerificationReport>& reports);

/// Worker count from MONADFORGE_THREADS, falling back to hardware concurrency.
unsigned default_thread_count();

} // namespace monadforge
