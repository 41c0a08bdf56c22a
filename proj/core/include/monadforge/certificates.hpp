#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monadforge/cohomology.hpp"
#include "monadforge/integer.hpp"
#include "monadforge/monad.hpp"
#include "monadforge/polarization.hpp"

namespace monadforge {

/// Certificates never claim stability or simplicity outright.
enum class Verdict {
    steps_verified,
    counterexample,
    not_covered,
    needs_review,
};

/// "proof steps verified", "counterexample to a step", "not covered", "needs review"
std::string to_string(Verdict v);
std::vector<std::string> verdict_vocabulary();

/// One examined (q, twist) pair: T(-f) sits inside O(-f)^beta, so
/// h^0(Lambda^q T(-f)) <= C(beta, q) h^0(O(-q f)).
struct StabilityBound {
    std::int64_t q = 0;
    /// The positive-group-sum data f.
    MultiDegree twist;
    /// -q f
    MultiDegree line_twist;
    /// C(beta, q) * prod of factor h^0 values.
    Integer bound;
    /// C(beta, q) * h^0 from kunneth_table.
    Integer kunneth_bound;
};

struct StabilityCertificate {
    MonadParams params;
    std::int64_t radius = 0;
    std::int64_t q_cap = 0;
    /// Largest q examined, min(rank T - 1, q_cap).
    std::int64_t q_max = 0;
    std::vector<StabilityBound> bounds;
    /// Twists B in the box with delta_L(B) <= 0 whose negation does not
    /// have positive group sums; no statement is made about them.
    std::vector<MultiDegree> not_covered;
    Integer degree_kernel;
    bool degree_negative = false;
    /// Every bound equals its Kuenneth recomputation.
    bool cross_check = false;
    Verdict verdict = Verdict::needs_review;

    bool ok() const noexcept { return verdict == Verdict::steps_verified; }
};

/// Checks the line-bundle bounds of the stability argument for T = ker(B-bar)
/// over every twist f with positive group sums and entries in [-radius, radius],
/// and q = 1 .. min(rank T - 1, q_cap). Twists are sorted lexicographically.
StabilityCertificate stability_certificate(const MonadParams& params, std::int64_t radius,
                                           std::int64_t q_cap = 6);
inline StabilityCertificate stability_certificate(const Monad& m, std::int64_t radius, std::int64_t q_cap = 6) {
    return stability_certificate(m.params, radius, q_cap);
}

struct VanishingFact {
    std::string statement;
    MultiDegree twist;
    std::size_t degree = 0;
    Integer value;
    bool holds() const { return value == 0; }
};

struct SimplicityCertificate {
    SpaceSpec space{std::vector<int>{1}};
    std::int64_t k = 0;
    std::vector<VanishingFact> facts;
    /// The inequality chain the vanishing facts feed into.
    std::string chain;
    /// The chain itself rests on exact-sequence steps not recomputed here.
    bool conditional = true;
    Verdict verdict = Verdict::needs_review;

    bool ok() const noexcept { return verdict == Verdict::steps_verified; }
};

/// Checks h^0(O(-1,...,-1)) = h^0(O(-2,...,-2)) = h^1(O(-2,...,-2)) = 0 on the
/// monad's space. A failure in degree dim X is flagged for review instead of
/// being reported as a counterexample.
SimplicityCertificate simplicity_certificate(const MonadParams& params);
inline SimplicityCertificate simplicity_certificate(const Monad& m) { return simplicity_certificate(m.params); }

enum class Coverage {
    /// Negation of the twist has positive group sums.
    positive_sum_bound,
    /// s = 1 and the twist is zero, with h^0 of the bundle computed directly.
    direct_sections,
    none,
};
std::string to_string(Coverage c);

struct HoppeObligation {
    std::int64_t s = 0;
    MultiDegree twist;
    Integer delta;
    Rational bound;
    bool strict = false;
    bool weak = false;
    Coverage coverage = Coverage::none;
};

struct HoppeOptions {
    std::int64_t s_cap = 6;
    /// Caller has established h^0(bundle) = 0.
    bool sections_vanish = false;
};

/// Every (s, B) with B in [-radius, radius]^r and delta_L(B) <= -s slope_L,
/// tagged with whether the positive-sum argument covers it. The uncovered
/// entries are the residual gap of the criterion.
std::vector<HoppeObligation> hoppe_obligations(const SpaceSpec& space, const BundleSummary& bundle,
                                               std::int64_t radius, const HoppeOptions& options = {});

/// Summary of T = ker(B-bar): rank 2mu + k, c1 = (-k,...,-k).
BundleSummary kernel_bundle(const MonadParams& params);
/// Summary of E: rank 2mu, c1 = 0.
BundleSummary cohomology_bundle(const MonadParams& params);

/// h^0(T) computed from B-bar: beta minus the rank of H^0(O^beta) -> H^0(O(1,...,1))^k.
Integer kernel_sections(const Monad& monad);

/// chi(E) = beta chi(O) - alpha chi(O(-1,...,-1)) - gamma chi(O(1,...,1)).
Integer cohomology_euler_characteristic(const MonadParams& params);

} // namespace monadforge
