#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monadforge/poly_matrix.hpp"
#include "monadforge/segre.hpp"
#include "monadforge/space.hpp"

namespace monadforge {

/// mu = 2^{l+2m+n-1} 3^n - 1 for (P^1)^l x (P^3)^m x (P^5)^n.
/// Throws DomainError when l = m = n = 0.
std::int64_t mu_param(int l, int m, int n);

/// N = prod(a_i + 1) - 1, the dimension of the Segre ambient space.
std::int64_t ambient_N(const SpaceSpec& space);

struct FloystadVerdict {
    /// b >= 2c + nu - 1 and b >= a + c
    bool condition1 = false;
    /// b >= a + c + nu
    bool condition2 = false;

    bool satisfied() const noexcept { return condition1 || condition2; }
    /// Names of the conditions that hold: "condition-1", "condition-2", or "none".
    std::vector<std::string> via() const;
};

/// Existence conditions for a linear monad
/// O(-1)^a -> O^b -> O(1)^c on P^nu.
FloystadVerdict floystad_check(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t nu);

enum class BandConvention {
    /// A = [-Y; X] with Hankel (index-reversed) bands; B*A = 0 on P^{2n+1} for every k.
    reversed,
    /// A = [-Y; X] with Toeplitz bands in the same order as B's; B*A = 0 on
    /// P^{2n+1} only for k = 1.
    paper_literal,
};

std::string to_string(BandConvention c);
BandConvention parse_band_convention(const std::string& text);

struct BandedPair {
    /// (2n+2k) x k
    LinearMatrix a;
    /// k x (2n+2k)
    LinearMatrix b;
};

/// Banded matrices of linear forms on P^{2n+1} (coordinates x_0..x_n, y_0..y_n
/// stored as x0_0..x0_{2n+1}). Row i of B carries x_0..x_n from column i and
/// y_0..y_n from column n+k+i.
BandedPair build_banded(std::size_t n, std::size_t k, BandConvention convention);

struct MonadParams {
    SpaceSpec space{std::vector<int>{1}};
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t gamma = 0;
    std::int64_t k = 0;
    std::int64_t mu = 0;
    std::int64_t big_n = 0;
    /// Existence conditions with nu = dim X and with nu = N.
    FloystadVerdict floystad_on_x;
    FloystadVerdict floystad_on_pn;
};

/// 0 -> O(-1,...,-1)^alpha --A--> O^beta --B--> O(1,...,1)^gamma -> 0 on X.
struct Monad {
    MonadParams params;
    BandConvention band = BandConvention::reversed;
    TableConvention table = TableConvention::clean;
    /// beta x alpha, entries of multidegree (1,...,1)
    LinearMatrix map_a;
    /// gamma x beta, entries of multidegree (1,...,1)
    LinearMatrix map_b;
    /// The matrices on P^N before Segre substitution.
    BandedPair ambient;
    std::vector<std::string> warnings;

    bool empty() const noexcept { return map_a.empty() || map_b.empty(); }
};

/// Parameters of the banded family alpha = gamma = k, beta = 2mu + 2k.
/// Throws DomainError for even N or k < 1.
MonadParams monad_params(const SpaceSpec& space, std::int64_t k);

/// Pulls the banded pair on P^{2mu+1} back to X along the Segre table.
/// Throws DomainError for even N, k < 1, or when the existence conditions fail
/// on X; only warns when they fail on P^N.
Monad build_monad(const SpaceSpec& space, std::int64_t k,
                  BandConvention band = BandConvention::reversed,
                  TableConvention table = TableConvention::clean);

/// Rank and first Chern class of one sheaf of the display diagram.
struct SheafSummary {
    std::int64_t rank = 0;
    MultiDegree c1;
};

struct DisplaySummary {
    SheafSummary m0;
    SheafSummary m1;
    SheafSummary m2;
    /// ker(B)
    SheafSummary kernel;
    /// coker(A)
    SheafSummary cokernel;
    /// ker(B)/im(A)
    SheafSummary cohomology;
    /// Set when the cohomology bundle has rank zero.
    bool degenerate = false;
};

DisplaySummary display_summary(const MonadParams& params);
inline DisplaySummary display_summary(const Monad& m) { return display_summary(m.params); }

} // namespace monadforge
