#include "monadforge/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

namespace monadforge {

std::optional<CompositionWitness> composition_witness(const LinearMatrix& b, const LinearMatrix& a) {
    const PolyMatrix product = mat_mul(b, a);
    for (std::size_t i = 0; i < product.rows(); ++i) {
        for (std::size_t j = 0; j < product.cols(); ++j) {
            if (!product.at(i, j).is_zero()) return CompositionWitness{i, j, to_string(product.at(i, j))};
        }
    }
    return std::nullopt;
}

bool check_composition_zero(const Monad& monad) { return !composition_witness(monad.map_b, monad.map_a); }

bool check_composition_zero(const BandedPair& pair) { return !composition_witness(pair.b, pair.a); }

namespace {

std::vector<std::vector<std::uint64_t>> canonical_tuples(int a, std::uint64_t q) {
    std::vector<std::vector<std::uint64_t>> out;
    const auto len = static_cast<std::size_t>(a) + 1;
    for (std::size_t lead = 0; lead < len; ++lead) {
        std::vector<std::uint64_t> t(len, 0);
        t[lead] = 1;
        bool carry = false;
        while (!carry) {
            out.push_back(t);
            // odometer over positions lead+1..len-1, last position fastest
            carry = true;
            for (std::size_t pos = len; carry && pos > lead + 1;) {
                --pos;
                if (++t[pos] < q) carry = false;
                else t[pos] = 0;
            }
        }
    }
    return out;
}

std::optional<std::uint64_t> projective_count(int a, std::uint64_t q) {
    // (q^{a+1} - 1)/(q - 1) = 1 + q + ... + q^a
    std::uint64_t sum = 0;
    std::uint64_t term = 1;
    for (int i = 0; i <= a; ++i) {
        if (__builtin_add_overflow(sum, term, &sum)) return std::nullopt;
        if (i < a && __builtin_mul_overflow(term, q, &term)) return std::nullopt;
    }
    return sum;
}

} // namespace

std::optional<std::uint64_t> point_count(const SpaceSpec& space, std::uint64_t q) {
    std::uint64_t total = 1;
    for (int a : space.dims()) {
        const auto c = projective_count(a, q);
        if (!c || __builtin_mul_overflow(total, *c, &total)) return std::nullopt;
    }
    return total;
}

PointEnumerator::PointEnumerator(SpaceSpec space, std::uint64_t q) : space_(std::move(space)), field_(q) {
    const auto total = point_count(space_, q);
    if (!total) throw DomainError("point count of " + space_.to_string() + " over F_" + std::to_string(q) +
                                  " overflows 64 bits");
    count_ = *total;
    for (int a : space_.dims()) factor_points_.push_back(canonical_tuples(a, q));
}

void PointEnumerator::flat_at(std::uint64_t index, std::vector<std::uint64_t>& out) const {
    if (index >= count_) throw StructuralError("point index out of range");
    out.resize(space_.variable_count());
    for (std::size_t f = factor_points_.size(); f-- > 0;) {
        const auto& pts = factor_points_[f];
        const auto& t = pts[index % pts.size()];
        index /= pts.size();
        std::copy(t.begin(), t.end(), out.begin() + static_cast<std::ptrdiff_t>(space_.variable_offset(f)));
    }
}

ProjectivePoint<PrimeField> PointEnumerator::at(std::uint64_t index) const {
    std::vector<std::uint64_t> flat;
    flat_at(index, flat);
    std::vector<std::vector<std::uint64_t>> coords;
    for (std::size_t f = 0; f < space_.factor_count(); ++f) {
        const auto off = static_cast<std::ptrdiff_t>(space_.variable_offset(f));
        coords.emplace_back(flat.begin() + off, flat.begin() + off + space_.dim(f) + 1);
    }
    return ProjectivePoint<PrimeField>::make(field_, space_, std::move(coords));
}

std::vector<ProjectivePoint<PrimeField>> enumerate_points(const SpaceSpec& space, std::uint64_t q) {
    PointEnumerator e(space, q);
    std::vector<ProjectivePoint<PrimeField>> out;
    out.reserve(e.count());
    for (std::uint64_t i = 0; i < e.count(); ++i) out.push_back(e.at(i));
    return out;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("MONADFORGE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(std::min<long>(v, 1024));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

struct Partial {
    std::uint64_t points = 0;
    std::uint64_t failure_count = 0;
    std::vector<FiberFailure> failures;
    std::size_t max_rank_a = 0;
    std::size_t max_rank_b = 0;
};

// Runs body(index, partial) over [0, count) split into contiguous chunks, then
// merges the partials in chunk order.
template <class Body>
Partial sweep(std::uint64_t count, const VerifierOptions& options, Body body) {
    unsigned threads = options.threads ? options.threads : default_thread_count();
    if (count < 64) threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));
    std::vector<Partial> parts(threads);
    const auto chunk = (count + threads - 1) / threads;
    auto work = [&](unsigned w) {
        const auto lo = std::min<std::uint64_t>(count, chunk * w);
        const auto hi = std::min<std::uint64_t>(count, lo + chunk);
        for (auto i = lo; i < hi; ++i) body(i, parts[w]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    Partial out;
    for (auto& p : parts) {
        out.points += p.points;
        out.failure_count += p.failure_count;
        out.max_rank_a = std::max(out.max_rank_a, p.max_rank_a);
        out.max_rank_b = std::max(out.max_rank_b, p.max_rank_b);
        out.failures.insert(out.failures.end(), p.failures.begin(), p.failures.end());
    }
    std::sort(out.failures.begin(), out.failures.end());
    if (out.failures.size() > options.max_witnesses) out.failures.resize(options.max_witnesses);
    return out;
}

template <class Field>
void record(Partial& part, std::uint64_t index, const ScalarMatrix<Field>& a, const ScalarMatrix<Field>& b,
            std::size_t rank_a, std::size_t rank_b, std::int64_t alpha, std::int64_t gamma,
            const VerifierOptions& options, const std::function<std::string()>& describe) {
    ++part.points;
    part.max_rank_a = std::max(part.max_rank_a, rank_a);
    part.max_rank_b = std::max(part.max_rank_b, rank_b);
    const bool composition_nonzero = !multiply(b, a).is_zero();
    if (static_cast<std::int64_t>(rank_a) != alpha || static_cast<std::int64_t>(rank_b) != gamma ||
        composition_nonzero) {
        ++part.failure_count;
        if (part.failures.size() < options.max_witnesses) {
            part.failures.push_back(FiberFailure{index, describe(), rank_a, rank_b, composition_nonzero});
        }
    }
}

} // namespace

VerificationReport exhaustive_fiber_check(const Monad& monad, std::uint64_t q, const VerifierOptions& options) {
    const PrimeField field(q);
    const auto& space = monad.params.space;
    const auto total = point_count(space, q);
    if (!total || *total > options.point_budget) {
        throw BudgetExceeded("exhaustive sweep of " + space.to_string() + " over F_" + std::to_string(q) + " needs " +
                             (total ? std::to_string(*total) : std::string("> 2^64")) + " points, budget is " +
                             std::to_string(options.point_budget) + "; use randomized mode (--samples)");
    }
    const PointEnumerator points(space, q);
    const CompiledMatrix<PrimeField> a(field, monad.map_a.entries());
    const CompiledMatrix<PrimeField> b(field, monad.map_b.entries());
    const auto alpha = monad.params.alpha;
    const auto gamma = monad.params.gamma;

    const Partial part = sweep(points.count(), options, [&](std::uint64_t i, Partial& p) {
        std::vector<std::uint64_t> flat;
        points.flat_at(i, flat);
        const auto av = a.evaluate_flat(flat);
        const auto bv = b.evaluate_flat(flat);
        record(p, i, av, bv, rank_exact(av), rank_exact(bv), alpha, gamma, options,
               [&] { return points.at(i).to_string(); });
    });

    VerificationReport r;
    r.field = field.name();
    r.exhaustive = true;
    r.points_checked = part.points;
    r.failure_count = part.failure_count;
    r.failures = part.failures;
    r.generic_rank_a = part.max_rank_a;
    r.generic_rank_b = part.max_rank_b;
    r.expected_rank_a = alpha;
    r.expected_rank_b = gamma;
    r.composition_zero = check_composition_zero(monad);
    return r;
}

VerificationReport random_fiber_check(const Monad& monad, std::size_t samples, std::uint64_t seed,
                                      const VerifierOptions& options) {
    if (samples < 1) throw DomainError("random_fiber_check needs at least one sample");
    const auto& space = monad.params.space;
    const RationalField field;
    const auto alpha = monad.params.alpha;
    const auto gamma = monad.params.gamma;
    const std::int64_t bound = std::max<std::int64_t>(1, options.sample_bound);

    const Partial part = sweep(samples, options, [&](std::uint64_t i, Partial& p) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        std::mt19937_64 rng(seq);
        const auto span = static_cast<std::uint64_t>(2 * bound + 1);
        std::vector<Integer> flat(space.variable_count());
        for (std::size_t f = 0; f < space.factor_count(); ++f) {
            const auto off = space.variable_offset(f);
            bool nonzero = false;
            for (int c = 0; c <= space.dim(f); ++c) {
                const auto v = static_cast<std::int64_t>(rng() % span) - bound;
                flat[off + static_cast<std::size_t>(c)] = v;
                nonzero = nonzero || v != 0;
            }
            if (!nonzero) flat[off] = 1;
        }
        auto eval = [&](const LinearMatrix& m) {
            ScalarMatrix<RationalField> out(field, m.rows(), m.cols());
            for (std::size_t r = 0; r < m.rows(); ++r) {
                for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = Rational(m.at(r, c).evaluate(flat));
            }
            return out;
        };
        const auto av = eval(monad.map_a);
        const auto bv = eval(monad.map_b);
        record(p, i, av, bv, rank_exact(av), rank_exact(bv), alpha, gamma, options, [&] {
            std::vector<std::vector<Rational>> coords;
            for (std::size_t f = 0; f < space.factor_count(); ++f) {
                const auto off = space.variable_offset(f);
                coords.emplace_back();
                for (int c = 0; c <= space.dim(f); ++c) coords.back().emplace_back(flat[off + static_cast<std::size_t>(c)]);
            }
            return ProjectivePoint<RationalField>::make(field, space, std::move(coords)).to_string();
        });
    });

    VerificationReport r;
    r.field = field.name();
    r.exhaustive = false;
    r.points_checked = part.points;
    r.failure_count = part.failure_count;
    r.failures = part.failures;
    r.generic_rank_a = part.max_rank_a;
    r.generic_rank_b = part.max_rank_b;
    r.expected_rank_a = alpha;
    r.expected_rank_b = gamma;
    r.composition_zero = check_composition_zero(monad);
    r.seed = seed;
    return r;
}

std::string evidence_label(const std::vector<VerificationReport>& reports) {
    if (reports.empty()) return "no evidence";
    for (const auto& r : reports) {
        if (!r.composition_zero) return "counterexample: B*A is not zero";
    }
    for (const auto& r : reports) {
        if (r.failure_count > 0 || !r.valid()) return "counterexample: rank drops over " + r.field;
    }
    std::set<std::string> exhaustive;
    bool sampled = false;
    for (const auto& r : reports) {
        if (r.exhaustive) exhaustive.insert(r.field);
        else sampled = true;
    }
    if (exhaustive.count("F_2") && exhaustive.count("F_3")) return "verified at desk scale";
    if (!exhaustive.empty()) {
        std::string s = "verified over";
        for (const auto& f : exhaustive) s += " " + f;
        return s + " for all points";
    }
    return sampled ? "no counterexample found over QQ" : "no evidence";
}

} // namespace monadforge
