#pragma once

#include <cstddef>
#include <vector>

#include "logtan/bigint.hpp"
#include "logtan/phi.hpp"
#include "logtan/projective_point.hpp"
#include "logtan/rational.hpp"

namespace logtan {

/// Leading part of the local 1-form lambda x dy - mu y dx at a singular point,
/// with the invariant curve {x = 0}.
class LinearSingularity {
public:
    /// Throws InputError when mu = 0.
    LinearSingularity(Rational lambda, Rational mu);

    const Rational& lambda() const { return lambda_; }
    const Rational& mu() const { return mu_; }

private:
    Rational lambda_;
    Rational mu_;
};

/// Camacho-Sad index of the linear model along {x = 0}: lambda / mu.
Rational cs_index_linear(const LinearSingularity& s);

/// A compact invariant curve together with the indices of the foliation's
/// singular points on it.
struct CurveIndexRecord {
    BigInt self_intersection;
    std::vector<Rational> indices;
};

/// The indices sum exactly to the self-intersection.
bool cs_sum_check(const CurveIndexRecord& rec);

/// x y = 1 on the projective line: (u : v) against (v : u).
bool reciprocal_pair_check(const ProjectivePoint& x, const ProjectivePoint& y);

struct CyclePropagation {
    StepSequence steps;
    /// x_1, ..., x_{r+1}; x_{i+1} = 1 / (e_i - x_i).
    std::vector<ProjectivePoint> trace;

    const ProjectivePoint& final_point() const { return trace.back(); }
};

/// Index propagation around the cycle. Poles pass through infinity.
CyclePropagation propagate_cycle(const StepSequence& e, const ProjectivePoint& x0);

bool cycle_closure_holds(const StepSequence& e, const ProjectivePoint& x0);

struct ObstructionVerdict {
    bool permutation_identity = false;
    bool negative_definite_cycle = false;
    bool obstructed = false;

    friend bool operator==(const ObstructionVerdict&, const ObstructionVerdict&) = default;
};

/// A cycle of rational curves with self-intersections e carrying a trivial
/// log tangent sheaf would need every reordering of e to close up
/// (permutation_identity) while its intersection matrix is negative definite.
/// `obstructed` is both at once, which never happens. Requires r >= 2;
/// throws InputError otherwise. For r = 2 the curves meet twice unless
/// `double_edge_for_two_cycle` is false.
ObstructionVerdict trivial_log_tangent_obstruction(const StepSequence& e,
                                                   bool double_edge_for_two_cycle = true);

struct ObstructionScanBounds {
    std::size_t r_min = 2;
    std::size_t r_max = 6;
    long e_min = -5;
    long e_max = -1;
};

struct ObstructionScanResult {
    std::size_t tuples_checked = 0;
    std::size_t permutation_identity_count = 0;
    std::size_t negative_definite_count = 0;
    /// Tuples with obstructed = true, sorted. Expected empty.
    std::vector<StepSequence> counterexamples;
};

/// Every ordered tuple with r_min <= r <= r_max and e_min <= e_i <= e_max.
/// Throws InputError for r_min < 2, r_min > r_max, e_min > e_max, or
/// r_max above limits.max_length. Deterministic in limits.jobs.
ObstructionScanResult obstruction_scan(const ObstructionScanBounds& bounds,
                                       const ScanLimits& limits = {});

}  // namespace logtan
