#include "logtan/camacho_sad.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <utility>

#include "logtan/curve_graph.hpp"
#include "logtan/error.hpp"

namespace logtan {

LinearSingularity::LinearSingularity(Rational lambda, Rational mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    if (mu_.is_zero()) throw InputError("linear singularity requires mu != 0");
}

Rational cs_index_linear(const LinearSingularity& s) { return s.lambda() / s.mu(); }

bool cs_sum_check(const CurveIndexRecord& rec) {
    Rational sum;
    for (const auto& index : rec.indices) sum += index;
    return sum == Rational(rec.self_intersection);
}

bool reciprocal_pair_check(const ProjectivePoint& x, const ProjectivePoint& y) {
    return x.reciprocal() == y;
}

CyclePropagation propagate_cycle(const StepSequence& e, const ProjectivePoint& x0) {
    CyclePropagation out{e, {x0}};
    out.trace.reserve(e.size() + 1);
    for (const BigInt& step : e.steps())
        out.trace.push_back(out.trace.back().subtracted_from(step).reciprocal());
    return out;
}

bool cycle_closure_holds(const StepSequence& e, const ProjectivePoint& x0) {
    return propagate_cycle(e, x0).final_point() == x0;
}

ObstructionVerdict trivial_log_tangent_obstruction(const StepSequence& e,
                                                   bool double_edge_for_two_cycle) {
    if (e.size() < 2) throw InputError("a cycle of curves needs at least two components");
    ObstructionVerdict v;
    v.permutation_identity = all_permutations_identity(e);
    const auto config = CurveConfiguration::cycle(e.steps(), double_edge_for_two_cycle);
    v.negative_definite_cycle =
        definiteness(intersection_matrix(config)) == DefinitenessVerdict::NegativeDefinite;
    v.obstructed = v.permutation_identity && v.negative_definite_cycle;
    return v;
}

ObstructionScanResult obstruction_scan(const ObstructionScanBounds& bounds,
                                       const ScanLimits& limits) {
    if (bounds.r_min < 2) throw InputError("obstruction scan requires r_min >= 2");
    if (bounds.r_min > bounds.r_max) throw InputError("obstruction scan requires r_min <= r_max");
    if (bounds.e_min > bounds.e_max) throw InputError("obstruction scan requires e_min <= e_max");
    if (bounds.r_max > limits.max_length) {
        throw InputError("obstruction scan r_max = " + std::to_string(bounds.r_max) +
                         " exceeds the permutation guard " + std::to_string(limits.max_length));
    }

    const auto base = static_cast<std::size_t>(bounds.e_max - bounds.e_min + 1);
    ObstructionScanResult total;
    std::mutex total_mutex;

    for (std::size_t r = bounds.r_min; r <= bounds.r_max; ++r) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < r; ++i) count *= base;

        std::atomic<std::size_t> next{0};
        auto work = [&] {
            ObstructionScanResult local;
            std::vector<BigInt> steps(r);
            for (std::size_t idx = next++; idx < count; idx = next++) {
                std::size_t rest = idx;
                for (std::size_t i = r; i-- > 0;) {
                    steps[i] = bounds.e_min + static_cast<long>(rest % base);
                    rest /= base;
                }
                const StepSequence e(steps);
                const auto verdict = trivial_log_tangent_obstruction(e);
                ++local.tuples_checked;
                if (verdict.permutation_identity) ++local.permutation_identity_count;
                if (verdict.negative_definite_cycle) ++local.negative_definite_count;
                if (verdict.obstructed) local.counterexamples.push_back(e);
            }
            std::lock_guard lock(total_mutex);
            total.tuples_checked += local.tuples_checked;
            total.permutation_identity_count += local.permutation_identity_count;
            total.negative_definite_count += local.negative_definite_count;
            for (auto& c : local.counterexamples) total.counterexamples.push_back(std::move(c));
        };

        const unsigned workers =
            limits.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : limits.jobs;
        if (workers == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        }
    }
    std::sort(total.counterexamples.begin(), total.counterexamples.end());
    return total;
}

}  // namespace logtan
