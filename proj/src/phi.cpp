#include "logtan/phi.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <utility>

#include "logtan/error.hpp"

namespace logtan {

StepSequence::StepSequence(std::vector<BigInt> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw InputError("step sequence must contain at least one step");
}

StepSequence StepSequence::from_ints(const std::vector<long>& steps) {
    std::vector<BigInt> out(steps.begin(), steps.end());
    return StepSequence(std::move(out));
}

bool StepSequence::is_constant() const {
    return std::all_of(steps_.begin(), steps_.end(),
                       [&](const BigInt& s) { return s == steps_.front(); });
}

IntMatrix2 step_matrix(const BigInt& e) { return {BigInt(0), BigInt(1), BigInt(-1), e}; }

IntMatrix2 phi_matrix(const StepSequence& e) {
    IntMatrix2 m;
    for (const BigInt& step : e.steps()) m = step_matrix(step) * m;
    return m;
}

MoebiusMap phi_map(const StepSequence& e) { return MoebiusMap(phi_matrix(e)); }

ProjectivePoint phi_eval_nested(const StepSequence& e, const ProjectivePoint& x) {
    ProjectivePoint p = x;
    for (const BigInt& step : e.steps()) p = ProjectivePoint(p.v(), BigInt(step * p.v() - p.u()));
    return p;
}

PhiCoefficients phi_coefficients(std::size_t r) {
    if (r == 0) throw InputError("phi_coefficients requires r >= 1");
    PhiCoefficients k{IntPolynomial(0L), IntPolynomial(1L), IntPolynomial(-1L),
                      IntPolynomial::variable(1)};
    for (std::size_t i = 2; i <= r; ++i) {
        PhiCoefficients next{k.c, k.d, k.c.times_variable(i) - k.a, k.d.times_variable(i) - k.b};
        k = std::move(next);
    }
    return k;
}

std::vector<IntPolynomial> b_sequence(std::size_t r) {
    std::vector<IntPolynomial> b;
    if (r >= 1) b.emplace_back(1L);
    if (r >= 2) b.push_back(IntPolynomial::variable(1));
    for (std::size_t k = 3; k <= r; ++k) b.push_back(b[k - 2].times_variable(k - 1) - b[k - 3]);
    return b;
}

bool is_identity_phi(const StepSequence& e) {
    // Phi has determinant 1, so the projective identity is +-I.
    const IntMatrix2 m = phi_matrix(e);
    return sgn(m.b) == 0 && sgn(m.c) == 0 && m.a == m.d;
}

bool all_permutations_identity(const StepSequence& e) {
    std::vector<BigInt> perm = e.steps();
    std::sort(perm.begin(), perm.end());
    do {
        if (!is_identity_phi(StepSequence(perm))) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

namespace {

// Nondecreasing tuples of length r over [-bound, bound].
std::vector<std::vector<long>> multisets(std::size_t r, long bound) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(r, -bound);
    while (true) {
        out.push_back(cur);
        std::size_t i = r;
        while (i > 0 && cur[i - 1] == bound) --i;
        if (i == 0) break;
        const long v = cur[i - 1] + 1;
        for (std::size_t j = i - 1; j < r; ++j) cur[j] = v;
    }
    return out;
}

unsigned worker_count(unsigned jobs) {
    if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
    return jobs;
}

}  // namespace

std::vector<StepSequence> lemma_scan(std::size_t r, long bound, const ScanLimits& limits) {
    if (r == 0) throw InputError("lemma_scan requires r >= 1");
    if (bound < 1) throw InputError("lemma_scan requires bound >= 1");
    if (r > limits.max_length) {
        throw InputError("lemma_scan r = " + std::to_string(r) + " exceeds the permutation guard " +
                         std::to_string(limits.max_length));
    }

    // The verdict depends only on the multiset, so each multiset is decided
    // once and, if it survives, expanded into all of its orderings.
    const auto candidates = multisets(r, bound);
    std::vector<StepSequence> survivors;
    std::mutex survivors_mutex;
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        std::vector<StepSequence> local;
        for (std::size_t i = next++; i < candidates.size(); i = next++) {
            StepSequence sorted = StepSequence::from_ints(candidates[i]);
            if (!all_permutations_identity(sorted)) continue;
            std::vector<BigInt> perm = sorted.steps();
            do {
                local.emplace_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        std::lock_guard lock(survivors_mutex);
        for (auto& s : local) survivors.push_back(std::move(s));
    };

    const unsigned workers = worker_count(limits.jobs);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    std::sort(survivors.begin(), survivors.end());
    return survivors;
}

std::vector<StepSequence> expected_lemma_survivors(std::size_t r, long bound) {
    std::vector<StepSequence> out;
    if (r == 0) return out;
    for (long v : {-1L, 0L, 1L}) {
        if (std::labs(v) > bound) continue;
        const bool fits = (v == 0) ? r % 2 == 0 : r % 3 == 0;
        if (fits) out.push_back(StepSequence::from_ints(std::vector<long>(r, v)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool survivors_conform(const std::vector<StepSequence>& survivors) {
    return std::all_of(survivors.begin(), survivors.end(), [](const StepSequence& s) {
        if (!s.is_constant()) return false;
        const BigInt& v = s[0];
        if (v == 0) return s.size() % 2 == 0;
        if (v == 1 || v == -1) return s.size() % 3 == 0;
        return false;
    });
}

std::vector<RemarkRow> remark_table(std::size_t r_max) {
    if (r_max == 0) throw InputError("remark_table requires r_max >= 1");
    std::vector<RemarkRow> rows;
    for (std::size_t r = 1; r <= r_max; ++r) {
        auto constant = [r](long v) { return StepSequence::from_ints(std::vector<long>(r, v)); };
        rows.push_back({r, is_identity_phi(constant(0)), is_identity_phi(constant(1)),
                        is_identity_phi(constant(-1))});
    }
    return rows;
}

bool remark_table_conforms(const std::vector<RemarkRow>& table) {
    return std::all_of(table.begin(), table.end(), [](const RemarkRow& row) {
        const bool even = row.r % 2 == 0;
        const bool triple = row.r % 3 == 0;
        return row.zeros == even && row.ones == triple && row.minus_ones == triple;
    });
}

}  // namespace logtan
