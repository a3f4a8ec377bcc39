#pragma once

#include <cstddef>
#include <vector>

#include "logtan/bigint.hpp"
#include "logtan/int_polynomial.hpp"
#include "logtan/moebius.hpp"
#include "logtan/projective_point.hpp"

namespace logtan {

/// Integer steps (e1, ..., er) of the continued fraction
///   Phi(x) = 1 / (er - 1 / (e(r-1) - ... - 1 / (e1 - x))).
class StepSequence {
public:
    /// Throws InputError when `steps` is empty.
    explicit StepSequence(std::vector<BigInt> steps);
    static StepSequence from_ints(const std::vector<long>& steps);

    std::size_t size() const { return steps_.size(); }
    const BigInt& operator[](std::size_t i) const { return steps_[i]; }
    const std::vector<BigInt>& steps() const { return steps_; }

    /// All steps equal.
    bool is_constant() const;

    friend bool operator==(const StepSequence&, const StepSequence&) = default;
    friend bool operator<(const StepSequence& x, const StepSequence& y) { return x.steps_ < y.steps_; }

private:
    std::vector<BigInt> steps_;
};

/// x -> 1 / (e - x).
IntMatrix2 step_matrix(const BigInt& e);

/// S(er) * ... * S(e1) without normalization; determinant 1.
IntMatrix2 phi_matrix(const StepSequence& e);

MoebiusMap phi_map(const StepSequence& e);

/// Evaluates the nested fraction one step at a time: (u : v) -> (v : e v - u).
ProjectivePoint phi_eval_nested(const StepSequence& e, const ProjectivePoint& x);

/// Symbolic coefficients of Phi in Z[z1..zr].
struct PhiCoefficients {
    IntPolynomial a, b, c, d;
};

/// Rank-r coefficients by the rank recurrence a_r = c_{r-1}, b_r = d_{r-1},
/// c_r = z_r c_{r-1} - a_{r-1}, d_r = z_r d_{r-1} - b_{r-1}. Requires r >= 1.
PhiCoefficients phi_coefficients(std::size_t r);

/// b-polynomials b_1..b_r from the standalone recurrence
/// b_r = z_{r-1} b_{r-1} - b_{r-2}, b_1 = 1, b_2 = z1. Element i is b_{i+1}.
std::vector<IntPolynomial> b_sequence(std::size_t r);

bool is_identity_phi(const StepSequence& e);

/// Every distinct rearrangement of the multiset of steps gives the identity.
bool all_permutations_identity(const StepSequence& e);

struct ScanLimits {
    /// Longest step sequence accepted by permutation-exhaustive operations.
    std::size_t max_length = 8;
    /// Worker threads; 0 means hardware concurrency.
    unsigned jobs = 1;
};

/// All tuples with |e_i| <= bound whose every permutation yields the identity,
/// sorted lexicographically. Throws InputError for r = 0, bound < 1, or
/// r > limits.max_length.
std::vector<StepSequence> lemma_scan(std::size_t r, long bound, const ScanLimits& limits = {});

/// The expected survivor set: constant tuples of value v in {-1, 0, 1} with
/// |v| <= bound, where v = 0 needs r even and v = +-1 needs 3 | r.
std::vector<StepSequence> expected_lemma_survivors(std::size_t r, long bound);

/// True iff `survivors` are all constant tuples in {-1, 0, 1} whose length
/// satisfies the parity (value 0) or mod-3 (values +-1) congruence.
bool survivors_conform(const std::vector<StepSequence>& survivors);

struct RemarkRow {
    std::size_t r = 0;
    bool zeros = false;
    bool ones = false;
    bool minus_ones = false;

    friend bool operator==(const RemarkRow&, const RemarkRow&) = default;
};

/// Identity status of the all-0, all-1 and all-(-1) sequences for r = 1..r_max.
std::vector<RemarkRow> remark_table(std::size_t r_max);

/// Rows agree with: zeros iff r even, ones and minus_ones iff 3 | r.
bool remark_table_conforms(const std::vector<RemarkRow>& table);

}  // namespace logtan
