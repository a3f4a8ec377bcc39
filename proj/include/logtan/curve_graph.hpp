#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "logtan/bigint.hpp"

namespace logtan {

struct CurveVertex {
    std::string id;
    std::int64_t genus = 0;
    BigInt self_intersection;

    friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

struct CurveEdge {
    std::string a;
    std::string b;
    std::int64_t multiplicity = 1;

    friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

/// Weighted dual graph of a curve with simple normal crossings. An edge of
/// multiplicity m records m transversal intersection points.
class CurveConfiguration {
public:
    CurveConfiguration() = default;
    /// Throws InputError naming the offending field: duplicate or empty ids,
    /// negative genus, unknown or equal edge endpoints, multiplicity < 1,
    /// repeated unordered pairs.
    CurveConfiguration(std::vector<CurveVertex> vertices, std::vector<CurveEdge> edges);

    /// Cycle of rational curves with the given self-intersections. Adjacent
    /// curves meet once; for two curves the pair meets twice when
    /// `double_edge_for_two_cycle`, otherwise once.
    static CurveConfiguration cycle(const std::vector<BigInt>& self_intersections,
                                    bool double_edge_for_two_cycle = true);
    /// Chain of rational curves, adjacent curves meeting once.
    static CurveConfiguration chain(const std::vector<BigInt>& self_intersections);

    const std::vector<CurveVertex>& vertices() const { return vertices_; }
    const std::vector<CurveEdge>& edges() const { return edges_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }

    /// Position of `id` in vertices(); throws InputError if absent.
    std::size_t index_of(std::string_view id) const;

    friend bool operator==(const CurveConfiguration&, const CurveConfiguration&) = default;

private:
    std::vector<CurveVertex> vertices_;
    std::vector<CurveEdge> edges_;
};

/// Dense square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    /// Throws InputError when the rows are ragged or not square.
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t size() const { return n_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    bool is_symmetric() const;
    std::vector<std::vector<BigInt>> rows() const;
    /// P M P^T for the permutation sending row i to row perm[i].
    IntMatrix permuted(const std::vector<std::size_t>& perm) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> entries_;
};

/// Self-intersections on the diagonal, C_i . C_j off the diagonal.
using IntersectionMatrix = IntMatrix;

IntersectionMatrix intersection_matrix(const CurveConfiguration& config);

/// Coefficients of det(t I - A), leading coefficient first (size n + 1),
/// computed division-free (Berkowitz).
std::vector<BigInt> characteristic_polynomial(const IntMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

enum class DefinitenessVerdict { NegativeDefinite, NegativeSemidefiniteSingular, Other };

/// Sign pattern of the sums of principal minors of -M. Throws InputError if
/// M is not symmetric. The empty matrix is NegativeDefinite.
DefinitenessVerdict definiteness(const IntMatrix& m);

/// Per vertex: (2 g_i - 2) + sum_{j != i} C_i . C_j. Zero is the adjunction
/// constraint forced by K_S ~ -C.
std::vector<std::int64_t> adjunction_residues(const CurveConfiguration& config);

enum class ConfigClass { EllipticIrreducible, RationalCycle, Other };

/// Throws InputError for an empty or disconnected configuration.
ConfigClass classify(const CurveConfiguration& config);

/// Components ordered by their first vertex; vertex and edge order preserved.
std::vector<CurveConfiguration> connected_components(const CurveConfiguration& config);

std::string_view to_string(DefinitenessVerdict v);
std::string_view to_string(ConfigClass c);

}  // namespace logtan
