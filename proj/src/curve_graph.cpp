#include "logtan/curve_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "logtan/error.hpp"

namespace logtan {

CurveConfiguration::CurveConfiguration(std::vector<CurveVertex> vertices,
                                       std::vector<CurveEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::set<std::string_view> ids;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (v.id.empty()) throw InputError(where + ".id: must be a nonempty string");
        if (!ids.insert(v.id).second) throw InputError(where + ".id: duplicate id '" + v.id + "'");
        if (v.genus < 0) throw InputError(where + ".genus: must be nonnegative");
    }
    std::set<std::pair<std::string_view, std::string_view>> pairs;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!ids.contains(e.a)) throw InputError(where + ".a: unknown vertex id '" + e.a + "'");
        if (!ids.contains(e.b)) throw InputError(where + ".b: unknown vertex id '" + e.b + "'");
        if (e.a == e.b) throw InputError(where + ": endpoints must differ ('" + e.a + "')");
        if (e.multiplicity < 1) throw InputError(where + ".mult: must be a positive integer");
        std::string_view lo = e.a, hi = e.b;
        if (hi < lo) std::swap(lo, hi);
        if (!pairs.insert({lo, hi}).second) {
            throw InputError(where + ": second record for pair ('" + e.a + "', '" + e.b +
                             "'); aggregate intersections into mult");
        }
    }
}

CurveConfiguration CurveConfiguration::cycle(const std::vector<BigInt>& self_intersections,
                                             bool double_edge_for_two_cycle) {
    const std::size_t r = self_intersections.size();
    std::vector<CurveVertex> vertices;
    for (std::size_t i = 0; i < r; ++i)
        vertices.push_back({"C" + std::to_string(i + 1), 0, self_intersections[i]});
    std::vector<CurveEdge> edges;
    if (r == 2) {
        edges.push_back({"C1", "C2", double_edge_for_two_cycle ? 2 : 1});
    } else if (r >= 3) {
        for (std::size_t i = 0; i < r; ++i)
            edges.push_back({vertices[i].id, vertices[(i + 1) % r].id, 1});
    }
    return {std::move(vertices), std::move(edges)};
}

CurveConfiguration CurveConfiguration::chain(const std::vector<BigInt>& self_intersections) {
    std::vector<CurveVertex> vertices;
    for (std::size_t i = 0; i < self_intersections.size(); ++i)
        vertices.push_back({"C" + std::to_string(i + 1), 0, self_intersections[i]});
    std::vector<CurveEdge> edges;
    for (std::size_t i = 1; i < vertices.size(); ++i)
        edges.push_back({vertices[i - 1].id, vertices[i].id, 1});
    return {std::move(vertices), std::move(edges)};
}

std::size_t CurveConfiguration::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].id == id) return i;
    }
    throw InputError("unknown vertex id '" + std::string(id) + "'");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw InputError("matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<BigInt>> big;
    for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
    return from_rows(big);
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

std::vector<std::vector<BigInt>> IntMatrix::rows() const {
    std::vector<std::vector<BigInt>> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                      entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    return out;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) out(perm[i], perm[j]) = (*this)(i, j);
    }
    return out;
}

IntersectionMatrix intersection_matrix(const CurveConfiguration& config) {
    IntMatrix m(config.size());
    for (std::size_t i = 0; i < config.size(); ++i)
        m(i, i) = config.vertices()[i].self_intersection;
    for (const auto& e : config.edges()) {
        const std::size_t i = config.index_of(e.a);
        const std::size_t j = config.index_of(e.b);
        m(i, j) = e.multiplicity;
        m(j, i) = e.multiplicity;
    }
    return m;
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return {BigInt(1)};
    std::vector<BigInt> poly{BigInt(1), BigInt(-m(0, 0))};
    for (std::size_t k = 1; k < n; ++k) {
        // Bordering step: the leading k x k block A, column C = m(0..k-1, k),
        // row R = m(k, 0..k-1). The Toeplitz column is
        // [1, -m(k,k), -R C, -R A C, ..., -R A^(k-1) C].
        std::vector<BigInt> toeplitz(k + 2);
        toeplitz[0] = 1;
        toeplitz[1] = -m(k, k);
        std::vector<BigInt> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
        for (std::size_t p = 2; p < k + 2; ++p) {
            BigInt rv;
            for (std::size_t i = 0; i < k; ++i) rv += m(k, i) * v[i];
            toeplitz[p] = -rv;
            if (p + 1 < k + 2) {
                std::vector<BigInt> next(k);
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) next[i] += m(i, j) * v[j];
                }
                v = std::move(next);
            }
        }
        std::vector<BigInt> next_poly(k + 2);
        for (std::size_t i = 0; i < k + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, k); ++j) next_poly[i] += toeplitz[i - j] * poly[j];
        }
        poly = std::move(next_poly);
    }
    return poly;
}

BigInt determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
            if (swap_with == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_with, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev_pivot;
            }
        }
        prev_pivot = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

DefinitenessVerdict definiteness(const IntMatrix& m) {
    if (!m.is_symmetric()) throw InputError("definiteness requires a symmetric matrix");
    IntMatrix neg = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) neg(i, j) = -m(i, j);
    }
    // det(tI - A) = sum_k (-1)^k E_k t^(n-k), E_k the sum of k x k principal
    // minors of A. A symmetric A is positive definite iff every E_k > 0 and
    // positive semidefinite iff every E_k >= 0.
    const auto poly = characteristic_polynomial(neg);
    bool positive = true;
    bool nonnegative = true;
    for (std::size_t k = 1; k < poly.size(); ++k) {
        const int s = (k % 2 == 0) ? sgn(poly[k]) : -sgn(poly[k]);
        if (s <= 0) positive = false;
        if (s < 0) nonnegative = false;
    }
    if (positive) return DefinitenessVerdict::NegativeDefinite;
    if (nonnegative) return DefinitenessVerdict::NegativeSemidefiniteSingular;
    return DefinitenessVerdict::Other;
}

std::vector<std::int64_t> adjunction_residues(const CurveConfiguration& config) {
    std::vector<std::int64_t> defect(config.size());
    for (std::size_t i = 0; i < config.size(); ++i) defect[i] = 2 * config.vertices()[i].genus - 2;
    for (const auto& e : config.edges()) {
        defect[config.index_of(e.a)] += e.multiplicity;
        defect[config.index_of(e.b)] += e.multiplicity;
    }
    return defect;
}

ConfigClass classify(const CurveConfiguration& config) {
    if (config.empty()) throw InputError("classify requires a nonempty configuration");
    if (connected_components(config).size() != 1) {
        throw InputError(
            "classify requires a connected configuration; split it with connected_components "
            "and classify each component");
    }
    const auto defects = adjunction_residues(config);
    if (std::any_of(defects.begin(), defects.end(), [](std::int64_t d) { return d != 0; }))
        return ConfigClass::Other;

    const auto& vs = config.vertices();
    if (vs.size() == 1 && vs[0].genus == 1) return ConfigClass::EllipticIrreducible;

    // With genus 0 everywhere, zero defect means every vertex carries exactly
    // two intersection points; a connected graph of that shape with at least
    // two vertices is a single cycle.
    const bool rational = std::all_of(vs.begin(), vs.end(), [](const auto& v) { return v.genus == 0; });
    if (rational && vs.size() >= 2) return ConfigClass::RationalCycle;
    return ConfigClass::Other;
}

std::vector<CurveConfiguration> connected_components(const CurveConfiguration& config) {
    const std::size_t n = config.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : config.edges()) {
        const std::size_t x = find(config.index_of(e.a));
        const std::size_t y = find(config.index_of(e.b));
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }

    std::vector<std::size_t> component_of(n);
    std::unordered_map<std::size_t, std::size_t> slot;
    std::vector<std::vector<CurveVertex>> vertices;
    std::vector<std::vector<CurveEdge>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = slot.try_emplace(find(i), vertices.size());
        if (inserted) {
            vertices.emplace_back();
            edges.emplace_back();
        }
        component_of[i] = it->second;
        vertices[it->second].push_back(config.vertices()[i]);
    }
    for (const auto& e : config.edges()) edges[component_of[config.index_of(e.a)]].push_back(e);

    std::vector<CurveConfiguration> out;
    for (std::size_t c = 0; c < vertices.size(); ++c)
        out.emplace_back(std::move(vertices[c]), std::move(edges[c]));
    return out;
}

std::string_view to_string(DefinitenessVerdict v) {
    switch (v) {
        case DefinitenessVerdict::NegativeDefinite: return "NegativeDefinite";
        case DefinitenessVerdict::NegativeSemidefiniteSingular: return "NegativeSemidefiniteSingular";
        case DefinitenessVerdict::Other: return "Other";
    }
    return "Other";
}

std::string_view to_string(ConfigClass c) {
    switch (c) {
        case ConfigClass::EllipticIrreducible: return "EllipticIrreducible";
        case ConfigClass::RationalCycle: return "RationalCycle";
        case ConfigClass::Other: return "Other";
    }
    return "Other";
}

}  // namespace logtan
