#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "logtan/bigint.hpp"
#include "logtan/projective_point.hpp"

namespace logtan {

/// Raw 2x2 integer matrix [[a, b], [c, d]], no normalization.
struct IntMatrix2 {
    BigInt a{1}, b{0}, c{0}, d{1};

    BigInt det() const { return a * d - b * c; }
    friend IntMatrix2 operator*(const IntMatrix2& lhs, const IntMatrix2& rhs);
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/// The map x -> (a x + b) / (c x + d), held as a nondegenerate integer matrix
/// up to scalar: entries have gcd 1 and the first nonzero of (a, b, c, d) is
/// positive. Two maps are equal iff their canonical entries agree.
class MoebiusMap {
public:
    MoebiusMap() = default;
    /// Throws InputError when a d - b c = 0.
    MoebiusMap(BigInt a, BigInt b, BigInt c, BigInt d);
    explicit MoebiusMap(const IntMatrix2& m) : MoebiusMap(m.a, m.b, m.c, m.d) {}

    static MoebiusMap identity() { return {}; }

    const BigInt& a() const { return m_.a; }
    const BigInt& b() const { return m_.b; }
    const BigInt& c() const { return m_.c; }
    const BigInt& d() const { return m_.d; }
    const IntMatrix2& matrix() const { return m_; }
    BigInt det() const { return m_.det(); }

    friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

    /// "[a, b, c, d]".
    std::string str() const;

private:
    IntMatrix2 m_;
};

/// f o g.
MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);

ProjectivePoint apply(const MoebiusMap& f, const ProjectivePoint& p);

/// b = 0, c = 0 and a = d.
bool is_identity(const MoebiusMap& f);

/// Rational solutions of f(x) = x.
struct FixedPoints {
    enum class Kind { Identity, Irrational, Points };
    Kind kind = Kind::Points;
    /// Sorted by (u, v); empty unless kind == Points.
    std::vector<ProjectivePoint> points;
};

FixedPoints fixed_points(const MoebiusMap& f);

std::ostream& operator<<(std::ostream& os, const MoebiusMap& f);

}  // namespace logtan
