#include "logtan/moebius.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "logtan/error.hpp"

namespace logtan {

IntMatrix2 operator*(const IntMatrix2& lhs, const IntMatrix2& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

MoebiusMap::MoebiusMap(BigInt a, BigInt b, BigInt c, BigInt d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (sgn(m_.det()) == 0)
        throw InputError("degenerate Moebius map " + str() + " (determinant 0)");
    BigInt g = gcd(gcd(m_.a, m_.b), gcd(m_.c, m_.d));
    m_.a /= g;
    m_.b /= g;
    m_.c /= g;
    m_.d /= g;
    const BigInt* first = &m_.a;
    for (const BigInt* x : {&m_.a, &m_.b, &m_.c, &m_.d}) {
        if (sgn(*x) != 0) {
            first = x;
            break;
        }
    }
    if (sgn(*first) < 0) {
        m_.a = -m_.a;
        m_.b = -m_.b;
        m_.c = -m_.c;
        m_.d = -m_.d;
    }
}

std::string MoebiusMap::str() const {
    return "[" + to_string(m_.a) + ", " + to_string(m_.b) + ", " + to_string(m_.c) + ", " +
           to_string(m_.d) + "]";
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
    return MoebiusMap(f.matrix() * g.matrix());
}

ProjectivePoint apply(const MoebiusMap& f, const ProjectivePoint& p) {
    return {BigInt(f.a() * p.u() + f.b() * p.v()), BigInt(f.c() * p.u() + f.d() * p.v())};
}

bool is_identity(const MoebiusMap& f) {
    return sgn(f.b()) == 0 && sgn(f.c()) == 0 && f.a() == f.d();
}

FixedPoints fixed_points(const MoebiusMap& f) {
    if (is_identity(f)) return {FixedPoints::Kind::Identity, {}};

    // (u : v) is fixed iff c u^2 + (d - a) u v - b v^2 = 0.
    const BigInt trace_gap = f.d() - f.a();
    std::vector<ProjectivePoint> points;
    if (sgn(f.c()) == 0) {
        points.push_back(ProjectivePoint::infinity());
        if (sgn(trace_gap) != 0) points.emplace_back(f.b(), trace_gap);
    } else {
        const BigInt disc = trace_gap * trace_gap + 4 * f.b() * f.c();
        const auto root = exact_sqrt(disc);
        if (!root) return {FixedPoints::Kind::Irrational, {}};
        const BigInt twice_c = 2 * f.c();
        points.emplace_back(BigInt(-trace_gap + *root), twice_c);
        points.emplace_back(BigInt(-trace_gap - *root), twice_c);
    }
    std::sort(points.begin(), points.end(), [](const auto& p, const auto& q) {
        return p.u() != q.u() ? p.u() < q.u() : p.v() < q.v();
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return {FixedPoints::Kind::Points, std::move(points)};
}

std::ostream& operator<<(std::ostream& os, const MoebiusMap& f) { return os << f.str(); }

}  // namespace logtan
