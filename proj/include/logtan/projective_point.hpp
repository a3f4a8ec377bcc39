#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "logtan/bigint.hpp"
#include "logtan/rational.hpp"

namespace logtan {

/// Point (u : v) of the projective line over the rationals, stored with
/// coprime integer coordinates and the first nonzero coordinate positive.
/// v = 0 is the point at infinity.
class ProjectivePoint {
public:
    /// Throws InputError for (0, 0).
    ProjectivePoint(BigInt u, BigInt v);
    ProjectivePoint(const Rational& x);  // NOLINT(google-explicit-constructor)

    static ProjectivePoint infinity() { return {BigInt(1), BigInt(0)}; }

    const BigInt& u() const { return u_; }
    const BigInt& v() const { return v_; }

    bool is_infinity() const { return sgn(v_) == 0; }
    /// u / v, or nullopt at infinity.
    std::optional<Rational> affine() const;

    /// (v : u), the projective reciprocal; 0 and infinity swap.
    ProjectivePoint reciprocal() const;
    /// e - x; fixes infinity.
    ProjectivePoint subtracted_from(const BigInt& e) const;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

    /// "u:v".
    std::string str() const;
    /// "p/q" for affine points, "inf" at infinity.
    std::string value_str() const;

private:
    BigInt u_;
    BigInt v_;
};

/// Accepts "u:v", "p/q", "p", or "inf".
ProjectivePoint parse_projective_point(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p);

}  // namespace logtan
