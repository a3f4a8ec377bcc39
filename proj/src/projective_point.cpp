#include "logtan/projective_point.hpp"

#include <ostream>
#include <utility>

#include "logtan/error.hpp"

namespace logtan {

ProjectivePoint::ProjectivePoint(BigInt u, BigInt v) : u_(std::move(u)), v_(std::move(v)) {
    if (sgn(u_) == 0 && sgn(v_) == 0) throw InputError("projective point (0:0) is undefined");
    BigInt g = gcd(u_, v_);
    u_ /= g;
    v_ /= g;
    if (sgn(u_) < 0 || (sgn(u_) == 0 && sgn(v_) < 0)) {
        u_ = -u_;
        v_ = -v_;
    }
}

ProjectivePoint::ProjectivePoint(const Rational& x)
    : ProjectivePoint(x.numerator(), x.denominator()) {}

std::optional<Rational> ProjectivePoint::affine() const {
    if (is_infinity()) return std::nullopt;
    return Rational(u_, v_);
}

ProjectivePoint ProjectivePoint::reciprocal() const { return {v_, u_}; }

ProjectivePoint ProjectivePoint::subtracted_from(const BigInt& e) const {
    return {BigInt(e * v_ - u_), v_};
}

std::string ProjectivePoint::str() const { return to_string(u_) + ":" + to_string(v_); }

std::string ProjectivePoint::value_str() const {
    if (is_infinity()) return "inf";
    return affine()->str();
}

ProjectivePoint parse_projective_point(std::string_view text) {
    if (text == "inf" || text == "infinity") return ProjectivePoint::infinity();
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) return ProjectivePoint(parse_rational(text));
    return {parse_bigint(text.substr(0, colon)), parse_bigint(text.substr(colon + 1))};
}

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) { return os << p.str(); }

}  // namespace logtan
