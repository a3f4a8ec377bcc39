#include "logtan/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "logtan/error.hpp"

namespace logtan {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw InputError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return to_string(numerator());
    return to_string(numerator()) + "/" + to_string(denominator());
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (sgn(den) < 0 || text.substr(slash + 1).starts_with('+'))
        throw InputError("rational denominator must be written without a sign: '" +
                         std::string(text) + "'");
    return Rational(parse_bigint(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace logtan
