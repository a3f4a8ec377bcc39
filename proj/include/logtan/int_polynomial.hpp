#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "logtan/bigint.hpp"
#include "logtan/rational.hpp"

namespace logtan {

/// Exponent vector over z1..zn. Trailing zero exponents are never stored, so
/// a monomial has one representation regardless of the ambient variable count.
using Monomial = std::vector<unsigned>;

/// Sparse polynomial in Z[z1, z2, ...]. No stored coefficient is zero; the zero
/// polynomial has no terms.
class IntPolynomial {
public:
    using Terms = std::map<Monomial, BigInt>;

    IntPolynomial() = default;
    IntPolynomial(long constant) : IntPolynomial(BigInt(constant)) {}  // NOLINT
    IntPolynomial(const BigInt& constant);  // NOLINT(google-explicit-constructor)

    /// The variable z_index, index >= 1.
    static IntPolynomial variable(std::size_t index);
    /// Builds from (monomial, coefficient) pairs, merging duplicates and dropping zeros.
    static IntPolynomial from_terms(const std::vector<std::pair<Monomial, BigInt>>& terms);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Largest variable index that occurs, 0 for constants.
    std::size_t num_variables() const;
    unsigned degree_in(std::size_t index) const;
    unsigned total_degree() const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);

    /// this * z_index, cheaper than a general product.
    IntPolynomial times_variable(std::size_t index) const;

    /// Requires values.size() >= num_variables(); throws InputError otherwise.
    Rational eval(std::span<const Rational> values) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// e.g. "z1*z2^2 - 3*z1 + 1"; "0" for the zero polynomial.
    std::string str() const;

private:
    void add_term(Monomial m, const BigInt& coeff);

    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace logtan
