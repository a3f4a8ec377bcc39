#include "logtan/int_polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "logtan/error.hpp"

namespace logtan {

namespace {

void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial multiply(const Monomial& x, const Monomial& y) {
    Monomial out(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
    return out;
}

Rational power(const Rational& base, unsigned exp) {
    Rational result(1L);
    Rational b = base;
    while (exp != 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp != 0) b *= b;
    }
    return result;
}

}  // namespace

IntPolynomial::IntPolynomial(const BigInt& constant) {
    if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

IntPolynomial IntPolynomial::variable(std::size_t index) {
    if (index == 0) throw InputError("polynomial variables are numbered from 1");
    IntPolynomial p;
    Monomial m(index, 0);
    m[index - 1] = 1;
    p.terms_.emplace(std::move(m), BigInt(1));
    return p;
}

IntPolynomial IntPolynomial::from_terms(const std::vector<std::pair<Monomial, BigInt>>& terms) {
    IntPolynomial p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

void IntPolynomial::add_term(Monomial m, const BigInt& coeff) {
    if (sgn(coeff) == 0) return;
    trim(m);
    auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

std::size_t IntPolynomial::num_variables() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return n;
}

unsigned IntPolynomial::degree_in(std::size_t index) const {
    unsigned deg = 0;
    for (const auto& [m, c] : terms_) {
        if (index >= 1 && index <= m.size()) deg = std::max(deg, m[index - 1]);
    }
    return deg;
}

unsigned IntPolynomial::total_degree() const {
    unsigned deg = 0;
    for (const auto& [m, c] : terms_) {
        unsigned d = 0;
        for (unsigned e : m) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, BigInt(-c));
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    IntPolynomial out;
    for (const auto& [mx, cx] : lhs.terms_) {
        for (const auto& [my, cy] : rhs.terms_) out.add_term(multiply(mx, my), BigInt(cx * cy));
    }
    return out;
}

IntPolynomial IntPolynomial::times_variable(std::size_t index) const {
    if (index == 0) throw InputError("polynomial variables are numbered from 1");
    IntPolynomial out;
    for (const auto& [m, c] : terms_) {
        Monomial shifted = m;
        if (shifted.size() < index) shifted.resize(index, 0);
        ++shifted[index - 1];
        out.terms_.emplace(std::move(shifted), c);
    }
    return out;
}

Rational IntPolynomial::eval(std::span<const Rational> values) const {
    if (values.size() < num_variables()) {
        throw InputError("polynomial in " + std::to_string(num_variables()) +
                         " variables evaluated at " + std::to_string(values.size()) + " values");
    }
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational term(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0) term *= power(values[i], m[i]);
        }
        sum += term;
    }
    return sum;
}

std::string IntPolynomial::str() const {
    if (terms_.empty()) return "0";
    // Highest total degree first, then reverse lexicographic on exponents.
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto degree = [](const Monomial& m) {
        unsigned d = 0;
        for (unsigned e : m) d += e;
        return d;
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto* x, const auto* y) {
        const unsigned dx = degree(x->first), dy = degree(y->first);
        if (dx != dy) return dx > dy;
        return x->first > y->first;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto* term : order) {
        const auto& [m, c] = *term;
        BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || m.empty()) {
            os << to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) os << "*";
            os << "z" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

}  // namespace logtan
