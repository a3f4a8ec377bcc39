#include "logtan/bigint.hpp"

#include <limits>

#include "logtan/error.hpp"

namespace logtan {

std::string to_string(const BigInt& n) { return n.get_str(10); }

BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == digits_from)
        throw InputError("expected an integer, got '" + s + "'");
    for (std::size_t i = digits_from; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw InputError("expected an integer, got '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

bool fits_int64(const BigInt& n) {
    static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return n >= lo && n <= hi;
}

std::int64_t to_int64(const BigInt& n) {
    if (!fits_int64(n)) throw InputError("integer out of 64-bit range: " + to_string(n));
    return std::stoll(to_string(n));
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

}  // namespace logtan
