#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace logtan {

using BigInt = mpz_class;

std::string to_string(const BigInt& n);

/// Parses an optionally signed decimal integer. Throws InputError.
BigInt parse_bigint(std::string_view text);

bool fits_int64(const BigInt& n);
std::int64_t to_int64(const BigInt& n);

/// Exact square root when `n` is a perfect square (n >= 0).
std::optional<BigInt> exact_sqrt(const BigInt& n);

}  // namespace logtan
