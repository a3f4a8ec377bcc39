#pragma once

#include <stdexcept>
#include <string>

namespace logtan {

/// Malformed input or a violated operation guard. The CLI maps this to a
/// nonzero exit status; mathematical verdicts never raise it.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace logtan
