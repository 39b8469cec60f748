#pragma once

#include <stdexcept>
#include <string>

namespace charlab {

enum class Errc {
    not_prime,
    too_large,
    zero_argument,
    index_out_of_range,
    context_mismatch,
    zero_dilation,
    size_too_large,
    k_too_large,
    zero_in_multiplicative_set,
    precondition_failed,
    convolution_overflow,
    value_overflow,
    bad_input,
};

const char* errc_name(Errc code);

// Single exception type carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

} // namespace charlab
