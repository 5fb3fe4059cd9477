#ifndef ISOZERO_ERRORS_HPP
#define ISOZERO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isozero {

enum class errc {
    zero_polynomial,
    root_index_out_of_range,
    division_by_zero,
    field_mismatch,
    zero_argument,
    unsupported_degree,
    unsupported_place,
    zero_vector,
    rank_deficient,
    dimension_mismatch,
    not_a_subspace,
    not_regular,
    anisotropic,
    budget_exhausted,
    shape_mismatch,
    no_zero_off_set,
    dimension_too_small,
    unsolvable,
    unknown_profile,
    invalid_params,
    zero_divisor,
    indeterminate_vanishing,
    schema_error,
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc c, const std::string& msg) { throw error(c, msg); }

// Exit-code classes for the CLI: schema errors are caller mistakes, domain
// errors are legitimate "no can do" outcomes of a valid instance.
inline bool is_schema_error(errc c) { return c == errc::schema_error; }

} // namespace isozero

#endif
