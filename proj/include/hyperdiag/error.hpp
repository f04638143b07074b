#pragma once

#include <stdexcept>
#include <string>

namespace hyperdiag
{

enum class errc {
    parse_error,
    invalid_bottom_parameter,
    arity_mismatch,
    all_exponents_zero,
    doubled_constraint_violated,
    doubled_unsupported,
    nonzero_constant_term,
    insufficient_bound,
    degenerate_spec,
    no_unit_bottom,
    unknown_scenario,
};

const char *to_string(errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what) : std::runtime_error(what), m_code(code) {}

    errc code() const noexcept
    {
        return m_code;
    }

private:
    errc m_code;
};

} // namespace hyperdiag
