#pragma once

#include <stdexcept>
#include <string>

namespace umbra
{

// Raised for division by a zero scalar, polynomial or series.
class division_by_zero : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Raised when a computation needs more series coefficients than the
// active truncation order provides. The required order is carried so the
// caller can re-run with a larger one.
class truncation_error : public std::runtime_error
{
public:
    truncation_error(const std::string &what, int required_order)
        : std::runtime_error(what + " (requires truncation order >= " + std::to_string(required_order) + ")"),
          m_required(required_order)
    {
    }

    int required_order() const noexcept
    {
        return m_required;
    }

private:
    int m_required;
};

} // namespace umbra
