#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dqorbit
{

// Base of every error the engine raises.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define DQORBIT_DEFINE_ERROR(Name)                                                                                     \
    class Name : public Error                                                                                          \
    {                                                                                                                  \
    public:                                                                                                            \
        using Error::Error;                                                                                            \
    }

DQORBIT_DEFINE_ERROR(NotDivisible);
DQORBIT_DEFINE_ERROR(DivisionByZero);
DQORBIT_DEFINE_ERROR(NotConstant);
DQORBIT_DEFINE_ERROR(SingularForm);
DQORBIT_DEFINE_ERROR(SingularMatrix);
DQORBIT_DEFINE_ERROR(InvalidAlgebra);
DQORBIT_DEFINE_ERROR(InconsistentRegularity);
DQORBIT_DEFINE_ERROR(NotAutomorphism);
DQORBIT_DEFINE_ERROR(NotInvariant);
DQORBIT_DEFINE_ERROR(NotCentral);
DQORBIT_DEFINE_ERROR(InconsistentConstants);
DQORBIT_DEFINE_ERROR(NonTermination);
DQORBIT_DEFINE_ERROR(NotScalar);
DQORBIT_DEFINE_ERROR(NotInvolution);
DQORBIT_DEFINE_ERROR(CasimirNotFixed);
DQORBIT_DEFINE_ERROR(DegreeCapExceeded);
DQORBIT_DEFINE_ERROR(UnknownIdentifier);
DQORBIT_DEFINE_ERROR(LoadError);
DQORBIT_DEFINE_ERROR(NotRegular);

#undef DQORBIT_DEFINE_ERROR

class SyntaxError : public Error
{
public:
    SyntaxError(const std::string &msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), m_pos(pos)
    {
    }

    std::size_t position() const noexcept
    {
        return m_pos;
    }

private:
    std::size_t m_pos;
};

} // namespace dqorbit
