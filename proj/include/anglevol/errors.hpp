#pragma once

#include <stdexcept>
#include <string>

namespace anglevol
{

/** @brief Base class of every error raised by the library.
 *
 * `kind()` returns a stable identifier (e.g. "SyntaxError") that the CLI
 * prints in front of the message.
 */
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_{std::move(kind)}
    {
    }
    [[nodiscard]] const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ANGLEVOL_DEFINE_ERROR(Name)                                          \
    class Name : public Error                                                \
    {                                                                        \
    public:                                                                  \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}         \
    };

// trig_core / moebius_triangle
ANGLEVOL_DEFINE_ERROR(DegenerateAngles)
ANGLEVOL_DEFINE_ERROR(SingularGram)
ANGLEVOL_DEFINE_ERROR(OutOfRange)
ANGLEVOL_DEFINE_ERROR(RecoveryOutOfRange)
ANGLEVOL_DEFINE_ERROR(InternalConsistency)

// tet_angle
ANGLEVOL_DEFINE_ERROR(NonSphericalVertex)
ANGLEVOL_DEFINE_ERROR(CompatibilityViolation)
ANGLEVOL_DEFINE_ERROR(QuadratureFailure)
ANGLEVOL_DEFINE_ERROR(UnclassifiablePattern)

// triangulation
ANGLEVOL_DEFINE_ERROR(GluingInconsistency)
ANGLEVOL_DEFINE_ERROR(UngluedFace)
ANGLEVOL_DEFINE_ERROR(BadLink)

// moduli_space
ANGLEVOL_DEFINE_ERROR(LPNumericalFailure)

// normal_surface
ANGLEVOL_DEFINE_ERROR(PatternViolation)
ANGLEVOL_DEFINE_ERROR(GluingMismatch)
ANGLEVOL_DEFINE_ERROR(AngleConditionViolated)
ANGLEVOL_DEFINE_ERROR(NotOneVertex)

#undef ANGLEVOL_DEFINE_ERROR

/** @brief Malformed triangulation text, with 1-based position. */
class SyntaxError : public Error
{
public:
    SyntaxError(const std::string& msg, int line, int column)
        : Error("SyntaxError", "line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + msg),
          line_{line}, column_{column}
    {
    }
    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace anglevol
