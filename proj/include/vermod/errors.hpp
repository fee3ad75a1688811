#pragma once

#include <stdexcept>
#include <string>

namespace vermod {

// Base for every error the toolkit raises. `name()` is the stable
// machine-readable identifier that crosses the CLI boundary.
class ToolkitError : public std::runtime_error {
public:
    ToolkitError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define VERMOD_DEFINE_ERROR(Class, Name)                        \
    class Class : public ToolkitError {                         \
    public:                                                     \
        explicit Class(const std::string& what)                 \
            : ToolkitError(Name, what) {}                       \
    }

VERMOD_DEFINE_ERROR(ReducibleModulus, "ReducibleModulus");
VERMOD_DEFINE_ERROR(UnsupportedDegree, "UnsupportedDegree");
VERMOD_DEFINE_ERROR(DivisionByZero, "DivisionByZero");
VERMOD_DEFINE_ERROR(FieldMismatch, "FieldMismatch");
VERMOD_DEFINE_ERROR(NoEmbedding, "NoEmbedding");
VERMOD_DEFINE_ERROR(InternalError, "InternalError");
VERMOD_DEFINE_ERROR(ZeroVector, "ZeroVector");
VERMOD_DEFINE_ERROR(TooLarge, "TooLarge");
VERMOD_DEFINE_ERROR(DegenerateSpan, "DegenerateSpan");
VERMOD_DEFINE_ERROR(UnknownVariable, "UnknownVariable");
VERMOD_DEFINE_ERROR(MissingAssignment, "MissingAssignment");
VERMOD_DEFINE_ERROR(ExponentOverflow, "ExponentOverflow");
VERMOD_DEFINE_ERROR(InvalidParams, "InvalidParams");
VERMOD_DEFINE_ERROR(ParseError, "ParseError");

#undef VERMOD_DEFINE_ERROR

} // namespace vermod
