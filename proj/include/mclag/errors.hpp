#pragma once

#include <stdexcept>
#include <string>

namespace mclag {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ComplexNotExact : std::runtime_error {
    explicit ComplexNotExact(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidRepresentation : std::runtime_error {
    explicit InvalidRepresentation(const std::string& what) : std::runtime_error(what) {}
};

struct NotACycle : std::runtime_error {
    explicit NotACycle(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymplectic : std::runtime_error {
    explicit NotSymplectic(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymmetric : std::invalid_argument {
    explicit NotSymmetric(const std::string& what) : std::invalid_argument(what) {}
};

struct NotUnimodular : std::invalid_argument {
    explicit NotUnimodular(const std::string& what) : std::invalid_argument(what) {}
};

struct NotUpperTriangularBlockForm : std::invalid_argument {
    explicit NotUpperTriangularBlockForm(const std::string& what) : std::invalid_argument(what) {}
};

// Fires only on implementation bugs: the fiber-product constraint is an
// invariant of the model, never a data error.
struct CompatibilityViolation : std::logic_error {
    explicit CompatibilityViolation(const std::string& what) : std::logic_error(what) {}
};

struct InvalidAction : std::invalid_argument {
    explicit InvalidAction(const std::string& what) : std::invalid_argument(what) {}
};

struct UnjustifiedSplitting : std::runtime_error {
    explicit UnjustifiedSplitting(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownJob : std::invalid_argument {
    explicit UnknownJob(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedGenus : std::invalid_argument {
    explicit UnsupportedGenus(const std::string& what) : std::invalid_argument(what) {}
};

struct MissingExternalConstant : std::runtime_error {
    explicit MissingExternalConstant(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mclag
