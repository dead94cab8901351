#pragma once

#include <stdexcept>
#include <string>

namespace effap {

// A certified comparison could not be decided below the precision cap.
// Maps to CLI exit code 2.
struct UndecidableAtPrecision : std::runtime_error {
    explicit UndecidableAtPrecision(const std::string& what)
        : std::runtime_error("undecidable at precision cap: " + what) {}
};

// A stated hypothesis of a theorem/lemma failed a certified check.
// Maps to CLI exit code 1. `name` is the first failed inequality.
struct HypothesisViolation : std::runtime_error {
    std::string name;
    explicit HypothesisViolation(const std::string& ineq, const std::string& detail = "")
        : std::runtime_error("hypothesis violation: " + ineq + (detail.empty() ? "" : " (" + detail + ")")),
          name(ineq) {}
};

struct ParameterViolation : std::invalid_argument {
    explicit ParameterViolation(const std::string& what)
        : std::invalid_argument("parameter violation: " + what) {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error("division by zero: " + what) {}
};

struct NotNonReal : std::invalid_argument {
    NotNonReal() : std::invalid_argument("target is real; imaginary-part bound undefined") {}
};

struct PreconditionXiConjugate : std::invalid_argument {
    PreconditionXiConjugate() : std::invalid_argument("xi is a root of the target minimal polynomial") {}
};

struct PreconditionGap : std::invalid_argument {
    explicit PreconditionGap(const std::string& what)
        : std::invalid_argument("approximation gap precondition failed: " + what) {}
};

struct PreconditionXiTooSmall : std::invalid_argument {
    PreconditionXiTooSmall() : std::invalid_argument("|xi| below the standing assumption max(1, 2R, 2L(P))") {}
};

// An inequality the theorems guarantee failed on a valid input: signals an
// implementation bug upstream, never a math failure.
struct TheoremViolation : std::logic_error {
    explicit TheoremViolation(const std::string& what) : std::logic_error("theorem violation (bug): " + what) {}
};

// Complete enumeration of the kernel lattice proved no nonzero vector exists
// within the certified bound. Mathematically excluded; signals a bug upstream.
struct CertifiedBoundMiss : std::logic_error {
    explicit CertifiedBoundMiss(const std::string& what) : std::logic_error("certified bound miss: " + what) {}
};

// Certified box counts disagree with the expected (d-1, 1) split.
struct RoucheMismatch : std::logic_error {
    explicit RoucheMismatch(const std::string& what) : std::logic_error("root count mismatch: " + what) {}
};

struct ResourceExhausted : std::runtime_error {
    explicit ResourceExhausted(const std::string& what) : std::runtime_error("resource budget exceeded: " + what) {}
};

}  // namespace effap
