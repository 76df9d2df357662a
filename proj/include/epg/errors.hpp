#pragma once

#include <stdexcept>
#include <string>

namespace epg {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is structurally invalid (bad label, bad partition, wrong pattern shape, ...).
struct InvalidInput : Error {
    using Error::Error;
};

// A configured cap or budget was exceeded; the computation was aborted, not answered.
struct BudgetError : Error {
    using Error::Error;
};

struct AllZerosLabel : InvalidInput {
    AllZerosLabel() : InvalidInput("label contains no 1; every edge must exist in at least one time step") {}
    explicit AllZerosLabel(const std::string& what) : InvalidInput(what) {}
};

struct AllOnesLabel : InvalidInput {
    AllOnesLabel() : InvalidInput("cannot complement an all-ones label") {}
};

struct AllZerosProduct : InvalidInput {
    AllZerosProduct() : InvalidInput("labels share no common 1 within their joint period") {}
};

struct InvalidPartition : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NoCycleInPattern : InvalidInput {
    NoCycleInPattern() : InvalidInput("pattern graph contains no cycle") {}
};

struct PatternShapeMismatch : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A reduction produced an all-zero label, which certifies the source as a no-instance.
struct UnsatisfiableByConstruction : InvalidInput {
    UnsatisfiableByConstruction() : InvalidInput("construction yields an all-zero label; source is a no-instance") {}
};

struct PeriodOverflow : BudgetError {
    PeriodOverflow() : BudgetError("least common multiple of periods exceeds the integer cap") {}
};

struct CapExceeded : BudgetError {
    using BudgetError::BudgetError;
};

struct ClassBudgetExceeded : BudgetError {
    using BudgetError::BudgetError;
};

struct MemoryBudgetExceeded : BudgetError {
    using BudgetError::BudgetError;
};

struct PathBudgetExceeded : BudgetError {
    using BudgetError::BudgetError;
};

struct SizeBudgetExceeded : BudgetError {
    using BudgetError::BudgetError;
};

struct SubsetBudgetExceeded : BudgetError {
    using BudgetError::BudgetError;
};

struct ParseError : InvalidInput {
    ParseError(std::size_t line, const std::string& what)
        : InvalidInput("line " + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

} // namespace epg
