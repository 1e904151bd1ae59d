#pragma once

#include <stdexcept>
#include <string>

namespace llg {

// Error taxonomy shared by the whole library.  The CLI maps these onto
// distinct process exit codes, so keep the hierarchy flat and stable:
//
//   ContractError   - caller violated a documented precondition
//   CoordinateError - integer coordinates do not name a lattice site/face
//   GeometryError   - a move or direction is not available at a site
//   BudgetError     - an explicit step/resource budget was exhausted
//   InternalError   - "cannot happen" guards; firing one is a library bug

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractError : Error {
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

struct CoordinateError : ContractError {
    explicit CoordinateError(const std::string& msg) : ContractError(msg) {}
};

struct GeometryError : ContractError {
    explicit GeometryError(const std::string& msg) : ContractError(msg) {}
};

struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace llg
