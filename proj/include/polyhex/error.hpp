#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polyhex/cell.hpp"

namespace polyhex {

enum class ErrorCode {
  ParseError,
  DuplicateCell,
  EmptyInput,
  Disconnected,
  OverlappingSets,
  CellNotInSet,
  MismatchedDecomposition,
  SizeOverflow,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by make_polyomino; carries every edge-connected component found.
class DisconnectedError : public Error {
 public:
  explicit DisconnectedError(std::vector<std::vector<Cell>> components);

  const std::vector<std::vector<Cell>>& components() const noexcept {
    return components_;
  }

 private:
  std::vector<std::vector<Cell>> components_;
};

}  // namespace polyhex
