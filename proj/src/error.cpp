#include "polyhex/error.hpp"

#include <sstream>

namespace polyhex {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::DuplicateCell: return "duplicate cell";
    case ErrorCode::EmptyInput: return "empty input";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::OverlappingSets: return "overlapping sets";
    case ErrorCode::CellNotInSet: return "cell not in set";
    case ErrorCode::MismatchedDecomposition: return "mismatched decomposition";
    case ErrorCode::SizeOverflow: return "size overflow";
  }
  return "unknown error";
}

namespace {

std::string describe(const std::vector<std::vector<Cell>>& components) {
  std::ostringstream os;
  os << "cells form " << components.size() << " edge-connected components:";
  for (std::size_t i = 0; i < components.size(); ++i) {
    os << " [" << i + 1 << "] {";
    for (std::size_t j = 0; j < components[i].size(); ++j) {
      if (j) os << ';';
      os << components[i][j].x << ' ' << components[i][j].y;
    }
    os << '}';
  }
  return os.str();
}

}  // namespace

DisconnectedError::DisconnectedError(std::vector<std::vector<Cell>> components)
    : Error(ErrorCode::Disconnected, describe(components)),
      components_(std::move(components)) {}

}  // namespace polyhex
