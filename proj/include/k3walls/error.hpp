#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3walls {

enum class ErrorKind {
  precondition,
  lattice_mismatch,
  not_primitive,
  degenerate_wall,
  no_endpoints,
  not_semicircular,
  outside_heart,
  charge_vanishes,
  invariant_violation,
  not_cofinite,
  search_horizon,
  not_covered,
  parse,
  config,
  unknown_genus,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure with a 0-based character offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorKind::parse, message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace k3walls
