#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwmax {

enum class Errc {
  invalid_dimension,
  invalid_parameter,
  group_too_large,
  oracle_too_large,
  parse_error,
  not_admissible,
  not_quasihomogeneous,
  weights_not_unique,
  too_many_monomials,
  not_square,
  not_decomposable,
  exponent_too_small,
  rank_deficient,
  timeout,
};

/// Short stable identifier for an error code, e.g. "group-too-large".
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Syntax error in polynomial or matrix text; `position` is a 0-based offset
/// into the source (for matrix files, the 1-based line number).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::parse_error, what + " (at " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gwmax
