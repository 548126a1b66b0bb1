#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace pcycle {

using VertexId = std::uint32_t;
using Timestamp = std::int64_t;

inline constexpr Timestamp kTsMin = std::numeric_limits<Timestamp>::min();
inline constexpr Timestamp kTsMax = std::numeric_limits<Timestamp>::max();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pcycle
