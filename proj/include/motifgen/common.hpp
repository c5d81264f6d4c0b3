#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace motifgen {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using Count = std::uint64_t;

/// Bad user-supplied input (files, flags, configs). The CLI maps it to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace motifgen
