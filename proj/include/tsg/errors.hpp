// Error types shared across the library. ParseError carries the byte offset
// of the offending character; the others separate bad user input
// (DomainError), broken caller contracts (ContractError), and catalog misses
// (NotFoundError) so the CLI can map each to the right exit code.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsg {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tsg
