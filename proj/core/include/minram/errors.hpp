#pragma once

#include <stdexcept>
#include <string>

namespace minram {

/// Precondition violations on mathematical inputs (zero polynomial, reducible
/// modulus, wrong degree, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input lies outside the families this library knows how to handle.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A brute-force size limit would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Search ran out of budget without an accepted candidate.
class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& what, unsigned long long examined)
      : std::runtime_error(what), examined_(examined) {}
  unsigned long long examined() const { return examined_; }

 private:
  unsigned long long examined_;
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text or JSON input that does not match the expected grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace minram
