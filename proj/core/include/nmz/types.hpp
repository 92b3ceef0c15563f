#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nmz {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

/// Exponent vector alpha in N^n. Entries are small; arithmetic that can
/// grow (inner products with weight vectors, normals) is done in Int.
using Exponent = std::vector<std::int64_t>;

/// Sorted set of coordinate indices (0-based).
using IndexSet = std::vector<std::size_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed problem-file or cone-spec input. Carries 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Precondition violated by the caller (bad face, negative weight, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An explicit enumeration or decomposition budget was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always a bug or a broken hypothesis.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

std::string to_string(const IndexSet& s);
std::string to_string(const Exponent& e);
std::string to_string(const IntVec& v);

}  // namespace nmz
