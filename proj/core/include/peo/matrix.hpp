#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace peo {

/// Exact rational entry type. Every three-point condition in this library is a
/// strict or non-strict comparison, so entries are never rounded.
using Value = mpq_class;

/// Zero-based element index. Text I/O is one-based.
using Index = std::size_t;

/// Thrown by the text readers; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Dense symmetric matrix over [n] with one stored value per unordered pair.
/// The diagonal is not stored and cannot be read.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n, const Value& fill = Value{0});

  std::size_t size() const noexcept { return n_; }

  /// Entry A_xy for x != y. Throws std::out_of_range for diagonal or bad indices.
  const Value& operator()(Index x, Index y) const { return entries_[slot(x, y)]; }

  void set(Index x, Index y, Value value);

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t slot(Index x, Index y) const;

  std::size_t n_;
  std::vector<Value> entries_;
};

/// Builds the matrix of a 0/1 pattern given as 0-based unordered pairs with
/// the given value; every other pair gets `fill`.
SymmetricMatrix matrix_from_pairs(std::size_t n,
                                  std::span<const std::pair<Index, Index>> pairs,
                                  const Value& value, const Value& fill = Value{0});

/// Minimum off-diagonal entry. Requires n >= 2.
Value min_offdiag(const SymmetricMatrix& a);

/// Minimum off-diagonal entry of the principal submatrix A[support]; requires
/// |support| >= 2.
Value min_offdiag(const SymmetricMatrix& a, std::span<const Index> support);

/// The matrix with every off-diagonal entry negated.
SymmetricMatrix negated(const SymmetricMatrix& a);

/// Parses an integer, decimal ("-1.25") or fraction ("7/3") exactly.
Value parse_value(std::string_view token);

/// Canonical text for a value: integers as-is, other rationals as "p/q".
std::string format_value(const Value& v);

/// Reads the matrix text format:
///
///   n <N>
///   default <value>     (optional; required if some pair is not listed)
///   <i> <j> <value>     (1-based, i != j)
///
/// '#' starts a comment. A pair may be repeated only with the same value.
SymmetricMatrix parse_matrix(std::istream& in);
SymmetricMatrix parse_matrix_string(std::string_view text);
SymmetricMatrix read_matrix_file(const std::string& path);

/// Dense serialization in the same format (every pair listed once).
std::string serialize_matrix(const SymmetricMatrix& a);

}  // namespace peo
