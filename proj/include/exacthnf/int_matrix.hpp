#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "exacthnf/integer.hpp"

namespace exacthnf {

/// Line-tagged error for the matrix text format.
struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix transpose() const;
  bool isZero() const;

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> column(std::size_t j) const;

  /// Text format: "rows cols" line, then one line per row; '#' lines ignored.
  static IntMatrix parse(std::istream& in);
  void print(std::ostream& out) const;
  std::string toString() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

IntMatrix matMul(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> matVec(const IntMatrix& a, const std::vector<Int>& x);

std::ostream& operator<<(std::ostream& out, const IntMatrix& m);

}  // namespace exacthnf
