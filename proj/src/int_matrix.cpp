#include "exacthnf/int_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace exacthnf {

thread_local std::uint64_t instrument::limbOpsCounter = 0;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("IntMatrix: dimensions must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    std::size_t j = 0;
    for (long v : r) at(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::isZero() const {
  for (const Int& v : e_)
    if (v != 0) return false;
  return true;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return {e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::parse(std::istream& in) {
  std::string lineText;
  std::size_t lineNo = 0;

  auto nextLine = [&]() -> bool {
    while (std::getline(in, lineText)) {
      ++lineNo;
      std::size_t pos = lineText.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;  // blank
      if (lineText[pos] == '#') continue;      // comment
      return true;
    }
    return false;
  };

  if (!nextLine()) throw ParseError(lineNo + 1, "missing header line");
  std::istringstream head(lineText);
  long rows = 0, cols = 0;
  if (!(head >> rows >> cols) || rows < 1 || cols < 1)
    throw ParseError(lineNo, "header must be 'rows cols' with positive counts");
  std::string trailing;
  if (head >> trailing) throw ParseError(lineNo, "trailing tokens after header");

  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!nextLine())
      throw ParseError(lineNo + 1, "expected row " + std::to_string(i + 1));
    std::istringstream row(lineText);
    std::string tok;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(row >> tok))
        throw ParseError(lineNo, "row " + std::to_string(i + 1) + " has fewer than " +
                                     std::to_string(m.cols()) + " entries");
      try {
        m.at(i, j) = Int(tok);
      } catch (const std::invalid_argument&) {
        throw ParseError(lineNo, "bad integer '" + tok + "'");
      }
    }
    if (row >> tok)
      throw ParseError(lineNo, "row " + std::to_string(i + 1) + " has extra entries");
  }
  return m;
}

void IntMatrix::print(std::ostream& out) const {
  out << rows_ << ' ' << cols_ << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << at(i, j).get_str();
    }
    out << '\n';
  }
}

std::string IntMatrix::toString() const {
  std::ostringstream os;
  print(os);
  return os.str();
}

IntMatrix matMul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matMul: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        instrument::countMul(aik, b.at(k, j));
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

std::vector<Int> matVec(const IntMatrix& a, const std::vector<Int>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matVec: dimension mismatch");
  std::vector<Int> y(a.rows(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      instrument::countMul(a.at(i, j), x[j]);
      y[i] += a.at(i, j) * x[j];
    }
  return y;
}

std::ostream& operator<<(std::ostream& out, const IntMatrix& m) {
  m.print(out);
  return out;
}

}  // namespace exacthnf
