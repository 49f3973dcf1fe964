#include "exacthnf/compact.hpp"

#include <algorithm>

namespace exacthnf {

SmithForm::SmithForm(std::vector<Int> invariants) : inv_(std::move(invariants)) {
  if (inv_.empty()) throw std::invalid_argument("SmithForm: empty");
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    if (inv_[i] < 1)
      throw std::invalid_argument("SmithForm: invariant factors must be positive");
    if (i + 1 < inv_.size() && inv_[i + 1] % inv_[i] != 0)
      throw std::invalid_argument("SmithForm: divisibility chain violated");
  }
  firstNontrivial_ = 0;
  while (firstNontrivial_ < inv_.size() && inv_[firstNontrivial_] == 1)
    ++firstNontrivial_;
}

Int SmithForm::det() const {
  Int d(1);
  for (std::size_t i = firstNontrivial_; i < inv_.size(); ++i) d *= inv_[i];
  return d;
}

IntMatrix colmod(const IntMatrix& b, const SmithForm& s) {
  if (b.cols() != s.size())
    throw std::invalid_argument("colmod: column count must match Smith form");
  IntMatrix r(b.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < b.rows(); ++i)
      r.at(i, j) = posRem(b.at(i, j), s.s(j));
  return r;
}

IntMatrix rowmod(const IntMatrix& b, const SmithForm& s) {
  if (b.rows() != s.size())
    throw std::invalid_argument("rowmod: row count must match Smith form");
  IntMatrix r(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      r.at(i, j) = posRem(b.at(i, j), s.s(i));
  return r;
}

// --- CompactHermite ---------------------------------------------------------

CompactHermite::CompactHermite(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("CompactHermite: dimension zero");
}

CompactHermite::CompactHermite(std::size_t dim, std::vector<std::size_t> indices,
                               std::vector<std::vector<Int>> columns)
    : dim_(dim), idx_(std::move(indices)), cols_(std::move(columns)) {
  validate();
}

void CompactHermite::validate() const {
  if (dim_ == 0) throw std::invalid_argument("CompactHermite: dimension zero");
  if (idx_.size() != cols_.size())
    throw std::invalid_argument("CompactHermite: index/column count mismatch");
  for (std::size_t t = 0; t < idx_.size(); ++t) {
    if (t > 0 && idx_[t] <= idx_[t - 1])
      throw std::invalid_argument("CompactHermite: indices not increasing");
    const std::size_t j = idx_[t];
    if (j >= dim_) throw std::invalid_argument("CompactHermite: index out of range");
    if (cols_[t].size() != j + 1)
      throw std::invalid_argument("CompactHermite: column length mismatch");
    const Int& dj = cols_[t][j];
    if (dj <= 1)
      throw std::invalid_argument("CompactHermite: stored column must have diagonal > 1");
    for (std::size_t i = 0; i < j; ++i)
      if (cols_[t][i] < 0 || cols_[t][i] >= dj)
        throw std::invalid_argument("CompactHermite: off-diagonal not reduced");
  }
}

CompactHermite CompactHermite::singleColumn(std::size_t dim, std::size_t j,
                                            std::vector<Int> colEntries) {
  if (colEntries.size() != j + 1)
    throw std::invalid_argument("CompactHermite: column length mismatch");
  if (colEntries[j] == 1) {
    for (std::size_t i = 0; i < j; ++i)
      if (colEntries[i] != 0)
        throw std::invalid_argument("CompactHermite: trivial diagonal with nonzero column");
    return CompactHermite(dim);
  }
  return CompactHermite(dim, {j}, {std::move(colEntries)});
}

Int CompactHermite::diag(std::size_t j) const {
  auto it = std::lower_bound(idx_.begin(), idx_.end(), j);
  if (it == idx_.end() || *it != j) return Int(1);
  return cols_[static_cast<std::size_t>(it - idx_.begin())][j];
}

Int CompactHermite::entry(std::size_t i, std::size_t j) const {
  auto it = std::lower_bound(idx_.begin(), idx_.end(), j);
  if (it == idx_.end() || *it != j) return Int(i == j ? 1 : 0);
  const auto& col = cols_[static_cast<std::size_t>(it - idx_.begin())];
  return i <= j ? col[i] : Int(0);
}

Int CompactHermite::det() const {
  Int d(1);
  for (std::size_t t = 0; t < idx_.size(); ++t) d *= cols_[t][idx_[t]];
  return d;
}

IntMatrix CompactHermite::expand() const {
  IntMatrix m = IntMatrix::identity(dim_);
  for (std::size_t t = 0; t < idx_.size(); ++t) {
    const std::size_t j = idx_[t];
    for (std::size_t i = 0; i <= j; ++i) m.at(i, j) = cols_[t][i];
  }
  return m;
}

CompactHermite compress(const IntMatrix& h) {
  if (!h.isSquare()) throw std::invalid_argument("compress: matrix not square");
  const std::size_t n = h.rows();
  for (std::size_t j = 0; j < n; ++j) {
    if (h.at(j, j) <= 0)
      throw std::invalid_argument("compress: diagonal entry not positive in column " +
                                  std::to_string(j + 1));
    for (std::size_t i = j + 1; i < n; ++i)
      if (h.at(i, j) != 0)
        throw std::invalid_argument("compress: matrix not upper triangular at row " +
                                    std::to_string(i + 1) + ", column " +
                                    std::to_string(j + 1));
    for (std::size_t i = 0; i < j; ++i)
      if (h.at(i, j) < 0 || h.at(i, j) >= h.at(j, j))
        throw std::invalid_argument(
            "compress: off-diagonal not reduced below diagonal in column " +
            std::to_string(j + 1));
  }
  std::vector<std::size_t> idx;
  std::vector<std::vector<Int>> cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (h.at(j, j) == 1) continue;
    idx.push_back(j);
    std::vector<Int> col(j + 1);
    for (std::size_t i = 0; i <= j; ++i) col[i] = h.at(i, j);
    cols.push_back(std::move(col));
  }
  return CompactHermite(n, std::move(idx), std::move(cols));
}

// --- ReducedMassager ---------------------------------------------------------

const Int ReducedMassager::kZero(0);
const Int RowReducedMultiplier::kZero(0);

ReducedMassager::ReducedMassager(SmithForm s, std::size_t dim)
    : smith_(std::move(s)), dim_(dim), first_(smith_.firstNontrivial()),
      data_(dim * (smith_.size() - first_), Int(0)) {}

ReducedMassager ReducedMassager::zero(SmithForm s) {
  const std::size_t n = s.size();
  return ReducedMassager(std::move(s), n);
}

ReducedMassager ReducedMassager::fromMatrix(const IntMatrix& m, SmithForm s) {
  if (m.cols() != s.size())
    throw std::invalid_argument("ReducedMassager: column count mismatch");
  ReducedMassager r(std::move(s), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Int& v = m.at(i, j);
      if (v < 0 || v >= r.smith_.s(j))
        throw std::invalid_argument("ReducedMassager: entry out of column range");
      if (j >= r.first_) r.setEntry(i, j, v);
    }
  return r;
}

ReducedMassager ReducedMassager::fromMatrixReduced(const IntMatrix& m, SmithForm s) {
  IntMatrix reduced = colmod(m, s);
  return fromMatrix(reduced, std::move(s));
}

const Int& ReducedMassager::entry(std::size_t i, std::size_t j) const {
  if (j < first_) return kZero;
  return data_[i * (smith_.size() - first_) + (j - first_)];
}

void ReducedMassager::setEntry(std::size_t i, std::size_t j, Int v) {
  if (j < first_) {
    if (v != 0) throw std::invalid_argument("ReducedMassager: trivial column must stay zero");
    return;
  }
  data_[i * (smith_.size() - first_) + (j - first_)] = std::move(v);
}

std::vector<Int> ReducedMassager::column(std::size_t j) const {
  std::vector<Int> c(dim_, Int(0));
  if (j >= first_)
    for (std::size_t i = 0; i < dim_; ++i) c[i] = entry(i, j);
  return c;
}

std::vector<Int> ReducedMassager::row(std::size_t i) const {
  std::vector<Int> r(smith_.size(), Int(0));
  for (std::size_t j = first_; j < smith_.size(); ++j) r[j] = entry(i, j);
  return r;
}

IntMatrix ReducedMassager::toMatrix() const {
  IntMatrix m(dim_, smith_.size());
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = first_; j < smith_.size(); ++j) m.at(i, j) = entry(i, j);
  return m;
}

bool ReducedMassager::isZero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

// --- RowReducedMultiplier ----------------------------------------------------

RowReducedMultiplier::RowReducedMultiplier(SmithForm s, std::size_t cols)
    : smith_(std::move(s)), cols_(cols), first_(smith_.firstNontrivial()),
      data_((smith_.size() - first_) * cols, Int(0)) {}

RowReducedMultiplier RowReducedMultiplier::zero(SmithForm s, std::size_t cols) {
  return RowReducedMultiplier(std::move(s), cols);
}

RowReducedMultiplier RowReducedMultiplier::augmentedIdentity(SmithForm s,
                                                             std::size_t cols) {
  const std::size_t n = s.size();
  if (cols < n) throw std::invalid_argument("augmentedIdentity: too few columns");
  RowReducedMultiplier u(std::move(s), cols);
  for (std::size_t i = u.first_; i < n; ++i)
    u.setEntry(i, cols - n + i, posRem(Int(1), u.smith_.s(i)));
  return u;
}

RowReducedMultiplier RowReducedMultiplier::fromMatrix(const IntMatrix& m, SmithForm s) {
  if (m.rows() != s.size())
    throw std::invalid_argument("RowReducedMultiplier: row count mismatch");
  RowReducedMultiplier u(std::move(s), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& v = m.at(i, j);
      if (v < 0 || v >= u.smith_.s(i))
        throw std::invalid_argument("RowReducedMultiplier: entry out of row range");
      if (i >= u.first_) u.setEntry(i, j, v);
    }
  return u;
}

const Int& RowReducedMultiplier::entry(std::size_t i, std::size_t j) const {
  if (i < first_) return kZero;
  return data_[(i - first_) * cols_ + j];
}

void RowReducedMultiplier::setEntry(std::size_t i, std::size_t j, Int v) {
  if (i < first_) {
    if (v != 0)
      throw std::invalid_argument("RowReducedMultiplier: trivial row must stay zero");
    return;
  }
  data_[(i - first_) * cols_ + j] = std::move(v);
}

std::vector<Int> RowReducedMultiplier::column(std::size_t j) const {
  std::vector<Int> c(smith_.size(), Int(0));
  for (std::size_t i = first_; i < smith_.size(); ++i) c[i] = entry(i, j);
  return c;
}

RowReducedMultiplier RowReducedMultiplier::trailingColumns(std::size_t n) const {
  if (n > cols_) throw std::invalid_argument("trailingColumns: too many");
  RowReducedMultiplier u(smith_, n);
  for (std::size_t i = first_; i < smith_.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) u.setEntry(i, j, entry(i, cols_ - n + j));
  return u;
}

IntMatrix RowReducedMultiplier::toMatrix() const {
  IntMatrix m(smith_.size(), cols_);
  for (std::size_t i = first_; i < smith_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = entry(i, j);
  return m;
}

}  // namespace exacthnf
