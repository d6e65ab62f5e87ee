#include "hopftrace/linear_map.hpp"

#include <sstream>

namespace hopftrace {

LinearMap::LinearMap(int rows, int cols, Field f) : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) throw DimensionError("negative dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(f));
}

LinearMap LinearMap::identity(int n, Field f) {
  LinearMap m(n, n, f);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

LinearMap LinearMap::flip(int m, int n, Field f) {
  LinearMap t(m * n, m * n, f);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      t.set(j * m + i, i * n + j, Scalar::one(f));
  return t;
}

void LinearMap::set(int r, int c, Scalar v) {
  a_[static_cast<std::size_t>(r) * cols_ + c] = std::move(v);
}

void LinearMap::add_to(int r, int c, const Scalar& v) {
  a_[static_cast<std::size_t>(r) * cols_ + c] += v;
}

std::string LinearMap::shape_str() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

LinearMap LinearMap::compose(const LinearMap& g) const {
  if (cols_ != g.rows_)
    throw DimensionError("compose: inner dimensions differ, left is " + shape_str() +
                         ", right is " + g.shape_str());
  if (!(field_ == g.field_)) throw FieldError("compose: mixed fields");
  LinearMap out(rows_, g.cols_, field_);
  // Skip zero entries of the right factor; structure matrices are sparse.
  for (int k = 0; k < g.rows_; ++k) {
    for (int j = 0; j < g.cols_; ++j) {
      const Scalar& gkj = g.at(k, j);
      if (gkj.is_zero()) continue;
      for (int i = 0; i < rows_; ++i) {
        const Scalar& aik = at(i, k);
        if (aik.is_zero()) continue;
        out.add_to(i, j, aik * gkj);
      }
    }
  }
  return out;
}

LinearMap LinearMap::kron(const LinearMap& g) const {
  if (!(field_ == g.field_)) throw FieldError("kron: mixed fields");
  LinearMap out(rows_ * g.rows_, cols_ * g.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& fij = at(i, j);
      if (fij.is_zero()) continue;
      for (int r = 0; r < g.rows_; ++r)
        for (int c = 0; c < g.cols_; ++c) {
          const Scalar& grc = g.at(r, c);
          if (grc.is_zero()) continue;
          out.set(i * g.rows_ + r, j * g.cols_ + c, fij * grc);
        }
    }
  return out;
}

LinearMap LinearMap::transpose() const {
  LinearMap out(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out.set(j, i, at(i, j));
  return out;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("add: shapes differ, " + shape_str() + " vs " + o.shape_str());
  LinearMap out(rows_, cols_, field_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("sub: shapes differ, " + shape_str() + " vs " + o.shape_str());
  LinearMap out(rows_, cols_, field_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

LinearMap LinearMap::scaled(const Scalar& c) const {
  LinearMap out(rows_, cols_, field_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
  return out;
}

bool LinearMap::operator==(const LinearMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool LinearMap::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Scalar> LinearMap::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionError("apply: vector length " + std::to_string(v.size()) + " vs " + shape_str());
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& aij = at(i, j);
      if (!aij.is_zero()) out[i] += aij * v[j];
    }
  }
  return out;
}

int LinearMap::rank() const {
  // Plain elimination with the fixed first-nonzero pivot rule.
  std::vector<std::vector<Scalar>> m;
  m.reserve(rows_);
  for (int i = 0; i < rows_; ++i) {
    std::vector<Scalar> row;
    row.reserve(cols_);
    for (int j = 0; j < cols_; ++j) row.push_back(at(i, j));
    m.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    Scalar inv = m[rank][col].inverse();
    for (int j = col; j < cols_; ++j) m[rank][j] *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int j = col; j < cols_; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<LinearMap> LinearMap::inverse() const {
  if (rows_ != cols_) throw DimensionError("inverse: not square, " + shape_str());
  int n = rows_;
  std::vector<std::vector<Scalar>> m;
  m.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> row;
    row.reserve(2 * n);
    for (int j = 0; j < n; ++j) row.push_back(at(i, j));
    for (int j = 0; j < n; ++j)
      row.push_back(i == j ? Scalar::one(field_) : Scalar::zero(field_));
    m.push_back(std::move(row));
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[col], m[piv]);
    Scalar inv = m[col][col].inverse();
    for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  LinearMap out(n, n, field_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, m[i][n + j]);
  return out;
}

std::optional<std::pair<int, int>> LinearMap::first_difference(const LinearMap& a,
                                                               const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::make_pair(-1, -1);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

std::string LinearMap::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

void LinearMap::for_each_nonzero(const std::function<void(int, int, const Scalar&)>& fn) const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) fn(i, j, at(i, j));
}

LinearMap pairing_ev(int n, Field f) {
  LinearMap ev(1, n * n, f);
  for (int i = 0; i < n; ++i) ev.set(0, i * n + i, Scalar::one(f));
  return ev;
}

LinearMap pairing_coev(int n, Field f) {
  LinearMap coev(n * n, 1, f);
  for (int i = 0; i < n; ++i) coev.set(i * n + i, 0, Scalar::one(f));
  return coev;
}

LinearMap compose_idkron(int k, const LinearMap& f, const LinearMap& g) {
  if (g.rows() != k * f.cols()) throw DimensionError("compose_idkron: inner dims differ");
  LinearMap out(k * f.rows(), g.cols(), g.field());
  g.for_each_nonzero([&](int gr, int gc, const Scalar& v) {
    int a = gr / f.cols(), r = gr % f.cols();
    for (int i = 0; i < f.rows(); ++i) {
      const Scalar& fv = f.at(i, r);
      if (!fv.is_zero()) out.add_to(a * f.rows() + i, gc, fv * v);
    }
  });
  return out;
}

LinearMap compose_kronid(const LinearMap& f, int k, const LinearMap& g) {
  if (g.rows() != f.cols() * k) throw DimensionError("compose_kronid: inner dims differ");
  LinearMap out(f.rows() * k, g.cols(), g.field());
  g.for_each_nonzero([&](int gr, int gc, const Scalar& v) {
    int r = gr / k, b = gr % k;
    for (int i = 0; i < f.rows(); ++i) {
      const Scalar& fv = f.at(i, r);
      if (!fv.is_zero()) out.add_to(i * k + b, gc, fv * v);
    }
  });
  return out;
}

LinearMap apply_to_idkron(const LinearMap& g, int k, const LinearMap& f) {
  if (g.cols() != k * f.rows()) throw DimensionError("apply_to_idkron: inner dims differ");
  LinearMap out(g.rows(), k * f.cols(), g.field());
  g.for_each_nonzero([&](int gr, int gc, const Scalar& v) {
    int a = gc / f.rows(), r = gc % f.rows();
    for (int c = 0; c < f.cols(); ++c) {
      const Scalar& fv = f.at(r, c);
      if (!fv.is_zero()) out.add_to(gr, a * f.cols() + c, v * fv);
    }
  });
  return out;
}

LinearMap apply_to_kronid(const LinearMap& g, const LinearMap& f, int k) {
  if (g.cols() != f.rows() * k) throw DimensionError("apply_to_kronid: inner dims differ");
  LinearMap out(g.rows(), f.cols() * k, g.field());
  g.for_each_nonzero([&](int gr, int gc, const Scalar& v) {
    int r = gc / k, b = gc % k;
    for (int c = 0; c < f.cols(); ++c) {
      const Scalar& fv = f.at(r, c);
      if (!fv.is_zero()) out.add_to(gr, c * k + b, v * fv);
    }
  });
  return out;
}

namespace {

std::vector<long> permutation_table(const std::vector<int>& dims, const std::vector<int>& perm) {
  int k = static_cast<int>(dims.size());
  long total = 1;
  for (int d : dims) total *= d;
  std::vector<long> table(total);
  std::vector<int> idx(k, 0);
  for (long src = 0; src < total; ++src) {
    long dst = 0;
    for (int t = 0; t < k; ++t) dst = dst * dims[perm[t]] + idx[perm[t]];
    table[src] = dst;
    for (int t = k - 1; t >= 0; --t) {
      if (++idx[t] < dims[t]) break;
      idx[t] = 0;
    }
  }
  return table;
}

}  // namespace

LinearMap permute_rows(const LinearMap& g, const std::vector<int>& dims,
                       const std::vector<int>& perm) {
  auto table = permutation_table(dims, perm);
  if (static_cast<long>(table.size()) != g.rows()) throw DimensionError("permute_rows: dims mismatch");
  LinearMap out(g.rows(), g.cols(), g.field());
  g.for_each_nonzero([&](int r, int c, const Scalar& v) { out.set(static_cast<int>(table[r]), c, v); });
  return out;
}

LinearMap permute_cols(const LinearMap& g, const std::vector<int>& dims,
                       const std::vector<int>& perm) {
  auto table = permutation_table(dims, perm);
  if (static_cast<long>(table.size()) != g.cols()) throw DimensionError("permute_cols: dims mismatch");
  // result[:, J] = g[:, table[J]]
  LinearMap res(g.rows(), g.cols(), g.field());
  for (long j = 0; j < g.cols(); ++j) {
    long src = table[j];
    for (int i = 0; i < g.rows(); ++i) {
      const Scalar& v = g.at(i, static_cast<int>(src));
      if (!v.is_zero()) res.set(i, static_cast<int>(j), v);
    }
  }
  return res;
}

LinearMap leg_permutation(const std::vector<int>& dims, const std::vector<int>& perm, Field f) {
  int k = static_cast<int>(dims.size());
  long total = 1;
  for (int d : dims) total *= d;
  LinearMap out(static_cast<int>(total), static_cast<int>(total), f);
  std::vector<int> idx(k, 0);
  for (long col = 0; col < total; ++col) {
    long row = 0;
    for (int t = 0; t < k; ++t) row = row * dims[perm[t]] + idx[perm[t]];
    out.set(static_cast<int>(row), static_cast<int>(col), Scalar::one(f));
    for (int t = k - 1; t >= 0; --t) {
      if (++idx[t] < dims[t]) break;
      idx[t] = 0;
    }
  }
  return out;
}

}  // namespace hopftrace
