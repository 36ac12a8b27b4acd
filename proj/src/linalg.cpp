#include "irrbase/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace irrbase {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!same_field(a.field, b.field)) throw std::invalid_argument("matrices over different fields");
}

bool is_power_of_two(std::uint32_t q) { return (q & (q - 1)) == 0; }

unsigned log2_exact(std::uint32_t q) {
  unsigned s = 0;
  while ((1u << s) < q) ++s;
  return s;
}

}  // namespace

std::optional<std::uint64_t> checked_power(std::uint64_t q, unsigned d) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (r > (std::uint64_t{1} << 62) / q) return std::nullopt;
    r *= q;
  }
  return r;
}

PointCode pack(std::span<const Elem> coords, std::uint32_t q) {
  PointCode code = 0;
  if (is_power_of_two(q)) {
    const unsigned s = log2_exact(q);
    for (Elem c : coords) code = (code << s) | c;
    return code;
  }
  for (Elem c : coords) code = code * q + c;
  return code;
}

std::vector<Elem> unpack(PointCode code, std::uint32_t q, unsigned d) {
  std::vector<Elem> out(d);
  if (is_power_of_two(q)) {
    const unsigned s = log2_exact(q);
    const PointCode mask = q - 1;
    for (unsigned i = d; i-- > 0;) {
      out[i] = static_cast<Elem>(code & mask);
      code >>= s;
    }
    return out;
  }
  for (unsigned i = d; i-- > 0;) {
    out[i] = static_cast<Elem>(code % q);
    code /= q;
  }
  return out;
}

PackedVector PackedVector::from_coords(FieldPtr field, std::span<const Elem> coords) {
  PackedVector v;
  v.dim = static_cast<unsigned>(coords.size());
  v.code = pack(coords, field->order());
  v.field = std::move(field);
  return v;
}

std::string PackedVector::to_string() const {
  std::string s = "(";
  const auto c = coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += field->to_string(c[i]);
  }
  return s + ")";
}

Matrix Matrix::identity(FieldPtr f, unsigned n) {
  Matrix m(std::move(f), n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(FieldPtr f, std::span<const Elem> diag) {
  Matrix m(std::move(f), static_cast<unsigned>(diag.size()), static_cast<unsigned>(diag.size()));
  for (unsigned i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

Matrix Matrix::permutation(FieldPtr f, std::span<const unsigned> perm) {
  const auto n = static_cast<unsigned>(perm.size());
  Matrix m(std::move(f), n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, perm[i]) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows) {
  const auto r = static_cast<unsigned>(rows.size());
  const unsigned c = r ? static_cast<unsigned>(rows[0].size()) : 0;
  Matrix m(f, r, c);
  for (unsigned i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (unsigned j = 0; j < c; ++j) {
      if (rows[i][j] >= f->order()) throw std::invalid_argument("matrix entry is not a field element");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

bool Matrix::is_identity() const {
  if (rows != cols) return false;
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < rows; ++i) {
    if (i) os << ",";
    os << "[";
    for (unsigned j = 0; j < cols; ++j) {
      if (j) os << ",";
      os << field->to_string(at(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
  const Field& f = *a.field;
  Matrix c(a.field, a.rows, b.cols);
  for (unsigned i = 0; i < a.rows; ++i) {
    for (unsigned k = 0; k < a.cols; ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (unsigned j = 0; j < b.cols; ++j) {
        const Elem y = b.at(k, j);
        if (y) c.at(i, j) = f.add(c.at(i, j), f.mul(x, y));
      }
    }
  }
  return c;
}

Matrix scale(const Matrix& a, Elem s) {
  Matrix c = a;
  for (auto& e : c.entries) e = a.field->mul(e, s);
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] = a.field->sub(a.entries[i], b.entries[i]);
  return c;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix c(a.field, a.rows * b.rows, a.cols * b.cols);
  for (unsigned i1 = 0; i1 < a.rows; ++i1)
    for (unsigned j1 = 0; j1 < a.cols; ++j1) {
      const Elem x = a.at(i1, j1);
      if (x == 0) continue;
      for (unsigned i2 = 0; i2 < b.rows; ++i2)
        for (unsigned j2 = 0; j2 < b.cols; ++j2)
          c.at(i1 * b.rows + i2, j1 * b.cols + j2) = a.field->mul(x, b.at(i2, j2));
    }
  return c;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const Field& f = *a.field;
  const unsigned n = a.rows;
  Matrix m = a;
  Matrix inv = Matrix::identity(a.field, n);
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && m.at(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (unsigned j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const Elem s = f.inv(m.at(col, col));
    for (unsigned j = 0; j < n; ++j) {
      m.at(col, j) = f.mul(m.at(col, j), s);
      inv.at(col, j) = f.mul(inv.at(col, j), s);
    }
    for (unsigned r = 0; r < n; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      const Elem t = m.at(r, col);
      for (unsigned j = 0; j < n; ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(t, m.at(col, j)));
        inv.at(r, j) = f.sub(inv.at(r, j), f.mul(t, inv.at(col, j)));
      }
    }
  }
  return inv;
}

PointCode mat_vec_apply(const Matrix& m, PointCode v) {
  const Field& f = *m.field;
  const auto x = unpack(v, f.order(), m.rows);
  std::vector<Elem> y(m.cols, 0);
  for (unsigned i = 0; i < m.rows; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < m.cols; ++j) {
      const Elem e = m.at(i, j);
      if (e) y[j] = f.add(y[j], f.mul(x[i], e));
    }
  }
  return pack(y, f.order());
}

PackedVector mat_vec_apply(const Matrix& m, const PackedVector& v) {
  if (!same_field(m.field, v.field)) throw std::invalid_argument("vector and matrix over different fields");
  if (!m.is_square() || m.rows != v.dim) throw std::invalid_argument("matrix/vector dimension mismatch");
  return PackedVector{v.field, v.dim, mat_vec_apply(m, v.code)};
}

std::vector<Elem> tensor(const Field& f, std::span<const Elem> v, std::span<const Elem> w) {
  std::vector<Elem> out;
  out.reserve(v.size() * w.size());
  for (Elem a : v)
    for (Elem b : w) out.push_back(f.mul(a, b));
  return out;
}

Matrix row_reduce(Matrix m) {
  const Field& f = *m.field;
  unsigned lead_row = 0;
  for (unsigned col = 0; col < m.cols && lead_row < m.rows; ++col) {
    unsigned piv = lead_row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != lead_row)
      for (unsigned j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(lead_row, j));
    const Elem s = f.inv(m.at(lead_row, col));
    for (unsigned j = 0; j < m.cols; ++j) m.at(lead_row, j) = f.mul(m.at(lead_row, j), s);
    for (unsigned r = 0; r < m.rows; ++r) {
      if (r == lead_row || m.at(r, col) == 0) continue;
      const Elem t = m.at(r, col);
      for (unsigned j = 0; j < m.cols; ++j) m.at(r, j) = f.sub(m.at(r, j), f.mul(t, m.at(lead_row, j)));
    }
    ++lead_row;
  }
  m.rows = lead_row;
  m.entries.resize(std::size_t(lead_row) * m.cols);
  return m;
}

unsigned rank(const Matrix& m) { return row_reduce(m).rows; }

Matrix left_kernel(const Matrix& m) {
  // Row-reduce [M | I]; rows whose M-part vanished carry kernel vectors.
  const Field& f = *m.field;
  Matrix aug(m.field, m.rows, m.cols + m.rows);
  for (unsigned i = 0; i < m.rows; ++i) {
    for (unsigned j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  // Forward elimination restricted to the M-part columns.
  unsigned lead_row = 0;
  for (unsigned col = 0; col < m.cols && lead_row < aug.rows; ++col) {
    unsigned piv = lead_row;
    while (piv < aug.rows && aug.at(piv, col) == 0) ++piv;
    if (piv == aug.rows) continue;
    if (piv != lead_row)
      for (unsigned j = 0; j < aug.cols; ++j) std::swap(aug.at(piv, j), aug.at(lead_row, j));
    const Elem s = f.inv(aug.at(lead_row, col));
    for (unsigned j = 0; j < aug.cols; ++j) aug.at(lead_row, j) = f.mul(aug.at(lead_row, j), s);
    for (unsigned r = 0; r < aug.rows; ++r) {
      if (r == lead_row || aug.at(r, col) == 0) continue;
      const Elem t = aug.at(r, col);
      for (unsigned j = 0; j < aug.cols; ++j) aug.at(r, j) = f.sub(aug.at(r, j), f.mul(t, aug.at(lead_row, j)));
    }
    ++lead_row;
  }
  Matrix ker(m.field, aug.rows - lead_row, m.rows);
  for (unsigned r = lead_row; r < aug.rows; ++r)
    for (unsigned j = 0; j < m.rows; ++j) ker.at(r - lead_row, j) = aug.at(r, m.cols + j);
  return row_reduce(std::move(ker));
}

Matrix subspace_intersection(const Matrix& u, const Matrix& w) {
  require_same_field(u, w);
  if (u.rows == 0 || w.rows == 0) return Matrix(u.field, 0, u.cols);
  // a*U = b*W  <=>  (a, b) * [U; -W] = 0.
  Matrix stacked(u.field, u.rows + w.rows, u.cols);
  for (unsigned i = 0; i < u.rows; ++i)
    for (unsigned j = 0; j < u.cols; ++j) stacked.at(i, j) = u.at(i, j);
  for (unsigned i = 0; i < w.rows; ++i)
    for (unsigned j = 0; j < u.cols; ++j) stacked.at(u.rows + i, j) = u.field->neg(w.at(i, j));
  const Matrix k = left_kernel(stacked);
  Matrix coeffs(u.field, k.rows, u.rows);
  for (unsigned i = 0; i < k.rows; ++i)
    for (unsigned j = 0; j < u.rows; ++j) coeffs.at(i, j) = k.at(i, j);
  return row_reduce(multiply(coeffs, u));
}

Matrix subspace_sum(const Matrix& u, const Matrix& w) {
  require_same_field(u, w);
  Matrix stacked(u.field, u.rows + w.rows, u.cols);
  std::copy(u.entries.begin(), u.entries.end(), stacked.entries.begin());
  std::copy(w.entries.begin(), w.entries.end(), stacked.entries.begin() + u.entries.size());
  return row_reduce(std::move(stacked));
}

bool subspace_contains(const Matrix& basis, std::span<const Elem> v) {
  // Basis is in reduced echelon form: eliminate along pivots.
  const Field& f = *basis.field;
  std::vector<Elem> r(v.begin(), v.end());
  for (unsigned i = 0; i < basis.rows; ++i) {
    unsigned piv = 0;
    while (basis.at(i, piv) == 0) ++piv;
    const Elem t = r[piv];
    if (t == 0) continue;
    for (unsigned j = 0; j < basis.cols; ++j) r[j] = f.sub(r[j], f.mul(t, basis.at(i, j)));
  }
  for (Elem e : r)
    if (e) return false;
  return true;
}

}  // namespace irrbase
