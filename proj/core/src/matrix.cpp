#include "trueelem/matrix.hpp"

#include <sstream>

namespace trueelem {

SqMatrix::SqMatrix(RingSpec spec, int n) : spec_(std::move(spec)), n_(n) {
  if (n < 1) throw Error(ErrorKind::DimensionTooSmall, "matrix dimension must be at least 1");
  entries_.assign(static_cast<std::size_t>(n) * n, Integer(0));
}

SqMatrix::SqMatrix(RingSpec spec, const std::vector<std::vector<Integer>>& rows)
    : SqMatrix(std::move(spec), static_cast<int>(rows.size())) {
  for (int i = 1; i <= n_; ++i) {
    const auto& row = rows[i - 1];
    if (static_cast<int>(row.size()) != n_)
      throw Error(ErrorKind::InvalidArgument, "matrix rows must all have length " + std::to_string(n_));
    for (int j = 1; j <= n_; ++j) set(i, j, row[j - 1]);
  }
}

SqMatrix::SqMatrix(RingSpec spec, std::initializer_list<std::initializer_list<long>> rows)
    : SqMatrix(std::move(spec), static_cast<int>(rows.size())) {
  int i = 1;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_)
      throw Error(ErrorKind::InvalidArgument, "matrix rows must all have length " + std::to_string(n_));
    int j = 1;
    for (long v : row) set(i, j++, Integer(v));
    ++i;
  }
}

SqMatrix SqMatrix::identity(const RingSpec& spec, int n) {
  SqMatrix m(spec, n);
  for (int i = 1; i <= n; ++i) m.set(i, i, Integer(1));
  return m;
}

std::size_t SqMatrix::index(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw Error(ErrorKind::IndexOutOfRange, "index (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") out of range for n=" + std::to_string(n_));
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

void SqMatrix::set(int i, int j, const RingValue& value) {
  require_same_ring(spec_, value.spec());
  entries_[index(i, j)] = value.value();
}

void SqMatrix::add_column_multiple(int dst, int src, const Integer& a) {
  index(src, dst);
  if (a == 0) return;
  for (int r = 0; r < n_; ++r) {
    Integer& target = entries_[r * n_ + (dst - 1)];
    mpz_addmul(target.get_mpz_t(), entries_[r * n_ + (src - 1)].get_mpz_t(), a.get_mpz_t());
    target = spec_.canonical(target);
  }
}

void SqMatrix::mix_columns(int p, int q, const Integer& s11, const Integer& s12, const Integer& s21,
                           const Integer& s22) {
  index(p, q);
  for (int r = 0; r < n_; ++r) {
    const Integer mp = entries_[r * n_ + (p - 1)];
    const Integer mq = entries_[r * n_ + (q - 1)];
    entries_[r * n_ + (p - 1)] = spec_.canonical(mp * s11 + mq * s21);
    entries_[r * n_ + (q - 1)] = spec_.canonical(mp * s12 + mq * s22);
  }
}

bool SqMatrix::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (entry(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<std::vector<Integer>> SqMatrix::rows() const {
  std::vector<std::vector<Integer>> out(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out[i - 1].push_back(entry(i, j));
  return out;
}

std::string SqMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= n_; ++i) {
    os << (i > 1 ? ",[" : "[");
    for (int j = 1; j <= n_; ++j) os << (j > 1 ? "," : "") << entry(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

SqMatrix operator*(const SqMatrix& a, const SqMatrix& b) {
  require_same_ring(a.spec_, b.spec_);
  if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in product");
  const int n = a.n_;
  SqMatrix c(a.spec_, n);
  Integer acc;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      acc = 0;
      for (int k = 0; k < n; ++k) {
        const Integer& x = a.entries_[i * n + k];
        if (x == 0) continue;
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), b.entries_[k * n + j].get_mpz_t());
      }
      c.entries_[i * n + j] = a.spec_.canonical(acc);
    }
  }
  return c;
}

SqMatrix operator-(const SqMatrix& a, const SqMatrix& b) {
  require_same_ring(a.spec_, b.spec_);
  if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in difference");
  SqMatrix c(a.spec_, a.n_);
  for (std::size_t k = 0; k < c.entries_.size(); ++k)
    c.entries_[k] = a.spec_.canonical(a.entries_[k] - b.entries_[k]);
  return c;
}

void require_index_pair(int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw Error(ErrorKind::IndexOutOfRange, "index pair (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") out of range for n=" + std::to_string(n));
  if (i == j)
    throw Error(ErrorKind::DiagonalIndex, "index pair must be off-diagonal, got i=j=" + std::to_string(i));
}

SqMatrix elementary(int n, int i, int j, const RingValue& a) {
  require_index_pair(i, j, n);
  SqMatrix m = SqMatrix::identity(a.spec(), n);
  m.set(i, j, a);
  return m;
}

SqMatrix symbol(const RingValue& x, const RingValue& y, const RingValue& z) {
  require_same_ring(x.spec(), y.spec());
  require_same_ring(x.spec(), z.spec());
  const RingValue xyz = x * y * z;
  const RingValue one = RingValue::one(x.spec());
  SqMatrix s(x.spec(), 2);
  s.set(1, 1, one + xyz);
  s.set(1, 2, -(x * x * z));
  s.set(2, 1, y * y * z);
  s.set(2, 2, one - xyz);
  return s;
}

SqMatrix suspend(const SqMatrix& m2, int p, int q, int n) {
  if (m2.n() != 2) throw Error(ErrorKind::InvalidArgument, "suspension needs a 2x2 matrix");
  require_index_pair(p, q, n);
  require_special_linear(m2, "suspended matrix");
  SqMatrix m = SqMatrix::identity(m2.spec(), n);
  m.set(p, p, m2.entry(1, 1));
  m.set(p, q, m2.entry(1, 2));
  m.set(q, p, m2.entry(2, 1));
  m.set(q, q, m2.entry(2, 2));
  return m;
}

namespace {

using Lift = std::vector<Integer>;  // row-major n x n integer lift

Integer cofactor_det(const Lift& a, int n) {
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  Integer total = 0;
  Lift minor(static_cast<std::size_t>(n - 1) * (n - 1));
  for (int col = 0; col < n; ++col) {
    if (a[col] == 0) continue;
    for (int r = 1; r < n; ++r) {
      int mc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == col) continue;
        minor[(r - 1) * (n - 1) + mc++] = a[r * n + c];
      }
    }
    Integer term = a[col] * cofactor_det(minor, n - 1);
    if (col % 2 == 0) total += term; else total -= term;
  }
  return total;
}

// Fraction-free elimination; every division is exact over Z.
Integer bareiss_det(Lift a, int n) {
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r * n + k] != 0) { swap = r; break; }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap * n + c]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = v;
      }
    }
    prev = a[k * n + k];
  }
  return sign > 0 ? a[n * n - 1] : Integer(-a[n * n - 1]);
}

Integer lift_det(const Lift& a, int n) {
  return n <= 4 ? cofactor_det(a, n) : bareiss_det(a, n);
}

Lift lift_of(const SqMatrix& m) {
  Lift a;
  a.reserve(static_cast<std::size_t>(m.n()) * m.n());
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j) a.push_back(m.entry(i, j));
  return a;
}

}  // namespace

RingValue det(const SqMatrix& m) {
  return RingValue(m.spec(), lift_det(lift_of(m), m.n()));
}

SqMatrix inverse(const SqMatrix& m) {
  const RingValue d = det(m);
  const RingValue d_inv = d.unit_inverse();
  const int n = m.n();
  SqMatrix out(m.spec(), n);
  if (n == 1) {
    out.set(1, 1, d_inv);
    return out;
  }
  const Lift a = lift_of(m);
  Lift minor(static_cast<std::size_t>(n - 1) * (n - 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int k = 0;
      for (int i = 0; i < n; ++i) {
        if (i == r) continue;
        for (int j = 0; j < n; ++j)
          if (j != c) minor[k++] = a[i * n + j];
      }
      Integer cof = lift_det(minor, n - 1);
      if ((r + c) % 2 != 0) cof = -cof;
      // adj(m)_{c,r} = cofactor_{r,c}
      out.set(c + 1, r + 1, RingValue(m.spec(), cof) * d_inv);
    }
  }
  return out;
}

bool is_special_linear(const SqMatrix& m) { return det(m).is_one(); }

void require_special_linear(const SqMatrix& m, const char* what) {
  const RingValue d = det(m);
  if (!d.is_one())
    throw Error(ErrorKind::NotSpecialLinear,
                std::string(what) + " has determinant " + d.to_string() + ", expected 1");
}

const char* to_string(CongruenceKind kind) {
  switch (kind) {
    case CongruenceKind::Gamma: return "Gamma";
    case CongruenceKind::Delta: return "Delta";
    case CongruenceKind::Omega: return "Omega";
  }
  return "?";
}

CongruenceKind parse_congruence_kind(std::string_view text) {
  if (text == "Gamma") return CongruenceKind::Gamma;
  if (text == "Delta") return CongruenceKind::Delta;
  if (text == "Omega") return CongruenceKind::Omega;
  throw Error(ErrorKind::Parse, "congruence class must be Gamma, Delta or Omega, got '" + std::string(text) + "'");
}

bool matches_congruence_pattern(const SqMatrix& g, CongruenceKind kind, const Ideal& ideal) {
  require_same_ring(g.spec(), ideal.spec());
  const RingSpec& spec = g.spec();
  const int n = g.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) {
        if (!in_ideal(g.at(i, j), ideal)) return false;
        continue;
      }
      if (kind == CongruenceKind::Omega) continue;
      const RingValue shifted = g.at(i, i) - RingValue::one(spec);
      if (!in_ideal(shifted, kind == CongruenceKind::Delta ? ideal.squared() : ideal)) return false;
    }
  }
  return true;
}

bool in_class(const SqMatrix& g, const CongruenceClass& c) {
  if (g.n() != c.n)
    throw Error(ErrorKind::InvalidArgument, "matrix dimension " + std::to_string(g.n()) +
                                                " does not match class dimension " + std::to_string(c.n));
  require_special_linear(g, "congruence-class candidate");
  return matches_congruence_pattern(g, c.kind, c.ideal);
}

}  // namespace trueelem
