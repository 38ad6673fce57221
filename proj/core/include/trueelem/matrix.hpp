#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "trueelem/rings.hpp"

namespace trueelem {

/// Square matrix over a RingSpec. Entries are canonical; indices in the
/// public API are 1-based.
class SqMatrix {
 public:
  SqMatrix(RingSpec spec, int n);
  SqMatrix(RingSpec spec, const std::vector<std::vector<Integer>>& rows);
  SqMatrix(RingSpec spec, std::initializer_list<std::initializer_list<long>> rows);

  static SqMatrix identity(const RingSpec& spec, int n);

  const RingSpec& spec() const { return spec_; }
  int n() const { return n_; }

  RingValue at(int i, int j) const { return RingValue(spec_, entry(i, j)); }
  const Integer& entry(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, const Integer& value) { entries_[index(i, j)] = spec_.canonical(value); }
  void set(int i, int j, const RingValue& value);

  /// Column dst += a * column src (right multiplication by e_src,dst(a)).
  void add_column_multiple(int dst, int src, const Integer& a);
  /// Right multiplication by the (p,q)-suspension of [[s11,s12],[s21,s22]].
  void mix_columns(int p, int q, const Integer& s11, const Integer& s12, const Integer& s21,
                   const Integer& s22);

  bool is_identity() const;
  std::vector<std::vector<Integer>> rows() const;
  std::string to_string() const;

  friend SqMatrix operator*(const SqMatrix& a, const SqMatrix& b);
  SqMatrix& operator*=(const SqMatrix& b) { return *this = *this * b; }
  friend SqMatrix operator-(const SqMatrix& a, const SqMatrix& b);

  friend bool operator==(const SqMatrix& a, const SqMatrix& b) {
    return a.spec_ == b.spec_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int i, int j) const;

  RingSpec spec_;
  int n_;
  std::vector<Integer> entries_;
};

void require_index_pair(int i, int j, int n);

/// e_ij(a) = 1_n + a E_ij, i != j.
SqMatrix elementary(int n, int i, int j, const RingValue& a);

/// S(x,y;z) = [[1+xyz, -x^2 z], [y^2 z, 1-xyz]].
SqMatrix symbol(const RingValue& x, const RingValue& y, const RingValue& z);

/// Grafts a 2x2 matrix into 1_n: s11 at (p,p), s12 at (p,q), s21 at (q,p),
/// s22 at (q,q). Ordered pairs are allowed, so suspend(S(x,y;z), k, l) equals
/// suspend(S(y,x;-z), l, k).
SqMatrix suspend(const SqMatrix& m2, int p, int q, int n);

RingValue det(const SqMatrix& m);

/// Inverse when det(m) is a unit (adjugate times det^{-1}).
SqMatrix inverse(const SqMatrix& m);

bool is_special_linear(const SqMatrix& m);
void require_special_linear(const SqMatrix& m, const char* what = "matrix");

enum class CongruenceKind { Gamma, Delta, Omega };

const char* to_string(CongruenceKind kind);
CongruenceKind parse_congruence_kind(std::string_view text);

struct CongruenceClass {
  CongruenceKind kind;
  Ideal ideal;
  int n;
};

/// Entrywise congruence tests; requires det(g) = 1.
bool in_class(const SqMatrix& g, const CongruenceClass& c);

/// Same tests without the determinant precondition, for enumeration loops
/// that have already filtered on det.
bool matches_congruence_pattern(const SqMatrix& g, CongruenceKind kind, const Ideal& ideal);

}  // namespace trueelem
