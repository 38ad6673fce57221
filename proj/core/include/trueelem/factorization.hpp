#pragma once

// Suslin factorization of conjugated elementary matrices and the certificate
// emitters built on it:
//
//   conjugate_in_E        g^-1 e_ij(a) g in E_n(I) for any g in SL_n, a in I
//   conjugate_in_F        g^-1 e_ij(a) g in F_n(I) for g diagonal mod I, a in I
//   normal_generator_in_F g^-1 e_ij(a) g in [F_n(I), F_n(I)] for a in I^2
//
// All emitters need n >= 3 and produce words whose discipline can be checked
// without expanding anything.

#include <vector>

#include "trueelem/words.hpp"

namespace trueelem {

/// Vectors feeding the factorization of g^-1 e_ij(a) g:
///   v  = i-th column of g^-1
///   w  = j-th row of g
///   w' = i-th row of g
///   c_kl = w_k w'_l - w_l w'_k
/// Construction verifies w.v = 0, w'.v = 1 and w = sum_{k<l} c_kl (v_l e_k - v_k e_l).
class SuslinData {
 public:
  SuslinData(const SqMatrix& g, int i, int j);

  int n() const { return n_; }
  int i() const { return i_; }
  int j() const { return j_; }
  const RingSpec& spec() const { return spec_; }
  const std::vector<RingValue>& v() const { return v_; }
  const std::vector<RingValue>& w() const { return w_; }
  const std::vector<RingValue>& w_prime() const { return w_prime_; }
  /// 1-based accessors.
  const RingValue& v(int s) const { return v_.at(s - 1); }
  RingValue c(int k, int l) const;

 private:
  RingSpec spec_;
  int n_;
  int i_;
  int j_;
  std::vector<RingValue> v_;
  std::vector<RingValue> w_;
  std::vector<RingValue> w_prime_;
};

/// One pair factor 1 + z v (v_l e_k - v_k e_l), z = a c_kl, split as
/// suspend(S(v_k, v_l; z), k, l) followed by e_sk(z v_s v_l) e_sl(-z v_s v_k)
/// for s ascending outside {k, l}. Zero letters are omitted.
struct SuslinFactor {
  int k;
  int l;
  RingValue x;  // v_k
  RingValue y;  // v_l
  RingValue z;  // a c_kl
  std::vector<GroupExpr> elementaries;

  GroupExpr symbol_letter() const { return GroupExpr::symbol(x, y, z, k, l); }
  GroupExpr expr() const;
};

/// Pair factors in lexicographic (k, l) order. Pairs with z = 0 are skipped.
std::vector<SuslinFactor> suslin_factors(const SuslinData& data, const RingValue& a);

/// Product of the pair factors; evaluates to g^-1 e_ij(a) g.
GroupExpr suslin_factorize(const SqMatrix& g, int i, int j, const RingValue& a);

/// Smallest index in 1..n outside {p, q}.
int helper_index(int p, int q, int n);

/// suspend(S(x,y;z), k, l) = [e_km(xz) e_lm(yz), e_mk(y) e_ml(-x)], m the
/// helper index.
GroupExpr symbol_commutator_expr(const RingValue& x, const RingValue& y, const RingValue& z, int k, int l,
                                 int n);

/// suspend(S(x,y;z1 z2), k, l) = [e_km(x z1) e_lm(y z1), e_mk(y z2) e_ml(-x z2)].
GroupExpr tits_symbol_expr(const RingValue& x, const RingValue& y, const RingValue& z1, const RingValue& z2,
                           int k, int l, int n);

/// Commutator-of-F word for suspend(S(x,y;z), k, l) when z is in I^2, using
/// the split z = N * (N t).
GroupExpr symbol_expr_in_F(const RingValue& x, const RingValue& y, const RingValue& z, int k, int l, int n,
                           const Ideal& ideal);

/// e_ij(z) = [e_ih(N), e_hj(N t)] for z = N^2 t, h the helper index.
GroupExpr elem_expr_in_commF(int i, int j, const RingValue& z, int n, const Ideal& ideal);

/// Row and column reduction of suspend(S(x,y;z), k, l) down to
/// suspend(S(1,x;-yz), l, m) using only elementary operations over I.
/// In the mirrored case (x in I rather than y) the swapped symbol
/// S(y,x;-z) at (l,k) is reduced instead; the fields below then describe
/// the swapped data.
struct SymbolReduction {
  bool mirrored = false;
  RingValue x, y, z;
  int k, l, m;
  /// Elementary operations in the order they are applied; left ones act on
  /// rows, right ones on columns.
  struct Step {
    bool left;
    GroupExpr letter;
  };
  std::vector<Step> steps;
  /// Matrix after each step; stages.front() is the starting suspension.
  std::vector<SqMatrix> stages;
  /// suspend(S(1,x;-yz), l, m).
  SqMatrix target_inner;
};

SymbolReduction reduce_symbol(const RingValue& x, const RingValue& y, const RingValue& z, int k, int l, int n,
                              const Ideal& ideal);

/// F(I)-disciplined word for suspend(S(x,y;z), k, l) when z in I and x or y
/// in I.
GroupExpr theoremN_symbol_expr(const RingValue& x, const RingValue& y, const RingValue& z, int k, int l, int n,
                               const Ideal& ideal);

struct Claim {
  SqMatrix target;
  Discipline discipline;
};

struct Certificate {
  Claim claim;
  GroupExpr witness;
};

/// Counts of which Theorem-N symbol case was used.
struct ExpansionStats {
  std::size_t direct = 0;
  std::size_t mirrored = 0;
};

Certificate conjugate_in_E(const SqMatrix& g, int i, int j, const RingValue& a, const Ideal& ideal);

Certificate conjugate_in_F(const SqMatrix& g, int i, int j, const RingValue& a, const Ideal& ideal,
                           ExpansionStats* stats = nullptr);

/// F(I) certificate for g^-1 f g, f any F(I)-disciplined word, built letter
/// by letter from conjugate_in_F.
Certificate conjugate_word_in_F(const SqMatrix& g, const GroupExpr& f, const Ideal& ideal,
                                ExpansionStats* stats = nullptr);

Certificate normal_generator_in_F(const SqMatrix& conjugator, int i, int j, const RingValue& a,
                                  const Ideal& ideal);
Certificate normal_generator_in_F(const GroupExpr& conjugator, int i, int j, const RingValue& a,
                                  const Ideal& ideal, int n);

}  // namespace trueelem
