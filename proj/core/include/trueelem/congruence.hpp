#pragma once

// The reduction homomorphism r: Gamma_n(I) -> sl_n(I/I^2), g -> g - 1 mod I^2,
// its explicit preimages, first-order approximation of congruence subgroups
// by elementary subgroups, and exhaustive subgroup counts over Z/m.

#include <cstdint>
#include <string>
#include <vector>

#include "trueelem/factorization.hpp"

namespace trueelem {

/// n x n matrix with entries in I, compared modulo I^2.
class SlResidueMatrix {
 public:
  SlResidueMatrix(Ideal ideal, int n);
  SlResidueMatrix(Ideal ideal, const std::vector<std::vector<Integer>>& rows);

  const Ideal& ideal() const { return ideal_; }
  int n() const { return n_; }
  RingValue at(int i, int j) const;
  void set(int i, int j, const RingValue& value);

  RingValue trace() const;
  bool has_zero_trace() const;
  bool is_zero() const;
  bool has_zero_diagonal() const;

  /// Representatives reduced to canonical residues modulo I^2.
  std::vector<std::vector<Integer>> canonical_rows() const;

  friend SlResidueMatrix operator+(const SlResidueMatrix& a, const SlResidueMatrix& b);
  friend bool operator==(const SlResidueMatrix& a, const SlResidueMatrix& b);

 private:
  Ideal ideal_;
  Ideal square_;
  int n_;
  std::vector<RingValue> entries_;
};

SlResidueMatrix reduce_r(const SqMatrix& g, const Ideal& ideal);

struct Preimage {
  SqMatrix matrix;
  GroupExpr word;  // E(I)-disciplined, evaluates to matrix
};

/// g in Gamma_n(I) with r(g) = X: (i,i+1)-suspensions of
/// e_{i,i+1}(1) e_{i+1,i}(a_i) e_{i,i+1}(-1) carrying the diagonal, then
/// elementary letters fixing the off-diagonal residues.
Preimage preimage_r(const SlResidueMatrix& target);

struct Approximation {
  GroupExpr word;     // E(I)-disciplined for Gamma, F(I)-disciplined for Delta
  SqMatrix remainder; // in Gamma_n(I^2)
};

/// g = evaluate(word) * remainder.
Approximation approximate_by_elementary(const SqMatrix& g, CongruenceKind kind, const Ideal& ideal);

/// Delta_n(I) = F_n(I) Gamma_n(I^2) split for n >= 3.
Approximation squeeze_witness(const SqMatrix& g, const Ideal& ideal);

struct OrderReport {
  RingSpec ring;
  int n;
  Ideal ideal;
  Integer candidates;
  Integer omega, gamma, delta, gamma_sq;
  Integer ideal_quotient;  // |I/I^2|
  Integer units_mod_ideal; // |GL_1(A/I)|

  struct Ratio {
    std::string name;
    Integer numerator;
    Integer denominator;
    Integer expected;
    bool pass;
  };
  std::vector<Ratio> ratios;
  bool all_pass() const;
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// Walks every matrix that is diagonal mod I (the candidates), keeps those
/// with det 1 and classifies them. Refuses above `limit` candidates.
OrderReport enumerate_orders(const RingSpec& ring, int n, const Ideal& ideal,
                             std::uint64_t limit = kDefaultEnumerationLimit);

/// Every element of the named class over a finite ring, by the same walk.
std::vector<SqMatrix> enumerate_class(const RingSpec& ring, int n, CongruenceKind kind, const Ideal& ideal,
                                      std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace trueelem
