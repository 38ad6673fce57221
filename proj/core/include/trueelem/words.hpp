#pragma once

// Group expressions over matrix letters and the letter disciplines that
// certify subgroup membership.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trueelem/matrix.hpp"

namespace trueelem {

enum class ExprKind { Elem, Symbol, Inverse, Product, Commutator, Conjugation };

/// Immutable expression tree. Coefficients are stored as integers and read
/// in whatever ring the expression is evaluated over.
///
/// Node payloads:
///   Elem         e_ij(a)
///   Symbol       suspend(S(x,y;z), p, q)
///   Inverse      child^-1
///   Product      children in order; the empty product is the identity
///   Commutator   [g,h] = g^-1 h^-1 g h
///   Conjugation  c^-1 w c, stored as (conjugator c, inner w)
class GroupExpr {
 public:
  /// Empty product.
  GroupExpr();

  // Canonicalizing builders: identity letters (zero coefficients) vanish and
  // trivial wrappers collapse.
  static GroupExpr elem(int i, int j, const RingValue& a);
  static GroupExpr symbol(const RingValue& x, const RingValue& y, const RingValue& z, int p, int q);
  static GroupExpr inverse(const GroupExpr& w);
  static GroupExpr product(std::vector<GroupExpr> factors);
  static GroupExpr commutator(const GroupExpr& g, const GroupExpr& h);
  static GroupExpr conjugation(const GroupExpr& conjugator, const GroupExpr& inner);

  // Literal builders used by the parser; they keep exactly what they are given.
  static GroupExpr raw_elem(int i, int j, Integer a);
  static GroupExpr raw_symbol(Integer x, Integer y, Integer z, int p, int q);
  static GroupExpr raw_inverse(GroupExpr w);
  static GroupExpr raw_product(std::vector<GroupExpr> factors);
  static GroupExpr raw_commutator(GroupExpr g, GroupExpr h);
  static GroupExpr raw_conjugation(GroupExpr conjugator, GroupExpr inner);

  ExprKind kind() const { return node_->kind; }
  bool is_identity() const { return node_->kind == ExprKind::Product && node_->children.empty(); }

  // Elem: (i, j); Symbol: (p, q).
  int first_index() const { return node_->i; }
  int second_index() const { return node_->j; }
  // Elem: coefficient(0) = a; Symbol: coefficient(0..2) = x, y, z.
  const Integer& coefficient(std::size_t k) const { return node_->coeffs.at(k); }
  const std::vector<Integer>& coefficients() const { return node_->coeffs; }
  // Inverse: {child}; Product: factors; Commutator: {g, h};
  // Conjugation: {conjugator, inner}.
  const std::vector<GroupExpr>& children() const { return node_->children; }

  /// Number of atomic letters.
  std::size_t letter_count() const;
  /// Compact human-readable rendering, e.g. "[e13(3)e23(6), e31(1)e32(-2)]".
  std::string to_string() const;

  friend bool operator==(const GroupExpr& a, const GroupExpr& b);

 private:
  struct Node {
    ExprKind kind;
    int i = 0;
    int j = 0;
    std::vector<Integer> coeffs;
    std::vector<GroupExpr> children;
  };
  explicit GroupExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static GroupExpr make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Throws IndexOutOfRange / DiagonalIndex for the first bad letter.
void validate_indices(const GroupExpr& w, int n);

SqMatrix evaluate(const GroupExpr& w, int n, const RingSpec& spec);

/// Right-multiplies acc in place by the value of w (or of w^-1).
void apply_right(const GroupExpr& w, SqMatrix& acc, bool inverted = false);

enum class DisciplineKind { F, E, CommF, Unrestricted };

const char* to_string(DisciplineKind kind);
DisciplineKind parse_discipline_kind(std::string_view text);

struct Discipline {
  DisciplineKind kind;
  Ideal ideal;
};

struct DisciplineReport {
  bool ok = true;
  std::string violation;  // path and reason of the first violation
};

/// Structural check of the letter discipline:
///   F(I)      every atom anywhere is e_ij(a) with a in I
///   E(I)      atoms e_ij(a), a in I, reached through products, inverses,
///             the inner side of conjugations (conjugator unrestricted) or
///             the left side of commutators (right side unrestricted)
///   CommF(I)  products and inverses of commutators [f, f'] with f, f' F(I)
DisciplineReport check_discipline(const GroupExpr& w, const Discipline& d);

}  // namespace trueelem
