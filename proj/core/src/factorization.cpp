#include "trueelem/factorization.hpp"

#include <optional>

namespace trueelem {

namespace {

void require_rank_three(int n, const char* what) {
  if (n < 3)
    throw Error(ErrorKind::DimensionTooSmall,
                std::string(what) + " needs n >= 3, got n=" + std::to_string(n));
}

void require_member(const RingValue& x, const Ideal& ideal, const char* name) {
  if (!in_ideal(x, ideal))
    throw Error(ErrorKind::NotInIdeal, std::string("not in ideal: ") + name + "=" + x.to_string() +
                                           " is not in " + ideal.to_string() + " over " +
                                           ideal.spec().to_string());
}

GroupExpr letter(int p, int q, const RingValue& a) { return GroupExpr::elem(p, q, a); }

struct ElemData {
  int p;
  int q;
  RingValue a;
};

// S(x,0;z) = e_kl(-x^2 z) and S(0,y;z) = e_lk(y^2 z).
std::optional<ElemData> degenerate_symbol(const SuslinFactor& f) {
  if (f.y.is_zero()) return ElemData{f.k, f.l, -(f.x * f.x * f.z)};
  if (f.x.is_zero()) return ElemData{f.l, f.k, f.y * f.y * f.z};
  return std::nullopt;
}

}  // namespace

SuslinData::SuslinData(const SqMatrix& g, int i, int j)
    : spec_(g.spec()), n_(g.n()), i_(i), j_(j) {
  require_index_pair(i, j, n_);
  require_special_linear(g, "conjugating matrix");
  const SqMatrix g_inv = inverse(g);
  for (int s = 1; s <= n_; ++s) {
    v_.push_back(g_inv.at(s, i));
    w_.push_back(g.at(j, s));
    w_prime_.push_back(g.at(i, s));
  }

  RingValue wv = RingValue::zero(spec_);
  RingValue wpv = RingValue::zero(spec_);
  for (int s = 0; s < n_; ++s) {
    wv += w_[s] * v_[s];
    wpv += w_prime_[s] * v_[s];
  }
  if (!wv.is_zero() || !wpv.is_one())
    throw Error(ErrorKind::InvalidArgument, "inconsistent inverse while building factorization data");
  for (int t = 1; t <= n_; ++t) {
    RingValue sum = RingValue::zero(spec_);
    for (int k = 1; k <= n_; ++k)
      for (int l = k + 1; l <= n_; ++l) {
        if (t == k) sum += c(k, l) * v(l);
        if (t == l) sum -= c(k, l) * v(k);
      }
    if (!(sum == w_[t - 1]))
      throw Error(ErrorKind::InvalidArgument, "row decomposition identity failed at index " + std::to_string(t));
  }
}

RingValue SuslinData::c(int k, int l) const {
  return w_.at(k - 1) * w_prime_.at(l - 1) - w_.at(l - 1) * w_prime_.at(k - 1);
}

GroupExpr SuslinFactor::expr() const {
  std::vector<GroupExpr> parts{symbol_letter()};
  parts.insert(parts.end(), elementaries.begin(), elementaries.end());
  return GroupExpr::product(std::move(parts));
}

std::vector<SuslinFactor> suslin_factors(const SuslinData& data, const RingValue& a) {
  require_same_ring(data.spec(), a.spec());
  const int n = data.n();
  std::vector<SuslinFactor> out;
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      const RingValue z = a * data.c(k, l);
      if (z.is_zero()) continue;
      SuslinFactor f{k, l, data.v(k), data.v(l), z, {}};
      for (int s = 1; s <= n; ++s) {
        if (s == k || s == l) continue;
        auto e1 = letter(s, k, z * data.v(s) * data.v(l));
        auto e2 = letter(s, l, -(z * data.v(s) * data.v(k)));
        if (!e1.is_identity()) f.elementaries.push_back(std::move(e1));
        if (!e2.is_identity()) f.elementaries.push_back(std::move(e2));
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

GroupExpr suslin_factorize(const SqMatrix& g, int i, int j, const RingValue& a) {
  const SuslinData data(g, i, j);
  std::vector<GroupExpr> parts;
  for (const auto& f : suslin_factors(data, a)) parts.push_back(f.expr());
  return GroupExpr::product(std::move(parts));
}

int helper_index(int p, int q, int n) {
  for (int m = 1; m <= n; ++m)
    if (m != p && m != q) return m;
  throw Error(ErrorKind::DimensionTooSmall, "no helper index outside {" + std::to_string(p) + "," +
                                                std::to_string(q) + "} for n=" + std::to_string(n));
}

GroupExpr symbol_commutator_expr(const RingValue& x, const RingValue& y, const RingValue& z, int k, int l,
                                 int n) {
  require_rank_three(n, "symbol commutator");
  require_index_pair(k, l, n);
  const int m = helper_index(k, l, n);
  if (z.is_zero()) return GroupExpr();
  return GroupExpr::commutator(GroupExpr::product({letter(k, m, x * z), letter(l, m, y * z)}),
                               GroupExpr::product({letter(m, k, y), letter(m, l, -x)}));
}

GroupExpr tits_symbol_expr(const RingValue& x, const RingValue& y, const RingValue& z1, const RingValue& z2,
                           int k, int l, int n) {
  require_rank_three(n, "Tits commutator");
  require_index_pair(k, l, n);
  const int m = helper_index(k, l, n);
  return GroupExpr::commutator(GroupExpr::product({letter(k, m, x * z1), letter(l, m, y * z1)}),
                               GroupExpr::product({letter(m, k, y * z2), letter(m, l, -(x * z2))}));
}

GroupExpr symbol_expr_in_F(const RingValue& x, const RingValue& y, const RingValue& z, int k, int l, int n,
                           const Ideal& ideal) {
  require_rank_three(n, "symbol expansion");
  require_index_pair(k, l, n);
  const RingValue t = ideal_divide(z, ideal.squared());
  const RingValue& gen = ideal.generator();
  return tits_symbol_expr(x, y, gen, gen * t, k, l, n);
}

GroupExpr elem_expr_in_commF(int i, int j, const RingValue& z, int n, const Ideal& ideal) {
  require_rank_three(n, "elementary commutator");
  require_index_pair(i, j, n);
  const RingValue t = ideal_divide(z, ideal.squared());
  const int h = helper_index(i, j, n);
  const RingValue& gen = ideal.generator();
  return GroupExpr::commutator(letter(i, h, gen), letter(h, j, gen * t));
}

SymbolReduction reduce_symbol(const RingValue& x0, const RingValue& y0, const RingValue& z0, int k0, int l0,
                              int n, const Ideal& ideal) {
  require_rank_three(n, "symbol reduction");
  require_index_pair(k0, l0, n);
  require_member(z0, ideal, "z");
  const bool mirrored = !in_ideal(y0, ideal);
  if (mirrored && !in_ideal(x0, ideal))
    throw Error(ErrorKind::NotInIdeal, "not in ideal: neither x=" + x0.to_string() + " nor y=" + y0.to_string() +
                                           " is in " + ideal.to_string());

  // suspend(S(x,y;z), k, l) = suspend(S(y,x;-z), l, k)
  const RingValue x = mirrored ? y0 : x0;
  const RingValue y = mirrored ? x0 : y0;
  const RingValue z = mirrored ? -z0 : z0;
  const int k = mirrored ? l0 : k0;
  const int l = mirrored ? k0 : l0;
  const int m = helper_index(k, l, n);

  std::vector<SymbolReduction::Step> steps{
      {false, letter(m, k, -y)},         // column k -= y * column m
      {true, letter(k, m, x * z)},       // row k += xz * row m
      {true, letter(l, m, y * z)},       // row l += yz * row m
      {true, letter(m, k, y)},           // row m += y * row k
      {false, letter(k, l, x * x * z)},  // column l += x^2 z * column k
      {false, letter(k, m, -(x * z))},   // column m -= xz * column k
  };

  const RingSpec& spec = ideal.spec();
  std::vector<SqMatrix> stages{suspend(symbol(x, y, z), k, l, n)};
  for (const auto& step : steps) {
    const SqMatrix op = evaluate(step.letter, n, spec);
    stages.push_back(step.left ? op * stages.back() : stages.back() * op);
  }
  SqMatrix target_inner = suspend(symbol(RingValue::one(spec), x, -(y * z)), l, m, n);
  return SymbolReduction{mirrored, x, y, z, k, l, m, std::move(steps), std::move(stages), std::move(target_inner)};
}

GroupExpr theoremN_symbol_expr(const RingValue& x, const RingValue& y, const RingValue& z, int k, int l, int n,
                               const Ideal& ideal) {
  const SymbolReduction red = reduce_symbol(x, y, z, k, l, n, ideal);
  if (red.z.is_zero()) return GroupExpr();

  // final = (L3 L2 L1) start (R1 R2 R3), so
  // start = L1^-1 L2^-1 L3^-1 final R3^-1 R2^-1 R1^-1.
  std::vector<GroupExpr> left_inverse;
  std::vector<GroupExpr> right_inverse;
  for (const auto& step : red.steps) {
    if (step.left) {
      left_inverse.push_back(GroupExpr::inverse(step.letter));
    } else {
      right_inverse.insert(right_inverse.begin(), GroupExpr::inverse(step.letter));
    }
  }
  const RingSpec& spec = ideal.spec();
  GroupExpr inner =
      tits_symbol_expr(RingValue::one(spec), red.x, -red.y, red.z, red.l, red.m, n);

  std::vector<GroupExpr> parts = std::move(left_inverse);
  parts.push_back(std::move(inner));
  parts.insert(parts.end(), right_inverse.begin(), right_inverse.end());
  return GroupExpr::product(std::move(parts));
}

namespace {

void require_conjugation_inputs(const SqMatrix& g, int i, int j, const RingValue& a, const char* what) {
  require_rank_three(g.n(), what);
  require_index_pair(i, j, g.n());
  require_same_ring(g.spec(), a.spec());
}

SqMatrix conjugated_target(const SqMatrix& g, int i, int j, const RingValue& a) {
  return inverse(g) * elementary(g.n(), i, j, a) * g;
}

}  // namespace

Certificate conjugate_in_E(const SqMatrix& g, int i, int j, const RingValue& a, const Ideal& ideal) {
  require_conjugation_inputs(g, i, j, a, "E-normality certificate");
  require_member(a, ideal, "a");
  const SuslinData data(g, i, j);
  const int n = g.n();
  std::vector<GroupExpr> parts;
  for (const auto& f : suslin_factors(data, a)) {
    if (const auto e = degenerate_symbol(f)) {
      parts.push_back(letter(e->p, e->q, e->a));
    } else {
      parts.push_back(symbol_commutator_expr(f.x, f.y, f.z, f.k, f.l, n));
    }
    parts.insert(parts.end(), f.elementaries.begin(), f.elementaries.end());
  }
  return Certificate{{conjugated_target(g, i, j, a), {DisciplineKind::E, ideal}},
                     GroupExpr::product(std::move(parts))};
}

Certificate conjugate_in_F(const SqMatrix& g, int i, int j, const RingValue& a, const Ideal& ideal,
                           ExpansionStats* stats) {
  require_conjugation_inputs(g, i, j, a, "F-normality certificate");
  require_member(a, ideal, "a");
  if (!in_class(g, {CongruenceKind::Omega, ideal, g.n()}))
    throw Error(ErrorKind::NotInClass, "conjugating matrix is not diagonal modulo " + ideal.to_string());
  const SuslinData data(g, i, j);
  const int n = g.n();
  std::vector<GroupExpr> parts;
  for (const auto& f : suslin_factors(data, a)) {
    if (const auto e = degenerate_symbol(f)) {
      parts.push_back(letter(e->p, e->q, e->a));
    } else {
      // v_s is in the ideal for every s != i, so v_k or v_l qualifies.
      if (stats) ++(in_ideal(f.y, ideal) ? stats->direct : stats->mirrored);
      parts.push_back(theoremN_symbol_expr(f.x, f.y, f.z, f.k, f.l, n, ideal));
    }
    parts.insert(parts.end(), f.elementaries.begin(), f.elementaries.end());
  }
  return Certificate{{conjugated_target(g, i, j, a), {DisciplineKind::F, ideal}},
                     GroupExpr::product(std::move(parts))};
}

namespace {

GroupExpr conjugate_letters(const SqMatrix& g, const GroupExpr& f, const Ideal& ideal, ExpansionStats* stats) {
  switch (f.kind()) {
    case ExprKind::Elem:
      return conjugate_in_F(g, f.first_index(), f.second_index(), RingValue(g.spec(), f.coefficient(0)), ideal,
                            stats)
          .witness;
    case ExprKind::Symbol:
      throw Error(ErrorKind::InvalidArgument, "symbol letters cannot be conjugated letterwise in F");
    case ExprKind::Inverse:
      return GroupExpr::inverse(conjugate_letters(g, f.children()[0], ideal, stats));
    case ExprKind::Product: {
      std::vector<GroupExpr> parts;
      for (const auto& c : f.children()) parts.push_back(conjugate_letters(g, c, ideal, stats));
      return GroupExpr::product(std::move(parts));
    }
    case ExprKind::Commutator:
      return GroupExpr::commutator(conjugate_letters(g, f.children()[0], ideal, stats),
                                   conjugate_letters(g, f.children()[1], ideal, stats));
    case ExprKind::Conjugation:
      return GroupExpr::conjugation(conjugate_letters(g, f.children()[0], ideal, stats),
                                    conjugate_letters(g, f.children()[1], ideal, stats));
  }
  return GroupExpr();
}

}  // namespace

Certificate conjugate_word_in_F(const SqMatrix& g, const GroupExpr& f, const Ideal& ideal, ExpansionStats* stats) {
  require_rank_three(g.n(), "F-normality certificate");
  const auto report = check_discipline(f, {DisciplineKind::F, ideal});
  if (!report.ok) throw Error(ErrorKind::NotInIdeal, "word is not F-disciplined: " + report.violation);
  if (!in_class(g, {CongruenceKind::Omega, ideal, g.n()}))
    throw Error(ErrorKind::NotInClass, "conjugating matrix is not diagonal modulo " + ideal.to_string());
  const SqMatrix value = evaluate(f, g.n(), g.spec());
  return Certificate{{inverse(g) * value * g, {DisciplineKind::F, ideal}}, conjugate_letters(g, f, ideal, stats)};
}

Certificate normal_generator_in_F(const SqMatrix& conjugator, int i, int j, const RingValue& a,
                                  const Ideal& ideal) {
  require_conjugation_inputs(conjugator, i, j, a, "Tits certificate");
  require_member(a, ideal.squared(), "a");
  const SuslinData data(conjugator, i, j);
  const int n = conjugator.n();
  std::vector<GroupExpr> parts;
  for (const auto& f : suslin_factors(data, a)) {
    if (const auto e = degenerate_symbol(f)) {
      if (!e->a.is_zero()) parts.push_back(elem_expr_in_commF(e->p, e->q, e->a, n, ideal));
    } else {
      parts.push_back(symbol_expr_in_F(f.x, f.y, f.z, f.k, f.l, n, ideal));
    }
    for (const auto& e : f.elementaries)
      parts.push_back(elem_expr_in_commF(e.first_index(), e.second_index(),
                                         RingValue(ideal.spec(), e.coefficient(0)), n, ideal));
  }
  return Certificate{{conjugated_target(conjugator, i, j, a), {DisciplineKind::CommF, ideal}},
                     GroupExpr::product(std::move(parts))};
}

Certificate normal_generator_in_F(const GroupExpr& conjugator, int i, int j, const RingValue& a,
                                  const Ideal& ideal, int n) {
  return normal_generator_in_F(evaluate(conjugator, n, ideal.spec()), i, j, a, ideal);
}

}  // namespace trueelem
