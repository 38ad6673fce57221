#include "trueelem/congruence.hpp"

namespace trueelem {

SlResidueMatrix::SlResidueMatrix(Ideal ideal, int n)
    : ideal_(std::move(ideal)), square_(ideal_.squared()), n_(n) {
  if (n < 1) throw Error(ErrorKind::DimensionTooSmall, "residue matrix dimension must be at least 1");
  entries_.assign(static_cast<std::size_t>(n) * n, RingValue::zero(ideal_.spec()));
}

SlResidueMatrix::SlResidueMatrix(Ideal ideal, const std::vector<std::vector<Integer>>& rows)
    : SlResidueMatrix(std::move(ideal), static_cast<int>(rows.size())) {
  for (int i = 1; i <= n_; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n_)
      throw Error(ErrorKind::InvalidArgument, "residue matrix rows must all have length " + std::to_string(n_));
    for (int j = 1; j <= n_; ++j) set(i, j, RingValue(ideal_.spec(), rows[i - 1][j - 1]));
  }
}

RingValue SlResidueMatrix::at(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw Error(ErrorKind::IndexOutOfRange, "residue index out of range");
  return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void SlResidueMatrix::set(int i, int j, const RingValue& value) {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw Error(ErrorKind::IndexOutOfRange, "residue index out of range");
  if (!in_ideal(value, ideal_))
    throw Error(ErrorKind::NotInIdeal, "not in ideal: residue entry (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")=" + value.to_string() + " is not in " +
                                           ideal_.to_string());
  entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = value;
}

RingValue SlResidueMatrix::trace() const {
  RingValue t = RingValue::zero(ideal_.spec());
  for (int i = 1; i <= n_; ++i) t += at(i, i);
  return t;
}

bool SlResidueMatrix::has_zero_trace() const { return in_ideal(trace(), square_); }

bool SlResidueMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!in_ideal(e, square_)) return false;
  return true;
}

bool SlResidueMatrix::has_zero_diagonal() const {
  for (int i = 1; i <= n_; ++i)
    if (!in_ideal(at(i, i), square_)) return false;
  return true;
}

std::vector<std::vector<Integer>> SlResidueMatrix::canonical_rows() const {
  std::vector<std::vector<Integer>> out(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out[i - 1].push_back(square_.residue(at(i, j)));
  return out;
}

SlResidueMatrix operator+(const SlResidueMatrix& a, const SlResidueMatrix& b) {
  if (!(a.ideal_ == b.ideal_) || a.n_ != b.n_)
    throw Error(ErrorKind::InvalidArgument, "residue matrices over different ideals or sizes");
  SlResidueMatrix c(a.ideal_, a.n_);
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] = a.entries_[k] + b.entries_[k];
  return c;
}

bool operator==(const SlResidueMatrix& a, const SlResidueMatrix& b) {
  if (!(a.ideal_ == b.ideal_) || a.n_ != b.n_) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    if (!congruent_mod_ideal(a.entries_[k], b.entries_[k], a.square_)) return false;
  return true;
}

SlResidueMatrix reduce_r(const SqMatrix& g, const Ideal& ideal) {
  if (!in_class(g, {CongruenceKind::Gamma, ideal, g.n()}))
    throw Error(ErrorKind::NotInClass, "matrix is not congruent to the identity modulo " + ideal.to_string());
  const SqMatrix shifted = g - SqMatrix::identity(g.spec(), g.n());
  SlResidueMatrix r(ideal, g.n());
  for (int i = 1; i <= g.n(); ++i)
    for (int j = 1; j <= g.n(); ++j) r.set(i, j, shifted.at(i, j));
  return r;
}

Preimage preimage_r(const SlResidueMatrix& target) {
  const Ideal& ideal = target.ideal();
  const RingSpec& spec = ideal.spec();
  const Ideal square = ideal.squared();
  const int n = target.n();
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "preimage needs n >= 2");
  if (!target.has_zero_trace())
    throw Error(ErrorKind::NonzeroTrace, "target has trace " + target.trace().to_string() + ", not zero mod " +
                                             square.to_string());

  // The (i,i+1)-suspension of [[1+a,-a],[a,1-a]] maps to a(E_ii - E_{i+1,i+1})
  // on the diagonal, so a_i = d_1 + ... + d_i telescopes onto the targets.
  std::vector<GroupExpr> parts;
  RingValue partial = RingValue::zero(spec);
  for (int i = 1; i < n; ++i) {
    partial += target.at(i, i);
    const RingValue a(spec, square.residue(partial));
    parts.push_back(GroupExpr::conjugation(GroupExpr::elem(i, i + 1, -RingValue::one(spec)),
                                           GroupExpr::elem(i + 1, i, a)));
  }
  const SqMatrix diagonal_part = evaluate(GroupExpr::product(parts), n, spec);
  const SlResidueMatrix image = reduce_r(diagonal_part, ideal);

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const RingValue c(spec, square.residue(target.at(i, j) - image.at(i, j)));
      parts.push_back(GroupExpr::elem(i, j, c));
    }
  }
  GroupExpr word = GroupExpr::product(std::move(parts));
  SqMatrix matrix = evaluate(word, n, spec);
  return Preimage{std::move(matrix), std::move(word)};
}

namespace {

void require_in_square(const SqMatrix& remainder, const Ideal& ideal) {
  if (!in_class(remainder, {CongruenceKind::Gamma, ideal.squared(), remainder.n()}))
    throw Error(ErrorKind::NotInClass, "approximation remainder escaped the second congruence level");
}

}  // namespace

Approximation approximate_by_elementary(const SqMatrix& g, CongruenceKind kind, const Ideal& ideal) {
  const int n = g.n();
  GroupExpr word;
  switch (kind) {
    case CongruenceKind::Delta: {
      if (!in_class(g, {CongruenceKind::Delta, ideal, n}))
        throw Error(ErrorKind::NotInClass, "matrix is not in the secondary congruence subgroup of " +
                                               ideal.to_string());
      std::vector<GroupExpr> letters;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j) letters.push_back(GroupExpr::elem(i, j, g.at(i, j)));
      word = GroupExpr::product(std::move(letters));
      break;
    }
    case CongruenceKind::Gamma:
      word = preimage_r(reduce_r(g, ideal)).word;
      break;
    case CongruenceKind::Omega:
      throw Error(ErrorKind::InvalidArgument, "approximation is defined for Gamma and Delta only");
  }
  SqMatrix remainder = evaluate(GroupExpr::inverse(word), n, g.spec()) * g;
  require_in_square(remainder, ideal);
  return Approximation{std::move(word), std::move(remainder)};
}

Approximation squeeze_witness(const SqMatrix& g, const Ideal& ideal) {
  if (g.n() < 3)
    throw Error(ErrorKind::DimensionTooSmall, "squeeze witness needs n >= 3, got n=" + std::to_string(g.n()));
  return approximate_by_elementary(g, CongruenceKind::Delta, ideal);
}

namespace {

// Odometer over matrices that are diagonal modulo the ideal.
template <typename Visit>
void walk_candidates(const RingSpec& ring, int n, const Ideal& ideal, std::uint64_t limit, Visit&& visit) {
  if (!ring.is_modular())
    throw Error(ErrorKind::InvalidArgument, "enumeration needs a finite ring Z/m");
  require_same_ring(ring, ideal.spec());
  if (n < 1) throw Error(ErrorKind::DimensionTooSmall, "enumeration needs n >= 1");
  const Integer& m = ring.modulus();
  const Integer step = ideal.lift_modulus();
  const Integer off_count = m / step;
  Integer total = 1;
  for (int k = 0; k < n; ++k) total *= m;
  for (int k = 0; k < n * n - n; ++k) total *= off_count;
  if (total > Integer(static_cast<unsigned long>(limit)))
    throw Error(ErrorKind::EnumerationLimit, "enumeration limit exceeded: " + total.get_str() +
                                                 " candidates, limit " + std::to_string(limit));

  const int cells = n * n;
  std::vector<unsigned long> digit(cells, 0);
  std::vector<unsigned long> radix(cells);
  for (int c = 0; c < cells; ++c)
    radix[c] = (c / n == c % n) ? m.get_ui() : off_count.get_ui();
  SqMatrix g(ring, n);
  while (true) {
    for (int c = 0; c < cells; ++c) {
      const bool diag = c / n == c % n;
      g.set(c / n + 1, c % n + 1, diag ? Integer(digit[c]) : Integer(step * digit[c]));
    }
    visit(g);
    int c = 0;
    while (c < cells && ++digit[c] == radix[c]) digit[c++] = 0;
    if (c == cells) break;
  }
}

}  // namespace

OrderReport enumerate_orders(const RingSpec& ring, int n, const Ideal& ideal, std::uint64_t limit) {
  const Ideal square = ideal.squared();
  Integer candidates = 0, omega = 0, gamma = 0, delta = 0, gamma_sq = 0;
  walk_candidates(ring, n, ideal, limit, [&](const SqMatrix& g) {
    ++candidates;
    if (!is_special_linear(g)) return;
    ++omega;
    if (!matches_congruence_pattern(g, CongruenceKind::Gamma, ideal)) return;
    ++gamma;
    if (matches_congruence_pattern(g, CongruenceKind::Delta, ideal)) ++delta;
    if (matches_congruence_pattern(g, CongruenceKind::Gamma, square)) ++gamma_sq;
  });

  const Integer ideal_quotient = square.lift_modulus() / ideal.lift_modulus();
  const Integer units = euler_phi(ideal.lift_modulus());
  auto power = [](const Integer& base, int e) {
    Integer r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
  };
  auto ratio = [](std::string name, const Integer& num, const Integer& den, const Integer& expected) {
    const bool divides = den != 0 && num % den == 0;
    return OrderReport::Ratio{std::move(name), num, den, expected, divides && num / den == expected};
  };

  OrderReport report{ring, n, ideal, candidates, omega, gamma, delta, gamma_sq, ideal_quotient, units, {}};
  report.ratios.push_back(ratio("Gamma/Delta", gamma, delta, power(ideal_quotient, n - 1)));
  report.ratios.push_back(ratio("Delta/Gamma(I^2)", delta, gamma_sq, power(ideal_quotient, n * n - n)));
  report.ratios.push_back(ratio("Gamma/Gamma(I^2)", gamma, gamma_sq, power(ideal_quotient, n * n - 1)));
  report.ratios.push_back(ratio("Omega/Gamma", omega, gamma, power(units, n - 1)));
  return report;
}

bool OrderReport::all_pass() const {
  for (const auto& r : ratios)
    if (!r.pass) return false;
  return true;
}

std::vector<SqMatrix> enumerate_class(const RingSpec& ring, int n, CongruenceKind kind, const Ideal& ideal,
                                      std::uint64_t limit) {
  std::vector<SqMatrix> out;
  walk_candidates(ring, n, ideal, limit, [&](const SqMatrix& g) {
    if (is_special_linear(g) && matches_congruence_pattern(g, kind, ideal)) out.push_back(g);
  });
  return out;
}

}  // namespace trueelem
