#include "trueelem/sampling.hpp"

namespace trueelem {

long Sampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

std::pair<int, int> Sampler::index_pair(int n) {
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "index pairs need n >= 2");
  const int i = static_cast<int>(uniform(1, n));
  int j = static_cast<int>(uniform(1, n - 1));
  if (j >= i) ++j;
  return {i, j};
}

RingValue Sampler::value(const RingSpec& spec, long bound) {
  if (spec.is_modular()) {
    const Integer& m = spec.modulus();
    const long hi = m.fits_slong_p() ? m.get_si() - 1 : bound;
    return RingValue(spec, uniform(0, hi));
  }
  return RingValue(spec, uniform(-bound, bound));
}

RingValue Sampler::ideal_element(const Ideal& ideal, long bound) {
  return ideal.generator() * value(ideal.spec(), bound);
}

GroupExpr Sampler::elementary_word(const RingSpec& spec, int n, int letters, long bound, const Ideal* ideal) {
  std::vector<GroupExpr> parts;
  for (int k = 0; k < letters; ++k) {
    auto [i, j] = index_pair(n);
    parts.push_back(GroupExpr::elem(i, j, ideal ? ideal_element(*ideal, bound) : value(spec, bound)));
  }
  return GroupExpr::product(std::move(parts));
}

SqMatrix Sampler::special_linear(const RingSpec& spec, int n, int letters, long bound) {
  return evaluate(elementary_word(spec, n, letters, bound), n, spec);
}

SqMatrix Sampler::omega_block_integers(int n, const Ideal& ideal) {
  const Integer& gen = ideal.generator().value();
  const long b = uniform(-3, 3);
  const Integer off = gen * gen * b;
  Integer x;
  do {
    x = uniform(-7, 7);
  } while (gcd(x, off) != 1);
  // x t - off c = 1
  Integer g, s, u;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), x.get_mpz_t(), off.get_mpz_t());
  const Integer t = s;
  const Integer c = -u;
  const RingSpec z = RingSpec::integers();
  const SqMatrix block(z, std::vector<std::vector<Integer>>{{x, Integer(gen * b)}, {Integer(gen * c), t}});
  auto [p, q] = index_pair(n);
  return suspend(block, p, q, n);
}

SqMatrix Sampler::omega_matrix(const RingSpec& spec, int n, const Ideal& ideal) {
  require_same_ring(spec, ideal.spec());
  if (spec.is_integers()) {
    SqMatrix g = SqMatrix::identity(spec, n);
    for (int round = 0; round < 3; ++round) {
      g *= omega_block_integers(n, ideal);
      g *= evaluate(elementary_word(spec, n, 1, 3, &ideal), n, spec);
      if (uniform(0, 2) == 0) {
        auto [p, q] = index_pair(n);
        SqMatrix flip = SqMatrix::identity(spec, n);
        flip.set(p, p, Integer(-1));
        flip.set(q, q, Integer(-1));
        g *= flip;
      }
    }
    return g;
  }

  const Integer step = ideal.lift_modulus();
  const long m = spec.modulus().get_si();
  const long off_count = Integer(spec.modulus() / step).get_si();
  SqMatrix g(spec, n);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        g.set(i, j, i == j ? Integer(uniform(0, m - 1)) : Integer(step * uniform(0, off_count - 1)));
    if (is_special_linear(g)) return g;
  }
  throw Error(ErrorKind::EnumerationLimit, "could not sample an element of Omega");
}

SqMatrix Sampler::gamma_matrix(const RingSpec& spec, int n, const Ideal& ideal) {
  std::vector<GroupExpr> parts;
  for (int k = 0; k < 4; ++k) {
    auto [p, q] = index_pair(n);
    if (coin()) {
      parts.push_back(GroupExpr::elem(p, q, ideal_element(ideal, 3)));
    } else {
      parts.push_back(GroupExpr::conjugation(GroupExpr::elem(q, p, value(spec, 3)),
                                             GroupExpr::elem(p, q, ideal_element(ideal, 3))));
    }
  }
  return evaluate(GroupExpr::product(std::move(parts)), n, spec);
}

SqMatrix Sampler::delta_matrix(const RingSpec& spec, int n, const Ideal& ideal) {
  const Ideal square = ideal.squared();
  std::vector<GroupExpr> parts{elementary_word(spec, n, static_cast<int>(uniform(2, 5)), 3, &ideal)};
  for (int k = 0; k < 2; ++k) {
    auto [p, q] = index_pair(n);
    parts.push_back(GroupExpr::conjugation(GroupExpr::elem(p, q, -RingValue::one(spec)),
                                           GroupExpr::elem(q, p, ideal_element(square, 2))));
    parts.push_back(GroupExpr::elem(q, p, ideal_element(square, 2)));
  }
  return evaluate(GroupExpr::product(std::move(parts)), n, spec);
}

GroupExpr Sampler::random_expr(const RingSpec& spec, int n, int depth, const Ideal* ideal, bool symbols) {
  const long pick = depth <= 0 ? uniform(0, symbols ? 1 : 0) : uniform(0, 5);
  auto coefficient = [&] { return ideal ? ideal_element(*ideal, 3) : value(spec, 3); };
  auto [p, q] = index_pair(n);
  switch (pick) {
    case 0:
      return GroupExpr::raw_elem(p, q, coefficient().value());
    case 1:
      if (symbols) return GroupExpr::raw_symbol(value(spec, 3).value(), value(spec, 3).value(), coefficient().value(), p, q);
      return GroupExpr::raw_elem(p, q, coefficient().value());
    case 2:
      return GroupExpr::raw_inverse(random_expr(spec, n, depth - 1, ideal, symbols));
    case 3: {
      std::vector<GroupExpr> factors;
      const long count = uniform(0, 3);
      for (long k = 0; k < count; ++k) factors.push_back(random_expr(spec, n, depth - 1, ideal, symbols));
      return GroupExpr::raw_product(std::move(factors));
    }
    case 4:
      return GroupExpr::raw_commutator(random_expr(spec, n, depth - 1, ideal, symbols),
                                       random_expr(spec, n, depth - 1, ideal, symbols));
    default:
      return GroupExpr::raw_conjugation(random_expr(spec, n, depth - 1, ideal, symbols),
                                        random_expr(spec, n, depth - 1, ideal, symbols));
  }
}

SlResidueMatrix Sampler::zero_trace_residue(const Ideal& ideal, int n, long bound) {
  SlResidueMatrix x(ideal, n);
  RingValue trace = RingValue::zero(ideal.spec());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == n && j == n) continue;
      const RingValue e = ideal_element(ideal, bound);
      x.set(i, j, e);
      if (i == j) trace += e;
    }
  }
  x.set(n, n, -trace);
  return x;
}

}  // namespace trueelem
