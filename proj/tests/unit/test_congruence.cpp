#include <doctest.h>

#include <set>

#include "../oracle.hpp"
#include "trueelem/sampling.hpp"

using namespace trueelem;

namespace {
const RingSpec Z = RingSpec::integers();
RingValue zv(long v) { return RingValue(Z, v); }

struct Counts {
  long omega = 0, gamma = 0, delta = 0, gamma_sq = 0;
};

// Brute force over every n x n matrix over Z/m, independent of the odometer.
Counts brute_force_orders(long m, int n, long N) {
  const long NN = N * N;
  auto mod = [&](long x, long d) { return ((x % d) + d) % d; };
  auto divides = [&](long d, long x) { return d == 0 ? mod(x, m) == 0 : mod(mod(x, m), std::gcd(d, m)) == 0; };
  Counts c;
  const int cells = n * n;
  long total = 1;
  for (int k = 0; k < cells; ++k) total *= m;
  oracle::Mat a(n, std::vector<long long>(n));
  for (long code = 0; code < total; ++code) {
    long rest = code;
    for (int k = 0; k < cells; ++k) {
      a[k / n][k % n] = rest % m;
      rest /= m;
    }
    if (mod(static_cast<long>(oracle::det(a)), m) != 1) continue;
    bool offdiag_N = true, diag_N = true, diag_NN = true, offdiag_NN = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          diag_N = diag_N && divides(N, a[i][j] - 1);
          diag_NN = diag_NN && divides(NN, a[i][j] - 1);
        } else {
          offdiag_N = offdiag_N && divides(N, a[i][j]);
          offdiag_NN = offdiag_NN && divides(NN, a[i][j]);
        }
      }
    if (!offdiag_N) continue;
    ++c.omega;
    if (!diag_N) continue;
    ++c.gamma;
    if (diag_NN) ++c.delta;
    if (diag_NN && offdiag_NN) ++c.gamma_sq;
  }
  return c;
}
}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("reduction of a suspended symbol") {
    const SlResidueMatrix r = reduce_r(suspend(symbol(zv(1), zv(1), zv(2)), 1, 2, 3), Ideal(Z, 2));
    CHECK(r.canonical_rows() == std::vector<std::vector<Integer>>{{2, 2, 0}, {2, 2, 0}, {0, 0, 0}});
    SlResidueMatrix expected(Ideal(Z, 2), {{2, -2, 0}, {2, -2, 0}, {0, 0, 0}});
    CHECK(r == expected);
    CHECK(r.has_zero_trace());
    CHECK_FALSE(r.has_zero_diagonal());
    CHECK_THROWS_AS(reduce_r(elementary(3, 1, 2, zv(1)), Ideal(Z, 2)), Error);
    CHECK_THROWS_AS(SlResidueMatrix(Ideal(Z, 2), {{1, 0}, {0, 0}}), Error);
  }

  TEST_CASE("preimages of zero-trace residues") {
    const Ideal I2(Z, 2);
    const Preimage zero = preimage_r(SlResidueMatrix(I2, 3));
    CHECK(zero.matrix.is_identity());

    const SlResidueMatrix x(I2, {{-2, 0}, {0, 2}});
    const Preimage p = preimage_r(x);
    CHECK(reduce_r(p.matrix, I2) == x);
    CHECK(check_discipline(p.word, {DisciplineKind::E, I2}).ok);
    CHECK(evaluate(p.word, 2, Z) == p.matrix);

    CHECK_THROWS_AS(preimage_r(SlResidueMatrix(I2, {{2, 0}, {0, 0}})), Error);

    const RingSpec z8 = RingSpec::modular(8);
    const Ideal I8(z8, 2);
    Sampler rng(100);
    for (int t = 0; t < 100; ++t) {
      const SlResidueMatrix target = rng.zero_trace_residue(I8, 3);
      const Preimage q = preimage_r(target);
      CHECK(reduce_r(q.matrix, I8) == target);
      CHECK(in_class(q.matrix, {CongruenceKind::Gamma, I8, 3}));
    }
  }

  TEST_CASE("approximation by elementary words") {
    const Ideal I3(Z, 3);
    const Approximation id = approximate_by_elementary(SqMatrix::identity(Z, 3), CongruenceKind::Delta, I3);
    CHECK(id.word.is_identity());
    CHECK(id.remainder.is_identity());

    const SqMatrix g = elementary(3, 1, 2, zv(3)) * elementary(3, 2, 1, zv(3));
    const Approximation a = approximate_by_elementary(g, CongruenceKind::Delta, I3);
    CHECK(a.word.letter_count() == 2);
    CHECK(in_class(a.remainder, {CongruenceKind::Gamma, Ideal(Z, 9), 3}));
    CHECK(evaluate(a.word, 3, Z) * a.remainder == g);

    const RingSpec z8 = RingSpec::modular(8);
    const Ideal I8(z8, 2);
    const auto delta = enumerate_class(z8, 3, CongruenceKind::Delta, I8);
    std::size_t checked = 0;
    for (std::size_t k = 0; k < delta.size() && checked < 100; k += delta.size() / 100 + 1, ++checked) {
      const Approximation s = approximate_by_elementary(delta[k], CongruenceKind::Delta, I8);
      CHECK(check_discipline(s.word, {DisciplineKind::F, I8}).ok);
      CHECK(evaluate(s.word, 3, z8) * s.remainder == delta[k]);
      CHECK(in_class(s.remainder, {CongruenceKind::Gamma, I8.squared(), 3}));
    }
    CHECK(checked == 100);
    CHECK_THROWS_AS(approximate_by_elementary(SqMatrix(Z, {{3, -2}, {2, -1}}), CongruenceKind::Delta, Ideal(Z, 2)),
                    Error);
    CHECK_THROWS_AS(approximate_by_elementary(SqMatrix::identity(Z, 2), CongruenceKind::Omega, Ideal(Z, 2)), Error);
  }

  TEST_CASE("squeeze witnesses") {
    const Ideal I3(Z, 3);
    const Approximation id = squeeze_witness(SqMatrix::identity(Z, 3), I3);
    CHECK(id.word.is_identity());
    CHECK(id.remainder.is_identity());
    // e_13(3) times the second-level matrix 1 + 9 E_11 - 9 E_22 - 9 E_12 + 9 E_21
    const SqMatrix g = elementary(3, 1, 3, zv(3)) * suspend(SqMatrix(Z, {{10, -9}, {9, -8}}), 1, 2, 3);
    CHECK(in_class(g, {CongruenceKind::Delta, I3, 3}));
    const Approximation s = squeeze_witness(g, I3);
    CHECK(check_discipline(s.word, {DisciplineKind::F, I3}).ok);
    CHECK(evaluate(s.word, 3, Z) * s.remainder == g);
    CHECK(in_class(s.remainder, {CongruenceKind::Gamma, Ideal(Z, 9), 3}));
    CHECK_THROWS_AS(squeeze_witness(SqMatrix::identity(Z, 2), I3), Error);
  }

  TEST_CASE("exhaustive quotient orders") {
    const RingSpec z4 = RingSpec::modular(4);
    const OrderReport r = enumerate_orders(z4, 3, Ideal(z4, 2));
    CHECK(r.gamma == 256);
    CHECK(r.delta == 64);
    CHECK(r.gamma_sq == 1);
    CHECK(r.all_pass());
    const Counts bf = brute_force_orders(4, 3, 2);
    CHECK(r.omega == bf.omega);
    CHECK(r.gamma == bf.gamma);
    CHECK(r.delta == bf.delta);
    CHECK(r.gamma_sq == bf.gamma_sq);

    const OrderReport r2 = enumerate_orders(z4, 2, Ideal(z4, 2));
    CHECK(r2.gamma / r2.delta == 2);

    const RingSpec z9 = RingSpec::modular(9);
    const OrderReport r9 = enumerate_orders(z9, 2, Ideal(z9, 3));
    CHECK(r9.omega / r9.gamma == 2);
    CHECK(r9.all_pass());
    const Counts bf9 = brute_force_orders(9, 2, 3);
    CHECK(r9.omega == bf9.omega);
    CHECK(r9.gamma == bf9.gamma);

    for (long m : {6L, 8L, 12L}) {
      const RingSpec zm = RingSpec::modular(m);
      const OrderReport rm = enumerate_orders(zm, 2, Ideal(zm, 2));
      const Counts b = brute_force_orders(m, 2, 2);
      CHECK(rm.omega == b.omega);
      CHECK(rm.delta == b.delta);
      CHECK(rm.all_pass());
    }
    CHECK_THROWS_AS(enumerate_orders(z4, 3, Ideal(z4, 2), 100), Error);
    CHECK_THROWS_AS(enumerate_orders(Z, 2, Ideal(Z, 2)), Error);
  }

  TEST_CASE("reduction kernel and the zero-diagonal preimage, exhaustively") {
    const RingSpec z4 = RingSpec::modular(4);
    const Ideal I2(z4, 2);
    const auto gamma = enumerate_class(z4, 3, CongruenceKind::Gamma, I2);
    CHECK(gamma.size() == 256);
    std::set<std::vector<std::vector<Integer>>> image;
    for (const auto& g : gamma) {
      const SlResidueMatrix r = reduce_r(g, I2);
      image.insert(r.canonical_rows());
      CHECK(r.is_zero() == g.is_identity());
      CHECK(r.has_zero_diagonal() == in_class(g, {CongruenceKind::Delta, I2, 3}));
    }
    CHECK(image.size() == 256);
  }

  TEST_CASE("reduction is additive") {
    Sampler rng(9);
    for (const char* ring : {"Z", "Z/8", "Z/12"}) {
      const RingSpec spec = RingSpec::parse(ring);
      const Ideal I(spec, 2);
      for (int t = 0; t < 20; ++t) {
        const SqMatrix g = rng.gamma_matrix(spec, 3, I), h = rng.gamma_matrix(spec, 3, I);
        CHECK(reduce_r(g * h, I) == reduce_r(g, I) + reduce_r(h, I));
        CHECK(reduce_r(g, I).has_zero_trace());
      }
    }
  }
}
