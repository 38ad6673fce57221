#include <doctest.h>

#include <functional>
#include <random>

#include "../oracle.hpp"
#include "trueelem/matrix.hpp"

using namespace trueelem;

namespace {
const RingSpec Z = RingSpec::integers();
RingValue zv(long v) { return RingValue(Z, v); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}
}  // namespace

TEST_SUITE("matrices") {
  TEST_CASE("elementary matrices") {
    CHECK(elementary(2, 1, 2, zv(1)) == SqMatrix(Z, {{1, 1}, {0, 1}}));
    CHECK(elementary(3, 2, 1, zv(0)).is_identity());
    CHECK(oracle::to_mat(elementary(3, 3, 1, zv(-5))) == oracle::elementary(3, 3, 1, -5));
    CHECK(kind_of([] { elementary(3, 2, 2, zv(1)); }) == ErrorKind::DiagonalIndex);
    CHECK(kind_of([] { elementary(3, 4, 1, zv(1)); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { elementary(3, 0, 1, zv(1)); }) == ErrorKind::IndexOutOfRange);
  }

  TEST_CASE("symbols") {
    CHECK(symbol(zv(1), zv(1), zv(1)) == SqMatrix(Z, {{2, -1}, {1, 0}}));
    CHECK(symbol(zv(7), zv(-4), zv(0)).is_identity());
    CHECK(symbol(zv(1), zv(0), zv(-9)) == elementary(2, 1, 2, zv(9)));
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y)
        for (long z = -3; z <= 3; ++z) CHECK(oracle::to_mat(symbol(zv(x), zv(y), zv(z))) == oracle::symbol(x, y, z));
    const RingSpec z8 = RingSpec::modular(8);
    CHECK(symbol(RingValue(z8, 3), RingValue(z8, 5), RingValue(z8, 7)) ==
          SqMatrix(z8, {{(1 + 105) % 8, 8 - (63 % 8)}, {175 % 8, ((1 - 105) % 8 + 8) % 8}}));
    CHECK_THROWS_AS(symbol(zv(1), RingValue(z8, 1), zv(1)), Error);
  }

  TEST_CASE("suspension") {
    const SqMatrix s = symbol(zv(1), zv(1), zv(1));
    CHECK(suspend(s, 1, 2, 3) == SqMatrix(Z, {{2, -1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK(suspend(SqMatrix::identity(Z, 2), 2, 4, 5).is_identity());
    CHECK(suspend(symbol(zv(2), zv(3), zv(1)), 1, 2, 3) == suspend(symbol(zv(3), zv(2), zv(-1)), 2, 1, 3));
    CHECK(oracle::to_mat(suspend(symbol(zv(2), zv(-1), zv(3)), 3, 1, 4)) ==
          oracle::suspend(oracle::symbol(2, -1, 3), 3, 1, 4));
    CHECK(kind_of([&] { suspend(s, 2, 2, 3); }) == ErrorKind::DiagonalIndex);
    CHECK(kind_of([&] { suspend(s, 1, 4, 3); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { suspend(SqMatrix(Z, {{2, 0}, {0, 1}}), 1, 2, 3); }) == ErrorKind::NotSpecialLinear);
  }

  TEST_CASE("determinant and inverse") {
    CHECK(det(SqMatrix::identity(Z, 4)).is_one());
    CHECK(inverse(SqMatrix::identity(Z, 4)).is_identity());
    CHECK(det(elementary(4, 2, 3, zv(11))).is_one());
    CHECK(inverse(elementary(4, 2, 3, zv(11))) == elementary(4, 2, 3, zv(-11)));
    CHECK(kind_of([] { inverse(SqMatrix(Z, {{2, 0}, {0, 1}})); }) == ErrorKind::NotUnit);
    const RingSpec z9 = RingSpec::modular(9);
    const SqMatrix g(z9, {{2, 0}, {0, 5}});
    CHECK((g * inverse(g)).is_identity());
  }

  TEST_CASE("determinant agrees with permutation expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int n = 1; n <= 6; ++n) {
      for (int t = 0; t < 20; ++t) {
        oracle::Mat m(n, std::vector<long long>(n));
        for (auto& r : m)
          for (auto& e : r) e = d(rng);
        CHECK(det(oracle::from_mat(Z, m)).value() == static_cast<long>(oracle::det(m)));
        const RingSpec z7 = RingSpec::modular(7);
        CHECK(det(oracle::from_mat(z7, m)).value() == static_cast<long>(oracle::reduce(oracle::det(m), 7)));
      }
    }
  }

  TEST_CASE("products agree with the naive product") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int t = 0; t < 50; ++t) {
      const int n = 2 + t % 4;
      oracle::Mat a(n, std::vector<long long>(n)), b = a;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          a[i][j] = d(rng);
          b[i][j] = d(rng);
        }
      CHECK(oracle::to_mat(oracle::from_mat(Z, a) * oracle::from_mat(Z, b)) == oracle::mul(a, b));
      const RingSpec z12 = RingSpec::modular(12);
      CHECK(oracle::to_mat(oracle::from_mat(z12, a) * oracle::from_mat(z12, b)) ==
            oracle::mul(oracle::to_mat(oracle::from_mat(z12, a)), oracle::to_mat(oracle::from_mat(z12, b)), 12));
    }
  }

  TEST_CASE("inverse of random special linear matrices") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-4, 4);
    std::uniform_int_distribution<int> idx(1, 4);
    for (int t = 0; t < 30; ++t) {
      SqMatrix g = SqMatrix::identity(Z, 4);
      for (int k = 0; k < 8; ++k) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        g *= elementary(4, i, j, zv(d(rng)));
      }
      CHECK((g * inverse(g)).is_identity());
      CHECK((inverse(g) * g).is_identity());
    }
  }

  TEST_CASE("congruence classes") {
    for (long N : {2L, 3L, 5L}) {
      const Ideal I(Z, N);
      for (auto kind : {CongruenceKind::Gamma, CongruenceKind::Delta, CongruenceKind::Omega})
        CHECK(in_class(SqMatrix::identity(Z, 3), {kind, I, 3}));
    }
    for (long N = 2; N <= 6; ++N) {
      const SqMatrix omega(Z, {{1 + N * N, -N * N}, {N * N, 1 - N * N}});
      CHECK(in_class(omega, {CongruenceKind::Delta, Ideal(Z, N), 2}));
      CHECK(in_class(omega, {CongruenceKind::Gamma, Ideal(Z, N * N), 2}));
    }
    const SqMatrix g(Z, {{2, 3, 0}, {3, 5, 0}, {0, 0, 1}});
    CHECK(in_class(g, {CongruenceKind::Omega, Ideal(Z, 3), 3}));
    CHECK_FALSE(in_class(g, {CongruenceKind::Gamma, Ideal(Z, 3), 3}));
    // e_12(2) is in Gamma((2)) but its diagonal is exactly 1, so also in Delta((2))
    CHECK(in_class(elementary(3, 1, 2, zv(2)), {CongruenceKind::Delta, Ideal(Z, 2), 3}));
    // (1+a, -a; a, 1-a) with a = 2 is in Gamma((2)) but not Delta((2))
    const SqMatrix h(Z, {{3, -2}, {2, -1}});
    CHECK(in_class(h, {CongruenceKind::Gamma, Ideal(Z, 2), 2}));
    CHECK_FALSE(in_class(h, {CongruenceKind::Delta, Ideal(Z, 2), 2}));
    CHECK(kind_of([] { in_class(SqMatrix(Z, {{3, 0}, {0, 1}}), {CongruenceKind::Gamma, Ideal(Z, 2), 2}); }) ==
          ErrorKind::NotSpecialLinear);
    CHECK(parse_congruence_kind("Delta") == CongruenceKind::Delta);
    CHECK_THROWS_AS(parse_congruence_kind("Sigma"), Error);
  }
}
