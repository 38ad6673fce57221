#include <doctest.h>

#include "../oracle.hpp"
#include "trueelem/sampling.hpp"
#include "trueelem/verify.hpp"

using namespace trueelem;

namespace {
const RingSpec Z = RingSpec::integers();
RingValue zv(long v) { return RingValue(Z, v); }

SqMatrix conjugate_oracle(const SqMatrix& g, int i, int j, long a) {
  const oracle::Mat G = oracle::to_mat(g), Gi = oracle::to_mat(inverse(g));
  return oracle::from_mat(Z, oracle::mul(oracle::mul(Gi, oracle::elementary(g.n(), i, j, a)), G));
}

bool is_single_letter(const GroupExpr& w, int i, int j, const Integer& a) {
  return w.kind() == ExprKind::Elem && w.first_index() == i && w.second_index() == j && w.coefficient(0) == a;
}

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

TEST_SUITE("factorization") {
  TEST_CASE("Suslin factorization of worked instances") {
    const SqMatrix id = SqMatrix::identity(Z, 3);
    const GroupExpr w = suslin_factorize(id, 1, 2, zv(5));
    CHECK(w.letter_count() == 1);
    CHECK(w.kind() == ExprKind::Symbol);
    CHECK(w.coefficients() == std::vector<Integer>{1, 0, -5});
    CHECK(evaluate(w, 3, Z) == elementary(3, 1, 2, zv(5)));

    const SqMatrix g = elementary(3, 2, 1, zv(1));
    const SqMatrix expected(Z, {{3, 2, 0}, {-2, -1, 0}, {0, 0, 1}});
    CHECK(conjugate_oracle(g, 1, 2, 2) == expected);
    CHECK(evaluate(suslin_factorize(g, 1, 2, zv(2)), 3, Z) == expected);
  }

  TEST_CASE("Suslin data and factor commutation") {
    Sampler rng(4);
    for (int t = 0; t < 30; ++t) {
      const SqMatrix g = rng.special_linear(Z, 4);
      const SuslinData d(g, 2, 4);
      RingValue wv = zv(0);
      for (int s = 1; s <= 4; ++s) wv += d.w()[s - 1] * d.v(s);
      CHECK(wv.is_zero());
      const auto factors = suslin_factors(d, zv(3));
      for (std::size_t p = 0; p < factors.size(); ++p)
        for (std::size_t q = p + 1; q < factors.size(); ++q) {
          const SqMatrix A = evaluate(factors[p].expr(), 4, Z), B = evaluate(factors[q].expr(), 4, Z);
          CHECK(A * B == B * A);
        }
      CHECK(evaluate(suslin_factorize(g, 2, 4, zv(3)), 4, Z) == conjugate_oracle(g, 2, 4, 3));
    }
    CHECK(kind_of([] { SuslinData(SqMatrix(Z, {{2, 0}, {0, 1}}), 1, 2); }) == ErrorKind::NotSpecialLinear);
    CHECK(kind_of([] { SuslinData(SqMatrix::identity(Z, 3), 1, 1); }) == ErrorKind::DiagonalIndex);
  }

  TEST_CASE("symbol as a commutator") {
    CHECK(evaluate(symbol_commutator_expr(zv(1), zv(1), zv(1), 1, 2, 3), 3, Z) ==
          SqMatrix(Z, {{2, -1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK(symbol_commutator_expr(zv(4), zv(5), zv(0), 1, 2, 3).is_identity());
    CHECK(helper_index(2, 3, 4) == 1);
    CHECK(oracle::to_mat(evaluate(symbol_commutator_expr(zv(2), zv(3), zv(5), 2, 3, 4), 4, Z)) ==
          oracle::suspend(oracle::symbol(2, 3, 5), 2, 3, 4));
    CHECK(kind_of([] { symbol_commutator_expr(zv(1), zv(1), zv(1), 1, 2, 2); }) == ErrorKind::DimensionTooSmall);
  }

  TEST_CASE("Tits commutator") {
    CHECK(oracle::to_mat(evaluate(tits_symbol_expr(zv(1), zv(1), zv(2), zv(3), 1, 2, 3), 3, Z)) ==
          oracle::suspend(oracle::symbol(1, 1, 6), 1, 2, 3));
    CHECK(evaluate(tits_symbol_expr(zv(3), zv(2), zv(0), zv(7), 1, 3, 3), 3, Z).is_identity());
  }

  TEST_CASE("symbols with z in the square of the ideal") {
    const Ideal I3(Z, 3);
    const GroupExpr w = symbol_expr_in_F(zv(1), zv(2), zv(9), 1, 2, 3, I3);
    CHECK(check_discipline(w, {DisciplineKind::CommF, I3}).ok);
    CHECK(check_discipline(GroupExpr::product({w.children()[0]}), {DisciplineKind::F, I3}).ok);
    CHECK(oracle::to_mat(evaluate(w, 3, Z)) == oracle::suspend(oracle::symbol(1, 2, 9), 1, 2, 3));
    CHECK(evaluate(symbol_expr_in_F(zv(1), zv(2), zv(0), 1, 2, 3, I3), 3, Z).is_identity());

    const RingSpec z8 = RingSpec::modular(8);
    const Ideal I2(z8, 2);
    const RingValue one(z8, 1L), four(z8, 4L);
    const GroupExpr w8 = symbol_expr_in_F(one, one, four, 1, 2, 3, I2);
    CHECK(check_discipline(w8, {DisciplineKind::CommF, I2}).ok);
    CHECK(evaluate(w8, 3, z8) == suspend(symbol(one, one, four), 1, 2, 3));
    CHECK(kind_of([&] { symbol_expr_in_F(zv(1), zv(1), zv(3), 1, 2, 3, I3); }) == ErrorKind::NotInIdeal);
  }

  TEST_CASE("elementary letters as commutators") {
    const Ideal I3(Z, 3);
    const GroupExpr w = elem_expr_in_commF(1, 3, zv(9), 3, I3);
    CHECK(w == GroupExpr::commutator(GroupExpr::elem(1, 2, zv(3)), GroupExpr::elem(2, 3, zv(3))));
    CHECK(evaluate(w, 3, Z) == elementary(3, 1, 3, zv(9)));
    CHECK(elem_expr_in_commF(1, 3, zv(0), 3, I3).is_identity());
    const GroupExpr w5 = elem_expr_in_commF(3, 1, zv(25), 4, Ideal(Z, 5));
    CHECK(w5.children()[0].second_index() == 2);
    CHECK(evaluate(w5, 4, Z) == elementary(4, 3, 1, zv(25)));
  }

  TEST_CASE("reduction of a suspended symbol") {
    const Ideal I3(Z, 3);
    const GroupExpr w = theoremN_symbol_expr(zv(1), zv(3), zv(3), 1, 2, 3, I3);
    CHECK(check_discipline(w, {DisciplineKind::F, I3}).ok);
    const SqMatrix expected(Z, {{10, -3, 0}, {27, -8, 0}, {0, 0, 1}});
    CHECK(oracle::to_mat(expected) == oracle::suspend(oracle::symbol(1, 3, 3), 1, 2, 3));
    CHECK(evaluate(w, 3, Z) == expected);

    const SymbolReduction red = reduce_symbol(zv(1), zv(3), zv(3), 1, 2, 3, I3);
    CHECK_FALSE(red.mirrored);
    CHECK(red.m == 3);
    CHECK(red.stages.size() == 7);
    CHECK(red.stages.front() == expected);
    CHECK(red.stages.back() == suspend(symbol(zv(1), zv(1), zv(-9)), 2, 3, 3));

    const GroupExpr m = theoremN_symbol_expr(zv(3), zv(1), zv(3), 1, 2, 3, I3);
    CHECK(check_discipline(m, {DisciplineKind::F, I3}).ok);
    CHECK(oracle::to_mat(evaluate(m, 3, Z)) == oracle::suspend(oracle::symbol(3, 1, 3), 1, 2, 3));
    const SymbolReduction mred = reduce_symbol(zv(3), zv(1), zv(3), 1, 2, 3, I3);
    CHECK(mred.mirrored);
    CHECK(mred.stages.back() == mred.target_inner);

    CHECK(theoremN_symbol_expr(zv(1), zv(3), zv(0), 1, 2, 3, I3).is_identity());
    CHECK(kind_of([&] { theoremN_symbol_expr(zv(1), zv(1), zv(3), 1, 2, 3, I3); }) == ErrorKind::NotInIdeal);
    CHECK(kind_of([&] { theoremN_symbol_expr(zv(1), zv(3), zv(1), 1, 2, 3, I3); }) == ErrorKind::NotInIdeal);
  }

  TEST_CASE("F certificates for conjugates by matrices diagonal mod the ideal") {
    const Ideal I3(Z, 3);
    const Certificate id = conjugate_in_F(SqMatrix::identity(Z, 3), 1, 2, zv(3), I3);
    CHECK(is_single_letter(id.witness, 1, 2, 3));
    CHECK(verify_certificate(id).ok);

    const SqMatrix g(Z, {{2, 3, 0}, {3, 5, 0}, {0, 0, 1}});
    const Certificate c = conjugate_in_F(g, 1, 2, zv(3), I3);
    CHECK(c.claim.target == conjugate_oracle(g, 1, 2, 3));
    CHECK(evaluate(c.witness, 3, Z) == conjugate_oracle(g, 1, 2, 3));
    CHECK(check_discipline(c.witness, {DisciplineKind::F, I3}).ok);
    CHECK(verify_certificate(c).ok);

    CHECK(kind_of([&] { conjugate_in_F(g, 1, 2, zv(1), I3); }) == ErrorKind::NotInIdeal);
    CHECK(kind_of([&] { conjugate_in_F(elementary(3, 2, 1, zv(1)), 1, 2, zv(3), I3); }) == ErrorKind::NotInClass);
    CHECK(kind_of([&] { conjugate_in_F(SqMatrix::identity(Z, 2), 1, 2, zv(3), I3); }) == ErrorKind::DimensionTooSmall);
  }

  TEST_CASE("F certificates over Z/8 with random diagonal-mod-2 conjugators") {
    const RingSpec z8 = RingSpec::modular(8);
    const Ideal I2(z8, 2);
    Sampler rng(8);
    ExpansionStats stats;
    for (int t = 0; t < 100; ++t) {
      const SqMatrix g = rng.omega_matrix(z8, 3, I2);
      auto [i, j] = rng.index_pair(3);
      const RingValue a = rng.ideal_element(I2, 3);
      const Certificate c = conjugate_in_F(g, i, j, a, I2, &stats);
      CHECK(c.claim.target == inverse(g) * elementary(3, i, j, a) * g);
      CHECK(verify_certificate(c).ok);
    }
    CHECK(stats.direct + stats.mirrored > 0);
  }

  TEST_CASE("E certificates") {
    const Ideal I2(Z, 2);
    const Certificate id = conjugate_in_E(SqMatrix::identity(Z, 3), 2, 3, zv(4), I2);
    CHECK(is_single_letter(id.witness, 2, 3, 4));
    const Certificate c = conjugate_in_E(elementary(3, 2, 1, zv(1)), 1, 2, zv(2), I2);
    CHECK(c.claim.target == SqMatrix(Z, {{3, 2, 0}, {-2, -1, 0}, {0, 0, 1}}));
    CHECK(check_discipline(c.witness, {DisciplineKind::E, I2}).ok);
    CHECK(verify_certificate(c).ok);
  }

  TEST_CASE("commutator certificates for a in the square of the ideal") {
    const Ideal I3(Z, 3);
    const Certificate id = normal_generator_in_F(GroupExpr(), 1, 2, zv(9), I3, 3);
    CHECK(id.witness == elem_expr_in_commF(1, 2, zv(9), 3, I3));

    const Certificate c = normal_generator_in_F(GroupExpr::elem(3, 1, zv(7)), 1, 2, zv(9), I3, 3);
    CHECK(c.claim.target == conjugate_oracle(elementary(3, 3, 1, zv(7)), 1, 2, 9));
    CHECK(verify_certificate(c).ok);

    const RingSpec z16 = RingSpec::modular(16);
    const Ideal I2(z16, 2);
    Sampler rng(16);
    for (int t = 0; t < 20; ++t) {
      const GroupExpr conj = rng.elementary_word(z16, 3, 3, 5);
      auto [i, j] = rng.index_pair(3);
      const Certificate cc = normal_generator_in_F(conj, i, j, RingValue(z16, 4L), I2, 3);
      CHECK(verify_certificate(cc).ok);
    }
    CHECK(kind_of([&] { normal_generator_in_F(GroupExpr(), 1, 2, zv(3), I3, 3); }) == ErrorKind::NotInIdeal);
  }

  TEST_CASE("subgroup-level conjugation") {
    const Ideal I2(Z, 2);
    Sampler rng(31);
    for (int t = 0; t < 20; ++t) {
      const GroupExpr f = rng.random_expr(Z, 3, 2, &I2, false);
      const SqMatrix g = rng.omega_matrix(Z, 3, I2);
      const Certificate c = conjugate_word_in_F(g, f, I2);
      CHECK(c.claim.target == inverse(g) * evaluate(f, 3, Z) * g);
      CHECK(verify_certificate(c).ok);
    }
    CHECK(kind_of([&] { conjugate_word_in_F(SqMatrix::identity(Z, 3), GroupExpr::elem(1, 2, zv(1)), I2); }) ==
          ErrorKind::NotInIdeal);
  }
}
