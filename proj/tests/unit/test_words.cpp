#include <doctest.h>

#include "../oracle.hpp"
#include "trueelem/io.hpp"
#include "trueelem/sampling.hpp"

using namespace trueelem;

namespace {
const RingSpec Z = RingSpec::integers();
RingValue zv(long v) { return RingValue(Z, v); }
GroupExpr e(int i, int j, long a) { return GroupExpr::elem(i, j, zv(a)); }
}  // namespace

TEST_SUITE("words") {
  TEST_CASE("evaluation of letters and commutators") {
    CHECK(evaluate(e(1, 2, 7), 3, Z) == elementary(3, 1, 2, zv(7)));
    for (long u = -3; u <= 3; ++u)
      for (long v = -3; v <= 3; ++v)
        CHECK(evaluate(GroupExpr::commutator(e(1, 2, u), e(2, 3, v)), 3, Z) == elementary(3, 1, 3, zv(u * v)));
    const GroupExpr w = GroupExpr::commutator(GroupExpr::product({e(1, 3, 1), e(2, 3, 1)}),
                                              GroupExpr::product({e(3, 1, 1), e(3, 2, -1)}));
    CHECK(evaluate(w, 3, Z) == SqMatrix(Z, {{2, -1, 0}, {1, 0, 0}, {0, 0, 1}}));
  }

  TEST_CASE("commutator and conjugation conventions") {
    const GroupExpr g = GroupExpr::product({e(1, 2, 2), e(3, 1, -1)});
    const GroupExpr h = GroupExpr::product({e(2, 3, 5), e(2, 1, 1)});
    const oracle::Mat G = oracle::to_mat(evaluate(g, 3, Z)), H = oracle::to_mat(evaluate(h, 3, Z));
    const oracle::Mat Gi = oracle::to_mat(inverse(evaluate(g, 3, Z))), Hi = oracle::to_mat(inverse(evaluate(h, 3, Z)));
    CHECK(oracle::to_mat(evaluate(GroupExpr::commutator(g, h), 3, Z)) ==
          oracle::mul(oracle::mul(Gi, Hi), oracle::mul(G, H)));
    CHECK(oracle::to_mat(evaluate(GroupExpr::conjugation(g, h), 3, Z)) == oracle::mul(oracle::mul(Gi, H), G));
    CHECK(oracle::to_mat(evaluate(GroupExpr::raw_symbol(2, 3, 5, 3, 1), 3, Z)) ==
          oracle::suspend(oracle::symbol(2, 3, 5), 3, 1, 3));
    CHECK(evaluate(GroupExpr::inverse(GroupExpr::raw_symbol(2, 3, 5, 1, 2)), 3, Z) ==
          inverse(suspend(symbol(zv(2), zv(3), zv(5)), 1, 2, 3)));
  }

  TEST_CASE("canonical builders simplify") {
    CHECK(e(1, 2, 0).is_identity());
    CHECK(GroupExpr::inverse(GroupExpr::inverse(e(1, 2, 3))) == e(1, 2, 3));
    CHECK(GroupExpr::product({e(1, 2, 3)}) == e(1, 2, 3));
    CHECK(GroupExpr::product({GroupExpr::product({e(1, 2, 3), e(2, 1, 1)}), e(1, 3, 1)}).children().size() == 3);
    CHECK(GroupExpr::commutator(GroupExpr(), e(1, 2, 1)).is_identity());
    CHECK(GroupExpr::conjugation(e(2, 1, 4), GroupExpr()).is_identity());
    CHECK(GroupExpr::product({e(1, 2, 3), e(2, 1, 1), e(1, 3, 0)}).letter_count() == 2);
  }

  TEST_CASE("index validation") {
    CHECK_NOTHROW(validate_indices(e(1, 3, 1), 3));
    CHECK_THROWS_AS(validate_indices(e(1, 4, 1), 3), Error);
    CHECK_THROWS_AS(validate_indices(GroupExpr::raw_elem(2, 2, 1), 3), Error);
    CHECK_THROWS_AS(evaluate(GroupExpr::raw_inverse(GroupExpr::raw_elem(0, 1, 1)), 3, Z), Error);
  }

  TEST_CASE("F discipline") {
    const Discipline F3{DisciplineKind::F, Ideal(Z, 3)};
    CHECK(check_discipline(e(1, 2, 6), F3).ok);
    CHECK_FALSE(check_discipline(GroupExpr::raw_symbol(1, 1, 3, 1, 2), F3).ok);
    const auto bad = check_discipline(GroupExpr::product({e(1, 2, 3), GroupExpr::conjugation(e(2, 1, 1), e(1, 3, 6))}), F3);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation.find("e21(1)") != std::string::npos);
    CHECK(bad.violation.find("outside (3)") != std::string::npos);
    CHECK(check_discipline(GroupExpr::commutator(e(1, 2, 3), e(2, 3, -3)), F3).ok);
  }

  TEST_CASE("E discipline") {
    const Discipline E3{DisciplineKind::E, Ideal(Z, 3)};
    const GroupExpr any = GroupExpr::product({e(2, 1, 1), GroupExpr::raw_symbol(1, 2, 1, 1, 3)});
    CHECK(check_discipline(GroupExpr::conjugation(any, e(1, 2, 3)), E3).ok);
    CHECK_FALSE(check_discipline(GroupExpr::conjugation(e(1, 2, 3), any), E3).ok);
    CHECK(check_discipline(GroupExpr::commutator(e(1, 3, 3), any), E3).ok);
    CHECK_FALSE(check_discipline(GroupExpr::commutator(any, e(1, 3, 3)), E3).ok);
    CHECK_FALSE(check_discipline(e(1, 2, 1), E3).ok);
  }

  TEST_CASE("CommF discipline") {
    const Discipline C2{DisciplineKind::CommF, Ideal(Z, 2)};
    const GroupExpr c = GroupExpr::commutator(e(1, 2, 2), e(2, 3, 4));
    CHECK(check_discipline(c, C2).ok);
    CHECK(check_discipline(GroupExpr::product({c, GroupExpr::inverse(c)}), C2).ok);
    CHECK_FALSE(check_discipline(e(1, 2, 4), C2).ok);
    CHECK_FALSE(check_discipline(GroupExpr::commutator(e(1, 2, 1), e(2, 3, 4)), C2).ok);
    CHECK(check_discipline(GroupExpr::raw_symbol(1, 1, 1, 1, 2), {DisciplineKind::Unrestricted, Ideal(Z, 2)}).ok);
    CHECK(parse_discipline_kind("CommF") == DisciplineKind::CommF);
  }

  TEST_CASE("evaluation is a homomorphism on random expressions") {
    Sampler rng(17);
    for (const char* ring : {"Z", "Z/12"}) {
      const RingSpec spec = RingSpec::parse(ring);
      for (int t = 0; t < 40; ++t) {
        const int n = 3 + t % 2;
        const GroupExpr u = rng.random_expr(spec, n, 3), v = rng.random_expr(spec, n, 3);
        const SqMatrix eu = evaluate(u, n, spec), ev = evaluate(v, n, spec);
        CHECK(evaluate(GroupExpr::raw_product({u, v}), n, spec) == eu * ev);
        CHECK((evaluate(GroupExpr::raw_inverse(u), n, spec) * eu).is_identity());
      }
    }
  }

  TEST_CASE("JSON round trip keeps the exact tree") {
    Sampler rng(23);
    for (int t = 0; t < 40; ++t) {
      const GroupExpr w = rng.random_expr(Z, 4, 4);
      CHECK(word_from_json(parse_json(to_json(w).dump())) == w);
    }
    const GroupExpr raw = GroupExpr::raw_product({GroupExpr::raw_elem(1, 2, 0), GroupExpr::raw_product({})});
    CHECK(word_from_json(to_json(raw)) == raw);
    CHECK_THROWS_AS(word_from_json(parse_json(R"({"kind":"elem","i":1,"j":2})")), Error);
    CHECK_THROWS_AS(word_from_json(parse_json(R"({"kind":"twist"})")), Error);
    CHECK(word_from_json(parse_json(R"({"kind":"elem","i":1,"j":2,"a":"123456789012345678901234567890"})"))
              .coefficient(0)
              .get_str() == "123456789012345678901234567890");
  }
}
