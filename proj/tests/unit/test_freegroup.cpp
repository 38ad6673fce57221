#include <doctest.h>

#include <random>

#include "../oracle.hpp"
#include "trueelem/freegroup.hpp"

using namespace trueelem;

namespace {
FreeWord W(const char* s) { return FreeWord::parse(s); }
}  // namespace

TEST_SUITE("freegroup") {
  TEST_CASE("parsing and free reduction") {
    CHECK(W("a a^-1").empty());
    CHECK(W("a b^4 a^-1").to_string() == "a b^4 a^-1");
    CHECK(W("a b^2 b^-2 a") == W("a^2"));
    CHECK(W("a b^2 b^-2 a").length() == 2);
    CHECK(W("1").empty());
    CHECK(W("").to_string() == "1");
    CHECK((W("a b") * W("b^-1 a^-1")).empty());
    CHECK(W("a^3 b^-2").inverse() == W("b^2 a^-3"));
    CHECK(free_reduce({{'a', 2}, {'a', -2}, {'b', 1}}) == W("b"));
    CHECK_THROWS_AS(W("c"), Error);
    CHECK_THROWS_AS(W("a^"), Error);
    CHECK_THROWS_AS(W("a^x"), Error);
  }

  TEST_CASE("Stallings membership in <a^4, b>") {
    const std::vector<FreeWord> gens{W("a^4"), W("b")};
    CHECK_FALSE(stallings_member(W("a b^4 a^-1"), gens));
    CHECK(stallings_member(W("b^7"), gens));
    CHECK(stallings_member(W("a^4 b a^-4 b^-1"), gens));
    CHECK(stallings_member(W(""), gens));
    CHECK_FALSE(stallings_member(W("a^2"), gens));
    CHECK(stallings_member(W("a^-8 b^3 a^12"), gens));
    CHECK_FALSE(stallings_member(W("a b^-4 a^4 b^4 a^-1"), gens));
    CHECK_THROWS_AS(stallings_member(W("a"), {}), Error);
  }

  TEST_CASE("folding a petal whose petals overlap") {
    SubgroupAutomaton a = SubgroupAutomaton::petal({W("a b a^-1"), W("a b^2 a^-1")});
    a.fold();
    CHECK(a.is_folded());
    CHECK(a.accepts(W("a b a^-1")));
    CHECK(a.accepts(W("a b^5 a^-1")));
    CHECK_FALSE(a.accepts(W("b")));
    // <a b a^-1, a b^2 a^-1> = <a b a^-1>: two vertices, a loop at the second
    CHECK(a.vertex_count() == 2);
    CHECK(a.edges().size() == 2);
  }

  TEST_CASE("folding order does not matter") {
    std::mt19937_64 rng(2);
    const std::vector<FreeWord> gens{W("a^2 b a^-1"), W("a b^-1 a^3"), W("b a^2 b")};
    SubgroupAutomaton ref = SubgroupAutomaton::petal(gens);
    ref.fold();
    for (int t = 0; t < 20; ++t) {
      SubgroupAutomaton s = SubgroupAutomaton::petal(gens);
      s.fold(&rng);
      CHECK(s.canonical_form() == ref.canonical_form());
    }
  }

  TEST_CASE("matrices of words") {
    CHECK(matrix_of_word(W(""), Integer(4)).is_identity());
    CHECK(matrix_of_word(W("a b^4 a^-1"), Integer(4)) == SqMatrix(RingSpec::integers(), {{17, -16}, {16, -15}}));
    CHECK(matrix_of_word(W("b^3"), Integer(2)) == SqMatrix(RingSpec::integers(), {{1, 0}, {6, 1}}));
    // direct product of the generator matrices
    const oracle::Mat alpha{{1, 1}, {0, 1}}, alpha_inv{{1, -1}, {0, 1}}, beta5{{1, 0}, {5, 1}};
    oracle::Mat expected = oracle::mul(oracle::mul(alpha, alpha), oracle::mul(beta5, alpha_inv));
    CHECK(oracle::to_mat(matrix_of_word(W("a^2 b a^-1"), Integer(5))) == expected);
    CHECK_THROWS_AS(matrix_of_word(W("a"), Integer(0)), Error);
  }

  TEST_CASE("counterexample reports") {
    for (long long N = 4; N <= 8; ++N) {
      const CounterexampleReport r = counterexample_report(N);
      CHECK(r.all_pass());
      CHECK(r.checks.size() >= 3);
      const long long NN = N * N;
      CHECK(r.omega == SqMatrix(RingSpec::integers(), {{static_cast<long>(1 + NN), static_cast<long>(-NN)},
                                                        {static_cast<long>(NN), static_cast<long>(1 - NN)}}));
    }
    CHECK_THROWS_AS(counterexample_report(3), Error);
  }
}
