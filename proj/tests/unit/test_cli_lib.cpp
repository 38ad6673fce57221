#include <doctest.h>

#include "trueelem/sampling.hpp"
#include "trueelem/suite.hpp"
#include "trueelem/verify.hpp"

using namespace trueelem;

namespace {
const RingSpec Z = RingSpec::integers();
RingValue zv(long v) { return RingValue(Z, v); }

Certificate sample_certificate() {
  const SqMatrix g(Z, {{2, 3, 0}, {3, 5, 0}, {0, 0, 1}});
  return conjugate_in_F(g, 1, 2, zv(3), Ideal(Z, 3));
}

bool mentions(const VerificationResult& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

// First elem node in document order.
Json* first_elem(Json& j) {
  if (j.is_object() && j.value("kind", "") == "elem") return &j;
  if (j.is_object() || j.is_array())
    for (auto& c : j)
      if (Json* hit = first_elem(c)) return hit;
  return nullptr;
}
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("certificates survive JSON and re-verify") {
    const Certificate c = sample_certificate();
    const std::string text = to_json(c).dump();
    CHECK(verify_certificate_text(text).ok);
    const Certificate back = certificate_from_json(parse_json(text));
    CHECK(back.witness == c.witness);
    CHECK(back.claim.target == c.claim.target);
  }

  TEST_CASE("verifier names each corruption") {
    Json doc = to_json(sample_certificate());

    Json bumped = doc;
    Json* e = first_elem(bumped["witness"]);
    REQUIRE(e != nullptr);
    (*e)["a"] = Integer(integer_from_json((*e)["a"]) + 1).get_str();
    const VerificationResult r1 = verify_certificate_text(bumped.dump());
    CHECK_FALSE(r1.ok);
    CHECK(mentions(r1, "discipline F"));

    Json wrong_index = doc;
    e = first_elem(wrong_index["witness"]);
    (*e)["i"] = 7;
    const VerificationResult r2 = verify_certificate_text(wrong_index.dump());
    CHECK_FALSE(r2.ok);
    CHECK(mentions(r2, "index"));

    Json altered = doc;
    altered["claim"]["target"]["entries"][0][2] = "3";
    const VerificationResult r3 = verify_certificate_text(altered.dump());
    CHECK_FALSE(r3.ok);
    CHECK(mentions(r3, "evaluation"));
  }

  TEST_CASE("malformed certificates are parse errors") {
    const std::string text = to_json(sample_certificate()).dump();
    auto kind_of = [](const std::string& t) {
      try {
        verify_certificate_text(t);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::InvalidArgument;
    };
    CHECK(kind_of(text.substr(0, text.size() / 2)) == ErrorKind::Parse);
    CHECK(kind_of("{}") == ErrorKind::Parse);
    CHECK(kind_of(R"j({"claim":{"ring":"Z","n":2,"ideal":"(2)","discipline":"F","target":{"ring":"Z","entries":[[1,0],[0]]}},"witness":{"kind":"prod","factors":[]}})j") ==
          ErrorKind::Parse);
  }

  TEST_CASE("matrix JSON") {
    const SqMatrix m(RingSpec::modular(12), {{1, 5}, {7, 0}});
    CHECK(matrix_from_json(to_json(m)) == m);
    CHECK(matrix_from_json(parse_json(R"([[1,"-2"],[3,4]])"), Z) == SqMatrix(Z, {{1, -2}, {3, 4}}));
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"([[1,2],[3]])"), Z), Error);
    CHECK_THROWS_AS(parse_json("[1,"), Error);
  }

  TEST_CASE("samplers are deterministic and land in their classes") {
    Sampler a(42), b(42);
    const RingSpec z12 = RingSpec::modular(12);
    const Ideal I(z12, 2);
    for (int t = 0; t < 10; ++t) {
      const SqMatrix x = a.omega_matrix(z12, 3, I), y = b.omega_matrix(z12, 3, I);
      CHECK(x == y);
      CHECK(in_class(x, {CongruenceKind::Omega, I, 3}));
      CHECK(in_class(a.gamma_matrix(z12, 3, I), {CongruenceKind::Gamma, I, 3}));
      CHECK(in_class(a.delta_matrix(z12, 3, I), {CongruenceKind::Delta, I, 3}));
      b.gamma_matrix(z12, 3, I);
      b.delta_matrix(z12, 3, I);
      const Ideal I3(Z, 3);
      const SqMatrix o = a.omega_matrix(Z, 4, I3);
      b.omega_matrix(Z, 4, I3);
      CHECK(in_class(o, {CongruenceKind::Omega, I3, 4}));
    }
  }

  TEST_CASE("suite passes, is reproducible and rejects n = 2 expansions") {
    SuiteConfig config;
    config.cases = 12;
    config.free_syllables = 5;
    const SuiteReport r = run_suite(config);
    CHECK(r.all_pass());
    CHECK(to_json(run_suite(config)).dump() == to_json(r).dump());

    config.seed = 2;
    const SuiteReport r2 = run_suite(config);
    CHECK(r2.all_pass());
    CHECK(r2.properties.size() == r.properties.size());

    config.dims = {2};
    config.only = {"factorization.certificate_F", "factorization.suslin_factorization"};
    const SuiteReport r3 = run_suite(config);
    REQUIRE(r3.properties.size() == 2);
    CHECK(r3.properties[0].name == "factorization.suslin_factorization");
    CHECK(r3.properties[0].passed == 12);
    CHECK(r3.properties[1].rejected == 12);
    CHECK(r3.properties[1].rejection.find("n >= 3") != std::string::npos);
    CHECK(r3.all_pass());
  }

  TEST_CASE("suite config errors") {
    CHECK_THROWS_AS(suite_config_from_json(parse_json(R"({"dims":[1]})")), Error);
    CHECK_THROWS_AS(suite_config_from_json(parse_json(R"({"rings":["Q"]})")), Error);
    CHECK_THROWS_AS(suite_config_from_json(parse_json(R"({"colour":"red"})")), Error);
    CHECK_THROWS_AS(suite_config_from_json(parse_json(R"({"cases":"many"})")), Error);
    CHECK_THROWS_AS(suite_config_from_json(parse_json(R"({"only":["no.such"]})")), Error);
    const SuiteConfig c = suite_config_from_json(parse_json(R"({"seed":9,"cases":3,"ideals":[5]})"));
    CHECK(c.seed == 9);
    CHECK(c.ideal_generators == std::vector<long>{5});
  }
}
