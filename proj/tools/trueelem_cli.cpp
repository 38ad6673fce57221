// Command-line front end. Requests arrive as JSON on stdin (or --input FILE),
// or are sampled from --seed with --random. Exit codes: 0 success,
// 1 verification or property failure, 2 malformed input or bad arguments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "trueelem/sampling.hpp"
#include "trueelem/suite.hpp"
#include "trueelem/verify.hpp"

using namespace trueelem;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kMalformed = 2;

struct Options {
  std::string ring = "Z";
  std::string ideal = "(2)";
  int n = 3;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string input = "-";
  bool random = false;
};

struct Context {
  RingSpec ring;
  Ideal ideal;
  int n;
  Sampler rng;
  bool text;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json read_request(const Options& o) { return parse_json(read_input(o.input)); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Parse, std::string("malformed JSON: request needs field '") + key + "'");
  return j.at(key);
}

int int_at(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) throw Error(ErrorKind::Parse, std::string("malformed JSON: '") + key + "' must be an integer");
  return v.get<int>();
}

RingValue value_at(const Json& j, const char* key, const RingSpec& ring) {
  return RingValue(ring, integer_from_json(need(j, key)));
}

// Either a bare entries array over --ring or a full matrix object.
SqMatrix matrix_at(const Json& j, const char* key, const RingSpec& ring) {
  const Json& v = need(j, key);
  SqMatrix m = v.is_object() ? matrix_from_json(v) : matrix_from_json(v, ring);
  if (!(m.spec() == ring)) throw Error(ErrorKind::RingMismatch, std::string("'") + key + "' lives over " + m.spec().to_string() + ", not " + ring.to_string());
  return m;
}

Json residue_entries(const SlResidueMatrix& r) { return to_json(r); }

void emit(const Context& c, const Json& j, const std::string& text) {
  if (c.text) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

struct Conjugation {
  SqMatrix g;
  int i, j;
  RingValue a;
};

Conjugation conjugation_request(Context& c, const Options& o, CongruenceKind sample_from, const Ideal* coeff_ideal) {
  if (o.random) {
    SqMatrix g = sample_from == CongruenceKind::Omega ? c.rng.omega_matrix(c.ring, c.n, c.ideal)
                                                      : c.rng.special_linear(c.ring, c.n);
    auto [i, j] = c.rng.index_pair(c.n);
    RingValue a = coeff_ideal ? c.rng.ideal_element(*coeff_ideal, 5) : c.rng.value(c.ring, 5);
    return {std::move(g), i, j, std::move(a)};
  }
  const Json req = read_request(o);
  return {matrix_at(req, "g", c.ring), int_at(req, "i"), int_at(req, "j"), value_at(req, "a", c.ring)};
}

Json conjugation_input(const Conjugation& q) {
  return Json{{"g", to_json(q.g)}, {"i", q.i}, {"j", q.j}, {"a", q.a.value().get_str()}};
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream out;
  out << "target " << cert.claim.target.to_string() << "\n"
      << "discipline " << to_string(cert.claim.discipline.kind) << " over " << cert.claim.discipline.ideal.to_string()
      << "\n"
      << "witness (" << cert.witness.letter_count() << " letters) " << cert.witness.to_string() << "\n";
  return out.str();
}

int cmd_factorize(Context& c, const Options& o) {
  const Conjugation q = conjugation_request(c, o, CongruenceKind::Gamma, nullptr);
  const GroupExpr w = suslin_factorize(q.g, q.i, q.j, q.a);
  const SqMatrix expected = inverse(q.g) * elementary(c.n, q.i, q.j, q.a) * q.g;
  const SqMatrix value = evaluate(w, q.g.n(), q.g.spec());
  const bool ok = value == expected;
  emit(c, Json{{"input", conjugation_input(q)}, {"word", to_json(w)}, {"value", to_json(value)}, {"ok", ok}},
       w.to_string() + "\n= " + value.to_string() + (ok ? "  (matches g^-1 e_ij(a) g)" : "  (MISMATCH)"));
  return ok ? kOk : kFailed;
}

int cmd_conjugate(Context& c, const Options& o, bool in_f) {
  const Conjugation q = conjugation_request(c, o, in_f ? CongruenceKind::Omega : CongruenceKind::Gamma, &c.ideal);
  ExpansionStats stats;
  const Certificate cert =
      in_f ? conjugate_in_F(q.g, q.i, q.j, q.a, c.ideal, &stats) : conjugate_in_E(q.g, q.i, q.j, q.a, c.ideal);
  Json out = to_json(cert);
  if (in_f) out["symbol_cases"] = Json{{"direct", stats.direct}, {"mirrored", stats.mirrored}};
  emit(c, out, certificate_text(cert));
  return kOk;
}

int cmd_tits(Context& c, const Options& o) {
  GroupExpr conj;
  int i, j;
  RingValue a = RingValue::zero(c.ring);
  const Ideal square = c.ideal.squared();
  if (o.random) {
    conj = c.rng.elementary_word(c.ring, c.n, 4, 3);
    std::tie(i, j) = c.rng.index_pair(c.n);
    a = c.rng.ideal_element(square, 5);
  } else {
    const Json req = read_request(o);
    if (req.contains("c_word")) {
      conj = word_from_json(req.at("c_word"));
    } else {
      const SqMatrix m = matrix_at(req, "c", c.ring);
      const Certificate cert = normal_generator_in_F(m, int_at(req, "i"), int_at(req, "j"), value_at(req, "a", c.ring), c.ideal);
      emit(c, to_json(cert), certificate_text(cert));
      return kOk;
    }
    i = int_at(req, "i");
    j = int_at(req, "j");
    a = value_at(req, "a", c.ring);
  }
  const Certificate cert = normal_generator_in_F(conj, i, j, a, c.ideal, c.n);
  emit(c, to_json(cert), certificate_text(cert));
  return kOk;
}

int cmd_reduce_symbol(Context& c, const Options& o) {
  RingValue x = RingValue::zero(c.ring), y = x, z = x;
  int k, l;
  if (o.random) {
    x = c.rng.value(c.ring, 5);
    y = c.rng.ideal_element(c.ideal, 3);
    z = c.rng.ideal_element(c.ideal, 3);
    std::tie(k, l) = c.rng.index_pair(c.n);
  } else {
    const Json req = read_request(o);
    x = value_at(req, "x", c.ring);
    y = value_at(req, "y", c.ring);
    z = value_at(req, "z", c.ring);
    k = int_at(req, "k");
    l = int_at(req, "l");
  }
  const SymbolReduction red = reduce_symbol(x, y, z, k, l, c.n, c.ideal);
  const GroupExpr w = theoremN_symbol_expr(x, y, z, k, l, c.n, c.ideal);
  Json steps = Json::array();
  for (const auto& s : red.steps) steps.push_back(Json{{"side", s.left ? "left" : "right"}, {"letter", to_json(s.letter)}});
  Json stages = Json::array();
  for (const auto& s : red.stages) stages.push_back(to_json(s));
  const bool ok = red.stages.back() == red.target_inner &&
                  evaluate(w, c.n, c.ring) == suspend(symbol(x, y, z), k, l, c.n) &&
                  check_discipline(w, {DisciplineKind::F, c.ideal}).ok;
  std::ostringstream text;
  text << (red.mirrored ? "mirrored" : "direct") << " case, helper index " << red.m << "\n";
  for (std::size_t s = 0; s < red.stages.size(); ++s) {
    if (s > 0) text << (red.steps[s - 1].left ? "  left  " : "  right ") << red.steps[s - 1].letter.to_string() << "\n";
    text << "stage " << s << ": " << red.stages[s].to_string() << "\n";
  }
  text << "word: " << w.to_string() << "\n" << (ok ? "ok" : "FAILED") << "\n";
  emit(c,
       Json{{"input", {{"x", x.value().get_str()}, {"y", y.value().get_str()}, {"z", z.value().get_str()}, {"k", k}, {"l", l}}},
            {"mirrored", red.mirrored},
            {"m", red.m},
            {"steps", steps},
            {"stages", stages},
            {"target_inner", to_json(red.target_inner)},
            {"word", to_json(w)},
            {"ok", ok}},
       text.str());
  return ok ? kOk : kFailed;
}

SqMatrix matrix_request(Context& c, const Options& o, CongruenceKind kind) {
  if (o.random)
    return kind == CongruenceKind::Delta ? c.rng.delta_matrix(c.ring, c.n, c.ideal) : c.rng.gamma_matrix(c.ring, c.n, c.ideal);
  return matrix_at(read_request(o), "g", c.ring);
}

int cmd_r_reduce(Context& c, const Options& o) {
  const SqMatrix g = matrix_request(c, o, CongruenceKind::Gamma);
  const SlResidueMatrix r = reduce_r(g, c.ideal);
  std::ostringstream text;
  text << "r(g) = " << rows_to_json(r.canonical_rows()).dump() << " mod " << c.ideal.squared().to_string()
       << (r.has_zero_trace() ? ", trace 0" : ", NONZERO trace") << "\n";
  emit(c, Json{{"g", to_json(g)}, {"residue", residue_entries(r)}}, text.str());
  return kOk;
}

int cmd_r_preimage(Context& c, const Options& o) {
  SlResidueMatrix target = o.random ? c.rng.zero_trace_residue(c.ideal, c.n)
                                    : SlResidueMatrix(c.ideal, integer_rows_from_json(need(read_request(o), "entries")));
  const Preimage p = preimage_r(target);
  const bool ok = reduce_r(p.matrix, c.ideal) == target;
  emit(c, Json{{"target", to_json(target)}, {"matrix", to_json(p.matrix)}, {"word", to_json(p.word)}, {"ok", ok}},
       "preimage " + p.matrix.to_string() + "\nword " + p.word.to_string() + (ok ? "\nok" : "\nFAILED"));
  return ok ? kOk : kFailed;
}

int approximation_output(Context& c, const SqMatrix& g, const Approximation& a, DisciplineKind kind) {
  const bool ok = check_discipline(a.word, {kind, c.ideal}).ok && evaluate(a.word, c.n, c.ring) * a.remainder == g;
  emit(c,
       Json{{"g", to_json(g)},
            {"word", to_json(a.word)},
            {"discipline", to_string(kind)},
            {"remainder", to_json(a.remainder)},
            {"ok", ok}},
       "g = w * gamma\nw (" + std::string(to_string(kind)) + ") " + a.word.to_string() + "\ngamma " +
           a.remainder.to_string() + (ok ? "\nok" : "\nFAILED"));
  return ok ? kOk : kFailed;
}

int cmd_approximate(Context& c, const Options& o, const std::string& klass) {
  const CongruenceKind kind = parse_congruence_kind(klass);
  const SqMatrix g = matrix_request(c, o, kind);
  return approximation_output(c, g, approximate_by_elementary(g, kind, c.ideal),
                              kind == CongruenceKind::Delta ? DisciplineKind::F : DisciplineKind::E);
}

int cmd_squeeze(Context& c, const Options& o) {
  const SqMatrix g = matrix_request(c, o, CongruenceKind::Delta);
  return approximation_output(c, g, squeeze_witness(g, c.ideal), DisciplineKind::F);
}

int cmd_orders(Context& c, std::uint64_t limit) {
  const OrderReport r = enumerate_orders(c.ring, c.n, c.ideal, limit);
  std::ostringstream text;
  text << r.ring.to_string() << " n=" << r.n << " ideal " << r.ideal.to_string() << " (" << r.candidates.get_str()
       << " candidates)\n"
       << "|Omega|=" << r.omega.get_str() << " |Gamma|=" << r.gamma.get_str() << " |Delta|=" << r.delta.get_str()
       << " |Gamma(I^2)|=" << r.gamma_sq.get_str() << "\n";
  for (const auto& q : r.ratios)
    text << (q.pass ? "PASS " : "FAIL ") << q.name << " = " << q.numerator.get_str() << "/" << q.denominator.get_str()
         << ", expected " << q.expected.get_str() << "\n";
  emit(c, to_json(r), text.str());
  return r.all_pass() ? kOk : kFailed;
}

std::vector<FreeWord> parse_generators(const std::string& text) {
  std::vector<FreeWord> gens;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) gens.push_back(FreeWord::parse(item));
  if (gens.empty()) throw Error(ErrorKind::Parse, "no generators given");
  return gens;
}

int cmd_stallings(Context& c, const std::string& gens_text, const std::string& word_text) {
  const std::vector<FreeWord> gens = parse_generators(gens_text);
  const FreeWord w = FreeWord::parse(word_text);
  SubgroupAutomaton automaton = SubgroupAutomaton::petal(gens);
  automaton.fold();
  const bool member = automaton.accepts(w);
  Json edges = Json::array();
  for (const auto& e : automaton.edges()) edges.push_back(Json{{"from", e.from}, {"letter", std::string(1, e.letter)}, {"to", e.to}});
  Json gj = Json::array();
  for (const auto& g : gens) gj.push_back(g.to_string());
  emit(c,
       Json{{"generators", gj},
            {"word", w.to_string()},
            {"member", member},
            {"automaton", {{"vertices", automaton.vertex_count()}, {"edges", edges}}}},
       member ? "true" : "false");
  return kOk;
}

int cmd_counterexample(Context& c, long long N) {
  const CounterexampleReport r = counterexample_report(N);
  std::ostringstream text;
  text << "N=" << r.N << " omega=" << r.omega.to_string() << "\n";
  for (const auto& k : r.checks) text << (k.pass ? "PASS " : "FAIL ") << k.name << ": " << k.detail << "\n";
  text << "hypothesis: " << r.hypothesis << "\n";
  emit(c, to_json(r), text.str());
  return r.all_pass() ? kOk : kFailed;
}

int cmd_verify(Context& c, const Options& o) {
  const VerificationResult v = verify_certificate_text(read_input(o.input));
  std::string text = v.ok ? "certificate verified\n" : "certificate REJECTED\n";
  for (const auto& s : v.violations) text += "  " + s + "\n";
  emit(c, Json{{"ok", v.ok}, {"violations", v.violations}}, text);
  return v.ok ? kOk : kFailed;
}

int cmd_suite(Context& c, const Options& o, const std::string& config_path, int cases, const std::vector<std::string>& only,
              bool seed_given) {
  SuiteConfig config;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open config file '" + config_path + "'");
    config = suite_config_from_json(parse_json(std::string(std::istreambuf_iterator<char>(in), {})));
  }
  if (seed_given) config.seed = o.seed;
  if (cases > 0) config.cases = cases;
  if (!only.empty()) config.only = only;
  const SuiteReport r = run_suite(config);
  emit(c, to_json(r), to_text(r));
  return r.all_pass() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elementary and congruence subgroup certificates over Z and Z/m"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options o;
  app.add_option("--ring", o.ring, "Ring: Z or Z/m")->capture_default_str();
  app.add_option("--ideal", o.ideal, "Principal ideal, e.g. (2)")->capture_default_str();
  app.add_option("--n", o.n, "Matrix dimension")->capture_default_str();
  CLI::Option* seed_opt = app.add_option("--seed", o.seed, "Seed for --random inputs and the suite")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--input", o.input, "Request JSON file, - for stdin")->capture_default_str();
  app.add_flag("--random", o.random, "Sample the request from --seed instead of reading it");

  std::string klass = "Gamma", gens_text, word_text, config_path;
  long long N = 4;
  int cases = 0;
  std::uint64_t limit = kDefaultEnumerationLimit;
  std::vector<std::string> only;

  auto* factorize = app.add_subcommand("factorize", "Suslin factorization of g^-1 e_ij(a) g");
  auto* conj_f = app.add_subcommand("conjugate-in-f", "F(I) certificate for g^-1 e_ij(a) g, g diagonal mod I");
  auto* conj_e = app.add_subcommand("conjugate-in-e", "E(I) certificate for g^-1 e_ij(a) g");
  auto* tits = app.add_subcommand("tits", "Commutator-of-F(I) certificate for c^-1 e_ij(a) c, a in I^2");
  auto* reduce = app.add_subcommand("reduce-symbol", "Reduce a suspended symbol to F(I) letters");
  auto* r_reduce = app.add_subcommand("r-reduce", "g - 1 modulo I^2");
  auto* r_pre = app.add_subcommand("r-preimage", "Elementary preimage of a zero-trace residue");
  auto* approx = app.add_subcommand("approximate", "Split g as elementary word times second-level remainder");
  approx->add_option("--class", klass, "Gamma or Delta")->check(CLI::IsMember({"Gamma", "Delta"}))->capture_default_str();
  auto* orders = app.add_subcommand("congruence-orders", "Exhaustive subgroup orders over Z/m");
  orders->add_option("--limit", limit, "Candidate limit")->capture_default_str();
  auto* squeeze = app.add_subcommand("squeeze", "Split g in Delta as F(I) word times Gamma(I^2) element");
  auto* stallings = app.add_subcommand("stallings", "Subgroup membership in the free group on a, b");
  stallings->add_option("--gens", gens_text, "Comma-separated generators, e.g. \"a^4,b\"")->required();
  stallings->add_option("--word", word_text, "Word, e.g. \"a b^4 a^-1\"")->required();
  auto* counter = app.add_subcommand("counterexample", "Rank-2 non-normality report");
  counter->add_option("--N", N, "Level N >= 4")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Independently re-check a certificate");
  auto* suite = app.add_subcommand("suite", "Seeded property suite");
  suite->add_option("--config", config_path, "Suite config JSON file");
  suite->add_option("--cases", cases, "Cases per randomized property");
  suite->add_option("--only", only, "Run only the named properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    const RingSpec ring = RingSpec::parse(o.ring);
    if (o.n < 2) throw Error(ErrorKind::DimensionTooSmall, "--n must be at least 2");
    Context c{ring, Ideal::parse(ring, o.ideal), o.n, Sampler(o.seed), o.format == "text"};

    if (*factorize) return cmd_factorize(c, o);
    if (*conj_f) return cmd_conjugate(c, o, true);
    if (*conj_e) return cmd_conjugate(c, o, false);
    if (*tits) return cmd_tits(c, o);
    if (*reduce) return cmd_reduce_symbol(c, o);
    if (*r_reduce) return cmd_r_reduce(c, o);
    if (*r_pre) return cmd_r_preimage(c, o);
    if (*approx) return cmd_approximate(c, o, klass);
    if (*orders) return cmd_orders(c, limit);
    if (*squeeze) return cmd_squeeze(c, o);
    if (*stallings) return cmd_stallings(c, gens_text, word_text);
    if (*counter) return cmd_counterexample(c, N);
    if (*verify) return cmd_verify(c, o);
    if (*suite) return cmd_suite(c, o, config_path, cases, only, seed_opt->count() > 0);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
