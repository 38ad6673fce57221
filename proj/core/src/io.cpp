#include "trueelem/io.hpp"

namespace trueelem {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Parse, "malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer v;
    if (s.empty() || v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) malformed("bad integer string '" + s + "'");
    return v;
  }
  if (j.is_number_integer()) return Integer(j.get<long>());
  malformed("expected an integer or decimal string, got " + j.dump());
}

std::vector<std::vector<Integer>> integer_rows_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("entries must be a nonempty array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) malformed("each matrix row must be an array");
    std::vector<Integer> r;
    for (const auto& e : row) r.push_back(integer_from_json(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json rows_to_json(const std::vector<std::vector<Integer>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.get_str());
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const SqMatrix& m) {
  return Json{{"ring", m.spec().to_string()}, {"n", m.n()}, {"entries", rows_to_json(m.rows())}};
}

SqMatrix matrix_from_json(const Json& j, const RingSpec& spec) {
  const auto rows = integer_rows_from_json(j);
  for (const auto& r : rows)
    if (r.size() != rows.size()) malformed("matrix must be square");
  return SqMatrix(spec, rows);
}

SqMatrix matrix_from_json(const Json& j) {
  const RingSpec spec = RingSpec::parse(string_field(j, "ring"));
  SqMatrix m = matrix_from_json(field(j, "entries"), spec);
  if (j.contains("n") && int_field(j, "n") != m.n()) malformed("field 'n' disagrees with entries");
  return m;
}

Json to_json(const GroupExpr& w) {
  switch (w.kind()) {
    case ExprKind::Elem:
      return Json{{"kind", "elem"}, {"i", w.first_index()}, {"j", w.second_index()},
                  {"a", w.coefficient(0).get_str()}};
    case ExprKind::Symbol:
      return Json{{"kind", "symbol"},
                  {"x", w.coefficient(0).get_str()},
                  {"y", w.coefficient(1).get_str()},
                  {"z", w.coefficient(2).get_str()},
                  {"p", w.first_index()},
                  {"q", w.second_index()}};
    case ExprKind::Inverse:
      return Json{{"kind", "inv"}, {"of", to_json(w.children()[0])}};
    case ExprKind::Product: {
      Json factors = Json::array();
      for (const auto& c : w.children()) factors.push_back(to_json(c));
      return Json{{"kind", "prod"}, {"factors", std::move(factors)}};
    }
    case ExprKind::Commutator:
      return Json{{"kind", "comm"}, {"left", to_json(w.children()[0])}, {"right", to_json(w.children()[1])}};
    case ExprKind::Conjugation:
      return Json{{"kind", "conj"}, {"conjugator", to_json(w.children()[0])}, {"inner", to_json(w.children()[1])}};
  }
  return Json();
}

GroupExpr word_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "elem")
    return GroupExpr::raw_elem(int_field(j, "i"), int_field(j, "j"), integer_from_json(field(j, "a")));
  if (kind == "symbol")
    return GroupExpr::raw_symbol(integer_from_json(field(j, "x")), integer_from_json(field(j, "y")),
                                 integer_from_json(field(j, "z")), int_field(j, "p"), int_field(j, "q"));
  if (kind == "inv") return GroupExpr::raw_inverse(word_from_json(field(j, "of")));
  if (kind == "prod") {
    const Json& factors = field(j, "factors");
    if (!factors.is_array()) malformed("'factors' must be an array");
    std::vector<GroupExpr> children;
    for (const auto& f : factors) children.push_back(word_from_json(f));
    return GroupExpr::raw_product(std::move(children));
  }
  if (kind == "comm")
    return GroupExpr::raw_commutator(word_from_json(field(j, "left")), word_from_json(field(j, "right")));
  if (kind == "conj")
    return GroupExpr::raw_conjugation(word_from_json(field(j, "conjugator")), word_from_json(field(j, "inner")));
  malformed("unknown word kind '" + kind + "'");
}

Json to_json(const Certificate& c) {
  const SqMatrix& t = c.claim.target;
  Json claim{{"ring", t.spec().to_string()},
             {"n", t.n()},
             {"ideal", c.claim.discipline.ideal.to_string()},
             {"discipline", to_string(c.claim.discipline.kind)},
             {"target", to_json(t)}};
  return Json{{"claim", std::move(claim)}, {"witness", to_json(c.witness)}};
}

Certificate certificate_from_json(const Json& j) {
  const Json& claim = field(j, "claim");
  const RingSpec spec = RingSpec::parse(string_field(claim, "ring"));
  const int n = int_field(claim, "n");
  const Ideal ideal = Ideal::parse(spec, string_field(claim, "ideal"));
  const DisciplineKind kind = parse_discipline_kind(string_field(claim, "discipline"));
  SqMatrix target = matrix_from_json(field(claim, "target"));
  if (!(target.spec() == spec)) malformed("target ring disagrees with claim ring");
  if (target.n() != n) malformed("target dimension disagrees with claim n");
  return Certificate{{std::move(target), {kind, ideal}}, word_from_json(field(j, "witness"))};
}

Json to_json(const SlResidueMatrix& r) {
  return Json{{"ring", r.ideal().spec().to_string()},
              {"ideal", r.ideal().to_string()},
              {"modulo", r.ideal().squared().to_string()},
              {"n", r.n()},
              {"entries", rows_to_json(r.canonical_rows())},
              {"trace_zero", r.has_zero_trace()}};
}

Json to_json(const OrderReport& r) {
  Json ratios = Json::array();
  for (const auto& q : r.ratios) {
    ratios.push_back(Json{{"name", q.name},
                          {"numerator", q.numerator.get_str()},
                          {"denominator", q.denominator.get_str()},
                          {"observed", q.denominator != 0 ? Integer(q.numerator / q.denominator).get_str() : "undefined"},
                          {"expected", q.expected.get_str()},
                          {"pass", q.pass}});
  }
  return Json{{"ring", r.ring.to_string()},
              {"n", r.n},
              {"ideal", r.ideal.to_string()},
              {"candidates", r.candidates.get_str()},
              {"orders",
               {{"Omega", r.omega.get_str()},
                {"Gamma", r.gamma.get_str()},
                {"Delta", r.delta.get_str()},
                {"Gamma(I^2)", r.gamma_sq.get_str()}}},
              {"ideal_quotient_order", r.ideal_quotient.get_str()},
              {"units_mod_ideal", r.units_mod_ideal.get_str()},
              {"ratios", std::move(ratios)},
              {"pass", r.all_pass()}};
}

Json to_json(const CounterexampleReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"N", r.N},
              {"omega", to_json(r.omega)},
              {"checks", std::move(checks)},
              {"hypothesis", r.hypothesis},
              {"pass", r.all_pass()}};
}

}  // namespace trueelem
