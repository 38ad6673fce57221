#include "trueelem/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace trueelem {

FreeWord free_reduce(const std::vector<Syllable>& raw) {
  FreeWord out;
  auto& s = out.syllables_;
  for (const auto& syl : raw) {
    if (syl.letter != 'a' && syl.letter != 'b')
      throw Error(ErrorKind::InvalidArgument, std::string("free words use letters a and b, got '") + syl.letter + "'");
    if (syl.exponent == 0) continue;
    if (!s.empty() && s.back().letter == syl.letter) {
      s.back().exponent += syl.exponent;
      if (s.back().exponent == 0) s.pop_back();
    } else {
      s.push_back(syl);
    }
  }
  return out;
}

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<Syllable> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;  // identity, as printed by to_string
    const char letter = static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
    if (letter != 'a' && letter != 'b')
      throw Error(ErrorKind::Parse, "bad free-group token '" + token + "'");
    long long exponent = 1;
    if (token.size() > 1) {
      if (token[1] != '^' || token.size() == 2)
        throw Error(ErrorKind::Parse, "bad free-group token '" + token + "'");
      const std::string digits = token.substr(2);
      char* end = nullptr;
      exponent = std::strtoll(digits.c_str(), &end, 10);
      if (end == digits.c_str() || *end != '\0')
        throw Error(ErrorKind::Parse, "bad exponent in token '" + token + "'");
    }
    raw.push_back({letter, exponent});
  }
  return free_reduce(raw);
}

long long FreeWord::length() const {
  long long total = 0;
  for (const auto& s : syllables_) total += std::llabs(s.exponent);
  return total;
}

FreeWord FreeWord::inverse() const {
  std::vector<Syllable> raw(syllables_.rbegin(), syllables_.rend());
  for (auto& s : raw) s.exponent = -s.exponent;
  return free_reduce(raw);
}

std::string FreeWord::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.letter;
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  std::vector<Syllable> raw = u.syllables_;
  raw.insert(raw.end(), v.syllables_.begin(), v.syllables_.end());
  return free_reduce(raw);
}

namespace {

constexpr long long kMaxPetalEdges = 1'000'000;

int letter_slot(char letter) { return letter == 'a' ? 0 : 1; }

}  // namespace

SubgroupAutomaton SubgroupAutomaton::petal(const std::vector<FreeWord>& generators) {
  SubgroupAutomaton g;
  long long total = 0;
  for (const auto& w : generators) total += w.length();
  if (total > kMaxPetalEdges)
    throw Error(ErrorKind::EnumerationLimit, "generators too long for a petal graph");

  for (const auto& w : generators) {
    if (w.empty()) continue;
    const long long len = w.length();
    long long pos = 0;
    int current = 0;
    for (const auto& s : w.syllables()) {
      const long long steps = std::llabs(s.exponent);
      for (long long t = 0; t < steps; ++t) {
        ++pos;
        const int next = pos == len ? 0 : g.vertex_count_++;
        if (s.exponent > 0) {
          g.edges_.push_back({current, s.letter, next});
        } else {
          g.edges_.push_back({next, s.letter, current});
        }
        current = next;
      }
    }
  }
  return g;
}

void SubgroupAutomaton::fold(std::mt19937_64* shuffle) {
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent[y] = x;  // lower id survives, so the basepoint stays 0
    return true;
  };

  if (shuffle) std::shuffle(edges_.begin(), edges_.end(), *shuffle);

  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out_edge;
    std::map<std::pair<int, int>, int> in_edge;
    for (const auto& e : edges_) {
      const int from = find(e.from);
      const int to = find(e.to);
      const int slot = letter_slot(e.letter);
      auto [it_out, fresh_out] = out_edge.try_emplace({from, slot}, to);
      if (!fresh_out && find(it_out->second) != to) changed |= unite(it_out->second, to);
      auto [it_in, fresh_in] = in_edge.try_emplace({find(e.to), slot}, find(e.from));
      if (!fresh_in && find(it_in->second) != find(e.from)) changed |= unite(it_in->second, e.from);
    }
  }

  // Compact vertex ids and drop duplicate edges.
  std::map<int, int> relabel;
  relabel[find(0)] = 0;
  for (int v = 0; v < vertex_count_; ++v) relabel.try_emplace(find(v), static_cast<int>(relabel.size()));
  std::vector<Edge> merged;
  for (const auto& e : edges_) {
    Edge m{relabel.at(find(e.from)), e.letter, relabel.at(find(e.to))};
    if (std::find(merged.begin(), merged.end(), m) == merged.end()) merged.push_back(m);
  }
  edges_ = std::move(merged);
  vertex_count_ = static_cast<int>(relabel.size());
}

bool SubgroupAutomaton::is_folded() const {
  std::map<std::pair<int, int>, int> out_count;
  std::map<std::pair<int, int>, int> in_count;
  for (const auto& e : edges_) {
    if (++out_count[{e.from, letter_slot(e.letter)}] > 1) return false;
    if (++in_count[{e.to, letter_slot(e.letter)}] > 1) return false;
  }
  return true;
}

bool SubgroupAutomaton::accepts(const FreeWord& w) const {
  std::map<std::pair<int, int>, int> forward;
  std::map<std::pair<int, int>, int> backward;
  for (const auto& e : edges_) {
    forward[{e.from, letter_slot(e.letter)}] = e.to;
    backward[{e.to, letter_slot(e.letter)}] = e.from;
  }
  int state = basepoint();
  for (const auto& s : w.syllables()) {
    const auto& table = s.exponent > 0 ? forward : backward;
    const int slot = letter_slot(s.letter);
    for (long long t = 0; t < std::llabs(s.exponent); ++t) {
      auto it = table.find({state, slot});
      if (it == table.end()) return false;
      state = it->second;
    }
  }
  return state == basepoint();
}

std::string SubgroupAutomaton::canonical_form() const {
  // neighbours in fixed order: a out, a in, b out, b in
  std::vector<std::vector<std::pair<int, int>>> adj(vertex_count_);
  for (const auto& e : edges_) {
    const int slot = letter_slot(e.letter);
    adj[e.from].push_back({2 * slot, e.to});
    adj[e.to].push_back({2 * slot + 1, e.from});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<int> label(vertex_count_, -1);
  std::deque<int> queue{basepoint()};
  label[basepoint()] = 0;
  int next = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& [kind, u] : adj[v]) {
      if (label[u] < 0) {
        label[u] = next++;
        queue.push_back(u);
      }
    }
  }
  std::vector<std::tuple<int, char, int>> relabeled;
  for (const auto& e : edges_) relabeled.emplace_back(label[e.from], e.letter, label[e.to]);
  std::sort(relabeled.begin(), relabeled.end());
  std::ostringstream os;
  os << "V" << vertex_count_;
  for (const auto& [f, l, t] : relabeled) os << ' ' << f << l << t;
  return os.str();
}

bool stallings_member(const FreeWord& w, const std::vector<FreeWord>& generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "at least one generator is required");
  SubgroupAutomaton automaton = SubgroupAutomaton::petal(generators);
  automaton.fold();
  return automaton.accepts(w);
}

SqMatrix matrix_of_word(const FreeWord& w, const Integer& modulus_n) {
  if (modulus_n < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  const RingSpec z = RingSpec::integers();
  SqMatrix acc = SqMatrix::identity(z, 2);
  for (const auto& s : w.syllables()) {
    const Integer e(static_cast<long>(s.exponent));
    if (s.letter == 'a') {
      acc.add_column_multiple(2, 1, e);
    } else {
      acc.add_column_multiple(1, 2, Integer(modulus_n * e));
    }
  }
  return acc;
}

bool CounterexampleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CounterexampleReport counterexample_report(long long N) {
  if (N < 4) throw Error(ErrorKind::InvalidArgument, "counterexamples are stated for N >= 4, got N=" + std::to_string(N));
  const RingSpec z = RingSpec::integers();
  const Integer n_big(static_cast<long>(N));
  const Integer n_sq = n_big * n_big;

  const FreeWord a_pow = free_reduce({{'a', N}});
  const FreeWord b = free_reduce({{'b', 1}});
  const std::vector<FreeWord> gens{a_pow, b};
  const FreeWord omega_word = free_reduce({{'a', 1}, {'b', N}, {'a', -1}});
  const FreeWord conj_word = free_reduce({{'a', 1}, {'b', -N}, {'a', N}, {'b', N}, {'a', -1}});

  const SqMatrix omega = matrix_of_word(omega_word, n_big);
  const SqMatrix expected(z, {{Integer(1 + n_sq), Integer(-n_sq)}, {n_sq, Integer(1 - n_sq)}});
  const SqMatrix alpha_n = matrix_of_word(a_pow, n_big);

  CounterexampleReport report{N, omega, {}, "<a, b> -> SL_2(Z), a -> e_12(1), b -> e_21(N) is injective (free of rank 2)"};
  auto add = [&](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  add("omega_formula", omega == expected, "matrix(" + omega_word.to_string() + ") = " + omega.to_string());
  add("omega_in_Gamma(N^2)", in_class(omega, {CongruenceKind::Gamma, Ideal(z, n_sq), 2}),
      "omega = 1 mod " + n_sq.get_str());
  add("omega_in_Delta(N)", in_class(omega, {CongruenceKind::Delta, Ideal(z, n_big), 2}),
      "omega = 1 mod N with diagonal = 1 mod N^2");
  add("conjugate_matrix", matrix_of_word(conj_word, n_big) == inverse(omega) * alpha_n * omega,
      "matrix(" + conj_word.to_string() + ") = omega^-1 alpha^N omega");
  add("sanity_a^N_member", stallings_member(a_pow, gens), a_pow.to_string() + " is in <a^N, b>");
  add("omega_not_in_F2(N)", !stallings_member(omega_word, gens),
      omega_word.to_string() + " is not in <a^N, b>, so E_2(N^2) is not inside F_2(N)");
  add("F2(N)_not_normal_in_Delta2(N)", !stallings_member(conj_word, gens),
      conj_word.to_string() + " is not in <a^N, b>, so omega does not normalize F_2(N)");
  return report;
}

}  // namespace trueelem
