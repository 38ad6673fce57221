#include "trueelem/suite.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "trueelem/sampling.hpp"
#include "trueelem/verify.hpp"

namespace trueelem {

namespace {

constexpr std::size_t kMaxDumps = 3;

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, "invalid suite config: " + what);
}

struct Setting {
  RingSpec ring;
  Ideal ideal;
  int n;

  std::string label() const { return ring.to_string() + ", " + ideal.to_string() + ", n=" + std::to_string(n); }
};

using Outcome = std::optional<std::string>;  // failure description, empty on success

struct Context {
  const SuiteConfig& config;
  std::vector<Setting> settings;
};

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void pass() {
    ++result_.cases;
    ++result_.passed;
  }
  void fail(const std::string& dump) {
    ++result_.cases;
    ++result_.failed;
    if (result_.counterexamples.size() < kMaxDumps) result_.counterexamples.push_back(dump);
  }
  void reject(const std::string& why) {
    ++result_.cases;
    ++result_.rejected;
    if (result_.rejection.empty()) result_.rejection = why;
  }
  void check(bool ok, const std::function<std::string()>& dump) { ok ? pass() : fail(dump()); }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

using CaseFn = std::function<Outcome(Sampler&, const Setting&)>;

// Runs config.cases cases cycling through the settings. Expansion properties
// need n >= 3; for n = 2 they must be refused with DimensionTooSmall.
PropertyResult randomized(const std::string& name, const Context& ctx, Sampler& rng, bool expansion,
                          const CaseFn& fn) {
  Recorder rec(name);
  for (int k = 0; k < ctx.config.cases; ++k) {
    const Setting& s = ctx.settings[static_cast<std::size_t>(k) % ctx.settings.size()];
    const std::string where = "case " + std::to_string(k) + " [" + s.label() + "]: ";
    const bool must_reject = expansion && s.n < 3;
    try {
      const Outcome out = fn(rng, s);
      if (must_reject) {
        rec.fail(where + "expected the n >= 3 precondition to refuse this input");
      } else if (out) {
        rec.fail(where + *out);
      } else {
        rec.pass();
      }
    } catch (const Error& e) {
      if (must_reject && e.kind() == ErrorKind::DimensionTooSmall) {
        rec.reject(e.what());
      } else {
        rec.fail(where + "unexpected error (" + to_string(e.kind()) + "): " + e.what());
      }
    }
  }
  return rec.take();
}

Outcome expect(bool ok, const std::function<std::string()>& dump) {
  if (ok) return std::nullopt;
  return dump();
}

Outcome expect_verified(const Certificate& cert) {
  const VerificationResult v = verify_certificate(cert);
  if (v.ok) return std::nullopt;
  std::string out = "verifier rejected certificate:";
  for (const auto& s : v.violations) out += " " + s + ";";
  return out;
}

SqMatrix random_matrix(Sampler& rng, const RingSpec& spec, int n, long bound) {
  SqMatrix m(spec, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.set(i, j, rng.value(spec, bound));
  return m;
}

FreeWord random_free_word(Sampler& rng, int max_syllables, long max_exponent) {
  std::vector<Syllable> raw;
  const long count = rng.uniform(0, max_syllables);
  for (long k = 0; k < count; ++k) {
    long e = rng.uniform(1, max_exponent);
    if (rng.coin()) e = -e;
    raw.push_back({rng.coin() ? 'a' : 'b', e});
  }
  return free_reduce(raw);
}

// ---------------------------------------------------------------- rings

PropertyResult ring_axioms(const Context& ctx, Sampler& rng) {
  return randomized("rings.ring_axioms", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const RingValue a = r.value(s.ring, 1000000), b = r.value(s.ring, 1000000), c = r.value(s.ring, 1000000);
    const RingValue one = RingValue::one(s.ring), zero = RingValue::zero(s.ring);
    const bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
                    a * (b + c) == a * b + a * c && a * one == a && a + zero == a && a + (-a) == zero;
    return expect(ok, [&] { return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string(); });
  });
}

PropertyResult ideal_absorption(const Context& ctx, Sampler& rng) {
  return randomized("rings.ideal_absorption", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const RingValue x = r.ideal_element(s.ideal, 1000);
    const RingValue y = r.value(s.ring, 1000);
    const Membership mx = ideal_contains(x, s.ideal);
    const Membership mxy = ideal_contains(x * y, s.ideal);
    const bool ok = mx.member && mxy.member && mxy.witness && *mxy.witness * s.ideal.generator() == x * y;
    return expect(ok, [&] { return "x=" + x.to_string() + " r=" + y.to_string(); });
  });
}

PropertyResult divide_roundtrip(const Context& ctx, Sampler& rng) {
  return randomized("rings.divide_roundtrip", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const RingValue z = r.ideal_element(s.ideal, 100000);
    const RingValue q = ideal_divide(z, s.ideal);
    return expect(q * s.ideal.generator() == z,
                  [&] { return "z=" + z.to_string() + " q=" + q.to_string(); });
  });
}

// ---------------------------------------------------------------- matrices

PropertyResult det_multiplicative(const Context& ctx, Sampler& rng) {
  return randomized("matrices.det_multiplicative", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = random_matrix(r, s.ring, s.n, 20), h = random_matrix(r, s.ring, s.n, 20);
    return expect(det(g * h) == det(g) * det(h), [&] { return "g=" + g.to_string() + " h=" + h.to_string(); });
  });
}

PropertyResult diagonal_multiplicativity(const Context& ctx, Sampler& rng) {
  return randomized("matrices.diagonal_multiplicativity", ctx, rng, false,
                    [](Sampler& r, const Setting& s) -> Outcome {
                      const SqMatrix g = r.omega_matrix(s.ring, s.n, s.ideal);
                      const SqMatrix h = r.omega_matrix(s.ring, s.n, s.ideal);
                      const SqMatrix gh = g * h;
                      const Ideal square = s.ideal.squared();
                      bool ok = true;
                      for (int i = 1; i <= s.n; ++i)
                        ok = ok && congruent_mod_ideal(gh.at(i, i), g.at(i, i) * h.at(i, i), square);
                      return expect(ok, [&] { return "g=" + g.to_string() + " h=" + h.to_string(); });
                    });
}

PropertyResult delta_normal_in_omega(const Context& ctx, Sampler& rng) {
  return randomized("matrices.delta_normal_in_omega", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = r.omega_matrix(s.ring, s.n, s.ideal);
    const SqMatrix d = r.delta_matrix(s.ring, s.n, s.ideal);
    const CongruenceClass delta{CongruenceKind::Delta, s.ideal, s.n};
    if (!in_class(d, delta)) return "sampled d is not in Delta: d=" + d.to_string();
    const SqMatrix c = inverse(g) * d * g;
    return expect(in_class(c, delta), [&] { return "g=" + g.to_string() + " d=" + d.to_string(); });
  });
}

PropertyResult symbol_determinant(const Context& ctx, Sampler& rng) {
  return randomized("matrices.symbol_determinant", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const RingValue x = r.value(s.ring, 50), y = r.value(s.ring, 50), z = r.value(s.ring, 50);
    return expect(det(symbol(x, y, z)).is_one(),
                  [&] { return "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string(); });
  });
}

PropertyResult symbol_additivity(const Context& ctx, Sampler& rng) {
  return randomized("matrices.symbol_additivity", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const RingValue x = r.value(s.ring, 50), y = r.value(s.ring, 50);
    const RingValue z = r.value(s.ring, 50), w = r.value(s.ring, 50);
    return expect(symbol(x, y, z + w) == symbol(x, y, z) * symbol(x, y, w), [&] {
      return "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string() + " z'=" + w.to_string();
    });
  });
}

PropertyResult suspension_swap(const Context& ctx, Sampler& rng) {
  return randomized("matrices.suspension_swap", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const RingValue x = r.value(s.ring, 50), y = r.value(s.ring, 50), z = r.value(s.ring, 50);
    auto [k, l] = r.index_pair(s.n);
    return expect(suspend(symbol(x, y, z), k, l, s.n) == suspend(symbol(y, x, -z), l, k, s.n), [&] {
      return "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string();
    });
  });
}

// ---------------------------------------------------------------- words

PropertyResult evaluate_homomorphism(const Context& ctx, Sampler& rng) {
  return randomized("words.evaluate_homomorphism", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const GroupExpr u = r.random_expr(s.ring, s.n, 3);
    const GroupExpr v = r.random_expr(s.ring, s.n, 3);
    const SqMatrix eu = evaluate(u, s.n, s.ring), ev = evaluate(v, s.n, s.ring);
    const bool ok = evaluate(GroupExpr::raw_product({u, v}), s.n, s.ring) == eu * ev &&
                    (evaluate(GroupExpr::raw_inverse(u), s.n, s.ring) * eu).is_identity() &&
                    evaluate(GroupExpr::raw_inverse(u), s.n, s.ring) == inverse(eu);
    return expect(ok, [&] { return "u=" + u.to_string() + " v=" + v.to_string(); });
  });
}

PropertyResult f_discipline_soundness(const Context& ctx, Sampler& rng) {
  return randomized("words.f_discipline_soundness", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const GroupExpr w = r.random_expr(s.ring, s.n, 3, &s.ideal, false);
    const DisciplineReport rep = check_discipline(w, {DisciplineKind::F, s.ideal});
    if (!rep.ok) return "sampled word failed F discipline: " + rep.violation;
    const SqMatrix m = evaluate(w, s.n, s.ring);
    return expect(in_class(m, {CongruenceKind::Delta, s.ideal, s.n}),
                  [&] { return "w=" + w.to_string() + " evaluates to " + m.to_string(); });
  });
}

PropertyResult serialization_roundtrip(const Context& ctx, Sampler& rng) {
  return randomized("words.serialization_roundtrip", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const GroupExpr w = r.random_expr(s.ring, s.n, 3);
    const GroupExpr back = word_from_json(parse_json(to_json(w).dump()));
    return expect(back == w, [&] { return "w=" + w.to_string() + " came back as " + back.to_string(); });
  });
}

// ---------------------------------------------------------------- factorization

PropertyResult suslin_identities(const Context& ctx, Sampler& rng) {
  return randomized("factorization.suslin_identities", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = r.special_linear(s.ring, s.n);
    auto [i, j] = r.index_pair(s.n);
    const SuslinData d(g, i, j);
    const SqMatrix gi = inverse(g);
    const RingValue zero = RingValue::zero(s.ring);
    RingValue wv = zero, wpv = zero;
    bool ok = true;
    for (int t = 1; t <= s.n; ++t) {
      ok = ok && d.v(t) == gi.at(t, i) && d.w()[t - 1] == g.at(j, t) && d.w_prime()[t - 1] == g.at(i, t);
      wv += g.at(j, t) * gi.at(t, i);
      wpv += g.at(i, t) * gi.at(t, i);
    }
    for (int t = 1; t <= s.n; ++t) {
      RingValue sum = zero;
      for (int k = 1; k <= s.n; ++k)
        for (int l = k + 1; l <= s.n; ++l) {
          if (t == k) sum += d.c(k, l) * d.v(l);
          if (t == l) sum -= d.c(k, l) * d.v(k);
        }
      ok = ok && sum == g.at(j, t);
    }
    ok = ok && wv.is_zero() && wpv.is_one();
    return expect(ok, [&] { return "g=" + g.to_string() + " i=" + std::to_string(i) + " j=" + std::to_string(j); });
  });
}

PropertyResult factor_commutation(const Context& ctx, Sampler& rng) {
  return randomized("factorization.factor_commutation", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = r.special_linear(s.ring, s.n);
    auto [i, j] = r.index_pair(s.n);
    const RingValue a = r.value(s.ring, 5);
    const auto factors = suslin_factors(SuslinData(g, i, j), a);
    if (factors.size() < 2) return std::nullopt;
    const auto p = static_cast<std::size_t>(r.uniform(0, static_cast<long>(factors.size()) - 1));
    auto q = static_cast<std::size_t>(r.uniform(0, static_cast<long>(factors.size()) - 2));
    if (q >= p) ++q;
    const SqMatrix A = evaluate(factors[p].expr(), s.n, s.ring), B = evaluate(factors[q].expr(), s.n, s.ring);
    return expect(A * B == B * A, [&] { return "g=" + g.to_string() + " a=" + a.to_string(); });
  });
}

PropertyResult suslin_factorization(const Context& ctx, Sampler& rng) {
  return randomized("factorization.suslin_factorization", ctx, rng, false,
                    [](Sampler& r, const Setting& s) -> Outcome {
                      const SqMatrix g = r.special_linear(s.ring, s.n);
                      auto [i, j] = r.index_pair(s.n);
                      const RingValue a = r.value(s.ring, 5);
                      const SqMatrix expected = inverse(g) * elementary(s.n, i, j, a) * g;
                      const SqMatrix got = evaluate(suslin_factorize(g, i, j, a), s.n, s.ring);
                      return expect(got == expected, [&] {
                        return "g=" + g.to_string() + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                               " a=" + a.to_string() + " got " + got.to_string();
                      });
                    });
}

PropertyResult symbol_commutator_identity(const Context& ctx, Sampler& rng) {
  return randomized("factorization.symbol_commutator_identity", ctx, rng, true,
                    [](Sampler& r, const Setting& s) -> Outcome {
                      const RingValue x = r.value(s.ring, 30), y = r.value(s.ring, 30), z = r.value(s.ring, 30);
                      auto [k, l] = r.index_pair(s.n);
                      const SqMatrix got = evaluate(symbol_commutator_expr(x, y, z, k, l, s.n), s.n, s.ring);
                      return expect(got == suspend(symbol(x, y, z), k, l, s.n), [&] {
                        return "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string();
                      });
                    });
}

PropertyResult tits_identity(const Context& ctx, Sampler& rng) {
  return randomized("factorization.tits_identity", ctx, rng, true, [](Sampler& r, const Setting& s) -> Outcome {
    const RingValue x = r.value(s.ring, 30), y = r.value(s.ring, 30);
    const RingValue z1 = r.value(s.ring, 30), z2 = r.value(s.ring, 30);
    auto [k, l] = r.index_pair(s.n);
    const SqMatrix got = evaluate(tits_symbol_expr(x, y, z1, z2, k, l, s.n), s.n, s.ring);
    return expect(got == suspend(symbol(x, y, z1 * z2), k, l, s.n), [&] {
      return "x=" + x.to_string() + " y=" + y.to_string() + " z1=" + z1.to_string() + " z2=" + z2.to_string();
    });
  });
}

PropertyResult symbol_reduction(const Context& ctx, Sampler& rng) {
  return randomized("factorization.symbol_reduction", ctx, rng, true, [](Sampler& r, const Setting& s) -> Outcome {
    RingValue x = r.value(s.ring, 30), y = r.value(s.ring, 30);
    const RingValue z = r.ideal_element(s.ideal, 30);
    if (r.coin()) {
      y = r.ideal_element(s.ideal, 30);
    } else {
      x = r.ideal_element(s.ideal, 30);
    }
    auto [k, l] = r.index_pair(s.n);
    const GroupExpr w = theoremN_symbol_expr(x, y, z, k, l, s.n, s.ideal);
    const SymbolReduction red = reduce_symbol(x, y, z, k, l, s.n, s.ideal);
    const SqMatrix last = suspend(symbol(RingValue::one(s.ring), red.x, -(red.y * red.z)), red.l, red.m, s.n);
    const DisciplineReport rep = check_discipline(w, {DisciplineKind::F, s.ideal});
    const bool ok = evaluate(w, s.n, s.ring) == suspend(symbol(x, y, z), k, l, s.n) && rep.ok &&
                    red.stages.back() == last;
    return expect(ok, [&] {
      return "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string() + " (k,l)=(" +
             std::to_string(k) + "," + std::to_string(l) + ") " + rep.violation;
    });
  });
}

PropertyResult certificate_e(const Context& ctx, Sampler& rng) {
  return randomized("factorization.certificate_E", ctx, rng, true, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = r.special_linear(s.ring, s.n);
    auto [i, j] = r.index_pair(s.n);
    const RingValue a = r.ideal_element(s.ideal, 5);
    const Certificate cert = conjugate_in_E(g, i, j, a, s.ideal);
    if (!(cert.claim.target == inverse(g) * elementary(s.n, i, j, a) * g)) return "wrong target for g=" + g.to_string();
    return expect_verified(cert);
  });
}

PropertyResult certificate_f(const Context& ctx, Sampler& rng) {
  return randomized("factorization.certificate_F", ctx, rng, true, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = r.omega_matrix(s.ring, s.n, s.ideal);
    auto [i, j] = r.index_pair(s.n);
    const RingValue a = r.ideal_element(s.ideal, 5);
    const Certificate cert = conjugate_in_F(g, i, j, a, s.ideal);
    if (!(cert.claim.target == inverse(g) * elementary(s.n, i, j, a) * g)) return "wrong target for g=" + g.to_string();
    return expect_verified(cert);
  });
}

PropertyResult certificate_commf(const Context& ctx, Sampler& rng) {
  return randomized("factorization.certificate_CommF", ctx, rng, true, [](Sampler& r, const Setting& s) -> Outcome {
    const GroupExpr c = r.elementary_word(s.ring, s.n, 4, 3);
    auto [i, j] = r.index_pair(s.n);
    const RingValue a = r.ideal_element(s.ideal.squared(), 5);
    const Certificate cert = normal_generator_in_F(c, i, j, a, s.ideal, s.n);
    const SqMatrix cm = evaluate(c, s.n, s.ring);
    if (!(cert.claim.target == inverse(cm) * elementary(s.n, i, j, a) * cm)) return "wrong target for c=" + c.to_string();
    return expect_verified(cert);
  });
}

PropertyResult theorem_subgroup_level(const Context& ctx, Sampler& rng) {
  return randomized("factorization.subgroup_conjugation", ctx, rng, true, [](Sampler& r, const Setting& s) -> Outcome {
    const GroupExpr f = r.random_expr(s.ring, s.n, 2, &s.ideal, false);
    const SqMatrix g = r.omega_matrix(s.ring, s.n, s.ideal);
    const Certificate cert = conjugate_word_in_F(g, f, s.ideal);
    if (!(cert.claim.target == inverse(g) * evaluate(f, s.n, s.ring) * g)) return "wrong target for f=" + f.to_string();
    return expect_verified(cert);
  });
}

// ---------------------------------------------------------------- congruence

PropertyResult r_additive(const Context& ctx, Sampler& rng) {
  return randomized("congruence.r_additive", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = r.gamma_matrix(s.ring, s.n, s.ideal), h = r.gamma_matrix(s.ring, s.n, s.ideal);
    return expect(reduce_r(g * h, s.ideal) == reduce_r(g, s.ideal) + reduce_r(h, s.ideal),
                  [&] { return "g=" + g.to_string() + " h=" + h.to_string(); });
  });
}

PropertyResult r_trace_zero(const Context& ctx, Sampler& rng) {
  return randomized("congruence.r_trace_zero", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = r.gamma_matrix(s.ring, s.n, s.ideal);
    return expect(reduce_r(g, s.ideal).has_zero_trace(), [&] { return "g=" + g.to_string(); });
  });
}

PropertyResult preimage_roundtrip(const Context& ctx, Sampler& rng) {
  return randomized("congruence.preimage_roundtrip", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const SlResidueMatrix x = r.zero_trace_residue(s.ideal, s.n);
    const Preimage p = preimage_r(x);
    const bool ok = reduce_r(p.matrix, s.ideal) == x && evaluate(p.word, s.n, s.ring) == p.matrix &&
                    check_discipline(p.word, {DisciplineKind::E, s.ideal}).ok;
    return expect(ok, [&] { return "target=" + to_json(x).dump() + " preimage=" + p.matrix.to_string(); });
  });
}

Outcome check_approximation(const SqMatrix& g, const Approximation& a, DisciplineKind kind, const Setting& s) {
  const DisciplineReport rep = check_discipline(a.word, {kind, s.ideal});
  const bool ok = rep.ok && evaluate(a.word, s.n, s.ring) * a.remainder == g &&
                  in_class(a.remainder, {CongruenceKind::Gamma, s.ideal.squared(), s.n});
  return expect(ok, [&] { return "g=" + g.to_string() + " remainder=" + a.remainder.to_string() + " " + rep.violation; });
}

PropertyResult approximation_gamma(const Context& ctx, Sampler& rng) {
  return randomized("congruence.approximation_gamma", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = r.gamma_matrix(s.ring, s.n, s.ideal);
    return check_approximation(g, approximate_by_elementary(g, CongruenceKind::Gamma, s.ideal), DisciplineKind::E, s);
  });
}

PropertyResult approximation_delta(const Context& ctx, Sampler& rng) {
  return randomized("congruence.approximation_delta", ctx, rng, false, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = r.delta_matrix(s.ring, s.n, s.ideal);
    return check_approximation(g, approximate_by_elementary(g, CongruenceKind::Delta, s.ideal), DisciplineKind::F, s);
  });
}

PropertyResult squeeze(const Context& ctx, Sampler& rng) {
  return randomized("congruence.squeeze", ctx, rng, true, [](Sampler& r, const Setting& s) -> Outcome {
    const SqMatrix g = r.delta_matrix(s.ring, s.n, s.ideal);
    return check_approximation(g, squeeze_witness(g, s.ideal), DisciplineKind::F, s);
  });
}

struct FiniteInstance {
  long modulus;
  int n;
  long generator;
};

const std::vector<FiniteInstance>& finite_instances() {
  static const std::vector<FiniteInstance> v{{4, 3, 2}, {8, 2, 2}, {9, 2, 3}, {12, 2, 2}};
  return v;
}

std::string instance_label(const FiniteInstance& f) {
  return "[Z/" + std::to_string(f.modulus) + ", (" + std::to_string(f.generator) + "), n=" + std::to_string(f.n) + "]";
}

template <typename Body>
PropertyResult over_finite_gamma(const std::string& name, const Context& ctx, Body&& body) {
  Recorder rec(name);
  for (const auto& f : finite_instances()) {
    const RingSpec ring = RingSpec::modular(f.modulus);
    const Ideal ideal(ring, Integer(f.generator));
    try {
      for (const auto& g : enumerate_class(ring, f.n, CongruenceKind::Gamma, ideal, ctx.config.enumeration_limit))
        body(rec, g, ideal, instance_label(f));
    } catch (const Error& e) {
      rec.fail(instance_label(f) + " " + e.what());
    }
  }
  return rec.take();
}

PropertyResult r_kernel(const Context& ctx, Sampler&) {
  return over_finite_gamma("congruence.r_kernel", ctx,
                           [](Recorder& rec, const SqMatrix& g, const Ideal& ideal, const std::string& where) {
                             const bool in_kernel = reduce_r(g, ideal).is_zero();
                             const bool in_square = in_class(g, {CongruenceKind::Gamma, ideal.squared(), g.n()});
                             rec.check(in_kernel == in_square, [&] { return where + " g=" + g.to_string(); });
                           });
}

PropertyResult delta_as_preimage(const Context& ctx, Sampler&) {
  return over_finite_gamma("congruence.delta_as_preimage", ctx,
                           [](Recorder& rec, const SqMatrix& g, const Ideal& ideal, const std::string& where) {
                             const bool zero_diag = reduce_r(g, ideal).has_zero_diagonal();
                             const bool in_delta = in_class(g, {CongruenceKind::Delta, ideal, g.n()});
                             rec.check(zero_diag == in_delta, [&] { return where + " g=" + g.to_string(); });
                           });
}

PropertyResult quotient_orders(const Context& ctx, Sampler&) {
  Recorder rec("congruence.quotient_orders");
  for (const auto& f : finite_instances()) {
    const RingSpec ring = RingSpec::modular(f.modulus);
    try {
      const OrderReport rep = enumerate_orders(ring, f.n, Ideal(ring, Integer(f.generator)), ctx.config.enumeration_limit);
      for (const auto& q : rep.ratios)
        rec.check(q.pass, [&] {
          return instance_label(f) + " " + q.name + ": " + q.numerator.get_str() + "/" + q.denominator.get_str() +
                 " expected " + q.expected.get_str();
        });
    } catch (const Error& e) {
      rec.fail(instance_label(f) + " " + e.what());
    }
  }
  return rec.take();
}

// ---------------------------------------------------------------- freegroup

PropertyResult folding_confluence(const Context& ctx, Sampler& rng) {
  Recorder rec("freegroup.folding_confluence");
  for (int k = 0; k < ctx.config.cases; ++k) {
    std::vector<FreeWord> gens;
    const long count = rng.uniform(1, 3);
    for (long g = 0; g < count; ++g) gens.push_back(random_free_word(rng, 4, 3));
    SubgroupAutomaton plain = SubgroupAutomaton::petal(gens);
    plain.fold();
    bool ok = plain.is_folded();
    for (int t = 0; t < 3 && ok; ++t) {
      std::mt19937_64 order(rng.engine()());
      SubgroupAutomaton shuffled = SubgroupAutomaton::petal(gens);
      shuffled.fold(&order);
      ok = shuffled.is_folded() && shuffled.canonical_form() == plain.canonical_form();
    }
    for (const auto& g : gens) ok = ok && plain.accepts(g);
    rec.check(ok, [&] {
      std::string out = "case " + std::to_string(k) + " generators:";
      for (const auto& g : gens) out += " [" + g.to_string() + "]";
      return out;
    });
  }
  return rec.take();
}

// Every reduced word of letter length <= 6 is checked against the set of
// reduced products of at most 6 generators; a member of that length needs
// at most 6 generator factors, so the finite set decides membership.
PropertyResult stallings_bruteforce(const Context&, Sampler&) {
  Recorder rec("freegroup.stallings_vs_bruteforce");
  constexpr long long N = 4;
  constexpr int kMax = 6;
  const std::vector<FreeWord> gens{free_reduce({{'a', N}}), free_reduce({{'b', 1}})};
  const std::vector<FreeWord> letters{free_reduce({{'a', N}}), free_reduce({{'a', -N}}), free_reduce({{'b', 1}}),
                                      free_reduce({{'b', -1}})};
  std::set<std::string> members{FreeWord().to_string()};
  std::vector<FreeWord> frontier{FreeWord()};
  for (int depth = 0; depth < kMax; ++depth) {
    std::vector<FreeWord> next;
    for (const auto& w : frontier)
      for (const auto& l : letters) {
        FreeWord p = w * l;
        if (members.insert(p.to_string()).second) next.push_back(p);
        rec.check(stallings_member(p, gens), [&] { return "product of generators rejected: " + p.to_string(); });
      }
    frontier = std::move(next);
  }

  std::vector<FreeWord> level{FreeWord()};
  const std::vector<Syllable> steps{{'a', 1}, {'a', -1}, {'b', 1}, {'b', -1}};
  for (int len = 0; len <= kMax; ++len) {
    std::vector<FreeWord> next;
    for (const auto& w : level) {
      const bool expected = members.count(w.to_string()) > 0;
      rec.check(stallings_member(w, gens) == expected, [&] {
        return "word " + w.to_string() + ": brute force says " + (expected ? "member" : "non-member");
      });
      if (len == kMax) continue;
      for (const auto& s : steps) {
        FreeWord p = w * free_reduce({s});
        if (p.length() == len + 1) next.push_back(std::move(p));
      }
    }
    level = std::move(next);
  }
  return rec.take();
}

PropertyResult matrix_homomorphism(const Context& ctx, Sampler& rng) {
  Recorder rec("freegroup.matrix_homomorphism");
  for (int k = 0; k < ctx.config.cases; ++k) {
    const FreeWord u = random_free_word(rng, 6, 5), v = random_free_word(rng, 6, 5);
    const Integer N(rng.uniform(1, 9));
    rec.check(matrix_of_word(u * v, N) == matrix_of_word(u, N) * matrix_of_word(v, N), [&] {
      return "u=" + u.to_string() + " v=" + v.to_string() + " N=" + N.get_str();
    });
  }
  return rec.take();
}

// Depth-first over alternating syllable sequences, carrying the prefix matrix.
void freeness_walk(Recorder& rec, const SqMatrix& prefix, std::vector<Syllable>& word, const Integer& N,
                   int max_syllables, long max_exponent) {
  if (static_cast<int>(word.size()) == max_syllables) return;
  const std::vector<char> choices = word.empty() ? std::vector<char>{'a', 'b'}
                                                 : std::vector<char>{word.back().letter == 'a' ? 'b' : 'a'};
  for (char letter : choices)
    for (long e = -max_exponent; e <= max_exponent; ++e) {
      if (e == 0) continue;
      SqMatrix m = prefix;
      if (letter == 'a') {
        m.add_column_multiple(2, 1, Integer(e));
      } else {
        m.add_column_multiple(1, 2, Integer(N * e));
      }
      word.push_back({letter, e});
      rec.check(!m.is_identity(), [&] { return "word " + free_reduce(word).to_string() + " maps to the identity"; });
      freeness_walk(rec, m, word, N, max_syllables, max_exponent);
      word.pop_back();
    }
}

PropertyResult freeness_smoke(const Context& ctx, Sampler&) {
  Recorder rec("freegroup.freeness_smoke");
  std::vector<Syllable> word;
  const Integer N(4);
  freeness_walk(rec, SqMatrix::identity(RingSpec::integers(), 2), word, N, ctx.config.free_syllables,
                ctx.config.free_exponent);
  return rec.take();
}

PropertyResult counterexample(const Context&, Sampler&) {
  Recorder rec("freegroup.counterexample");
  for (long long N = 4; N <= 8; ++N) {
    const CounterexampleReport rep = counterexample_report(N);
    for (const auto& c : rep.checks)
      rec.check(c.pass, [&] { return "N=" + std::to_string(N) + " " + c.name + ": " + c.detail; });
  }
  return rec.take();
}

using PropertyFn = PropertyResult (*)(const Context&, Sampler&);

struct NamedProperty {
  const char* name;
  PropertyFn run;
};

const std::vector<NamedProperty>& registry() {
  static const std::vector<NamedProperty> props{
      {"rings.ring_axioms", ring_axioms},
      {"rings.ideal_absorption", ideal_absorption},
      {"rings.divide_roundtrip", divide_roundtrip},
      {"matrices.det_multiplicative", det_multiplicative},
      {"matrices.diagonal_multiplicativity", diagonal_multiplicativity},
      {"matrices.delta_normal_in_omega", delta_normal_in_omega},
      {"matrices.symbol_determinant", symbol_determinant},
      {"matrices.symbol_additivity", symbol_additivity},
      {"matrices.suspension_swap", suspension_swap},
      {"words.evaluate_homomorphism", evaluate_homomorphism},
      {"words.f_discipline_soundness", f_discipline_soundness},
      {"words.serialization_roundtrip", serialization_roundtrip},
      {"factorization.suslin_identities", suslin_identities},
      {"factorization.factor_commutation", factor_commutation},
      {"factorization.suslin_factorization", suslin_factorization},
      {"factorization.symbol_commutator_identity", symbol_commutator_identity},
      {"factorization.tits_identity", tits_identity},
      {"factorization.symbol_reduction", symbol_reduction},
      {"factorization.certificate_E", certificate_e},
      {"factorization.certificate_F", certificate_f},
      {"factorization.certificate_CommF", certificate_commf},
      {"factorization.subgroup_conjugation", theorem_subgroup_level},
      {"congruence.r_additive", r_additive},
      {"congruence.r_trace_zero", r_trace_zero},
      {"congruence.preimage_roundtrip", preimage_roundtrip},
      {"congruence.approximation_gamma", approximation_gamma},
      {"congruence.approximation_delta", approximation_delta},
      {"congruence.squeeze", squeeze},
      {"congruence.r_kernel", r_kernel},
      {"congruence.delta_as_preimage", delta_as_preimage},
      {"congruence.quotient_orders", quotient_orders},
      {"freegroup.folding_confluence", folding_confluence},
      {"freegroup.stallings_vs_bruteforce", stallings_bruteforce},
      {"freegroup.matrix_homomorphism", matrix_homomorphism},
      {"freegroup.freeness_smoke", freeness_smoke},
      {"freegroup.counterexample", counterexample},
  };
  return props;
}

std::uint64_t property_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 step keyed by the property position
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

template <typename T>
T typed_field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad_config(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

void SuiteConfig::validate() const {
  if (cases < 1 || cases > 1000000) bad_config("cases must be in [1, 1000000], got " + std::to_string(cases));
  if (rings.empty()) bad_config("at least one ring is required");
  for (const auto& r : rings) {
    try {
      RingSpec::parse(r);
    } catch (const Error& e) {
      bad_config(e.what());
    }
  }
  if (ideal_generators.empty()) bad_config("at least one ideal generator is required");
  for (long g : ideal_generators)
    if (g == 0) bad_config("ideal generators must be nonzero");
  if (dims.empty()) bad_config("at least one dimension is required");
  for (int n : dims)
    if (n < 2 || n > 8) bad_config("dimensions must be in [2, 8], got " + std::to_string(n));
  if (enumeration_limit == 0) bad_config("enumeration limit must be positive");
  if (free_syllables < 0 || free_syllables > 12) bad_config("free_syllables must be in [0, 12]");
  if (free_exponent < 1 || free_exponent > 6) bad_config("free_exponent must be in [1, 6]");
  const auto names = suite_property_names();
  for (const auto& o : only)
    if (std::find(names.begin(), names.end(), o) == names.end()) bad_config("unknown property '" + o + "'");
}

SuiteConfig suite_config_from_json(const Json& j) {
  if (!j.is_object()) bad_config("expected a JSON object");
  SuiteConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      c.seed = typed_field<std::uint64_t>(j, "seed");
    } else if (key == "cases") {
      c.cases = typed_field<int>(j, "cases");
    } else if (key == "rings") {
      c.rings = typed_field<std::vector<std::string>>(j, "rings");
    } else if (key == "ideals") {
      c.ideal_generators = typed_field<std::vector<long>>(j, "ideals");
    } else if (key == "dims") {
      c.dims = typed_field<std::vector<int>>(j, "dims");
    } else if (key == "enumeration_limit") {
      c.enumeration_limit = typed_field<std::uint64_t>(j, "enumeration_limit");
    } else if (key == "free_syllables") {
      c.free_syllables = typed_field<int>(j, "free_syllables");
    } else if (key == "free_exponent") {
      c.free_exponent = typed_field<int>(j, "free_exponent");
    } else if (key == "only") {
      c.only = typed_field<std::vector<std::string>>(j, "only");
    } else {
      bad_config("unknown field '" + key + "'");
    }
  }
  c.validate();
  return c;
}

Json to_json(const SuiteConfig& c) {
  return Json{{"seed", c.seed},
              {"cases", c.cases},
              {"rings", c.rings},
              {"ideals", c.ideal_generators},
              {"dims", c.dims},
              {"enumeration_limit", c.enumeration_limit},
              {"free_syllables", c.free_syllables},
              {"free_exponent", c.free_exponent},
              {"only", c.only}};
}

std::vector<std::string> suite_property_names() {
  std::vector<std::string> out;
  for (const auto& p : registry()) out.emplace_back(p.name);
  return out;
}

bool SuiteReport::all_pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass(); });
}

SuiteReport run_suite(const SuiteConfig& config) {
  config.validate();
  Context ctx{config, {}};
  for (const auto& r : config.rings) {
    const RingSpec ring = RingSpec::parse(r);
    for (long g : config.ideal_generators)
      for (int n : config.dims) ctx.settings.push_back({ring, Ideal(ring, Integer(g)), n});
  }

  SuiteReport report{config, {}};
  const auto& props = registry();
  for (std::size_t idx = 0; idx < props.size(); ++idx) {
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), props[idx].name) == config.only.end())
      continue;
    Sampler rng(property_seed(config.seed, idx));
    report.properties.push_back(props[idx].run(ctx, rng));
  }
  return report;
}

Json to_json(const SuiteReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties) {
    Json entry{{"name", p.name},   {"pass", p.pass()},         {"cases", p.cases},
               {"passed", p.passed}, {"failed", p.failed}, {"rejected", p.rejected},
               {"counterexamples", p.counterexamples}};
    if (!p.rejection.empty()) entry["rejection"] = p.rejection;
    props.push_back(std::move(entry));
  }
  return Json{{"config", to_json(r.config)}, {"properties", std::move(props)}, {"pass", r.all_pass()}};
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& p : r.properties) {
    out << (p.pass() ? "PASS " : "FAIL ") << p.name << "  " << p.passed << "/" << p.cases;
    if (p.rejected > 0) out << " (" << p.rejected << " rejected: " << p.rejection << ")";
    out << "\n";
    for (const auto& c : p.counterexamples) out << "    " << c << "\n";
  }
  out << "suite: " << (r.all_pass() ? "PASS" : "FAIL") << " (" << r.properties.size() << " properties, seed "
      << r.config.seed << ")\n";
  return out.str();
}

}  // namespace trueelem
