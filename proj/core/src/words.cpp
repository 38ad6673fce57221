#include "trueelem/words.hpp"

#include <sstream>

namespace trueelem {

GroupExpr::GroupExpr() : GroupExpr(std::make_shared<const Node>(Node{ExprKind::Product, 0, 0, {}, {}})) {}

GroupExpr GroupExpr::make(Node node) { return GroupExpr(std::make_shared<const Node>(std::move(node))); }

GroupExpr GroupExpr::raw_elem(int i, int j, Integer a) {
  return make(Node{ExprKind::Elem, i, j, {std::move(a)}, {}});
}

GroupExpr GroupExpr::raw_symbol(Integer x, Integer y, Integer z, int p, int q) {
  return make(Node{ExprKind::Symbol, p, q, {std::move(x), std::move(y), std::move(z)}, {}});
}

GroupExpr GroupExpr::raw_inverse(GroupExpr w) { return make(Node{ExprKind::Inverse, 0, 0, {}, {std::move(w)}}); }

GroupExpr GroupExpr::raw_product(std::vector<GroupExpr> factors) {
  return make(Node{ExprKind::Product, 0, 0, {}, std::move(factors)});
}

GroupExpr GroupExpr::raw_commutator(GroupExpr g, GroupExpr h) {
  return make(Node{ExprKind::Commutator, 0, 0, {}, {std::move(g), std::move(h)}});
}

GroupExpr GroupExpr::raw_conjugation(GroupExpr conjugator, GroupExpr inner) {
  return make(Node{ExprKind::Conjugation, 0, 0, {}, {std::move(conjugator), std::move(inner)}});
}

GroupExpr GroupExpr::elem(int i, int j, const RingValue& a) {
  if (a.is_zero()) return GroupExpr();
  return raw_elem(i, j, a.value());
}

GroupExpr GroupExpr::symbol(const RingValue& x, const RingValue& y, const RingValue& z, int p, int q) {
  require_same_ring(x.spec(), y.spec());
  require_same_ring(x.spec(), z.spec());
  if (z.is_zero() || (x.is_zero() && y.is_zero())) return GroupExpr();
  return raw_symbol(x.value(), y.value(), z.value(), p, q);
}

GroupExpr GroupExpr::inverse(const GroupExpr& w) {
  if (w.is_identity()) return w;
  if (w.kind() == ExprKind::Inverse) return w.children()[0];
  return raw_inverse(w);
}

GroupExpr GroupExpr::product(std::vector<GroupExpr> factors) {
  std::vector<GroupExpr> flat;
  flat.reserve(factors.size());
  for (auto& f : factors) {
    if (f.kind() == ExprKind::Product) {
      for (const auto& c : f.children()) flat.push_back(c);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.size() == 1) return flat.front();
  return raw_product(std::move(flat));
}

GroupExpr GroupExpr::commutator(const GroupExpr& g, const GroupExpr& h) {
  if (g.is_identity() || h.is_identity()) return GroupExpr();
  return raw_commutator(g, h);
}

GroupExpr GroupExpr::conjugation(const GroupExpr& conjugator, const GroupExpr& inner) {
  if (inner.is_identity()) return GroupExpr();
  if (conjugator.is_identity()) return inner;
  return raw_conjugation(conjugator, inner);
}

std::size_t GroupExpr::letter_count() const {
  if (kind() == ExprKind::Elem || kind() == ExprKind::Symbol) return 1;
  std::size_t total = 0;
  for (const auto& c : children()) total += c.letter_count();
  return total;
}

std::string GroupExpr::to_string() const {
  std::ostringstream os;
  switch (kind()) {
    case ExprKind::Elem:
      os << 'e' << first_index() << second_index() << '(' << coefficient(0).get_str() << ')';
      break;
    case ExprKind::Symbol:
      os << "S(" << coefficient(0).get_str() << ',' << coefficient(1).get_str() << ';'
         << coefficient(2).get_str() << ")^" << first_index() << second_index();
      break;
    case ExprKind::Inverse:
      os << '(' << children()[0].to_string() << ")^-1";
      break;
    case ExprKind::Product:
      if (children().empty()) os << '1';
      for (const auto& c : children()) os << c.to_string();
      break;
    case ExprKind::Commutator:
      os << '[' << children()[0].to_string() << ", " << children()[1].to_string() << ']';
      break;
    case ExprKind::Conjugation:
      os << '(' << children()[1].to_string() << ")^(" << children()[0].to_string() << ')';
      break;
  }
  return os.str();
}

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.i == y.i && x.j == y.j && x.coeffs == y.coeffs && x.children == y.children;
}

void validate_indices(const GroupExpr& w, int n) {
  switch (w.kind()) {
    case ExprKind::Elem:
    case ExprKind::Symbol:
      require_index_pair(w.first_index(), w.second_index(), n);
      return;
    default:
      for (const auto& c : w.children()) validate_indices(c, n);
  }
}

void apply_right(const GroupExpr& w, SqMatrix& acc, bool inverted) {
  const RingSpec& spec = acc.spec();
  switch (w.kind()) {
    case ExprKind::Elem: {
      require_index_pair(w.first_index(), w.second_index(), acc.n());
      const Integer& a = w.coefficient(0);
      acc.add_column_multiple(w.second_index(), w.first_index(), inverted ? Integer(-a) : a);
      return;
    }
    case ExprKind::Symbol: {
      require_index_pair(w.first_index(), w.second_index(), acc.n());
      // S(x,y;z)^-1 = S(x,y;-z)
      const RingValue x(spec, w.coefficient(0));
      const RingValue y(spec, w.coefficient(1));
      const RingValue z(spec, inverted ? Integer(-w.coefficient(2)) : w.coefficient(2));
      const SqMatrix s = symbol(x, y, z);
      acc.mix_columns(w.first_index(), w.second_index(), s.entry(1, 1), s.entry(1, 2), s.entry(2, 1),
                      s.entry(2, 2));
      return;
    }
    case ExprKind::Inverse:
      apply_right(w.children()[0], acc, !inverted);
      return;
    case ExprKind::Product: {
      const auto& f = w.children();
      if (!inverted) {
        for (const auto& c : f) apply_right(c, acc, false);
      } else {
        for (auto it = f.rbegin(); it != f.rend(); ++it) apply_right(*it, acc, true);
      }
      return;
    }
    case ExprKind::Commutator: {
      // [g,h] = g^-1 h^-1 g h and [g,h]^-1 = [h,g]
      const auto& g = w.children()[inverted ? 1 : 0];
      const auto& h = w.children()[inverted ? 0 : 1];
      apply_right(g, acc, true);
      apply_right(h, acc, true);
      apply_right(g, acc, false);
      apply_right(h, acc, false);
      return;
    }
    case ExprKind::Conjugation: {
      const auto& c = w.children()[0];
      apply_right(c, acc, true);
      apply_right(w.children()[1], acc, inverted);
      apply_right(c, acc, false);
      return;
    }
  }
}

SqMatrix evaluate(const GroupExpr& w, int n, const RingSpec& spec) {
  SqMatrix acc = SqMatrix::identity(spec, n);
  apply_right(w, acc, false);
  return acc;
}

const char* to_string(DisciplineKind kind) {
  switch (kind) {
    case DisciplineKind::F: return "F";
    case DisciplineKind::E: return "E";
    case DisciplineKind::CommF: return "CommF";
    case DisciplineKind::Unrestricted: return "Unrestricted";
  }
  return "?";
}

DisciplineKind parse_discipline_kind(std::string_view text) {
  if (text == "F") return DisciplineKind::F;
  if (text == "E") return DisciplineKind::E;
  if (text == "CommF") return DisciplineKind::CommF;
  if (text == "Unrestricted") return DisciplineKind::Unrestricted;
  throw Error(ErrorKind::Parse, "discipline must be F, E, CommF or Unrestricted, got '" + std::string(text) + "'");
}

namespace {

class DisciplineChecker {
 public:
  explicit DisciplineChecker(const Ideal& ideal) : ideal_(ideal) {}

  DisciplineReport run(const GroupExpr& w, DisciplineKind kind) {
    switch (kind) {
      case DisciplineKind::F: f(w, "root"); break;
      case DisciplineKind::E: e(w, "root"); break;
      case DisciplineKind::CommF: comm_f(w, "root"); break;
      case DisciplineKind::Unrestricted: break;
    }
    return report_;
  }

 private:
  bool fail(const std::string& path, const std::string& reason) {
    if (report_.ok) {
      report_.ok = false;
      report_.violation = path + ": " + reason;
    }
    return false;
  }

  bool atom(const GroupExpr& w, const std::string& path, const char* discipline) {
    if (w.kind() == ExprKind::Symbol)
      return fail(path, std::string("symbol letter ") + w.to_string() + " is not a " + discipline + " letter");
    const RingValue a(ideal_.spec(), w.coefficient(0));
    if (!in_ideal(a, ideal_))
      return fail(path, "letter " + w.to_string() + " has coefficient " + a.to_string() + " outside " +
                            ideal_.to_string());
    return true;
  }

  bool f(const GroupExpr& w, const std::string& path) {
    if (w.kind() == ExprKind::Elem || w.kind() == ExprKind::Symbol) return atom(w, path, "F");
    const auto& ch = w.children();
    for (std::size_t k = 0; k < ch.size(); ++k)
      if (!f(ch[k], path + "/" + child_label(w, k))) return false;
    return true;
  }

  bool e(const GroupExpr& w, const std::string& path) {
    switch (w.kind()) {
      case ExprKind::Elem:
      case ExprKind::Symbol:
        return atom(w, path, "E");
      case ExprKind::Inverse:
      case ExprKind::Product: {
        const auto& ch = w.children();
        for (std::size_t k = 0; k < ch.size(); ++k)
          if (!e(ch[k], path + "/" + child_label(w, k))) return false;
        return true;
      }
      case ExprKind::Commutator:
        return e(w.children()[0], path + "/left");
      case ExprKind::Conjugation:
        return e(w.children()[1], path + "/inner");
    }
    return false;
  }

  bool comm_f(const GroupExpr& w, const std::string& path) {
    switch (w.kind()) {
      case ExprKind::Inverse:
      case ExprKind::Product: {
        const auto& ch = w.children();
        for (std::size_t k = 0; k < ch.size(); ++k)
          if (!comm_f(ch[k], path + "/" + child_label(w, k))) return false;
        return true;
      }
      case ExprKind::Commutator:
        return f(w.children()[0], path + "/left") && f(w.children()[1], path + "/right");
      default:
        return fail(path, "expected a commutator of F-words, found " + w.to_string());
    }
  }

  static std::string child_label(const GroupExpr& w, std::size_t k) {
    switch (w.kind()) {
      case ExprKind::Inverse: return "inv";
      case ExprKind::Product: return "prod[" + std::to_string(k) + "]";
      case ExprKind::Commutator: return k == 0 ? "left" : "right";
      case ExprKind::Conjugation: return k == 0 ? "conjugator" : "inner";
      default: return "?";
    }
  }

  const Ideal& ideal_;
  DisciplineReport report_;
};

}  // namespace

DisciplineReport check_discipline(const GroupExpr& w, const Discipline& d) {
  return DisciplineChecker(d.ideal).run(w, d.kind);
}

}  // namespace trueelem
