#include "prsequiv/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_set>

#include "prsequiv/error.hpp"

namespace prsequiv {

namespace {

std::uint32_t raw(FormulaId f) { return static_cast<std::uint32_t>(f); }

const char* kind_name(FormulaKind k) {
  switch (k) {
    case FormulaKind::TT: return "tt";
    case FormulaKind::FF: return "ff";
    case FormulaKind::And: return "and";
    case FormulaKind::Or: return "or";
    case FormulaKind::Not: return "not";
    case FormulaKind::Dia: return "dia";
    case FormulaKind::Box: return "box";
    case FormulaKind::WeakDia: return "wdia";
    case FormulaKind::DiaTau: return "diatau";
    case FormulaKind::BoxTau: return "boxtau";
    case FormulaKind::EF: return "ef";
    case FormulaKind::AG: return "ag";
    case FormulaKind::Var: return "var";
    case FormulaKind::Nu: return "nu";
    case FormulaKind::Mu: return "mu";
  }
  return "?";
}

}  // namespace

std::size_t FormulaStore::NodeHash::operator()(const Node& n) const {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ULL ^ n.label;
  for (FormulaId c : n.children) h = h * 1000003u ^ raw(c);
  return h;
}

FormulaStore::FormulaStore() {
  labels_.emplace_back();
  label_index_.emplace("", 0);
  intern({FormulaKind::TT, 0, {}});
  intern({FormulaKind::FF, 0, {}});
}

FormulaId FormulaStore::intern(Node n) {
  auto it = index_.find(n);
  if (it != index_.end()) return it->second;
  FormulaId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(n);
  index_.emplace(std::move(n), id);
  return id;
}

std::uint32_t FormulaStore::intern_label(std::string_view s) {
  auto it = label_index_.find(std::string(s));
  if (it != label_index_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(labels_.size());
  labels_.emplace_back(s);
  label_index_.emplace(std::string(s), id);
  return id;
}

FormulaId FormulaStore::nary(FormulaKind kind, std::vector<FormulaId> parts) {
  std::vector<FormulaId> flat;
  for (FormulaId p : parts) {
    if (this->kind(p) == kind) {
      auto c = children(p);
      flat.insert(flat.end(), c.begin(), c.end());
    } else {
      flat.push_back(p);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return kind == FormulaKind::And ? tt() : ff();
  if (flat.size() == 1) return flat[0];
  return intern({kind, 0, std::move(flat)});
}

FormulaId FormulaStore::conj(std::vector<FormulaId> parts) { return nary(FormulaKind::And, std::move(parts)); }
FormulaId FormulaStore::disj(std::vector<FormulaId> parts) { return nary(FormulaKind::Or, std::move(parts)); }
FormulaId FormulaStore::neg(FormulaId f) { return intern({FormulaKind::Not, 0, {f}}); }
FormulaId FormulaStore::dia(std::string_view a, FormulaId f) { return intern({FormulaKind::Dia, intern_label(a), {f}}); }
FormulaId FormulaStore::box(std::string_view a, FormulaId f) { return intern({FormulaKind::Box, intern_label(a), {f}}); }

FormulaId FormulaStore::weak_dia(std::string_view a, FormulaId f) {
  if (a == "tau") return dia_tau(f);
  return intern({FormulaKind::WeakDia, intern_label(a), {f}});
}

FormulaId FormulaStore::weak_box(std::string_view a, FormulaId f) {
  if (a == "tau") return box_tau(f);
  return neg(weak_dia(a, neg(f)));
}

FormulaId FormulaStore::dia_tau(FormulaId f) { return intern({FormulaKind::DiaTau, 0, {f}}); }
FormulaId FormulaStore::box_tau(FormulaId f) { return intern({FormulaKind::BoxTau, 0, {f}}); }
FormulaId FormulaStore::ef(FormulaId f) { return intern({FormulaKind::EF, 0, {f}}); }
FormulaId FormulaStore::ag(FormulaId f) { return intern({FormulaKind::AG, 0, {f}}); }
FormulaId FormulaStore::var(std::string_view n) { return intern({FormulaKind::Var, intern_label(n), {}}); }
FormulaId FormulaStore::nu(std::string_view n, FormulaId b) { return intern({FormulaKind::Nu, intern_label(n), {b}}); }
FormulaId FormulaStore::mu(std::string_view n, FormulaId b) { return intern({FormulaKind::Mu, intern_label(n), {b}}); }

FormulaId FormulaStore::substitute(FormulaId f, std::string_view name, FormulaId by) {
  std::unordered_map<FormulaId, FormulaId> memo;
  std::function<FormulaId(FormulaId)> go = [&](FormulaId g) -> FormulaId {
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    Node n = node(g);
    FormulaId out = g;
    if (n.kind == FormulaKind::Var) {
      if (labels_[n.label] == name) out = by;
    } else if ((n.kind == FormulaKind::Nu || n.kind == FormulaKind::Mu) && labels_[n.label] == name) {
      out = g;  // rebinds the name
    } else if (!n.children.empty()) {
      std::vector<FormulaId> cs;
      bool changed = false;
      for (FormulaId c : n.children) {
        cs.push_back(go(c));
        changed |= cs.back() != c;
      }
      if (changed) {
        if (n.kind == FormulaKind::And) out = conj(std::move(cs));
        else if (n.kind == FormulaKind::Or) out = disj(std::move(cs));
        else out = intern({n.kind, n.label, std::move(cs)});
      }
    }
    memo.emplace(g, out);
    return out;
  };
  return go(f);
}

void FormulaStore::print(FormulaId f, std::string& out) const {
  const Node& n = node(f);
  switch (n.kind) {
    case FormulaKind::TT: out += "tt"; return;
    case FormulaKind::FF: out += "ff"; return;
    case FormulaKind::Var: out += labels_[n.label]; return;
    case FormulaKind::And:
    case FormulaKind::Or: {
      out += '(';
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += n.kind == FormulaKind::And ? " & " : " | ";
        print(n.children[i], out);
      }
      out += ')';
      return;
    }
    case FormulaKind::Not: out += '!'; break;
    case FormulaKind::Dia: out += "<" + labels_[n.label] + ">"; break;
    case FormulaKind::Box: out += "[" + labels_[n.label] + "]"; break;
    case FormulaKind::WeakDia: out += "<<" + labels_[n.label] + ">>"; break;
    case FormulaKind::DiaTau: out += "<<tau>>"; break;
    case FormulaKind::BoxTau: out += "!<<tau>>!"; break;
    case FormulaKind::EF: out += "EF "; break;
    case FormulaKind::AG: out += "AG "; break;
    case FormulaKind::Nu:
    case FormulaKind::Mu:
      out += n.kind == FormulaKind::Nu ? "(nu " : "(mu ";
      out += labels_[n.label] + ". ";
      print(n.children[0], out);
      out += ')';
      return;
  }
  print(n.children[0], out);
}

std::string FormulaStore::to_string(FormulaId f) const {
  std::string out;
  print(f, out);
  return out;
}

std::string FormulaStore::export_dag(FormulaId f) const {
  std::map<FormulaId, std::size_t> num;
  std::ostringstream out;
  std::function<void(FormulaId)> go = [&](FormulaId g) {
    if (num.count(g)) return;
    for (FormulaId c : children(g)) go(c);
    std::size_t id = num.size();
    num.emplace(g, id);
    const Node& n = node(g);
    out << id << ": " << kind_name(n.kind);
    if (n.label) out << ' ' << labels_[n.label];
    for (FormulaId c : n.children) out << ' ' << num.at(c);
    out << '\n';
  };
  go(f);
  return out.str();
}

std::size_t dag_size(const FormulaStore& store, FormulaId f) {
  std::unordered_set<FormulaId> seen{f};
  std::vector<FormulaId> stack{f};
  while (!stack.empty()) {
    FormulaId g = stack.back();
    stack.pop_back();
    for (FormulaId c : store.children(g))
      if (seen.insert(c).second) stack.push_back(c);
  }
  return seen.size();
}

boost::multiprecision::cpp_int tree_size(const FormulaStore& store, FormulaId f) {
  std::unordered_map<FormulaId, boost::multiprecision::cpp_int> memo;
  std::function<boost::multiprecision::cpp_int(FormulaId)> go = [&](FormulaId g) {
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    boost::multiprecision::cpp_int n = 1;
    for (FormulaId c : store.children(g)) n += go(c);
    memo.emplace(g, n);
    return n;
  };
  return go(f);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, FormulaStore& store) : s_(text), st_(store) {}

  FormulaId parse() {
    FormulaId f = disjunction();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
  std::string ident() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    if (b == pos_) fail("expected a name");
    return std::string(s_.substr(b, pos_ - b));
  }
  // Keyword followed by a non-identifier character.
  bool keyword(std::string_view kw) {
    skip();
    if (s_.substr(pos_, kw.size()) != kw) return false;
    if (pos_ + kw.size() < s_.size() && ident_char(s_[pos_ + kw.size()])) return false;
    pos_ += kw.size();
    return true;
  }
  std::string bracketed(std::string_view close) {
    std::size_t end = s_.find(close, pos_);
    if (end == std::string_view::npos) fail("unterminated modality");
    std::string a(s_.substr(pos_, end - pos_));
    a.erase(0, a.find_first_not_of(" \t"));
    a.erase(a.find_last_not_of(" \t") + 1);
    if (a.empty()) fail("empty action");
    pos_ = end + close.size();
    return a;
  }

  FormulaId disjunction() {
    std::vector<FormulaId> parts{conjunction()};
    while (eat("|")) parts.push_back(conjunction());
    return parts.size() == 1 ? parts[0] : st_.disj(std::move(parts));
  }
  FormulaId conjunction() {
    std::vector<FormulaId> parts{unary()};
    while (eat("&")) parts.push_back(unary());
    return parts.size() == 1 ? parts[0] : st_.conj(std::move(parts));
  }
  FormulaId unary() {
    skip();
    if (eat("!")) {
      std::size_t save = pos_;
      if (eat("<<")) {
        std::string a = bracketed(">>");
        if (a == "tau" && eat("!")) return st_.box_tau(unary());
      }
      pos_ = save;
      return st_.neg(unary());
    }
    if (eat("<<")) {
      std::string a = bracketed(">>");
      return st_.weak_dia(a, unary());
    }
    if (eat("<")) {
      std::string a = bracketed(">");
      return st_.dia(a, unary());
    }
    if (eat("[")) {
      std::string a = bracketed("]");
      return st_.box(a, unary());
    }
    if (keyword("EF")) return st_.ef(unary());
    if (keyword("AG")) return st_.ag(unary());
    if (keyword("nu") || keyword("mu")) {
      bool is_nu = s_.substr(pos_ - 2, 2) == "nu";
      std::string x = ident();
      expect(".");
      FormulaId body = disjunction();
      return is_nu ? st_.nu(x, body) : st_.mu(x, body);
    }
    if (keyword("tt")) return st_.tt();
    if (keyword("ff")) return st_.ff();
    if (eat("(")) {
      FormulaId f = disjunction();
      expect(")");
      return f;
    }
    return st_.var(ident());
  }

  std::string_view s_;
  FormulaStore& st_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaId parse_formula(std::string_view text, FormulaStore& store) { return FormulaParser(text, store).parse(); }

}  // namespace prsequiv
