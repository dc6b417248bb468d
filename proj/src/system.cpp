#include "prsequiv/system.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "prsequiv/error.hpp"

namespace prsequiv {

namespace {

std::uint32_t raw(ConstId c) { return static_cast<std::uint32_t>(c); }

}  // namespace

PrsSystem::PrsSystem(std::shared_ptr<TermStore> store, const std::vector<RuleSpec>& rules,
                     std::vector<ConstId> extra_constants,
                     std::optional<ControlPartition> declared_partition, std::string name)
    : store_(std::move(store)), name_(std::move(name)), declared_(std::move(declared_partition)) {
  std::set<std::string> labels;
  for (const RuleSpec& r : rules) labels.insert(r.action);
  actions_.assign(labels.begin(), labels.end());

  std::set<std::uint32_t> consts;
  for (const RuleSpec& r : rules) {
    if (store_->kind(r.lhs) == TermKind::Empty)
      throw PreconditionError("rule with empty left-hand side: eps -" + r.action + "-> " +
                              store_->to_string(r.rhs));
    auto idx = static_cast<std::uint32_t>(std::lower_bound(actions_.begin(), actions_.end(), r.action) -
                                          actions_.begin());
    Rule rule{r.lhs, idx, r.rhs};
    bool dup = std::any_of(rules_.begin(), rules_.end(), [&](const Rule& o) {
      return o.lhs == rule.lhs && o.action == rule.action && o.rhs == rule.rhs;
    });
    if (dup) continue;
    rules_.push_back(rule);
    for (ConstId c : store_->occurrences(r.lhs)) consts.insert(raw(c));
    for (ConstId c : store_->occurrences(r.rhs)) consts.insert(raw(c));
  }
  for (ConstId c : extra_constants) consts.insert(raw(c));
  if (declared_) {
    for (ConstId c : declared_->control) consts.insert(raw(c));
    for (ConstId c : declared_->stack) consts.insert(raw(c));
  }
  for (std::uint32_t c : consts) constants_.push_back(ConstId{c});
  std::sort(constants_.begin(), constants_.end(), [&](ConstId a, ConstId b) {
    return store_->constant_name(a) < store_->constant_name(b);
  });
  const_member_.assign(store_->constant_count(), false);
  for (ConstId c : constants_) const_member_[raw(c)] = true;

  for (std::uint32_t i = 0; i < rules_.size(); ++i) {
    by_lhs_[rules_[i].lhs].push_back(i);
    TermKind k = store_->kind(rules_[i].lhs);
    if (k == TermKind::Seq) seq_lhs_.push_back(i);
    if (k == TermKind::Par) par_lhs_.push_back(i);
  }

  if (declared_) {
    std::set<std::uint32_t> ctl, stk;
    for (ConstId c : declared_->control) ctl.insert(raw(c));
    for (ConstId c : declared_->stack) stk.insert(raw(c));
    for (std::uint32_t c : ctl)
      if (stk.count(c))
        throw PreconditionError("partition lists " + store_->constant_name(ConstId{c}) +
                                " as both control and stack");
    for (ConstId c : constants_)
      if (!ctl.count(raw(c)) && !stk.count(raw(c)))
        throw PreconditionError("declared partition does not cover constant " + store_->constant_name(c));
  }
}

std::optional<std::uint32_t> PrsSystem::find_action(std::string_view label) const {
  auto it = std::lower_bound(actions_.begin(), actions_.end(), label);
  if (it == actions_.end() || *it != label) return std::nullopt;
  return static_cast<std::uint32_t>(it - actions_.begin());
}

bool PrsSystem::has_constant(ConstId c) const {
  return raw(c) < const_member_.size() && const_member_[raw(c)];
}

const std::vector<std::uint32_t>& PrsSystem::rules_with_lhs(TermId t) const {
  static const std::vector<std::uint32_t> kNone;
  auto it = by_lhs_.find(t);
  return it == by_lhs_.end() ? kNone : it->second;
}

bool PrsSystem::lhs_all_constants() const {
  return std::all_of(rules_.begin(), rules_.end(),
                     [&](const Rule& r) { return store_->kind(r.lhs) == TermKind::Const; });
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

class TermParser {
 public:
  TermParser(std::string_view s, std::size_t line, std::size_t col0) : s_(s), line_(line), col0_(col0) {}

  RawTerm parse_par() {
    std::vector<RawTerm> parts{parse_seq()};
    while (peek() == '|') {
      ++pos_;
      parts.push_back(parse_seq());
    }
    return parts.size() == 1 ? std::move(parts.front()) : RawTerm::par(std::move(parts));
  }

  void expect_end() {
    if (peek() != '\0') fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  std::size_t pos() const { return pos_; }
  char peek() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col0_ + pos_ + 1); }

  std::string ident() {
    if (!ident_start(peek())) fail("expected identifier");
    std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

 private:
  RawTerm parse_seq() {
    std::vector<RawTerm> parts{parse_atom()};
    while (peek() == '.') {
      ++pos_;
      parts.push_back(parse_atom());
    }
    return parts.size() == 1 ? std::move(parts.front()) : RawTerm::seq(std::move(parts));
  }

  RawTerm parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RawTerm t = parse_par();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    std::string name = ident();
    if (name == "eps") return RawTerm::empty();
    return RawTerm::constant(std::move(name));
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

RawTerm parse_raw_term(std::string_view text) {
  TermParser p(text, 1, 0);
  RawTerm t = p.parse_par();
  p.expect_end();
  return t;
}

TermId parse_term(std::string_view text, TermStore& store) { return store.normal_form(parse_raw_term(text)); }

PrsSystem parse_system(std::string_view text, std::shared_ptr<TermStore> store, std::string name) {
  if (!store) store = std::make_shared<TermStore>();
  std::vector<PrsSystem::RuleSpec> rules;
  std::vector<ConstId> extras;
  std::optional<ControlPartition> partition;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    std::string_view t = trim(line);
    auto header = [&](std::string_view key) {
      return t.size() > key.size() && t.substr(0, key.size()) == key && t[key.size()] == ':';
    };
    if (t == "rules:") continue;
    if (t.find("->") == std::string_view::npos && t.size() > 7 && t.substr(0, 7) == "system " ) {
      name = std::string(trim(t.substr(7)));
      continue;
    }
    if (header("name")) {
      name = std::string(trim(t.substr(5)));
      continue;
    }
    if (header("control") || header("stack")) {
      bool ctl = t[0] == 'c';
      if (!partition) partition.emplace();
      for (const std::string& w : split_words(t.substr(ctl ? 8 : 6))) {
        if (!ident_start(w[0])) throw ParseError("bad constant name '" + w + "'", line_no, 1);
        (ctl ? partition->control : partition->stack).push_back(store->intern_constant(w));
      }
      continue;
    }
    if (header("constants")) {
      for (const std::string& w : split_words(t.substr(10))) {
        if (!ident_start(w[0])) throw ParseError("bad constant name '" + w + "'", line_no, 1);
        extras.push_back(store->intern_constant(w));
      }
      continue;
    }
    if (header("partition")) {
      std::string_view body = t.substr(10);
      auto slash = body.find('/');
      if (slash == std::string_view::npos) throw ParseError("partition needs 'control / stack'", line_no, 1);
      ControlPartition cp;
      for (const std::string& w : split_words(body.substr(0, slash)))
        cp.control.push_back(store->intern_constant(w));
      for (const std::string& w : split_words(body.substr(slash + 1)))
        cp.stack.push_back(store->intern_constant(w));
      partition = std::move(cp);
      continue;
    }

    TermParser p(line, line_no, 0);
    RawTerm lhs = p.parse_par();
    if (p.peek() != '-') p.fail("expected '-action->'");
    std::string_view rest = line.substr(p.pos() + 1);
    auto arrow = rest.find("->");
    if (arrow == std::string_view::npos) p.fail("expected '->'");
    std::string action(trim(rest.substr(0, arrow)));
    if (action.empty() || !ident_start(action[0]) ||
        !std::all_of(action.begin(), action.end(), [](char c) { return ident_char(c); }))
      p.fail("bad action label '" + action + "'");
    std::size_t rhs_off = p.pos() + 1 + arrow + 2;
    TermParser q(line.substr(rhs_off), line_no, rhs_off);
    RawTerm rhs = q.parse_par();
    q.expect_end();
    TermId l = store->normal_form(lhs);
    if (store->kind(l) == TermKind::Empty)
      throw ParseError("left-hand side must not be eps", line_no, 1);
    rules.push_back({l, action, store->normal_form(rhs)});
  }
  return PrsSystem(store, rules, std::move(extras), std::move(partition), std::move(name));
}

PrsSystem load_system(const std::string& path, std::shared_ptr<TermStore> store) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str(), std::move(store));
}

std::string print_system(const PrsSystem& sys) {
  const TermStore& st = sys.store();
  std::ostringstream out;
  if (!sys.name().empty()) out << "system " << sys.name() << "\n";
  std::set<std::uint32_t> in_rules;
  for (const Rule& r : sys.rules()) {
    for (ConstId c : st.occurrences(r.lhs)) in_rules.insert(raw(c));
    for (ConstId c : st.occurrences(r.rhs)) in_rules.insert(raw(c));
  }
  std::vector<std::string> extra;
  for (ConstId c : sys.constants())
    if (!in_rules.count(raw(c))) extra.push_back(st.constant_name(c));
  if (!extra.empty()) {
    out << "constants:";
    for (const auto& e : extra) out << ' ' << e;
    out << "\n";
  }
  if (const auto& p = sys.declared_partition()) {
    out << "control:";
    for (ConstId c : p->control) out << ' ' << st.constant_name(c);
    out << "\nstack:";
    for (ConstId c : p->stack) out << ' ' << st.constant_name(c);
    out << "\n";
  }
  out << "rules:\n";
  for (const Rule& r : sys.rules())
    out << st.to_string(r.lhs) << " -" << sys.action_name(r.action) << "-> " << st.to_string(r.rhs) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Classification

std::string_view class_name(ProcessClass c) {
  switch (c) {
    case ProcessClass::FS: return "FS";
    case ProcessClass::BPA: return "BPA";
    case ProcessClass::nBPA: return "nBPA";
    case ProcessClass::BPP: return "BPP";
    case ProcessClass::nBPP: return "nBPP";
    case ProcessClass::PA: return "PA";
    case ProcessClass::nPA: return "nPA";
    case ProcessClass::PDA: return "PDA";
    case ProcessClass::PPDA: return "PPDA";
    case ProcessClass::PN: return "PN";
    case ProcessClass::OCA: return "OCA";
    case ProcessClass::OCN: return "OCN";
    case ProcessClass::PRS: return "PRS";
  }
  return "?";
}

namespace {

struct Roles {
  std::vector<int> role;  // per raw const id: -1 unknown, 0 control, 1 stack
  bool assign(ConstId c, int r) {
    int& x = role[raw(c)];
    if (x == -1) {
      x = r;
      return true;
    }
    return x == r;
  }
  bool is(ConstId c, int r) const { return role[raw(c)] == r; }
};

ControlPartition to_partition(const PrsSystem& sys, const Roles& roles) {
  ControlPartition p;
  for (ConstId c : sys.constants()) {
    if (roles.is(c, 0)) p.control.push_back(c);
    if (roles.is(c, 1)) p.stack.push_back(c);
  }
  return p;
}

Roles roles_from(const PrsSystem& sys, const ControlPartition& p) {
  Roles roles{std::vector<int>(sys.store().constant_count(), -1)};
  for (ConstId c : p.control) roles.role[raw(c)] = 0;
  for (ConstId c : p.stack) roles.role[raw(c)] = 1;
  return roles;
}

// Checks (and, with unknown roles, infers) p.X -a-> q.beta for all rules.
bool fit_pda(const PrsSystem& sys, Roles& roles) {
  const TermStore& st = sys.store();
  for (const Rule& r : sys.rules()) {
    if (st.kind(r.lhs) != TermKind::Seq || st.children(r.lhs).size() != 2) return false;
    auto l = st.children(r.lhs);
    if (st.kind(l[0]) != TermKind::Const || st.kind(l[1]) != TermKind::Const) return false;
    if (!roles.assign(st.const_of(l[0]), 0) || !roles.assign(st.const_of(l[1]), 1)) return false;
  }
  for (const Rule& r : sys.rules()) {
    if (!st.is_sequential(r.rhs) || st.kind(r.rhs) == TermKind::Empty) return false;
    auto w = st.word(r.rhs);
    if (!roles.assign(w[0], 0)) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
      if (!roles.assign(w[i], 1)) return false;
  }
  return true;
}

bool fit_ppda_fixed(const PrsSystem& sys, const Roles& roles) {
  const TermStore& st = sys.store();
  for (const Rule& r : sys.rules()) {
    if (!st.is_parallel(r.lhs) || !st.is_parallel(r.rhs)) return false;
    auto l = st.occurrences(r.lhs);
    if (l.size() != 2) return false;
    if (std::count_if(l.begin(), l.end(), [&](ConstId c) { return roles.is(c, 0); }) != 1) return false;
    if (std::count_if(l.begin(), l.end(), [&](ConstId c) { return roles.is(c, 1); }) != 1) return false;
    auto rr = st.occurrences(r.rhs);
    if (std::count_if(rr.begin(), rr.end(), [&](ConstId c) { return roles.is(c, 0); }) != 1) return false;
    if (std::count_if(rr.begin(), rr.end(), [&](ConstId c) { return roles.is(c, 1); }) + 1 !=
        static_cast<std::ptrdiff_t>(rr.size()))
      return false;
  }
  return true;
}

bool fit_oca_roles(const PrsSystem& sys, ConstId z, std::optional<ConstId> i) {
  const TermStore& st = sys.store();
  for (const Rule& r : sys.rules()) {
    auto l = st.word(r.lhs);
    auto w = st.word(r.rhs);
    std::size_t n = w.size();
    if (l[1] == z) {
      // pZ -> q I^k Z
      if (n < 2 || w[n - 1] != z) return false;
      for (std::size_t k = 1; k + 1 < n; ++k)
        if (!i || w[k] != *i) return false;
    } else {
      // rI -> s I^k
      for (std::size_t k = 1; k < n; ++k)
        if (!i || w[k] != *i) return false;
    }
  }
  return true;
}

std::optional<std::pair<ConstId, std::optional<ConstId>>> oca_roles(const PrsSystem& sys,
                                                                  const ControlPartition& p) {
  if (p.stack.empty() || p.stack.size() > 2) return std::nullopt;
  for (std::size_t zi = 0; zi < p.stack.size(); ++zi) {
    ConstId z = p.stack[zi];
    std::optional<ConstId> i;
    if (p.stack.size() == 2) i = p.stack[1 - zi];
    if (fit_oca_roles(sys, z, i)) return std::make_pair(z, i);
  }
  return std::nullopt;
}

bool is_ocn(const PrsSystem& sys, ConstId z, std::optional<ConstId> i) {
  TermStore& st = sys.store();
  for (const Rule& r : sys.rules()) {
    auto l = st.word(r.lhs);
    if (l[1] != z) continue;
    if (!i) return false;
    auto w = st.word(r.rhs);
    std::vector<ConstId> lhs2{l[0], *i};
    std::vector<ConstId> rhs2(w.begin(), w.end() - 1);
    rhs2.push_back(*i);
    TermId lt = st.from_word(lhs2);
    TermId rt = st.from_word(rhs2);
    bool found = false;
    for (std::uint32_t k : sys.rules_with_lhs(lt))
      if (sys.rules()[k].action == r.action && sys.rules()[k].rhs == rt) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

std::optional<ControlPartition> pda_partition(const PrsSystem& sys) {
  Roles roles{std::vector<int>(sys.store().constant_count(), -1)};
  if (sys.declared_partition()) roles = roles_from(sys, *sys.declared_partition());
  if (sys.rules().empty() && !sys.declared_partition()) return std::nullopt;
  if (!fit_pda(sys, roles)) return std::nullopt;
  return to_partition(sys, roles);
}

std::optional<ControlPartition> ppda_partition(const PrsSystem& sys) {
  const TermStore& st = sys.store();
  if (sys.declared_partition()) {
    Roles roles = roles_from(sys, *sys.declared_partition());
    if (fit_ppda_fixed(sys, roles)) return *sys.declared_partition();
    return std::nullopt;
  }
  if (sys.rules().empty()) return std::nullopt;
  // Two-colour the "exactly one of these two is a control" constraints, then try the
  // orientations of the components.
  std::size_t nc = st.constant_count();
  std::vector<std::vector<std::uint32_t>> adj(nc);
  std::vector<int> forced(nc, -1);
  for (const Rule& r : sys.rules()) {
    if (!st.is_parallel(r.lhs) || !st.is_parallel(r.rhs)) return std::nullopt;
    auto l = st.occurrences(r.lhs);
    if (l.size() != 2 || l[0] == l[1]) return std::nullopt;
    adj[raw(l[0])].push_back(raw(l[1]));
    adj[raw(l[1])].push_back(raw(l[0]));
    auto rr = st.occurrences(r.rhs);
    if (rr.empty()) return std::nullopt;
    if (rr.size() == 1) forced[raw(rr[0])] = 0;
    if (rr.size() == 2) {
      if (rr[0] == rr[1]) return std::nullopt;
      adj[raw(rr[0])].push_back(raw(rr[1]));
      adj[raw(rr[1])].push_back(raw(rr[0]));
    }
  }
  std::vector<int> colour(nc, -1), comp(nc, -1);
  std::vector<std::uint32_t> reps;
  for (ConstId c0 : sys.constants()) {
    if (comp[raw(c0)] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(raw(c0));
    std::vector<std::uint32_t> stack{raw(c0)};
    colour[raw(c0)] = 0;
    comp[raw(c0)] = id;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto v : adj[u]) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          comp[v] = id;
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  if (reps.size() > 16) return std::nullopt;
  for (std::uint32_t mask = 0; mask < (1u << reps.size()); ++mask) {
    Roles roles{std::vector<int>(nc, -1)};
    bool ok = true;
    for (ConstId c : sys.constants()) {
      int col = colour[raw(c)] ^ static_cast<int>((mask >> comp[raw(c)]) & 1u);
      roles.role[raw(c)] = col;
      if (forced[raw(c)] != -1 && forced[raw(c)] != col) ok = false;
    }
    if (ok && fit_ppda_fixed(sys, roles)) return to_partition(sys, roles);
  }
  return std::nullopt;
}

std::vector<ProcessClass> classify(const PrsSystem& sys) {
  const TermStore& st = sys.store();
  auto all = [&](auto pred) {
    return std::all_of(sys.rules().begin(), sys.rules().end(), [&](const Rule& r) { return pred(r); });
  };
  auto lhs_const = [&](const Rule& r) { return st.kind(r.lhs) == TermKind::Const; };

  std::set<ProcessClass> out{ProcessClass::PRS};
  bool fs = all([&](const Rule& r) { return lhs_const(r) && st.kind(r.rhs) == TermKind::Const; });
  bool bpa = all([&](const Rule& r) { return lhs_const(r) && st.is_sequential(r.rhs); });
  bool bpp = all([&](const Rule& r) { return lhs_const(r) && st.is_parallel(r.rhs); });
  bool pa = all(lhs_const);
  bool pn = all([&](const Rule& r) { return st.is_parallel(r.lhs) && st.is_parallel(r.rhs); });
  if (fs) out.insert(ProcessClass::FS);
  if (bpa) out.insert(ProcessClass::BPA);
  if (bpp) out.insert(ProcessClass::BPP);
  if (pa) out.insert(ProcessClass::PA);
  if (pn) out.insert(ProcessClass::PN);
  if (pa) {
    auto normed = normed_constants(sys);
    if (normed.size() == sys.constants().size()) {
      if (bpa) out.insert(ProcessClass::nBPA);
      if (bpp) out.insert(ProcessClass::nBPP);
      out.insert(ProcessClass::nPA);
    }
  }
  auto pda = pda_partition(sys);
  if (pda) {
    out.insert(ProcessClass::PDA);
    if (auto roles = oca_roles(sys, *pda)) {
      out.insert(ProcessClass::OCA);
      if (is_ocn(sys, roles->first, roles->second)) out.insert(ProcessClass::OCN);
    }
  }
  if (ppda_partition(sys)) out.insert(ProcessClass::PPDA);
  if (sys.declared_partition() && !pda && !out.count(ProcessClass::PPDA))
    throw PreconditionError("declared partition is inconsistent with the rules");
  return {out.begin(), out.end()};
}

bool has_class(const PrsSystem& sys, ProcessClass c) {
  auto cls = classify(sys);
  return std::find(cls.begin(), cls.end(), c) != cls.end();
}

// ---------------------------------------------------------------------------
// Norms

std::vector<ExtNat> constant_norms(const PrsSystem& sys) {
  const TermStore& st = sys.store();
  if (!sys.lhs_all_constants())
    throw PreconditionError("norms need every left-hand side to be a single constant");
  std::vector<ExtNat> val(st.constant_count(), ExtNat::omega());
  std::vector<bool> done(st.constant_count(), false);
  std::vector<std::vector<ConstId>> rhs_occ;
  rhs_occ.reserve(sys.rules().size());
  for (const Rule& r : sys.rules()) rhs_occ.push_back(st.occurrences(r.rhs));

  // Knuth's generalisation of Dijkstra: 1 + sum is superior, so the smallest candidate
  // built from finished constants is final.
  for (;;) {
    std::optional<std::uint64_t> best;
    std::optional<ConstId> best_c;
    for (std::size_t i = 0; i < sys.rules().size(); ++i) {
      ConstId x = st.const_of(sys.rules()[i].lhs);
      if (done[raw(x)]) continue;
      std::uint64_t sum = 1;
      bool ok = true;
      for (ConstId c : rhs_occ[i]) {
        if (!done[raw(c)] || val[raw(c)].is_omega()) {
          ok = false;
          break;
        }
        sum += val[raw(c)].value();
        if (sum > kNormCeiling) sum = kNormCeiling + 1;
      }
      if (!ok) continue;
      if (!best || sum < *best || (sum == *best && st.constant_name(x) < st.constant_name(*best_c))) {
        best = sum;
        best_c = x;
      }
    }
    if (!best) break;
    if (*best > kNormCeiling)
      throw LimitExceeded("norm of " + st.constant_name(*best_c) + " exceeds 2^32-2");
    val[raw(*best_c)] = ExtNat(*best);
    done[raw(*best_c)] = true;
  }
  return val;
}

std::vector<ConstId> normed_constants(const PrsSystem& sys) {
  auto val = constant_norms(sys);
  std::vector<ConstId> out;
  for (ConstId c : sys.constants())
    if (val[raw(c)].is_finite()) out.push_back(c);
  return out;
}

ExtNat norm_with(const TermStore& store, const std::vector<ExtNat>& by_const, TermId t) {
  ExtNat sum(0);
  for (ConstId c : store.occurrences(t)) {
    sum += raw(c) < by_const.size() ? by_const[raw(c)] : ExtNat::omega();
    if (sum.is_finite() && sum.value() > kNormCeiling) throw LimitExceeded("norm exceeds 2^32-2");
  }
  return sum;
}

ExtNat norm(const PrsSystem& sys, TermId t) { return norm_with(sys.store(), constant_norms(sys), t); }

}  // namespace prsequiv
