#include "prsequiv/model_check.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "prsequiv/error.hpp"

namespace prsequiv {

namespace {

using Set = boost::dynamic_bitset<>;

struct VarUse {
  std::set<std::string> pos, neg;
};

class Checker {
 public:
  Checker(const FiniteLts& lts, const FormulaStore& st) : lts_(lts), st_(st), n_(lts.num_states()) {
    if (!lts.all_complete()) throw IncompleteLtsError("model checking needs a completely explored LTS");
    pred_.resize(n_);
    for (StateId s = 0; s < n_; ++s)
      for (const Edge& e : lts.out(s)) pred_[e.target].push_back({e.action, s});
    tau_ = lts.tau();
  }

  void validate(FormulaId f) {
    const VarUse& u = uses(f);
    if (!u.pos.empty() || !u.neg.empty()) throw PreconditionError("formula is not closed");
    check_alternation(f);
  }

  Set eval(FormulaId f) {
    auto it = memo_.find(f);
    if (it != memo_.end() && it->second.stamp == stamp(f)) return it->second.value;
    Set r = compute(f);
    memo_[f] = {r, stamp(f)};
    return r;
  }

 private:
  struct Binding {
    Set value;
    std::uint64_t version;
    FormulaKind binder;
  };
  struct Memo {
    Set value;
    std::vector<std::uint64_t> stamp;
  };

  // Free variables with their polarity.
  const VarUse& uses(FormulaId f) {
    if (auto it = uses_.find(f); it != uses_.end()) return it->second;
    VarUse u;
    switch (st_.kind(f)) {
      case FormulaKind::Var: u.pos.insert(st_.label(f)); break;
      case FormulaKind::Not: {
        const VarUse& c = uses(st_.child(f));
        u.pos = c.neg;
        u.neg = c.pos;
        break;
      }
      case FormulaKind::Nu:
      case FormulaKind::Mu: {
        u = uses(st_.child(f));
        if (u.neg.count(st_.label(f)))
          throw PreconditionError("variable " + st_.label(f) + " occurs under an odd number of negations");
        u.pos.erase(st_.label(f));
        break;
      }
      default:
        for (FormulaId c : st_.children(f)) {
          const VarUse& cu = uses(c);
          u.pos.insert(cu.pos.begin(), cu.pos.end());
          u.neg.insert(cu.neg.begin(), cu.neg.end());
        }
    }
    return uses_.emplace(f, std::move(u)).first->second;
  }

  std::vector<std::string> free_vars(FormulaId f) {
    const VarUse& u = uses(f);
    std::vector<std::string> v(u.pos.begin(), u.pos.end());
    v.insert(v.end(), u.neg.begin(), u.neg.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  // Fixpoint nodes strictly below f.
  const std::vector<FormulaId>& fixpoints_below(FormulaId f) {
    if (auto it = below_.find(f); it != below_.end()) return it->second;
    std::set<FormulaId> acc;
    std::vector<FormulaId> stack(st_.children(f).begin(), st_.children(f).end());
    while (!stack.empty()) {
      FormulaId g = stack.back();
      stack.pop_back();
      if (!acc.insert(g).second) continue;
      for (FormulaId c : st_.children(g)) stack.push_back(c);
    }
    std::vector<FormulaId> out;
    for (FormulaId g : acc)
      if (st_.kind(g) == FormulaKind::Nu || st_.kind(g) == FormulaKind::Mu) out.push_back(g);
    return below_.emplace(f, std::move(out)).first->second;
  }

  void check_alternation(FormulaId root) {
    std::vector<FormulaId> all = fixpoints_below(root);
    if (st_.kind(root) == FormulaKind::Nu || st_.kind(root) == FormulaKind::Mu) all.push_back(root);
    for (FormulaId f : all)
      for (FormulaId g : fixpoints_below(f)) {
        if (st_.kind(g) == st_.kind(f)) continue;
        auto fv = free_vars(g);
        if (std::binary_search(fv.begin(), fv.end(), st_.label(f)))
          throw PreconditionError("alternating fixpoints are not supported");
      }
  }

  std::vector<std::uint64_t> stamp(FormulaId f) {
    std::vector<std::uint64_t> s;
    for (const std::string& x : free_vars(f)) {
      auto it = env_.find(x);
      if (it == env_.end() || it->second.empty()) throw PreconditionError("unbound variable " + x);
      s.push_back(it->second.back().version);
    }
    return s;
  }

  std::optional<ActionId> action(FormulaId f) const { return lts_.find_action(st_.label(f)); }

  Set pre(const Set& target, std::optional<ActionId> a, bool exists) const {
    Set r(n_);
    for (StateId s = 0; s < n_; ++s) {
      bool any = false, all = true;
      for (const Edge& e : lts_.out(s)) {
        if (!a || e.action != *a) continue;
        if (target[e.target]) any = true;
        else all = false;
      }
      r[s] = exists ? any : all;
    }
    return r;
  }

  // States that reach `target` along edges of action a (every action if a is empty).
  Set backward(Set target, std::optional<ActionId> a, bool any_action) const {
    std::vector<StateId> stack;
    for (StateId s = 0; s < n_; ++s)
      if (target[s]) stack.push_back(s);
    while (!stack.empty()) {
      StateId t = stack.back();
      stack.pop_back();
      for (const auto& [act, s] : pred_[t]) {
        if (!any_action && (!a || act != *a)) continue;
        if (!target[s]) {
          target[s] = true;
          stack.push_back(s);
        }
      }
    }
    return target;
  }
  Set tau_back(const Set& s) const { return backward(s, tau_, false); }

  Set compute(FormulaId f) {
    switch (st_.kind(f)) {
      case FormulaKind::TT: return Set(n_).set();
      case FormulaKind::FF: return Set(n_);
      case FormulaKind::And: {
        Set r(n_);
        r.set();
        for (FormulaId c : st_.children(f)) r &= eval(c);
        return r;
      }
      case FormulaKind::Or: {
        Set r(n_);
        for (FormulaId c : st_.children(f)) r |= eval(c);
        return r;
      }
      case FormulaKind::Not: return ~eval(st_.child(f));
      case FormulaKind::Dia: return pre(eval(st_.child(f)), action(f), true);
      case FormulaKind::Box: return pre(eval(st_.child(f)), action(f), false);
      case FormulaKind::WeakDia: return tau_back(pre(tau_back(eval(st_.child(f))), action(f), true));
      case FormulaKind::DiaTau: return tau_back(eval(st_.child(f)));
      case FormulaKind::BoxTau: return ~tau_back(~eval(st_.child(f)));
      case FormulaKind::EF: return backward(eval(st_.child(f)), std::nullopt, true);
      case FormulaKind::AG: return ~backward(~eval(st_.child(f)), std::nullopt, true);
      case FormulaKind::Var: {
        auto it = env_.find(st_.label(f));
        if (it == env_.end() || it->second.empty()) throw PreconditionError("unbound variable " + st_.label(f));
        return it->second.back().value;
      }
      case FormulaKind::Nu:
      case FormulaKind::Mu: return fixpoint(f);
    }
    throw Error("unknown formula kind");
  }

  Set fixpoint(FormulaId f) {
    FormulaKind k = st_.kind(f);
    const std::string& x = st_.label(f);
    // A previous result is a valid start when every free variable is bound by a
    // fixpoint of the same kind: those only move in the iteration's own direction.
    bool warm = warm_.count(f) != 0;
    for (const std::string& y : free_vars(f))
      if (env_.at(y).back().binder != k) warm = false;
    Set cur(n_);
    if (warm) {
      cur = warm_.at(f);
    } else {
      if (k == FormulaKind::Nu) cur.set();
      for (FormulaId g : fixpoints_below(f)) warm_.erase(g);
    }
    auto& stack = env_[x];
    for (;;) {
      stack.push_back({cur, ++version_, k});
      Set nxt = eval(st_.child(f));
      env_[x].pop_back();
      if (nxt == cur) break;
      cur = std::move(nxt);
    }
    warm_[f] = cur;
    return cur;
  }

  const FiniteLts& lts_;
  const FormulaStore& st_;
  std::size_t n_;
  std::vector<std::vector<std::pair<ActionId, StateId>>> pred_;
  std::optional<ActionId> tau_;
  std::map<std::string, std::vector<Binding>> env_;
  std::uint64_t version_ = 0;
  std::map<FormulaId, Memo> memo_;
  std::map<FormulaId, VarUse> uses_;
  std::map<FormulaId, std::vector<FormulaId>> below_;
  std::map<FormulaId, Set> warm_;
};

}  // namespace

std::vector<bool> satisfying_states(const FiniteLts& lts, const FormulaStore& store, FormulaId f) {
  Checker c(lts, store);
  c.validate(f);
  Set s = c.eval(f);
  std::vector<bool> out(lts.num_states());
  for (StateId i = 0; i < out.size(); ++i) out[i] = s[i];
  return out;
}

bool model_check(const FiniteLts& lts, StateId s, const FormulaStore& store, FormulaId f) {
  if (s >= lts.num_states()) throw PreconditionError("state out of range");
  return satisfying_states(lts, store, f)[s];
}

}  // namespace prsequiv
