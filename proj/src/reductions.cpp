#include "prsequiv/reductions.hpp"

#include <algorithm>
#include <set>

#include "prsequiv/error.hpp"
#include "prsequiv/partition.hpp"

namespace prsequiv {

namespace {

void require_complete(const FiniteLts& lts) {
  if (!lts.all_complete()) throw IncompleteLtsError("reductions need completely explored LTSs");
}

std::string lam(const std::string& a, std::size_t i) { return "lam_" + a + "_" + std::to_string(i); }
std::string del(const std::string& a, std::size_t j) { return "del_" + a + "_" + std::to_string(j); }
const std::string kTick = "tick";

// Copies the states and transitions of `lts` into b; returns the offset of state 0.
StateId copy_into(LtsBuilder& b, const FiniteLts& lts) {
  StateId off = static_cast<StateId>(b.num_states());
  for (StateId s = 0; s < lts.num_states(); ++s) b.add_state(lts.label(s));
  for (StateId s = 0; s < lts.num_states(); ++s)
    for (const Edge& e : lts.out(s)) b.add_transition(off + s, lts.action_name(e.action), off + e.target);
  return off;
}

}  // namespace

std::size_t max_branching(const FiniteLts& lts) {
  std::size_t d = 0;
  for (StateId s = 0; s < lts.num_states(); ++s)
    for (ActionId a = 0; a < lts.actions().size(); ++a) d = std::max(d, lts.post(s, a).size());
  return d;
}

SimInstance bisim_to_sim(const FiniteLts& a, StateId s, const FiniteLts& b, StateId t, std::optional<std::size_t> d) {
  require_complete(a);
  require_complete(b);
  if (s >= a.num_states() || t >= b.num_states()) throw PreconditionError("state out of range");
  std::size_t need = std::max(max_branching(a), max_branching(b));
  std::size_t D = d.value_or(need);
  if (D < need) throw PreconditionError("branching bound " + std::to_string(D) + " is below the branching degree " +
                                        std::to_string(need));

  std::set<std::string> base(a.actions().begin(), a.actions().end());
  base.insert(b.actions().begin(), b.actions().end());
  std::vector<std::string> fresh{kTick};
  for (const std::string& x : base)
    for (std::size_t i = 1; i <= D; ++i) {
      fresh.push_back(lam(x, i));
      fresh.push_back(del(x, i));
    }
  for (const std::string& f : fresh)
    if (base.count(f)) throw PreconditionError("action name " + f + " clashes with the gadget alphabet");
  std::vector<std::string> all(base.begin(), base.end());
  all.insert(all.end(), fresh.begin(), fresh.end());

  LtsBuilder lb;
  for (const std::string& x : all) lb.add_action(x);
  StateId loff = copy_into(lb, a);
  StateId tick = lb.add_state("tick");
  lb.add_transition(tick, kTick, tick);
  for (StateId x = 0; x < a.num_states(); ++x)
    for (const std::string& act : base) {
      std::vector<StateId> succ;
      if (auto id = a.find_action(act)) succ = a.post(x, *id);
      for (std::size_t i = 1; i <= D; ++i) {
        lb.add_transition(loff + x, lam(act, i), loff + x);
        lb.add_transition(loff + x, del(act, i), i <= succ.size() ? loff + succ[i - 1] : tick);
      }
    }
  lb.set_initial(loff + s);

  LtsBuilder rb;
  for (const std::string& x : all) rb.add_action(x);
  StateId roff = copy_into(rb, b);
  StateId u = rb.add_state("univ");
  for (const std::string& x : all) rb.add_transition(u, x, u);
  for (StateId y = 0; y < b.num_states(); ++y)
    for (const std::string& act : base) {
      std::vector<StateId> succ;
      if (auto id = b.find_action(act)) succ = b.post(y, *id);
      for (std::size_t i = 1; i <= D; ++i) {
        rb.add_transition(roff + y, del(act, i), u);
        if (i > succ.size()) {
          rb.add_transition(roff + y, lam(act, i), u);
          continue;
        }
        for (std::size_t j = 1; j <= D; ++j) {
          StateId e = rb.add_state(b.label(y) + "/" + lam(act, i) + "/" + std::to_string(j));
          rb.add_transition(roff + y, lam(act, i), e);
          for (const std::string& x : all) rb.add_transition(e, x, x == del(act, j) ? roff + succ[i - 1] : u);
        }
      }
    }
  rb.set_initial(roff + t);
  return {std::move(lb).build(), loff + s, std::move(rb).build(), roff + t};
}

EqInstance simpre_to_simeq(const FiniteLts& lts, StateId s, StateId t) {
  require_complete(lts);
  if (s >= lts.num_states() || t >= lts.num_states()) throw PreconditionError("state out of range");
  LtsBuilder b;
  for (const std::string& x : lts.actions()) b.add_action(x);
  copy_into(b, lts);
  std::string x = lts.actions().empty() ? "a" : lts.actions().front();
  StateId s2 = b.add_state("s'");
  StateId t2 = b.add_state("t'");
  b.add_transition(s2, x, s);
  b.add_transition(s2, x, t);
  b.add_transition(t2, x, t);
  b.set_initial(s2);
  return {std::move(b).build(), s2, t2};
}

FiniteLts max_quotient(const FiniteLts& lts) {
  require_complete(lts);
  Relation sim = sim_preorder(lts);
  LtsBuilder b;
  for (const std::string& x : lts.actions()) b.add_action(x);
  for (StateId s = 0; s < lts.num_states(); ++s) b.add_state(lts.label(s));
  for (StateId s = 0; s < lts.num_states(); ++s)
    for (ActionId a = 0; a < lts.actions().size(); ++a) {
      auto succ = lts.post(s, a);
      for (StateId t : succ) {
        bool maximal = std::none_of(succ.begin(), succ.end(),
                                    [&](StateId r) { return sim.contains(t, r) && !sim.contains(r, t); });
        if (maximal) b.add_transition(s, a, t);
      }
    }
  b.set_initial(lts.initial());
  return std::move(b).build();
}

}  // namespace prsequiv
