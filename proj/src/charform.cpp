#include "prsequiv/charform.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "prsequiv/error.hpp"
#include "prsequiv/semantics.hpp"

namespace prsequiv {

namespace {

void require_complete(const FiniteLts& fs) {
  if (!fs.all_complete()) throw IncompleteLtsError("characteristic formulae need a completely explored LTS");
}

std::vector<std::string> alphabet(const FiniteLts& fs, std::span<const std::string> extra, bool with_tau) {
  std::vector<std::string> a(fs.actions().begin(), fs.actions().end());
  a.insert(a.end(), extra.begin(), extra.end());
  if (with_tau) a.emplace_back(kTau);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

using Modality = std::function<FormulaId(const std::string&, FormulaId)>;

// One refinement step of the characteristic formulae: prev[s] -> next[s].
std::vector<FormulaId> step(const FiniteLts& fs, const std::vector<std::string>& acts, const std::vector<FormulaId>& prev,
                            FormulaStore& st, const Modality& dia, const Modality& box) {
  std::vector<FormulaId> next(fs.num_states());
  for (StateId s = 0; s < fs.num_states(); ++s) {
    std::vector<FormulaId> parts;
    for (const std::string& a : acts) {
      std::vector<FormulaId> alts;
      if (auto id = fs.find_action(a))
        for (StateId t : fs.post(s, *id)) {
          parts.push_back(dia(a, prev[t]));
          alts.push_back(prev[t]);
        }
      parts.push_back(box(a, st.disj(std::move(alts))));
    }
    next[s] = st.conj(std::move(parts));
  }
  return next;
}

std::vector<std::vector<FormulaId>> levels(const FiniteLts& fs, std::size_t k, FormulaStore& st,
                                           const std::vector<std::string>& acts, const Modality& dia,
                                           const Modality& box) {
  std::vector<std::vector<FormulaId>> out{std::vector<FormulaId>(fs.num_states(), st.tt())};
  for (std::size_t i = 0; i < k; ++i) out.push_back(step(fs, acts, out.back(), st, dia, box));
  return out;
}

// Closed formula for variable `root` of the greatest-fixpoint system X_s = bodies[s].
FormulaId eliminate(FormulaStore& st, std::vector<std::string> names, std::vector<FormulaId> bodies, std::size_t root) {
  std::vector<std::size_t> order;
  for (std::size_t i = names.size(); i-- > 0;)
    if (i != root) order.push_back(i);
  order.push_back(root);
  FormulaId closed = st.tt();
  for (std::size_t j : order) {
    closed = st.nu(names[j], bodies[j]);
    for (std::size_t i = 0; i < bodies.size(); ++i)
      if (i != j) bodies[i] = st.substitute(bodies[i], names[j], closed);
  }
  return closed;
}

std::vector<StateId> reachable_from(const FiniteLts& fs, StateId f) {
  std::vector<bool> seen(fs.num_states(), false);
  std::vector<StateId> order{f}, stack{f};
  seen[f] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const Edge& e : fs.out(s))
      if (!seen[e.target]) {
        seen[e.target] = true;
        order.push_back(e.target);
        stack.push_back(e.target);
      }
  }
  std::sort(order.begin(), order.end());
  return order;
}

// Builds a nu-system over the states reachable from f and closes it.
FormulaId nu_system(const FiniteLts& fs, StateId f, FormulaStore& st, const std::string& prefix,
                    const std::function<FormulaId(StateId, const std::function<FormulaId(StateId)>&)>& body) {
  require_complete(fs);
  auto states = reachable_from(fs, f);
  std::map<StateId, std::size_t> local;
  std::vector<std::string> names;
  for (StateId s : states) {
    local[s] = names.size();
    names.push_back(prefix + std::to_string(s));
  }
  auto var_of = [&](StateId s) { return st.var(names[local.at(s)]); };
  std::vector<FormulaId> bodies;
  for (StateId s : states) bodies.push_back(body(s, var_of));
  return eliminate(st, names, bodies, local.at(f));
}

}  // namespace

std::vector<std::vector<FormulaId>> hm_char(const FiniteLts& fs, std::size_t k, FormulaStore& st,
                                            std::span<const std::string> extra) {
  require_complete(fs);
  return levels(
      fs, k, st, alphabet(fs, extra, false), [&](const std::string& a, FormulaId f) { return st.dia(a, f); },
      [&](const std::string& a, FormulaId f) { return st.box(a, f); });
}

std::vector<std::vector<FormulaId>> weak_hm_char(const FiniteLts& fs, std::size_t k, FormulaStore& st,
                                                 std::span<const std::string> extra) {
  require_complete(fs);
  FiniteLts sat = saturate(fs);
  return levels(
      sat, k, st, alphabet(sat, extra, true), [&](const std::string& a, FormulaId f) { return st.weak_dia(a, f); },
      [&](const std::string& a, FormulaId f) { return st.weak_box(a, f); });
}

FormulaId ef_char(const FiniteLts& fs, StateId f, FormulaStore& st, bool weak, std::span<const std::string> extra,
                  std::optional<std::size_t> k) {
  require_complete(fs);
  if (f >= fs.num_states()) throw PreconditionError("state out of range");
  std::size_t depth = k.value_or(fs.num_states());
  auto xi = weak ? weak_hm_char(fs, depth, st, extra) : hm_char(fs, depth, st, extra);
  const auto& top = xi.back();
  return st.conj(top[f], st.ag(st.disj(std::vector<FormulaId>(top.begin(), top.end()))));
}

FormulaId mu_char_bisim(const FiniteLts& fs, StateId f, FormulaStore& st, std::span<const std::string> extra) {
  auto acts = alphabet(fs, extra, false);
  return nu_system(fs, f, st, "X", [&](StateId s, const std::function<FormulaId(StateId)>& x) {
    std::vector<FormulaId> parts;
    for (const std::string& a : acts) {
      std::vector<FormulaId> alts;
      if (auto id = fs.find_action(a))
        for (StateId t : fs.post(s, *id)) {
          parts.push_back(st.dia(a, x(t)));
          alts.push_back(x(t));
        }
      parts.push_back(st.box(a, st.disj(std::move(alts))));
    }
    return st.conj(std::move(parts));
  });
}

SimChar sim_char(const FiniteLts& fs, StateId f, FormulaStore& st, std::span<const std::string> extra) {
  auto acts = alphabet(fs, extra, false);
  FormulaId psi = nu_system(fs, f, st, "P", [&](StateId s, const std::function<FormulaId(StateId)>& x) {
    std::vector<FormulaId> parts;
    for (const Edge& e : fs.out(s)) parts.push_back(st.dia(fs.action_name(e.action), x(e.target)));
    return st.conj(std::move(parts));
  });
  FormulaId rho = nu_system(fs, f, st, "R", [&](StateId s, const std::function<FormulaId(StateId)>& x) {
    std::vector<FormulaId> parts;
    for (const std::string& a : acts) {
      std::vector<FormulaId> alts;
      if (auto id = fs.find_action(a))
        for (StateId t : fs.post(s, *id)) alts.push_back(x(t));
      parts.push_back(st.box(a, st.disj(std::move(alts))));
    }
    return st.conj(std::move(parts));
  });
  return {psi, rho};
}

}  // namespace prsequiv
