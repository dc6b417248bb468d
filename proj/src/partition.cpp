#include "prsequiv/partition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "prsequiv/error.hpp"
#include "prsequiv/semantics.hpp"

namespace prsequiv {

void Partition::canonicalize() {
  std::unordered_map<std::uint32_t, std::uint32_t> renum;
  for (auto& b : block) {
    auto [it, fresh] = renum.emplace(b, static_cast<std::uint32_t>(renum.size()));
    b = it->second;
  }
  num_blocks = static_cast<std::uint32_t>(renum.size());
}

std::size_t Relation::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

namespace {

void require_complete(const FiniteLts& lts) {
  if (!lts.all_complete()) throw IncompleteLtsError("operation needs a completely explored LTS");
}

Partition single_block(std::size_t n) {
  Partition p;
  p.block.assign(n, 0);
  p.num_blocks = n ? 1 : 0;
  return p;
}

// Splits every block of p by membership in `marked`. Returns whether anything split.
bool split_by(Partition& p, const std::vector<bool>& marked) {
  std::map<std::pair<std::uint32_t, bool>, std::uint32_t> ids;
  for (std::size_t s = 0; s < p.block.size(); ++s) ids.emplace(std::make_pair(p.block[s], marked[s]), 0);
  if (ids.size() == p.num_blocks) return false;
  std::uint32_t next = 0;
  for (auto& kv : ids) kv.second = next++;
  for (std::size_t s = 0; s < p.block.size(); ++s) p.block[s] = ids[{p.block[s], marked[s]}];
  p.canonicalize();
  return true;
}

Partition naive_refine(const FiniteLts& lts) {
  std::size_t n = lts.num_states();
  Partition p = single_block(n);
  bool changed = true;
  while (changed) {
    changed = false;
    Partition snapshot = p;
    for (std::uint32_t c = 0; c < snapshot.num_blocks; ++c) {
      for (ActionId a = 0; a < lts.actions().size(); ++a) {
        std::vector<bool> marked(n, false);
        for (StateId s = 0; s < n; ++s)
          for (const Edge& e : lts.out(s))
            if (e.action == a && snapshot.block[e.target] == c) marked[s] = true;
        if (split_by(p, marked)) changed = true;
      }
    }
  }
  return p;
}

Partition worklist_refine(const FiniteLts& lts) {
  std::size_t n = lts.num_states();
  std::size_t na = lts.actions().size();
  // Reverse adjacency per action.
  std::vector<std::vector<std::vector<StateId>>> pre(na, std::vector<std::vector<StateId>>(n));
  for (StateId s = 0; s < n; ++s)
    for (const Edge& e : lts.out(s)) pre[e.action][e.target].push_back(s);

  std::vector<std::vector<StateId>> blocks;
  std::vector<std::uint32_t> block_of(n, 0);
  if (n) {
    blocks.emplace_back();
    for (StateId s = 0; s < n; ++s) blocks[0].push_back(s);
  }
  std::deque<std::uint32_t> work;
  std::vector<bool> queued(blocks.size(), false);
  auto push = [&](std::uint32_t b) {
    if (b >= queued.size()) queued.resize(b + 1, false);
    if (!queued[b]) {
      queued[b] = true;
      work.push_back(b);
    }
  };
  if (n) push(0);

  std::vector<bool> in_pre(n, false);
  while (!work.empty()) {
    std::uint32_t c = work.front();
    work.pop_front();
    queued[c] = false;
    std::vector<StateId> splitter = blocks[c];
    for (std::size_t a = 0; a < na; ++a) {
      std::vector<StateId> hit;
      for (StateId t : splitter)
        for (StateId s : pre[a][t])
          if (!in_pre[s]) {
            in_pre[s] = true;
            hit.push_back(s);
          }
      std::map<std::uint32_t, std::vector<StateId>> touched;
      for (StateId s : hit) touched[block_of[s]].push_back(s);
      for (auto& [b, inside] : touched) {
        if (inside.size() == blocks[b].size()) continue;
        std::vector<StateId> outside;
        for (StateId s : blocks[b])
          if (!in_pre[s]) outside.push_back(s);
        auto nb = static_cast<std::uint32_t>(blocks.size());
        blocks[b] = std::move(outside);
        for (StateId s : inside) block_of[s] = nb;
        blocks.push_back(std::move(inside));
        push(b);
        push(nb);
      }
      for (StateId s : hit) in_pre[s] = false;
    }
  }
  Partition p;
  p.block = block_of;
  p.canonicalize();
  return p;
}

Partition signature_step(const FiniteLts& lts, const Partition& p) {
  std::map<std::pair<std::uint32_t, std::vector<std::pair<ActionId, std::uint32_t>>>, std::uint32_t> ids;
  Partition q;
  q.block.resize(lts.num_states());
  for (StateId s = 0; s < lts.num_states(); ++s) {
    std::vector<std::pair<ActionId, std::uint32_t>> sig;
    for (const Edge& e : lts.out(s)) sig.emplace_back(e.action, p.block[e.target]);
    std::sort(sig.begin(), sig.end());
    sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
    auto [it, fresh] = ids.emplace(std::make_pair(p.block[s], std::move(sig)), static_cast<std::uint32_t>(ids.size()));
    q.block[s] = it->second;
  }
  q.canonicalize();
  return q;
}

}  // namespace

Partition bisim_partition(const FiniteLts& lts, RefinementMethod method) {
  require_complete(lts);
  return method == RefinementMethod::Naive ? naive_refine(lts) : worklist_refine(lts);
}

KBisim kbisim(const FiniteLts& lts, std::size_t k) {
  require_complete(lts);
  KBisim r;
  r.levels.push_back(single_block(lts.num_states()));
  for (std::size_t i = 0; i < k; ++i) {
    r.levels.push_back(signature_step(lts, r.levels.back()));
    if (!r.stable_from && r.levels[i] == r.levels[i + 1]) r.stable_from = i;
  }
  return r;
}

Partition weak_bisim_partition(const FiniteLts& lts, RefinementMethod method) {
  return bisim_partition(saturate(lts), method);
}

KBisim weak_kbisim(const FiniteLts& lts, std::size_t k) { return kbisim(saturate(lts), k); }

Relation sim_preorder(const FiniteLts& lts) {
  require_complete(lts);
  std::size_t n = lts.num_states();
  std::vector<std::vector<bool>> enabled(n, std::vector<bool>(lts.actions().size(), false));
  for (StateId s = 0; s < n; ++s)
    for (const Edge& e : lts.out(s)) enabled[s][e.action] = true;

  Relation r(n);
  for (StateId s = 0; s < n; ++s)
    for (StateId t = 0; t < n; ++t) {
      bool ok = true;
      for (ActionId a = 0; a < lts.actions().size(); ++a)
        if (enabled[s][a] && !enabled[t][a]) ok = false;
      r.set(s, t, ok);
    }

  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t) {
        if (!r.contains(s, t)) continue;
        for (const Edge& e : lts.out(s)) {
          bool matched = false;
          auto to = lts.out(t);
          auto it = std::lower_bound(to.begin(), to.end(), Edge{e.action, 0});
          for (; it != to.end() && it->action == e.action; ++it)
            if (r.contains(e.target, it->target)) {
              matched = true;
              break;
            }
          if (!matched) {
            r.set(s, t, false);
            changed = true;
            break;
          }
        }
      }
  }
  return r;
}

bool trace_inclusion(const FiniteLts& lts, StateId s, StateId t, std::size_t max_subsets) {
  require_complete(lts);
  using Key = std::pair<StateId, std::vector<StateId>>;
  std::set<Key> seen;
  std::set<std::vector<StateId>> subsets;
  std::deque<Key> queue;
  Key start{s, {t}};
  seen.insert(start);
  subsets.insert(start.second);
  queue.push_back(start);
  while (!queue.empty()) {
    Key k = queue.front();
    queue.pop_front();
    for (const Edge& e : lts.out(k.first)) {
      std::vector<StateId> next;
      for (StateId u : k.second) {
        auto p = lts.post(u, e.action);
        next.insert(next.end(), p.begin(), p.end());
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) return false;
      Key nk{e.target, next};
      if (seen.insert(nk).second) {
        if (subsets.insert(nk.second).second && subsets.size() > max_subsets)
          throw LimitExceeded("trace inclusion exceeded " + std::to_string(max_subsets) + " subsets");
        queue.push_back(std::move(nk));
      }
    }
  }
  return true;
}

}  // namespace prsequiv
