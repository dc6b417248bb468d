#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prsequiv/lts.hpp"

namespace prsequiv {

// Equivalence on states; block numbers follow the first occurrence of each block
// in state order, so equal partitions compare equal.
struct Partition {
  std::vector<std::uint32_t> block;
  std::uint32_t num_blocks = 0;

  bool same(StateId s, StateId t) const { return block[s] == block[t]; }
  void canonicalize();
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Binary relation on the states of one LTS, stored as a bit matrix.
class Relation {
 public:
  explicit Relation(std::size_t n, bool full = false) : n_(n), bits_(n * n, full) {}
  std::size_t size() const { return n_; }
  bool contains(StateId s, StateId t) const { return bits_[s * n_ + t]; }
  void set(StateId s, StateId t, bool v) { bits_[s * n_ + t] = v; }
  std::size_t count() const;
  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

enum class RefinementMethod {
  Naive,     // repeat splitting every block by every (block, action) until stable
  Worklist,  // Paige-Tarjan style: only re-split by blocks that changed
};

// Coarsest strong bisimulation. Requires a complete LTS.
Partition bisim_partition(const FiniteLts& lts, RefinementMethod method = RefinementMethod::Naive);

struct KBisim {
  std::vector<Partition> levels;           // levels[i] is ~i
  std::optional<std::size_t> stable_from;  // least i with ~i = ~(i+1), if seen
};

// ~0 (everything related) up to ~k. States whose transitions are needed must be complete.
KBisim kbisim(const FiniteLts& lts, std::size_t k);

Partition weak_bisim_partition(const FiniteLts& lts, RefinementMethod method = RefinementMethod::Naive);
KBisim weak_kbisim(const FiniteLts& lts, std::size_t k);

// Greatest simulation: contains(s, t) iff s is simulated by t.
Relation sim_preorder(const FiniteLts& lts);

// Whether every trace of s is a trace of t, by subset construction on t's side.
// Throws LimitExceeded past max_subsets determinised states.
bool trace_inclusion(const FiniteLts& lts, StateId s, StateId t, std::size_t max_subsets = 1u << 16);

}  // namespace prsequiv
