#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prsequiv {

enum class FormulaId : std::uint32_t {};

enum class FormulaKind : std::uint8_t {
  TT,
  FF,
  And,
  Or,
  Not,
  Dia,      // <a>
  Box,      // [a]
  WeakDia,  // <<a>>, a visible
  DiaTau,   // <<tau>>: some tau* successor
  BoxTau,   // every tau* successor
  EF,       // some reachable state
  AG,       // every reachable state
  Var,
  Nu,
  Mu,
};

// Interned formula DAG: building the same formula twice returns the same id. And/Or
// children are deduplicated and sorted by id; a single child stands for itself, an
// empty And is tt and an empty Or is ff.
//
// Not synchronized, like TermStore.
class FormulaStore {
 public:
  FormulaStore();

  FormulaId tt() const { return FormulaId{0}; }
  FormulaId ff() const { return FormulaId{1}; }
  FormulaId conj(std::vector<FormulaId> parts);
  FormulaId disj(std::vector<FormulaId> parts);
  FormulaId conj(FormulaId a, FormulaId b) { return conj(std::vector<FormulaId>{a, b}); }
  FormulaId disj(FormulaId a, FormulaId b) { return disj(std::vector<FormulaId>{a, b}); }
  FormulaId neg(FormulaId f);
  FormulaId dia(std::string_view action, FormulaId f);
  FormulaId box(std::string_view action, FormulaId f);
  // <<tau>> is the tau-closure diamond; <<a>> means tau* a tau*.
  FormulaId weak_dia(std::string_view action, FormulaId f);
  FormulaId weak_box(std::string_view action, FormulaId f);
  FormulaId dia_tau(FormulaId f);
  FormulaId box_tau(FormulaId f);
  FormulaId ef(FormulaId f);
  FormulaId ag(FormulaId f);
  FormulaId var(std::string_view name);
  FormulaId nu(std::string_view name, FormulaId body);
  FormulaId mu(std::string_view name, FormulaId body);

  FormulaKind kind(FormulaId f) const { return node(f).kind; }
  std::span<const FormulaId> children(FormulaId f) const { return node(f).children; }
  FormulaId child(FormulaId f) const { return node(f).children.at(0); }
  // Action of a modality, variable name of Var/Nu/Mu.
  const std::string& label(FormulaId f) const { return labels_[node(f).label]; }
  std::size_t node_count() const { return nodes_.size(); }

  // Replaces the free occurrences of `name` in f.
  FormulaId substitute(FormulaId f, std::string_view name, FormulaId by);

  std::string to_string(FormulaId f) const;
  // One line per reachable node, children before parents: `id: kind label children`.
  std::string export_dag(FormulaId f) const;

 private:
  struct Node {
    FormulaKind kind;
    std::uint32_t label;  // index into labels_, 0 when unused
    std::vector<FormulaId> children;
    bool operator==(const Node&) const = default;
  };
  struct NodeHash {
    std::size_t operator()(const Node& n) const;
  };

  const Node& node(FormulaId f) const { return nodes_[static_cast<std::uint32_t>(f)]; }
  FormulaId intern(Node n);
  std::uint32_t intern_label(std::string_view s);
  FormulaId nary(FormulaKind kind, std::vector<FormulaId> parts);
  void print(FormulaId f, std::string& out) const;

  std::vector<Node> nodes_;
  std::unordered_map<Node, FormulaId, NodeHash> index_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> label_index_;
};

// Text syntax: tt ff (f & g) (f | g) !f <a>f [a]f <<a>>f EF f AG f X (nu X. f) (mu X. f).
// '&' binds tighter than '|'; a fixpoint body extends as far right as possible.
FormulaId parse_formula(std::string_view text, FormulaStore& store);

// Distinct nodes reachable from f.
std::size_t dag_size(const FormulaStore& store, FormulaId f);
// Size of f written out as a tree.
boost::multiprecision::cpp_int tree_size(const FormulaStore& store, FormulaId f);

}  // namespace prsequiv

template <>
struct std::hash<prsequiv::FormulaId> {
  std::size_t operator()(prsequiv::FormulaId f) const noexcept {
    return std::hash<std::uint32_t>{}(static_cast<std::uint32_t>(f));
  }
};
