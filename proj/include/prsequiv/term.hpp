#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace prsequiv {

enum class TermId : std::uint32_t {};
enum class ConstId : std::uint32_t {};

enum class TermKind : std::uint8_t { Empty, Const, Seq, Par };

// Unnormalized term as produced by the parser.
struct RawTerm {
  enum class Op : std::uint8_t { Empty, Const, Seq, Par };
  Op op = Op::Empty;
  std::string name;
  std::vector<RawTerm> parts;

  static RawTerm empty() { return {}; }
  static RawTerm constant(std::string n) { return {Op::Const, std::move(n), {}}; }
  static RawTerm seq(std::vector<RawTerm> p) { return {Op::Seq, {}, std::move(p)}; }
  static RawTerm par(std::vector<RawTerm> p) { return {Op::Par, {}, std::move(p)}; }
};

// Hash-consed store of process terms kept in structural-congruence normal form:
// Seq children are never Seq or Empty and there are at least two of them; Par children
// are never Par or Empty, at least two, sorted by the canonical order. Two terms are
// congruent iff their ids are equal.
//
// Not synchronized. Use one store per thread of work.
class TermStore {
 public:
  TermStore();

  ConstId intern_constant(std::string_view name);
  std::optional<ConstId> find_constant(std::string_view name) const;
  const std::string& constant_name(ConstId c) const { return const_names_[static_cast<std::uint32_t>(c)]; }
  std::size_t constant_count() const { return const_names_.size(); }

  TermId empty() const { return TermId{0}; }
  TermId constant(ConstId c);
  TermId constant(std::string_view name) { return constant(intern_constant(name)); }
  TermId seq(std::span<const TermId> parts);
  TermId seq(TermId a, TermId b) {
    const TermId p[2] = {a, b};
    return seq(p);
  }
  TermId par(std::span<const TermId> parts);
  TermId par(TermId a, TermId b) {
    const TermId p[2] = {a, b};
    return par(p);
  }
  TermId normal_form(const RawTerm& raw);

  TermKind kind(TermId t) const { return node(t).kind; }
  ConstId const_of(TermId t) const { return node(t).constant; }
  std::span<const TermId> children(TermId t) const { return node(t).children; }
  std::size_t term_count() const { return nodes_.size(); }

  // Canonical total order: Empty < Const < Seq < Par, constants by name, composites
  // lexicographically on children. Independent of interning order.
  bool less(TermId a, TermId b) const { return compare(a, b) < 0; }
  int compare(TermId a, TermId b) const;

  bool is_sequential(TermId t) const;  // built from constants with '.' only (or eps)
  bool is_parallel(TermId t) const;    // built from constants with '|' only (or eps)
  // Constant occurrences, left to right (with multiplicity).
  std::vector<ConstId> occurrences(TermId t) const;
  // For a sequential term: its constants as a word (eps -> empty word).
  std::vector<ConstId> word(TermId t) const;
  TermId from_word(std::span<const ConstId> w);
  std::size_t size(TermId t) const { return occurrences(t).size(); }

  std::string to_string(TermId t) const;

 private:
  struct Node {
    TermKind kind;
    ConstId constant;
    std::vector<TermId> children;
  };
  struct KeyHash {
    std::size_t operator()(const Node& n) const;
  };
  struct KeyEq {
    bool operator()(const Node& a, const Node& b) const {
      return a.kind == b.kind && a.constant == b.constant && a.children == b.children;
    }
  };

  const Node& node(TermId t) const { return nodes_[static_cast<std::uint32_t>(t)]; }
  TermId intern(Node n);
  void print(TermId t, std::string& out, bool in_seq) const;

  std::vector<Node> nodes_;
  std::unordered_map<Node, TermId, KeyHash, KeyEq> index_;
  std::vector<std::string> const_names_;
  std::unordered_map<std::string, ConstId> const_index_;
  std::vector<TermId> const_terms_;
};

struct TermLess {
  const TermStore* store;
  bool operator()(TermId a, TermId b) const { return store->less(a, b); }
};

}  // namespace prsequiv

template <>
struct std::hash<prsequiv::TermId> {
  std::size_t operator()(prsequiv::TermId t) const noexcept {
    return std::hash<std::uint32_t>{}(static_cast<std::uint32_t>(t));
  }
};
