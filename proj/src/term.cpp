#include "prsequiv/term.hpp"

#include <algorithm>

#include "prsequiv/error.hpp"

namespace prsequiv {

TermStore::TermStore() {
  nodes_.push_back(Node{TermKind::Empty, ConstId{0}, {}});
  index_.emplace(nodes_.back(), TermId{0});
}

std::size_t TermStore::KeyHash::operator()(const Node& n) const {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ULL;
  h ^= static_cast<std::uint32_t>(n.constant) + 0x9e3779b9 + (h << 6) + (h >> 2);
  for (TermId c : n.children) h ^= static_cast<std::uint32_t>(c) + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

ConstId TermStore::intern_constant(std::string_view name) {
  auto it = const_index_.find(std::string(name));
  if (it != const_index_.end()) return it->second;
  ConstId id{static_cast<std::uint32_t>(const_names_.size())};
  const_names_.emplace_back(name);
  const_index_.emplace(std::string(name), id);
  const_terms_.push_back(intern(Node{TermKind::Const, id, {}}));
  return id;
}

std::optional<ConstId> TermStore::find_constant(std::string_view name) const {
  auto it = const_index_.find(std::string(name));
  if (it == const_index_.end()) return std::nullopt;
  return it->second;
}

TermId TermStore::constant(ConstId c) { return const_terms_.at(static_cast<std::uint32_t>(c)); }

TermId TermStore::intern(Node n) {
  auto it = index_.find(n);
  if (it != index_.end()) return it->second;
  TermId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(n);
  index_.emplace(std::move(n), id);
  return id;
}

TermId TermStore::seq(std::span<const TermId> parts) {
  std::vector<TermId> flat;
  for (TermId p : parts) {
    switch (kind(p)) {
      case TermKind::Empty:
        break;
      case TermKind::Seq: {
        auto ch = children(p);
        flat.insert(flat.end(), ch.begin(), ch.end());
        break;
      }
      default:
        flat.push_back(p);
    }
  }
  if (flat.empty()) return empty();
  if (flat.size() == 1) return flat.front();
  return intern(Node{TermKind::Seq, ConstId{0}, std::move(flat)});
}

TermId TermStore::par(std::span<const TermId> parts) {
  std::vector<TermId> flat;
  for (TermId p : parts) {
    switch (kind(p)) {
      case TermKind::Empty:
        break;
      case TermKind::Par: {
        auto ch = children(p);
        flat.insert(flat.end(), ch.begin(), ch.end());
        break;
      }
      default:
        flat.push_back(p);
    }
  }
  if (flat.empty()) return empty();
  if (flat.size() == 1) return flat.front();
  std::sort(flat.begin(), flat.end(), TermLess{this});
  return intern(Node{TermKind::Par, ConstId{0}, std::move(flat)});
}

TermId TermStore::normal_form(const RawTerm& raw) {
  switch (raw.op) {
    case RawTerm::Op::Empty:
      return empty();
    case RawTerm::Op::Const:
      return constant(raw.name);
    case RawTerm::Op::Seq:
    case RawTerm::Op::Par: {
      std::vector<TermId> parts;
      parts.reserve(raw.parts.size());
      for (const RawTerm& p : raw.parts) parts.push_back(normal_form(p));
      return raw.op == RawTerm::Op::Seq ? seq(parts) : par(parts);
    }
  }
  return empty();
}

int TermStore::compare(TermId a, TermId b) const {
  if (a == b) return 0;
  const Node& x = node(a);
  const Node& y = node(b);
  if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
  if (x.kind == TermKind::Const) {
    int c = constant_name(x.constant).compare(constant_name(y.constant));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  std::size_t n = std::min(x.children.size(), y.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(x.children[i], y.children[i]);
    if (c != 0) return c;
  }
  if (x.children.size() == y.children.size()) return 0;
  return x.children.size() < y.children.size() ? -1 : 1;
}

bool TermStore::is_sequential(TermId t) const {
  switch (kind(t)) {
    case TermKind::Empty:
    case TermKind::Const:
      return true;
    case TermKind::Seq:
      return std::all_of(children(t).begin(), children(t).end(),
                         [&](TermId c) { return kind(c) == TermKind::Const; });
    case TermKind::Par:
      return false;
  }
  return false;
}

bool TermStore::is_parallel(TermId t) const {
  switch (kind(t)) {
    case TermKind::Empty:
    case TermKind::Const:
      return true;
    case TermKind::Par:
      return std::all_of(children(t).begin(), children(t).end(),
                         [&](TermId c) { return kind(c) == TermKind::Const; });
    case TermKind::Seq:
      return false;
  }
  return false;
}

std::vector<ConstId> TermStore::occurrences(TermId t) const {
  std::vector<ConstId> out;
  std::vector<TermId> stack{t};
  while (!stack.empty()) {
    TermId u = stack.back();
    stack.pop_back();
    const Node& n = node(u);
    if (n.kind == TermKind::Const) {
      out.push_back(n.constant);
    } else {
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
    }
  }
  return out;
}

std::vector<ConstId> TermStore::word(TermId t) const {
  if (!is_sequential(t)) throw PreconditionError("term is not sequential: " + to_string(t));
  return occurrences(t);
}

TermId TermStore::from_word(std::span<const ConstId> w) {
  std::vector<TermId> parts;
  parts.reserve(w.size());
  for (ConstId c : w) parts.push_back(constant(c));
  return seq(parts);
}

void TermStore::print(TermId t, std::string& out, bool in_seq) const {
  const Node& n = node(t);
  switch (n.kind) {
    case TermKind::Empty:
      out += "eps";
      return;
    case TermKind::Const:
      out += constant_name(n.constant);
      return;
    case TermKind::Seq:
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += '.';
        print(n.children[i], out, true);
      }
      return;
    case TermKind::Par:
      if (in_seq) out += '(';
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += '|';
        print(n.children[i], out, false);
      }
      if (in_seq) out += ')';
      return;
  }
}

std::string TermStore::to_string(TermId t) const {
  std::string out;
  print(t, out, false);
  return out;
}

}  // namespace prsequiv
