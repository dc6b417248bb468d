#include "prsequiv/dd.hpp"

#include <algorithm>
#include <cctype>

#include "prsequiv/error.hpp"
#include "prsequiv/semantics.hpp"

namespace prsequiv {

DdSpec DdSpec::make_triple(std::string a, std::vector<DdSpec> f, std::vector<ExtInt> d) {
  if (f.size() != d.size()) throw PreconditionError("dd triple needs as many deltas as inner functions");
  for (const ExtInt& x : d)
    if (!x.is_omega() && x.value() < -1) throw PreconditionError("dd delta components must be -1, n >= 0 or w");
  return {std::move(a), true, std::move(f), std::move(d)};
}

std::string DdSpec::to_string() const {
  if (!triple) return "dd(" + action + ")";
  std::string s = "dd(" + action + "; [";
  for (std::size_t i = 0; i < inner.size(); ++i) s += (i ? ", " : "") + inner[i].to_string();
  s += "]; [";
  for (std::size_t i = 0; i < delta.size(); ++i) s += (i ? ", " : "") + delta[i].to_string();
  return s + "])";
}

std::size_t DdSpec::depth() const {
  std::size_t d = 0;
  for (const DdSpec& f : inner) d = std::max(d, f.depth());
  return d + 1;
}

namespace {

class DdParser {
 public:
  explicit DdParser(std::string_view s) : s_(s) {}

  DdSpec spec() {
    word("dd");
    expect('(');
    std::string a = ident();
    if (peek() == ')') {
      ++i_;
      return DdSpec::basic(a);
    }
    expect(';');
    expect('[');
    std::vector<DdSpec> f;
    if (peek() != ']') {
      f.push_back(spec());
      while (peek() == ',') {
        ++i_;
        f.push_back(spec());
      }
    }
    expect(']');
    expect(';');
    expect('[');
    std::vector<ExtInt> d;
    if (peek() != ']') {
      d.push_back(delta());
      while (peek() == ',') {
        ++i_;
        d.push_back(delta());
      }
    }
    expect(']');
    expect(')');
    return DdSpec::make_triple(a, std::move(f), std::move(d));
  }

  void end() {
    if (peek() != '\0') fail("trailing characters");
  }

 private:
  char peek() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  void word(std::string_view w) {
    peek();
    if (s_.substr(i_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    i_ += w.size();
  }
  std::string ident() {
    peek();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (b == i_) fail("expected an action");
    return std::string(s_.substr(b, i_ - b));
  }
  ExtInt delta() {
    char c = peek();
    if (c == 'w') {
      ++i_;
      return ExtInt::omega();
    }
    std::size_t b = i_;
    if (c == '-') ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_ || (s_[b] == '-' && i_ == b + 1)) fail("expected a delta");
    return ExtInt(std::stoll(std::string(s_.substr(b, i_ - b))));
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, i_ + 1); }

  std::string_view s_;
  std::size_t i_ = 0;
};

using Partial = std::vector<std::optional<ExtNat>>;

enum class Tri { No, Yes, Unknown };

Partial eval(const FiniteLts& lts, const DdSpec& spec);

std::vector<Tri> qualifying(const FiniteLts& lts, const DdSpec& spec) {
  std::size_t n = lts.num_states();
  std::vector<Tri> q(n, Tri::No);
  auto a = lts.find_action(spec.action);
  if (!spec.triple) {
    for (StateId t = 0; t < n; ++t) {
      bool has_a = a && !lts.post(t, *a).empty();
      q[t] = has_a ? Tri::No : (lts.complete(t) ? Tri::Yes : Tri::Unknown);
    }
    return q;
  }
  std::vector<Partial> f;
  for (const DdSpec& inner : spec.inner) f.push_back(eval(lts, inner));
  for (StateId t = 0; t < n; ++t) {
    bool unknown = false, omega = false;
    for (const Partial& fi : f) {
      if (!fi[t]) unknown = true;
      else if (fi[t]->is_omega()) omega = true;
    }
    if (omega) {
      q[t] = Tri::No;
      continue;
    }
    if (unknown) {
      q[t] = Tri::Unknown;
      continue;
    }
    bool some_equal = false, some_unknown = !lts.complete(t);
    if (a) {
      for (StateId r : lts.post(t, *a)) {
        bool differs = false, undetermined = false;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (!f[i][r]) {
            undetermined = true;
            continue;
          }
          ExtInt c = f[i][r]->is_omega() ? ExtInt::omega()
                                         : ExtInt(static_cast<std::int64_t>(f[i][r]->value()) -
                                                  static_cast<std::int64_t>(f[i][t]->value()));
          if (c != spec.delta[i]) differs = true;
        }
        if (differs) continue;
        if (undetermined) some_unknown = true;
        else some_equal = true;
      }
    }
    q[t] = some_equal ? Tri::No : (some_unknown ? Tri::Unknown : Tri::Yes);
  }
  return q;
}

Partial eval(const FiniteLts& lts, const DdSpec& spec) {
  std::size_t n = lts.num_states();
  std::vector<Tri> q = qualifying(lts, spec);
  Partial out(n);
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (StateId s = 0; s < n; ++s) {
    ++stamp;
    std::vector<StateId> level{s};
    seen[s] = stamp;
    bool broken = false;
    std::optional<ExtNat> value;
    bool unknown = false;
    for (std::uint64_t d = 0; !level.empty(); ++d) {
      bool yes = false, unk = false, cut = false;
      for (StateId u : level) {
        if (q[u] == Tri::Yes) yes = true;
        if (q[u] == Tri::Unknown) unk = true;
        if (!lts.complete(u)) cut = true;
      }
      if (yes) {
        value = ExtNat(d);
        break;
      }
      if (unk || broken) {
        unknown = true;
        break;
      }
      broken = cut;
      std::vector<StateId> next;
      for (StateId u : level)
        for (const Edge& e : lts.out(u))
          if (seen[e.target] != stamp) {
            seen[e.target] = stamp;
            next.push_back(e.target);
          }
      level = std::move(next);
    }
    if (value) out[s] = value;
    else if (!unknown && !broken) out[s] = ExtNat::omega();
  }
  return out;
}

void require_complete(const FiniteLts& lts) {
  if (!lts.all_complete()) throw IncompleteLtsError("dd evaluation needs a completely explored LTS");
}

}  // namespace

DdSpec parse_dd_spec(std::string_view text) {
  DdParser p(text);
  DdSpec s = p.spec();
  p.end();
  return s;
}

std::vector<std::optional<ExtNat>> dd_eval_partial(const FiniteLts& lts, const DdSpec& spec) { return eval(lts, spec); }

std::vector<ExtNat> dd_eval_all(const FiniteLts& lts, const DdSpec& spec) {
  require_complete(lts);
  Partial p = eval(lts, spec);
  std::vector<ExtNat> out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back(*v);
  return out;
}

ExtNat dd_eval(const FiniteLts& lts, const DdSpec& spec, StateId s) { return dd_eval_all(lts, spec).at(s); }

std::vector<ExtInt> change_vector(const FiniteLts& lts, std::span<const DdSpec> f, StateId src, StateId dst) {
  require_complete(lts);
  std::vector<ExtInt> out;
  for (const DdSpec& fi : f) {
    auto v = dd_eval_all(lts, fi);
    if (v[src].is_omega())
      throw PreconditionError("change vector undefined: " + fi.to_string() + " is w at the source state");
    if (v[dst].is_omega()) out.push_back(ExtInt::omega());
    else out.push_back(static_cast<std::int64_t>(v[dst].value()) - static_cast<std::int64_t>(v[src].value()));
  }
  return out;
}

std::vector<ExtNat> cost_q(const PrsSystem& sys, std::span<const ConstId> q) {
  const TermStore& st = sys.store();
  for (const Rule& r : sys.rules())
    if (st.kind(r.lhs) != TermKind::Const || !st.is_parallel(r.rhs))
      throw PreconditionError("Q-norms are defined for BPP systems");
  std::size_t nc = st.constant_count();
  std::vector<bool> in_q(nc, false);
  for (ConstId c : q) in_q[static_cast<std::uint32_t>(c)] = true;
  std::vector<ExtNat> val(nc, ExtNat::omega());
  std::vector<bool> done(nc, false);
  for (std::uint32_t c = 0; c < nc; ++c)
    if (!in_q[c]) {
      val[c] = ExtNat(0);
      done[c] = true;
    }
  std::vector<std::vector<ConstId>> occ;
  for (const Rule& r : sys.rules()) occ.push_back(st.occurrences(r.rhs));
  for (;;) {
    std::optional<std::uint64_t> best;
    std::uint32_t best_c = 0;
    for (std::size_t i = 0; i < sys.rules().size(); ++i) {
      auto x = static_cast<std::uint32_t>(st.const_of(sys.rules()[i].lhs));
      if (done[x]) continue;
      std::uint64_t sum = 1;
      bool ok = true;
      for (ConstId c : occ[i]) {
        auto ci = static_cast<std::uint32_t>(c);
        if (!done[ci] || val[ci].is_omega()) {
          ok = false;
          break;
        }
        sum = std::min<std::uint64_t>(sum + val[ci].value(), kNormCeiling + 1);
      }
      if (ok && (!best || sum < *best)) {
        best = sum;
        best_c = x;
      }
    }
    if (!best) break;
    if (*best > kNormCeiling) throw LimitExceeded("Q-cost exceeds 2^32-2");
    val[best_c] = ExtNat(*best);
    done[best_c] = true;
  }
  return val;
}

ExtNat norm_q(const PrsSystem& sys, std::span<const ConstId> q, TermId t) {
  return norm_with(sys.store(), cost_q(sys, q), t);
}

std::optional<std::vector<ConstId>> find_q(const PrsSystem& sys, const DdSpec& spec, std::span<const TermId> samples,
                                           const FindQOptions& opt) {
  const auto& cs = sys.constants();
  if (cs.size() > opt.max_constants)
    throw LimitExceeded("find_q: " + std::to_string(cs.size()) + " constants exceed the subset search bound");

  // Fix the spec value of each sample on a bounded exploration, deepening until it is
  // determined or the budget runs out.
  std::vector<std::pair<TermId, ExtNat>> fixed;
  for (TermId t : samples) {
    for (std::size_t depth = 8;; depth *= 2) {
      ExplorationLimit lim{opt.max_states, std::min(depth, opt.max_depth), std::nullopt};
      const TermId roots[1] = {t};
      FiniteLts lts = explore(sys, roots, lim);
      auto v = dd_eval_partial(lts, spec)[0];
      if (v) {
        fixed.emplace_back(t, *v);
        break;
      }
      bool capped = depth >= opt.max_depth || lts.num_states() >= opt.max_states;
      if (capped) break;
    }
  }

  std::size_t n = cs.size();
  for (std::size_t size = 0; size <= n; ++size) {
    // Index combinations of the given size in lexicographic order.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      std::vector<ConstId> q;
      for (std::size_t i : idx) q.push_back(cs[i]);
      auto cost = cost_q(sys, q);
      bool ok = std::all_of(fixed.begin(), fixed.end(),
                            [&](const auto& tv) { return norm_with(sys.store(), cost, tv.first) == tv.second; });
      if (ok) return q;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace prsequiv
