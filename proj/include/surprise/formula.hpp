// surprise :: formula AST
//
// The core language has four node kinds: falsum, the six run atoms Y_r,
// implication and box. Every other connective is a smart constructor that
// desugars into the core, so two formulas are equal iff their core trees are.

#ifndef SURPRISE_FORMULA_HPP_
#define SURPRISE_FORMULA_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "surprise/run.hpp"

namespace surprise {

class Formula {
public:
  enum class Kind : std::uint8_t { Bot, Atom, Implies, Box };

  // Default-constructed formulas are falsum.
  Formula() : Formula(bot()) {}

  static Formula bot();
  static Formula atom(Run r);
  static Formula implies(const Formula& lhs, const Formula& rhs);
  static Formula box(const Formula& body);

  Kind kind() const noexcept { return node_->kind; }
  bool is_bot() const noexcept { return kind() == Kind::Bot; }
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_implies() const noexcept { return kind() == Kind::Implies; }
  bool is_box() const noexcept { return kind() == Kind::Box; }

  // Only meaningful for the matching kind.
  Run run() const noexcept { return node_->run; }
  Formula lhs() const noexcept { return Formula(node_->first); }
  Formula rhs() const noexcept { return Formula(node_->second); }
  Formula body() const noexcept { return Formula(node_->first); }

  std::size_t size() const noexcept { return node_->size; }
  int modal_depth() const noexcept { return node_->depth; }
  bool is_propositional() const noexcept { return modal_depth() == 0; }

  // Identity of the shared node; equal ids imply equal formulas.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

private:
  struct Node {
    Kind kind = Kind::Bot;
    Run run = Run::Mo;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;
    std::size_t size = 1;
    int depth = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) noexcept : node_(std::move(n)) {}
  static bool equal(const Node* a, const Node* b) noexcept;

  std::shared_ptr<const Node> node_;
};

inline Formula Formula::bot() {
  static const auto leaf = std::make_shared<const Node>(Node{Kind::Bot, Run::Mo, nullptr, nullptr, 1, 0});
  return Formula(leaf);
}

inline Formula Formula::atom(Run r) {
  static const auto atoms = [] {
    std::array<std::shared_ptr<const Node>, kRunCount> a{};
    for (Run x : kAllRuns) a[index_of(x)] = std::make_shared<const Node>(Node{Kind::Atom, x, nullptr, nullptr, 1, 0});
    return a;
  }();
  return Formula(atoms[index_of(r)]);
}

inline Formula Formula::implies(const Formula& lhs, const Formula& rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Implies, Run::Mo, lhs.node_, rhs.node_,
                                                   1 + lhs.size() + rhs.size(),
                                                   std::max(lhs.modal_depth(), rhs.modal_depth())}));
}

inline Formula Formula::box(const Formula& body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Box, Run::Mo, body.node_, nullptr, 1 + body.size(), 1 + body.modal_depth()}));
}

inline bool Formula::equal(const Node* a, const Node* b) noexcept {
  while (true) {
    if (a == b) return true;
    if (a->kind != b->kind || a->size != b->size) return false;
    switch (a->kind) {
      case Kind::Bot: return true;
      case Kind::Atom: return a->run == b->run;
      case Kind::Box: break;
      case Kind::Implies:
        if (!equal(a->first.get(), b->first.get())) return false;
        a = a->second.get();
        b = b->second.get();
        continue;
    }
    a = a->first.get();
    b = b->first.get();
  }
}

inline bool operator==(const Formula& a, const Formula& b) noexcept {
  return Formula::equal(a.node_.get(), b.node_.get());
}

// ---- smart constructors -------------------------------------------------

inline Formula bot() { return Formula::bot(); }
inline Formula atom(Run r) { return Formula::atom(r); }
inline Formula implies(const Formula& a, const Formula& b) { return Formula::implies(a, b); }
inline Formula box(const Formula& a) { return Formula::box(a); }

inline Formula neg(Formula a) { return implies(std::move(a), bot()); }
inline Formula top() { return neg(bot()); }
inline Formula disj(Formula a, Formula b) { return implies(neg(std::move(a)), std::move(b)); }
inline Formula conj(Formula a, Formula b) { return neg(implies(std::move(a), neg(std::move(b)))); }
inline Formula iff(const Formula& a, const Formula& b) { return conj(implies(a, b), implies(b, a)); }
inline Formula diamond(Formula a) { return neg(box(neg(std::move(a)))); }

// Right-nested; the empty disjunction is falsum, the empty conjunction verum.
inline Formula disj_all(std::span<const Formula> xs) {
  if (xs.empty()) return bot();
  Formula acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = disj(xs[i], std::move(acc));
  return acc;
}

inline Formula conj_all(std::span<const Formula> xs) {
  if (xs.empty()) return top();
  Formula acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = conj(xs[i], std::move(acc));
  return acc;
}

// Iverson bracket: a meta-level truth value as a closed formula.
inline Formula iverson(bool value) { return value ? top() : bot(); }

// chi(B): disjunction of Y_r over B in ascending order.
inline Formula chi(RunSet b) {
  std::vector<Formula> atoms;
  for (Run r : b) atoms.push_back(atom(r));
  return disj_all(atoms);
}

// Guard notation <T ...>.
inline Formula t_in(RunSet b) { return chi(b); }
inline Formula t_eq(Run r) { return atom(r); }
inline Formula t_ne(Run r) { return neg(atom(r)); }
inline Formula t_le(Run d) { return chi(RunSet::at_most(d)); }
inline Formula t_ge(Run d) { return chi(RunSet::at_least(d)); }
inline Formula t_lt(Run d) { return chi(RunSet::below(d)); }
inline Formula t_gt(Run d) { return chi(RunSet::above(d)); }
inline Formula t_day() { return chi(RunSet::days()); }

// ---- pattern views used by the printer ----------------------------------

inline bool is_top(const Formula& f) noexcept { return f.is_implies() && f.lhs().is_bot() && f.rhs().is_bot(); }

inline std::optional<Formula> match_neg(const Formula& f) {
  if (f.is_implies() && f.rhs().is_bot()) return f.lhs();
  return std::nullopt;
}

inline std::optional<std::pair<Formula, Formula>> match_disj(const Formula& f) {
  if (!f.is_implies()) return std::nullopt;
  if (auto a = match_neg(f.lhs())) return std::pair{*a, f.rhs()};
  return std::nullopt;
}

inline std::optional<std::pair<Formula, Formula>> match_conj(const Formula& f) {
  auto inner = match_neg(f);
  if (!inner || !inner->is_implies()) return std::nullopt;
  auto b = match_neg(inner->rhs());
  if (!b) return std::nullopt;
  return std::pair{inner->lhs(), *b};
}

inline std::optional<std::pair<Formula, Formula>> match_iff(const Formula& f) {
  auto c = match_conj(f);
  if (!c || !c->first.is_implies() || !c->second.is_implies()) return std::nullopt;
  const Formula& ab = c->first;
  const Formula& ba = c->second;
  if (ab.lhs() == ba.rhs() && ab.rhs() == ba.lhs()) return std::pair{ab.lhs(), ab.rhs()};
  return std::nullopt;
}

inline std::optional<Formula> match_diamond(const Formula& f) {
  auto n = match_neg(f);
  if (!n || !n->is_box()) return std::nullopt;
  return match_neg(n->body());
}

// Recognizes chi(B) for |B| >= 1: a right-nested disjunction of atoms in
// strictly ascending order.
inline std::optional<RunSet> match_chi(const Formula& f) {
  if (f.is_atom()) return RunSet::single(f.run());
  auto d = match_disj(f);
  if (!d || !d->first.is_atom()) return std::nullopt;
  auto rest = match_chi(d->second);
  if (!rest) return std::nullopt;
  Run head = d->first.run();
  if (index_of(head) >= index_of(*rest->min())) return std::nullopt;
  return RunSet{*rest}.insert(head);
}

} // namespace surprise

#endif // SURPRISE_FORMULA_HPP_
