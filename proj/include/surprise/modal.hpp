// surprise :: S5 decisions on the universal model, and modal surprise
//
// Every pointed equivalence model agrees, formula by formula, with the world
// (B_w, run(w)) of the universal model, where B_w is the set of runs in w's
// class. Validity, satisfiability and local consequence in S5 therefore reduce
// to sweeping the 192 universal worlds.

#ifndef SURPRISE_MODAL_HPP_
#define SURPRISE_MODAL_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "surprise/error.hpp"
#include "surprise/formula.hpp"
#include "surprise/kripke.hpp"
#include "surprise/run.hpp"
#include "surprise/syntax.hpp"

namespace surprise {

// ---- S5 via the universal model ------------------------------------------

inline bool s5_valid(const Formula& phi) { return holds_everywhere(universal_model(), phi); }

// First universal world (in (B, r) order) satisfying phi.
inline std::optional<UniversalWorld> s5_satisfiable(const Formula& phi) {
  const auto v = truth_set(universal_model(), phi);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) return universal_worlds()[i];
  return std::nullopt;
}

// W*_A: universal worlds satisfying every formula of A.
inline std::vector<bool> satisfying_worlds(std::span<const Formula> axioms) {
  const KripkeModel& m = universal_model();
  std::vector<bool> sat(m.size(), true);
  for (const Formula& a : axioms) {
    const auto v = truth_set(m, a);
    for (std::size_t i = 0; i < sat.size(); ++i) sat[i] = sat[i] && v[i];
  }
  return sat;
}

// Local consequence: phi holds at every universal world satisfying A.
inline bool s5_consequence(std::span<const Formula> axioms, const Formula& phi) {
  const auto sat = satisfying_worlds(axioms);
  const auto v = truth_set(universal_model(), phi);
  for (std::size_t i = 0; i < sat.size(); ++i)
    if (sat[i] && !v[i]) return false;
  return true;
}

// <T=r> & [](T in B) & AND_{s in B} <>(T=s): true exactly at (B, r) in M*.
inline Formula universal_world_formula(const UniversalWorld& w) {
  std::vector<Formula> parts{t_eq(w.run), box(t_in(w.visible))};
  for (Run s : w.visible) parts.push_back(diamond(t_eq(s)));
  return conj_all(parts);
}

struct ModalFormulaSetCondensation {
  std::vector<Formula> source;
  Formula condensed;
  std::vector<UniversalWorld> satisfying_worlds;
  bool source_entails_condensed = false; // every A-world satisfies condensed
  bool condensed_entails_source = false; // condensed -> phi is S5-valid, for each phi in A
};

// Condenses a formula set into a single formula with the same universal-model
// worlds, and checks both directions on M*.
inline ModalFormulaSetCondensation tau_condense(std::vector<Formula> axioms) {
  ModalFormulaSetCondensation out;
  out.source = std::move(axioms);
  const auto sat = satisfying_worlds(out.source);
  std::vector<Formula> disjuncts;
  for (std::size_t i = 0; i < sat.size(); ++i)
    if (sat[i]) {
      out.satisfying_worlds.push_back(universal_worlds()[i]);
      disjuncts.push_back(universal_world_formula(universal_worlds()[i]));
    }
  out.condensed = disj_all(disjuncts);
  out.source_entails_condensed = s5_consequence(out.source, out.condensed);
  out.condensed_entails_source = true;
  for (const Formula& phi : out.source)
    if (!s5_valid(implies(out.condensed, phi))) out.condensed_entails_source = false;
  return out;
}

// ---- surprise formulas -----------------------------------------------------

// sigma_d: a test on day d while some strictly later run is still visible.
inline Formula sigma_d(Run d) {
  if (!is_day(d)) throw PreconditionError("sigma_d needs a day");
  return conj(t_eq(d), neg(box(t_le(d))));
}

// Builds sigma_d for each day; swapped out only by mutation tests.
using SigmaDay = std::function<Formula(Run)>;

// sigma = OR_{d in D} sigma_d
inline Formula sigma_formula(const SigmaDay& sd = sigma_d) {
  std::vector<Formula> parts;
  for (Run d : kDays) parts.push_back(sd(d));
  return disj_all(parts);
}

// <T <= Fr> & AND_{d in D} (<T=d> -> sigma_d), S5-equivalent to sigma_formula().
inline Formula sigma_conjunctive_form() {
  std::vector<Formula> parts;
  for (Run d : kDays) parts.push_back(implies(t_eq(d), sigma_d(d)));
  return conj(t_le(Run::Fr), conj_all(parts));
}

// The announcements used as worked examples.
inline Formula example_announcement(char which) {
  const Formula box_mo_we_fr = disj_all(std::vector<Formula>{box(t_eq(Run::Mo)), box(t_eq(Run::We)), box(t_eq(Run::Fr))});
  switch (which) {
    case 'A': return sigma_formula();
    case 'B': return conj(sigma_formula(), t_in({Run::Mo, Run::We, Run::Fr}));
    case 'C': return conj(sigma_formula(), box(t_day()));
    case 'D': return box_mo_we_fr;
    case 'E': return conj(sigma_formula(), box_mo_we_fr);
    default: throw PreconditionError(std::string("no example announcement '") + which + "'");
  }
}

// sigma, sigma_Mo..sigma_Fr and exA..exE for the formula parser.
inline MacroTable builtin_macros() {
  MacroTable t;
  t.emplace("sigma", sigma_formula());
  for (Run d : kDays) t.emplace("sigma_" + std::string(run_name(d)), sigma_d(d));
  for (char c : std::string("ABCDE")) t.emplace(std::string("ex") + c, example_announcement(c));
  return t;
}

// ---- surprise at a world -----------------------------------------------------

namespace detail {

// For each day d: the box signature of every world of M*|>=d, indexed like
// universal_worlds(); worlds removed by the restriction get the empty set.
inline const std::array<std::vector<RunSet>, 5>& restricted_universal_signatures() {
  static const std::array<std::vector<RunSet>, 5> table = [] {
    std::array<std::vector<RunSet>, 5> t;
    const auto& uw = universal_worlds();
    for (Run d : kDays) {
      const KripkeModel restricted = restrict_ge(universal_model(), d);
      auto& row = t[index_of(d)];
      row.assign(uw.size(), RunSet{});
      for (std::size_t i = 0; i < uw.size(); ++i)
        if (auto j = restricted.find(universal_world_id(uw[i]))) row[i] = box_signature_at(restricted, *j);
    }
    return t;
  }();
  return table;
}

inline void require_surprise_context(const KripkeModel& m, std::size_t w, Run d) {
  if (!m.frame().equivalence) throw FrameError("surprise at a world is defined on equivalence models");
  if (w >= m.size()) throw UnknownWorldError("#" + std::to_string(w));
  if (!is_day(d)) throw PreconditionError("surprise needs a day");
}

} // namespace detail

struct SurpriseCriteria {
  bool by_definition = false; // an indistinguishable later-run world exists
  bool by_formula = false;    // tau & <T=d> & ![](T<=d) holds at w
};

// Decides both characterizations of "tau-surprising test on day d at w".
// The definition side searches the universal model for a world with run > d
// whose restricted box signature matches that of w in M|>=d.
inline SurpriseCriteria tau_surprising_criteria(const KripkeModel& m, std::size_t w, const Formula& tau, Run d,
                                                const SigmaDay& sd = sigma_d) {
  detail::require_surprise_context(m, w, d);
  SurpriseCriteria c;
  const auto tau_truth = truth_set(m, tau);
  c.by_formula = truth_set(m, conj(tau, sd(d)))[w];

  if (m.run(w) == d && tau_truth[w]) {
    const KripkeModel restricted = restrict_ge(m, d);
    const RunSet sig = box_signature_at(restricted, restricted.index_of(m.world(w).id));
    const auto& uw = universal_worlds();
    const auto& table = detail::restricted_universal_signatures()[index_of(d)];
    for (std::size_t i = 0; i < uw.size() && !c.by_definition; ++i)
      if (index_of(uw[i].run) > index_of(d) && table[i] == sig) c.by_definition = true;
  }
  return c;
}

inline bool tau_surprising(const KripkeModel& m, const std::string& id, const Formula& tau, Run d) {
  const auto c = tau_surprising_criteria(m, m.index_of(id), tau, d);
  if (c.by_definition != c.by_formula) throw Error("surprise criteria disagree at world '" + id + "'");
  return c.by_formula;
}

// ---- announcements ----------------------------------------------------------

struct ChoiceSet {
  RunSet days;                // d with alpha & <T=d> S5-satisfiable
  bool is_announcement = true; // alpha -> sigma is S5-valid
  bool inconsistent = false;   // !alpha is S5-valid
};

inline ChoiceSet choice_set(const Formula& alpha, const Formula& sigma = sigma_formula()) {
  ChoiceSet c;
  for (Run d : kDays)
    if (s5_satisfiable(conj(alpha, t_eq(d)))) c.days.insert(d);
  c.is_announcement = s5_valid(implies(alpha, sigma));
  c.inconsistent = c.days.empty() && s5_valid(neg(alpha));
  return c;
}

// ---- bounded S4 check ---------------------------------------------------------

// All reflexive and transitive relations on n points, as adjacency bitmasks
// (bit i*n+j <=> edge i->j).
inline std::vector<std::uint32_t> preorders(std::size_t n) {
  std::vector<std::uint32_t> out;
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::uint32_t diag = 0;
  for (std::size_t i = 0; i < n; ++i) diag |= 1u << (i * n + i);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << off.size()); ++pick) {
    std::uint32_t rel = diag;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (pick >> k & 1) rel |= 1u << (off[k].first * n + off[k].second);
    auto e = [&](std::size_t i, std::size_t j) { return (rel >> (i * n + j) & 1) != 0; };
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        for (std::size_t k = 0; k < n && transitive; ++k)
          if (e(i, j) && e(j, k) && !e(i, k)) transitive = false;
    if (transitive) out.push_back(rel);
  }
  return out;
}

struct NoBoxSigmaReport {
  bool universal_ok = false;      // ![]sigma at all 192 worlds of M*
  bool bounded_ok = false;        // no preorder model with <= max_worlds worlds satisfies []sigma
  std::size_t max_worlds = 0;
  std::uint64_t models_checked = 0;
  explicit operator bool() const noexcept { return universal_ok && bounded_ok; }
};

inline constexpr std::size_t kBoundedSearchLimit = 4;

inline NoBoxSigmaReport check_no_box_sigma(std::size_t max_worlds = 3, bool allow_large = false,
                                           const Formula& sigma = sigma_formula()) {
  if (max_worlds < 1) throw PreconditionError("max_worlds must be at least 1");
  if (max_worlds > 5) throw PreconditionError("bounded search supports at most 5 worlds");
  if (max_worlds > kBoundedSearchLimit && !allow_large)
    throw PreconditionError("bounded search beyond " + std::to_string(kBoundedSearchLimit) +
                            " worlds needs an explicit override");
  NoBoxSigmaReport rep;
  rep.max_worlds = max_worlds;
  const Formula box_sigma = box(sigma);
  rep.universal_ok = s5_valid(neg(box_sigma));
  rep.bounded_ok = true;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    const auto rels = preorders(n);
    std::uint64_t labelings = 1;
    for (std::size_t i = 0; i < n; ++i) labelings *= kRunCount;
    for (std::uint64_t code = 0; code < labelings; ++code) {
      std::vector<KripkeModel::World> worlds(n);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= kRunCount)
        worlds[i] = {"w" + std::to_string(i), run_at(static_cast<int>(c % kRunCount))};
      for (std::uint32_t rel : rels) {
        std::vector<KripkeModel::Edge> edges;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (rel >> (i * n + j) & 1) edges.emplace_back(i, j);
        const KripkeModel m(worlds, edges);
        ++rep.models_checked;
        for (bool b : truth_set(m, box_sigma))
          if (b) rep.bounded_ok = false;
      }
    }
  }
  return rep;
}

} // namespace surprise

#endif // SURPRISE_MODAL_HPP_
