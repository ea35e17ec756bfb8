// surprise :: randomized checks of the basic Kripke-semantics facts

#ifndef SURPRISE_FACTS_HPP_
#define SURPRISE_FACTS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "surprise/formula.hpp"
#include "surprise/kripke.hpp"
#include "surprise/model_io.hpp"
#include "surprise/random.hpp"
#include "surprise/syntax.hpp"

namespace surprise {

struct Counterexample {
  KripkeModel model;
  std::string world;                  // empty for model-level facts
  std::vector<Formula> formulas;      // phi, psi as sampled

  Json to_json() const {
    Json fs = Json::array();
    for (const Formula& f : formulas) fs.push_back(render(f));
    return {{"model", model_to_json(model)}, {"world", world}, {"formulas", std::move(fs)}};
  }
};

// A fact checked on one model with sampled formulas; returns the first
// failure found.
using FactProbe = std::function<std::optional<Counterexample>(const KripkeModel&, const Formula&, const Formula&)>;

struct FactCheck {
  std::string name;
  FrameClass frame = FrameClass::General;
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::optional<Counterexample> first;
};

struct FactSuiteReport {
  std::vector<FactCheck> checks;

  std::size_t violations() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.violations;
    return n;
  }
  bool ok() const { return violations() == 0; }
};

namespace detail {

inline std::optional<Counterexample> every_world(const KripkeModel& m, const Formula& claim,
                                                 std::vector<Formula> sampled) {
  const auto t = truth_set(m, claim);
  for (std::size_t w = 0; w < m.size(); ++w)
    if (!t[w]) return Counterexample{m, m.world(w).id, std::move(sampled)};
  return std::nullopt;
}

inline bool model_satisfies(const KripkeModel& m, const Formula& phi) { return holds_everywhere(m, phi); }

} // namespace detail

// The individual probes. Each is usable on any model; fact_suite applies a
// probe only to the frame classes its hypothesis covers.
namespace probe {

// Tautology shapes with box subformulas standing in for atoms.
inline std::optional<Counterexample> tautology(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  const Formula p = box(phi), q = psi;
  const Formula peirce = implies(implies(implies(p, q), p), p);
  const Formula contra = iff(implies(p, q), implies(neg(q), neg(p)));
  const Formula excluded = disj(p, neg(p));
  return detail::every_world(m, conj(peirce, conj(contra, excluded)), {phi, psi});
}

inline std::optional<Counterexample> modus_ponens(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  const auto a = truth_set(m, phi), ab = truth_set(m, implies(phi, psi)), b = truth_set(m, psi);
  for (std::size_t w = 0; w < m.size(); ++w)
    if (a[w] && ab[w] && !b[w]) return Counterexample{m, m.world(w).id, {phi, psi}};
  return std::nullopt;
}

inline std::optional<Counterexample> k_axiom(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  return detail::every_world(m, implies(box(implies(phi, psi)), implies(box(phi), box(psi))), {phi, psi});
}

// If phi holds in the whole model then so does []phi. Random phi is rarely
// globally true, so phi | !phi-style instances are mixed in.
inline std::optional<Counterexample> necessitation(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  for (const Formula& f : {phi, disj(phi, neg(phi)), implies(conj(phi, psi), phi)}) {
    if (detail::model_satisfies(m, f) && !detail::model_satisfies(m, box(f)))
      return Counterexample{m, "", {phi, psi}};
  }
  return std::nullopt;
}

inline std::optional<Counterexample> box_conjunction(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  return detail::every_world(m, iff(conj(box(phi), box(psi)), box(conj(phi, psi))), {phi, psi});
}

// []phi at w and M |= phi -> psi give []psi at w.
inline std::optional<Counterexample> box_monotone(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  if (!detail::model_satisfies(m, implies(phi, psi))) return std::nullopt;
  return detail::every_world(m, implies(box(phi), box(psi)), {phi, psi});
}

inline std::optional<Counterexample> box_modus_ponens(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  return detail::every_world(m, implies(conj(box(phi), box(implies(phi, psi))), box(psi)), {phi, psi});
}

inline std::optional<Counterexample> submodel(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  const auto t = truth_set(m, phi);
  for (std::size_t w = 0; w < m.size(); ++w) {
    const KripkeModel sub = submodel_at(m, m.world(w).id);
    if (eval_world(sub, m.world(w).id, phi) != t[w]) return Counterexample{m, m.world(w).id, {phi, psi}};
  }
  return std::nullopt;
}

inline std::optional<Counterexample> box_four(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  return detail::every_world(
      m, conj(implies(box(phi), box(box(phi))), implies(diamond(diamond(phi)), diamond(phi))), {phi, psi});
}

inline std::optional<Counterexample> box_t(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  return detail::every_world(m, implies(box(phi), phi), {phi, psi});
}

// alpha -> <>alpha; the announcement requirement that reflexivity makes free.
inline std::optional<Counterexample> alpha_possible(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  return detail::every_world(m, implies(phi, diamond(phi)), {phi, psi});
}

inline std::optional<Counterexample> box_five(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  return detail::every_world(m, implies(diamond(phi), box(diamond(phi))), {phi, psi});
}

// On preorders: w |= []phi iff M_w |= phi, and w |= <>phi iff not M_w |= !phi.
inline std::optional<Counterexample> visible_submodel(const KripkeModel& m, const Formula& phi, const Formula& psi) {
  const auto bx = truth_set(m, box(phi)), dm = truth_set(m, diamond(phi));
  for (std::size_t w = 0; w < m.size(); ++w) {
    const KripkeModel sub = submodel_at(m, m.world(w).id);
    const bool everywhere = detail::model_satisfies(sub, phi);
    const bool refuted_everywhere = detail::model_satisfies(sub, neg(phi));
    if (bx[w] != everywhere || dm[w] == refuted_everywhere) return Counterexample{m, m.world(w).id, {phi, psi}};
  }
  return std::nullopt;
}

} // namespace probe

struct FactDef {
  std::string name;
  FactProbe check;
  std::vector<FrameClass> frames;
};

inline std::vector<FactDef> fact_defs() {
  using F = FrameClass;
  const std::vector<F> all{F::General, F::Reflexive, F::TransitiveReflexive, F::Equivalence};
  const std::vector<F> reflexive{F::Reflexive, F::TransitiveReflexive, F::Equivalence};
  const std::vector<F> transitive{F::TransitiveReflexive, F::Equivalence};
  return {
      {"tautology-instances", probe::tautology, all},
      {"modus-ponens", probe::modus_ponens, all},
      {"k-axiom", probe::k_axiom, all},
      {"necessitation", probe::necessitation, all},
      {"box-conjunction", probe::box_conjunction, all},
      {"box-monotone", probe::box_monotone, all},
      {"box-modus-ponens", probe::box_modus_ponens, all},
      {"submodel-preservation", probe::submodel, all},
      {"transitive-box-four", probe::box_four, transitive},
      {"reflexive-box-t", probe::box_t, reflexive},
      {"reflexive-alpha-possible", probe::alpha_possible, reflexive},
      {"equivalence-box-five", probe::box_five, {F::Equivalence}},
      {"preorder-visible-submodel", probe::visible_submodel, transitive},
  };
}

// For each frame class, `samples` random models with a fresh formula pair
// each; every applicable fact is checked on every sample.
inline FactSuiteReport fact_suite(std::size_t samples, std::uint64_t seed, int formula_depth = 3) {
  const auto defs = fact_defs();
  FactSuiteReport rep;
  for (FrameClass cls : {FrameClass::General, FrameClass::Reflexive, FrameClass::TransitiveReflexive,
                         FrameClass::Equivalence}) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(cls) + 1)));
    std::vector<FactCheck> checks;
    std::vector<const FactDef*> active;
    for (const auto& s : defs) {
      for (FrameClass f : s.frames)
        if (f == cls) {
          active.push_back(&s);
          checks.push_back({s.name, cls, 0, 0, std::nullopt});
        }
    }
    for (std::size_t i = 0; i < samples; ++i) {
      const KripkeModel m = random_model(rng, cls);
      const Formula phi = random_formula(rng, formula_depth);
      const Formula psi = random_formula(rng, formula_depth);
      for (std::size_t k = 0; k < active.size(); ++k) {
        ++checks[k].samples;
        if (auto cx = active[k]->check(m, phi, psi)) {
          ++checks[k].violations;
          if (!checks[k].first) checks[k].first = std::move(cx);
        }
      }
    }
    for (auto& c : checks) rep.checks.push_back(std::move(c));
  }
  return rep;
}

// Two worlds, Mo -> Tu, with a self-loop only on Tu. []Y_Tu holds at the
// Mo-world while Y_Tu does not, so the reflexive-box-t probe must fire.
inline KripkeModel missing_self_loop_model() {
  return KripkeModel({{"w0", Run::Mo}, {"w1", Run::Tu}}, {{0, 1}, {1, 1}});
}

inline std::optional<Counterexample> negative_control() {
  return probe::box_t(missing_self_loop_model(), atom(Run::Tu), top());
}

} // namespace surprise

#endif // SURPRISE_FACTS_HPP_
