// surprise :: the students' argument and the law-set fixed point

#ifndef SURPRISE_ANALYSIS_HPP_
#define SURPRISE_ANALYSIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "surprise/error.hpp"
#include "surprise/formula.hpp"
#include "surprise/prop.hpp"
#include "surprise/run.hpp"

namespace surprise {

// The five formulas the students claim follow from A: <T in D>, and for
// d = Tu..Fr the bracket-resolved [A |- <T <= d>] -> <T != d>, simplified to
// <T != d> (bracket true) or to verum (bracket false).
inline std::vector<Formula> students_axioms(const AxiomSystem& a) {
  std::vector<Formula> out{t_day()};
  for (Run d : {Run::Tu, Run::We, Run::Th, Run::Fr}) out.push_back(entails(a, t_le(d)) ? t_ne(d) : top());
  return out;
}

// Keeps adding the students' formulas to {<T in D>} until nothing changes.
inline AxiomSystem students_closure() {
  AxiomSystem a{t_day()};
  while (true) {
    AxiomSystem next = a;
    for (const Formula& f : students_axioms(a)) next = next.with(f);
    if (axiom_equiv(next, a)) return a;
    a = next;
  }
}

inline bool entails_students_axioms(const AxiomSystem& a) {
  for (const Formula& f : students_axioms(a))
    if (!entails(a, f)) return false;
  return true;
}

// If A proves all five students' formulas, A has no surprising day.
inline bool check_students_collapse(const AxiomSystem& a) {
  return !entails_students_axioms(a) || surprising_days(a).empty();
}

// If A proves <T in D> and sigma^A then A is inconsistent.
inline bool check_sigma_inconsistency(const AxiomSystem& a) {
  const bool premise = entails(a, t_day()) && entails(a, sigma_of(a));
  return !premise || !a.consistent();
}

struct StudentsStep {
  enum class Kind { Initial, NoFriday, Final };

  Kind kind = Kind::Initial;
  std::optional<Run> day;          // NoFriday only
  AxiomSystem system;              // the counterexample system the step is checked against
  Formula claimed;                 // what the students assert is provable
  std::optional<Run> witness;      // a run satisfying `system` but falsifying `claimed`
  bool entailed = false;
  RunSet knowledge;
  RunSet surprising;
};

namespace detail {

inline StudentsStep make_step(StudentsStep::Kind kind, std::optional<Run> day, AxiomSystem a, Formula claimed) {
  StudentsStep s;
  s.kind = kind;
  s.day = day;
  s.claimed = std::move(claimed);
  s.entailed = entails(a, s.claimed);
  s.knowledge = a.knowledge();
  s.surprising = surprising_days(a);
  for (Run r : a.knowledge()) {
    if (!eval_run(s.claimed, r)) {
      s.witness = r;
      break;
    }
  }
  s.system = std::move(a);
  return s;
}

} // namespace detail

// With only the exactly-one axiom every run is a model, all five days are
// surprising, and <T in D> is not provable: the run 'none' is a countermodel.
inline StudentsStep refute_initial_step() {
  return detail::make_step(StudentsStep::Kind::Initial, std::nullopt, AxiomSystem{}, t_day());
}

// A_d = {<T <= d>} proves <T <= d>, so the bracket is true and the claim is
// true -> <T != d>; run d satisfies A_d and refutes it.
inline StudentsStep refute_no_friday_step(Run d) {
  if (d == Run::Mo)
    throw PreconditionError(
        "the no-Friday step is not defined for Mo: a system proving <T=Mo> already has no surprising "
        "day, so the situation is contradictory rather than refutable by a countermodel");
  if (!is_day(d)) throw PreconditionError("the no-Friday step needs a day in {Tu,We,Th,Fr}");
  AxiomSystem a{t_le(d)};
  Formula claimed = implies(iverson(entails(a, t_le(d))), t_ne(d));
  return detail::make_step(StudentsStep::Kind::NoFriday, d, std::move(a), std::move(claimed));
}

// The students' end point: the closure of their own rules proves <T = Mo>.
inline StudentsStep final_step() {
  return detail::make_step(StudentsStep::Kind::Final, std::nullopt, students_closure(), t_eq(Run::Mo));
}

enum class LawCase { Realizable, Degenerate };

inline std::string_view law_case_name(LawCase c) {
  return c == LawCase::Realizable ? "Realizable" : "Degenerate";
}

struct LawReport {
  RunSet law;
  LawCase case_tag = LawCase::Degenerate;
  std::vector<RunSet> fixed_points; // knowledge sets K with A_K ~ A_L + {tau^{A_K}}
  RunSet surprising;
  RunSet rational_choices;
};

// (D n L) - {max L}: the set the fixed-point search must reproduce.
inline RunSet naive_surprise(RunSet law) { return (RunSet::days() & law) - RunSet::single(*law.max()); }

// Solves A ~ A_L + {tau^A} by trying each of the 64 canonical systems.
inline LawReport analyze_law(RunSet law) {
  if (law.empty()) throw PreconditionError("empty law set: the teacher would have no run to choose");
  LawReport rep;
  rep.law = law;
  const AxiomSystem base = AxiomSystem::canonical(law);
  for (RunSet k : all_run_sets()) {
    const AxiomSystem candidate = AxiomSystem::canonical(k);
    if (axiom_equiv(candidate, base.with(iverson(tau_of(candidate))))) rep.fixed_points.push_back(k);
  }

  int consistent = 0;
  for (RunSet k : rep.fixed_points) {
    if (k.empty()) continue;
    ++consistent;
    rep.surprising = rep.surprising | surprising_days(AxiomSystem::canonical(k));
  }
  rep.case_tag = consistent > 0 ? LawCase::Realizable : LawCase::Degenerate;
  rep.rational_choices = rep.surprising;

  const bool expect_realizable = !naive_surprise(law).empty();
  const bool ok = expect_realizable
                      ? (consistent == 1 && rep.surprising == naive_surprise(law))
                      : (consistent == 0 && rep.surprising.empty());
  if (!ok) throw Error("fixed-point dichotomy violated for L = " + law.to_string());
  return rep;
}

enum class SystemCase { AtLeastTwo, AtMostOne };

struct AxiomSystemRecord {
  RunSet knowledge;
  RunSet surprising;
  bool tau = false;
  SystemCase case_tag = SystemCase::AtMostOne;
  // AtLeastTwo: every run below max K is a surprising day.
  // AtMostOne: nothing is surprising.
  bool case_holds = false;
};

// One record per K subset of R, in increasing mask order.
inline std::vector<AxiomSystemRecord> enumerate_axiom_systems() {
  std::vector<AxiomSystemRecord> out;
  out.reserve(64);
  for (RunSet k : all_run_sets()) {
    const AxiomSystem a = AxiomSystem::canonical(k);
    AxiomSystemRecord rec;
    rec.knowledge = k;
    rec.surprising = surprising_days(a);
    rec.tau = tau_of(a);
    if (k.size() >= 2) {
      rec.case_tag = SystemCase::AtLeastTwo;
      bool all = true;
      for (Run r : k.without_max())
        if (is_day(r) && !rec.surprising.contains(r)) all = false;
      rec.case_holds = all && !k.without_max().empty();
    } else {
      rec.case_tag = SystemCase::AtMostOne;
      rec.case_holds = rec.surprising.empty();
    }
    out.push_back(rec);
  }
  return out;
}

} // namespace surprise

#endif // SURPRISE_ANALYSIS_HPP_
