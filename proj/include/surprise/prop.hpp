// surprise :: propositional engine over the six runs
//
// Each run r is identified with the assignment that makes Y_r true and every
// other atom false, so the exactly-one axiom holds by construction. Provability
// from an axiom system is decided semantically: A proves phi iff every run
// satisfying A satisfies phi.

#ifndef SURPRISE_PROP_HPP_
#define SURPRISE_PROP_HPP_

#include <initializer_list>
#include <utility>
#include <vector>

#include "surprise/error.hpp"
#include "surprise/formula.hpp"
#include "surprise/run.hpp"

namespace surprise {

inline void require_propositional(const Formula& phi) {
  if (!phi.is_propositional()) throw ModalFormulaError();
}

namespace detail {

inline bool eval_run_unchecked(const Formula& phi, Run r) {
  switch (phi.kind()) {
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Atom: return phi.run() == r;
    case Formula::Kind::Implies: return !eval_run_unchecked(phi.lhs(), r) || eval_run_unchecked(phi.rhs(), r);
    case Formula::Kind::Box: break;
  }
  throw ModalFormulaError();
}

inline RunSet models_unchecked(const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::Bot: return RunSet::empty_set();
    case Formula::Kind::Atom: return RunSet::single(phi.run());
    case Formula::Kind::Implies: return complement(models_unchecked(phi.lhs())) | models_unchecked(phi.rhs());
    case Formula::Kind::Box: break;
  }
  throw ModalFormulaError();
}

} // namespace detail

// Truth value of phi at run r, by the inductive clauses.
inline bool eval_run(const Formula& phi, Run r) {
  require_propositional(phi);
  return detail::eval_run_unchecked(phi, r);
}

// R_phi, computed on 6-bit masks.
inline RunSet models_of(const Formula& phi) {
  require_propositional(phi);
  return detail::models_unchecked(phi);
}

// A finite set of propositional axioms. The exactly-one axiom is implicit.
// Two systems with the same knowledge set prove the same formulas, so the
// knowledge set is computed once on entry and used for every query.
class AxiomSystem {
public:
  AxiomSystem() = default;

  explicit AxiomSystem(std::vector<Formula> axioms) : axioms_(std::move(axioms)) {
    for (const Formula& a : axioms_) {
      require_propositional(a);
      knowledge_ = knowledge_ & models_of(a);
    }
  }

  AxiomSystem(std::initializer_list<Formula> axioms) : AxiomSystem(std::vector<Formula>(axioms)) {}

  // The representative A_K = {<T in K>}.
  static AxiomSystem canonical(RunSet k) { return AxiomSystem({t_in(k)}); }

  const std::vector<Formula>& axioms() const noexcept { return axioms_; }
  RunSet knowledge() const noexcept { return knowledge_; }
  bool consistent() const noexcept { return !knowledge_.empty(); }

  AxiomSystem with(const Formula& extra) const {
    std::vector<Formula> xs = axioms_;
    xs.push_back(extra);
    return AxiomSystem(std::move(xs));
  }

private:
  std::vector<Formula> axioms_;
  RunSet knowledge_ = RunSet::all();
};

// K_A: the smallest A-knowledge set, i.e. the runs satisfying every axiom.
inline RunSet knowledge_set(const AxiomSystem& a) { return a.knowledge(); }

inline bool entails(const AxiomSystem& a, const Formula& phi) {
  return a.knowledge().subset_of(models_of(phi));
}

// K is an A-knowledge set iff A proves <T in K>.
inline bool is_knowledge_set(const AxiomSystem& a, RunSet k) { return entails(a, t_in(k)); }

inline bool axiom_equiv(const AxiomSystem& a1, const AxiomSystem& a2) {
  return a1.knowledge() == a2.knowledge();
}

// Days d in K_A such that A does not prove <T <= d>.
inline RunSet surprising_days(const AxiomSystem& a) {
  RunSet out;
  for (Run d : kDays)
    if (a.knowledge().contains(d) && !entails(a, t_le(d))) out.insert(d);
  return out;
}

// On the morning of day d the students may add <T >= d>; d is surprising iff
// that still does not prove <T = d>.
inline bool is_surprising_deduction_form(const AxiomSystem& a, Run d) {
  if (!is_day(d)) throw PreconditionError("'" + std::string(run_name(d)) + "' is not a day");
  if (!a.knowledge().contains(d))
    throw PreconditionError("day " + std::string(run_name(d)) + " is not in the knowledge set " +
                            a.knowledge().to_string());
  return !entails(a.with(t_ge(d)), t_eq(d));
}

// sigma^A with all 64 conjuncts, each bracket [K_A subset of K] already
// resolved to true/false. Conjuncts are ordered by increasing mask of K.
inline Formula sigma_of(const AxiomSystem& a) {
  std::vector<Formula> conjuncts;
  conjuncts.reserve(64);
  for (RunSet k : all_run_sets())
    conjuncts.push_back(implies(iverson(a.knowledge().subset_of(k)), t_in(k.without_max())));
  return conj_all(conjuncts);
}

// sigma^A with the vacuous (false-antecedent) conjuncts dropped and the
// remaining true -> x reduced to x.
inline Formula sigma_of_simplified(const AxiomSystem& a) {
  std::vector<Formula> conjuncts;
  for (RunSet k : all_run_sets())
    if (a.knowledge().subset_of(k)) conjuncts.push_back(t_in(k.without_max()));
  return conj_all(conjuncts);
}

// The closed truth value of tau^A: some day d lies in K - {max K} for every
// A-knowledge set K.
inline bool tau_of(const AxiomSystem& a) {
  for (Run d : kDays) {
    bool all = true;
    for (RunSet k : all_run_sets()) {
      if (is_knowledge_set(a, k) && !k.without_max().contains(d)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

struct SurpriseProfile {
  RunSet knowledge;
  RunSet surprising;
  Formula sigma;
  bool tau_holds = false;
};

inline SurpriseProfile surprise_profile(const AxiomSystem& a) {
  return {a.knowledge(), surprising_days(a), sigma_of(a), tau_of(a)};
}

} // namespace surprise

#endif // SURPRISE_PROP_HPP_
