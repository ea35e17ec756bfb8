// surprise :: the one-shot verification suite

#ifndef SURPRISE_VERIFY_HPP_
#define SURPRISE_VERIFY_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "surprise/analysis.hpp"
#include "surprise/facts.hpp"
#include "surprise/kripke.hpp"
#include "surprise/modal.hpp"
#include "surprise/model_io.hpp"
#include "surprise/prop.hpp"
#include "surprise/random.hpp"
#include "surprise/syntax.hpp"

namespace surprise {

struct VerifyOptions {
  std::size_t bound = 3;    // world bound for the preorder enumeration
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  SigmaDay sigma_day = sigma_d;
};

enum class CheckStatus { Pass, Fail };

struct CheckResult {
  std::string name;
  std::string anchor; // the claim being checked
  CheckStatus status = CheckStatus::Fail;
  std::string detail;

  bool passed() const noexcept { return status == CheckStatus::Pass; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::uint64_t elapsed_ms = 0;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](auto& c) { return !c.passed(); }));
  }
};

inline std::string_view status_name(CheckStatus s) { return s == CheckStatus::Pass ? "pass" : "fail"; }

// One line per check; elapsed time is left out so identical runs print
// identical text.
inline std::string verification_text(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  os << (r.ok() ? "all " + std::to_string(r.checks.size()) + " checks passed"
                : std::to_string(r.failures()) + " of " + std::to_string(r.checks.size()) + " checks failed")
     << "\n";
  return os.str();
}

inline Json verification_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"anchor", c.anchor}, {"status", std::string(status_name(c.status))}, {"detail", c.detail}});
  return {{"checks", std::move(checks)}, {"elapsed_ms", r.elapsed_ms}};
}

namespace verify_detail {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first; // description of the first failure

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok) {
      if (failures == 0) first = what();
      ++failures;
    }
  }
  bool ok() const { return failures == 0; }
  std::string summary(const std::string& unit) const {
    std::string s = std::to_string(cases) + " " + unit + ", " + std::to_string(failures) + " failures";
    if (!first.empty()) s += "; first: " + first;
    return s;
  }
};

inline CheckResult make(std::string name, std::string anchor, bool ok, std::string detail) {
  return {std::move(name), std::move(anchor), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

inline CheckResult guarded(const std::string& name, const std::string& anchor, const std::function<CheckResult()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return make(name, anchor, false, std::string("exception: ") + e.what());
  }
}

inline std::string rs(RunSet s) { return s.to_string(); }

inline CheckResult axiom_systems() {
  const auto recs = enumerate_axiom_systems();
  std::set<RunSet::Mask> masks;
  Tally t;
  for (const auto& r : recs) {
    masks.insert(r.knowledge.mask());
    t.expect(r.case_holds, [&] { return "case dichotomy fails for K=" + rs(r.knowledge); });
  }
  std::size_t equivalent_pairs = 0;
  for (RunSet a : all_run_sets())
    for (RunSet b : all_run_sets())
      if (a != b && axiom_equiv(AxiomSystem::canonical(a), AxiomSystem::canonical(b))) ++equivalent_pairs;
  const bool ok = recs.size() == 64 && masks.size() == 64 && equivalent_pairs == 0 && t.ok();
  return make("axiom-systems", "exactly 64 pairwise non-equivalent axiom systems, one per knowledge set", ok,
              std::to_string(recs.size()) + " records, " + std::to_string(masks.size()) + " distinct knowledge sets, " +
                  std::to_string(equivalent_pairs) + " equivalent pairs; " + t.summary("case checks"));
}

inline CheckResult students_wrong() {
  Tally t;
  const auto init = refute_initial_step();
  t.expect(init.knowledge == RunSet::all(), [&] { return "initial K=" + rs(init.knowledge); });
  t.expect(init.surprising == RunSet::days(), [&] { return "initial surprise " + rs(init.surprising); });
  t.expect(!init.entailed && init.witness == Run::None, [] { return "initial step: <T in D> entailed or bad witness"; });
  for (Run d : {Run::Tu, Run::We, Run::Th, Run::Fr}) {
    const auto s = refute_no_friday_step(d);
    const std::string dn(run_name(d));
    t.expect(s.knowledge == RunSet::at_most(d), [&] { return dn + ": K=" + rs(s.knowledge); });
    t.expect(s.surprising == RunSet::below(d), [&] { return dn + ": surprise " + rs(s.surprising); });
    t.expect(!s.entailed && s.witness == d, [&] { return dn + ": claim entailed or witness is not " + dn; });
  }
  return make("students-wrong", "every step of the students' elimination argument has a countermodel", t.ok(),
              t.summary("assertions"));
}

inline CheckResult students_overall() {
  Tally t;
  for (RunSet k : all_run_sets()) {
    const AxiomSystem a = AxiomSystem::canonical(k);
    // Oracle: if A proves the five formulas then for each d in K below max K
    // the bracket is false, so nothing in K - {max K} can be a day, i.e. the
    // surprising set (D n K) - {max K} is empty.
    t.expect(check_students_collapse(a), [&] { return "collapse fails for K=" + rs(k); });
    t.expect(check_sigma_inconsistency(a), [&] { return "sigma consistency for K=" + rs(k); });
    const bool oracle_sigma = a.knowledge().subset_of(models_of(sigma_of(a)));
    t.expect(!(a.consistent() && entails(a, t_day()) && oracle_sigma), [&] { return "sigma provable for K=" + rs(k); });
  }
  return make("students-overall",
              "systems proving the students' formulas have no surprise; proving <T in D> and sigma^A is inconsistent",
              t.ok(), t.summary("assertions over 64 systems"));
}

inline CheckResult rational_dichotomy() {
  Tally t;
  for (RunSet law : all_run_sets()) {
    if (law.empty()) continue;
    const LawReport r = analyze_law(law);
    // Oracle by set arithmetic.
    RunSet expected = RunSet::days() & law;
    expected.erase(*law.max());
    std::size_t consistent = 0;
    for (RunSet k : r.fixed_points) consistent += k.empty() ? 0 : 1;
    t.expect(r.surprising == expected, [&] { return "L=" + rs(law) + " surprise " + rs(r.surprising); });
    if (expected.empty()) {
      t.expect(consistent == 0 && r.case_tag == LawCase::Degenerate, [&] { return "L=" + rs(law) + " not degenerate"; });
    } else {
      t.expect(consistent == 1 && r.case_tag == LawCase::Realizable,
               [&] { return "L=" + rs(law) + " has " + std::to_string(consistent) + " consistent fixed points"; });
      t.expect(std::find(r.fixed_points.begin(), r.fixed_points.end(), law) != r.fixed_points.end(),
               [&] { return "L=" + rs(law) + " is not its own fixed point"; });
    }
  }
  return make("rational-dichotomy", "surprising set is (D n L) - {max L} with a unique consistent fixed point or none",
              t.ok(), t.summary("assertions over 63 law sets"));
}

inline CheckResult central_examples() {
  const RunSet r1 = analyze_law(RunSet::all()).surprising;
  const RunSet r2 = analyze_law(RunSet::days()).surprising;
  const RunSet r3 = analyze_law({Run::Mo, Run::None}).surprising;
  const bool ok = r1 == RunSet::days() && r2 == RunSet::at_most(Run::Th) && r3 == RunSet{Run::Mo};
  return make("central-examples", "L=R, L=D and L={Mo,none} give {Mo..Fr}, {Mo..Th} and {Mo}", ok,
              "R -> " + rs(r1) + ", D -> " + rs(r2) + ", {Mo,none} -> " + rs(r3));
}

inline CheckResult universal_size() {
  const KripkeModel& m = universal_model();
  const std::size_t classes = equivalence_class_count(m);
  return make("universal-model", "the universal model has 192 worlds in 63 classes",
              m.size() == 192 && classes == 63 && m.frame().equivalence,
              std::to_string(m.size()) + " worlds, " + std::to_string(classes) + " classes");
}

inline CheckResult no_box_sigma_universal(const Formula& sigma) {
  const auto t = truth_set(universal_model(), neg(box(sigma)));
  const auto holding = static_cast<std::size_t>(std::count(t.begin(), t.end(), true));
  return make("no-box-sigma-s5", "![]sigma holds at every world of the universal model", holding == t.size(),
              std::to_string(holding) + "/" + std::to_string(t.size()) + " worlds");
}

inline CheckResult no_box_sigma_bounded(const Formula& sigma, std::size_t bound) {
  const auto r = check_no_box_sigma(bound, false, sigma);
  return make("no-box-sigma-s4-bounded",
              "no transitive-reflexive model within the world bound has a world satisfying []sigma", r.bounded_ok,
              std::to_string(r.models_checked) + " models with <= " + std::to_string(bound) +
                  " worlds; limitation: bounded enumeration only, infinite and larger models are not covered");
}

inline CheckResult surprise_criteria(std::size_t samples, std::uint64_t seed, const SigmaDay& sd) {
  Rng rng(seed ^ 0x51ull);
  Tally t;
  for (std::size_t i = 0; i < samples; ++i) {
    const KripkeModel m = random_model(rng, FrameClass::Equivalence);
    for (std::size_t w = 0; w < m.size(); ++w)
      for (Run d : kDays) {
        const auto c = tau_surprising_criteria(m, w, top(), d, sd);
        t.expect(c.by_definition == c.by_formula, [&] {
          return "day " + std::string(run_name(d)) + " world " + m.world(w).id + " in " + model_to_json(m).dump();
        });
      }
  }
  return make("surprise-criteria", "the definitional and formula criteria for surprise at a world agree", t.ok(),
              std::to_string(samples) + " equivalence models; " + t.summary("(world, day) pairs"));
}

inline CheckResult surprise_bridge(const SigmaDay& sd) {
  Tally t;
  for (RunSet b : all_run_sets()) {
    if (b.empty()) continue;
    const KripkeModel cls = universal_class(b);
    const RunSet prop = surprising_days(AxiomSystem::canonical(b));
    for (Run d : b & RunSet::days()) {
      const auto id = universal_world_id({b, d});
      const auto c = tau_surprising_criteria(cls, cls.index_of(id), top(), d, sd);
      t.expect(c.by_formula == prop.contains(d) && c.by_definition == prop.contains(d),
               [&] { return "world " + id; });
    }
  }
  return make("surprise-bridge", "propositional surprise for A_B matches modal surprise on the class B of M*", t.ok(),
              t.summary("(B, d) pairs"));
}

inline CheckResult choice_sets(const Formula& sigma) {
  const Formula box_mo_we_fr =
      disj_all(std::vector<Formula>{box(t_eq(Run::Mo)), box(t_eq(Run::We)), box(t_eq(Run::Fr))});
  const ChoiceSet a = choice_set(sigma, sigma);
  const ChoiceSet b = choice_set(conj(sigma, t_in({Run::Mo, Run::We, Run::Fr})), sigma);
  const ChoiceSet c = choice_set(conj(sigma, box(t_day())), sigma);
  const ChoiceSet d = choice_set(box_mo_we_fr, sigma);
  const ChoiceSet e = choice_set(conj(sigma, box_mo_we_fr), sigma);
  const bool ok = a.days == RunSet::days() && a.is_announcement && b.days == RunSet{Run::Mo, Run::We, Run::Fr} &&
                  b.is_announcement && c.days == RunSet::at_most(Run::Th) && c.is_announcement &&
                  !d.is_announcement && e.inconsistent && e.days.empty();
  auto flag = [](const ChoiceSet& s) {
    return s.days.to_string() + (s.is_announcement ? "" : " not-an-announcement") + (s.inconsistent ? " inconsistent" : "");
  };
  return make("choice-sets", "choice sets of the five example announcements", ok,
              "A " + flag(a) + ", B " + flag(b) + ", C " + flag(c) + ", D " + flag(d) + ", E " + flag(e));
}

inline CheckResult finiteness(std::size_t sets, std::uint64_t seed) {
  Rng rng(seed ^ 0xf1ull);
  Tally t;
  for (std::size_t i = 0; i < sets; ++i) {
    std::vector<Formula> a;
    const std::size_t n = detail::uniform(rng, 1, 3);
    for (std::size_t k = 0; k < n; ++k) a.push_back(random_formula(rng, 3));
    const auto c = tau_condense(a);
    // Independent sweep: worlds satisfying all of A versus worlds satisfying tau_A.
    const auto tau_truth = truth_set(universal_model(), c.condensed);
    bool forward = true, backward = true;
    std::vector<std::vector<bool>> parts;
    for (const Formula& f : a) parts.push_back(truth_set(universal_model(), f));
    for (std::size_t w = 0; w < tau_truth.size(); ++w) {
      bool all = true;
      for (const auto& p : parts) all = all && p[w];
      if (all && !tau_truth[w]) forward = false;
      if (tau_truth[w] && !all) backward = false;
    }
    t.expect(forward && backward && c.source_entails_condensed && c.condensed_entails_source, [&] {
      std::string s = "set {";
      for (const Formula& f : a) s += render(f) + "; ";
      return s + "}";
    });
  }
  return make("finiteness", "every formula set is S5-equivalent to its condensation over universal worlds", t.ok(),
              t.summary("random formula sets"));
}

inline CheckResult facts(std::size_t samples, std::uint64_t seed) {
  const auto rep = fact_suite(samples, seed);
  const auto control = negative_control();
  std::string detail = std::to_string(rep.checks.size()) + " fact/frame pairs x " + std::to_string(samples) +
                       " models, " + std::to_string(rep.violations()) + " violations; negative control " +
                       (control ? "detected" : "NOT detected");
  for (const auto& c : rep.checks)
    if (c.first) {
      detail += "; first violation " + c.name + " (" + std::string(frame_class_name(c.frame)) +
                "): " + c.first->to_json().dump();
      break;
    }
  return make("kripke-facts", "basic validities hold on random models of each frame class", rep.ok() && control,
              detail);
}

inline CheckResult round_trip(std::size_t count, std::uint64_t seed) {
  Rng rng(seed ^ 0x7a11ull);
  Tally t;
  for (std::size_t i = 0; i < count; ++i) {
    const Formula f = random_formula(rng, 6);
    const std::string text = render(f);
    bool ok = false;
    try {
      ok = parse(text) == f;
    } catch (const Error&) {
    }
    t.expect(ok, [&] { return "'" + text + "'"; });
  }
  return make("parser-round-trip", "parse(render(phi)) = phi on fuzzed formulas of depth <= 6", t.ok(),
              t.summary("formulas"));
}

} // namespace verify_detail

inline VerificationReport verify_all(const VerifyOptions& opt = {}) {
  using namespace verify_detail;
  const auto start = std::chrono::steady_clock::now();
  const Formula sigma = sigma_formula(opt.sigma_day);
  const std::size_t finiteness_sets = std::max<std::size_t>(100, opt.samples / 5);
  const std::size_t fuzz = std::max<std::size_t>(1000, 2 * opt.samples);

  VerificationReport rep;
  auto run = [&](const char* name, const char* anchor, const std::function<CheckResult()>& f) {
    rep.checks.push_back(guarded(name, anchor, f));
  };
  run("axiom-systems", "64 axiom systems", [] { return axiom_systems(); });
  run("students-wrong", "students' argument refuted", [] { return students_wrong(); });
  run("students-overall", "students' formulas collapse surprise", [] { return students_overall(); });
  run("rational-dichotomy", "fixed-point dichotomy", [] { return rational_dichotomy(); });
  run("central-examples", "three law sets", [] { return central_examples(); });
  run("universal-model", "universal model size", [] { return universal_size(); });
  run("no-box-sigma-s5", "![]sigma on M*", [&] { return no_box_sigma_universal(sigma); });
  run("no-box-sigma-s4-bounded", "![]sigma on small preorders", [&] { return no_box_sigma_bounded(sigma, opt.bound); });
  run("surprise-criteria", "surprise criteria agree",
      [&] { return surprise_criteria(opt.samples, opt.seed, opt.sigma_day); });
  run("surprise-bridge", "propositional/modal bridge", [&] { return surprise_bridge(opt.sigma_day); });
  run("choice-sets", "example announcements", [&] { return choice_sets(sigma); });
  run("finiteness", "formula-set condensation", [&] { return finiteness(finiteness_sets, opt.seed); });
  run("kripke-facts", "Kripke facts", [&] { return facts(opt.samples, opt.seed); });
  run("parser-round-trip", "parser round trip", [&] { return round_trip(fuzz, opt.seed); });

  rep.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return rep;
}

} // namespace surprise

#endif // SURPRISE_VERIFY_HPP_
