#include <gtest/gtest.h>

#include "surprise/prop.hpp"
#include "surprise/random.hpp"
#include "surprise/syntax.hpp"

using namespace surprise;

namespace {

// Oracle: (D n K) - {max K}, by plain set arithmetic.
RunSet expected_surprise(RunSet k) {
  if (k.empty()) return {};
  RunSet out = RunSet::days() & k;
  out.erase(*k.max());
  return out;
}

AxiomSystem sys(std::initializer_list<const char*> axioms) {
  std::vector<Formula> fs;
  for (const char* a : axioms) fs.push_back(parse(a));
  return AxiomSystem(std::move(fs));
}

} // namespace

TEST(EvalRun, Examples) {
  EXPECT_TRUE(eval_run(atom(Run::We), Run::We));
  EXPECT_FALSE(eval_run(t_day(), Run::None));
  EXPECT_TRUE(eval_run(implies(atom(Run::Fr), bot()), Run::Tu));
  EXPECT_THROW(eval_run(box(atom(Run::Mo)), Run::Mo), ModalFormulaError);
  try {
    models_of(diamond(top()));
    FAIL();
  } catch (const ModalFormulaError& e) {
    EXPECT_STREQ(e.what(), "modal formula in propositional context");
  }
}

TEST(ModelsOf, Examples) {
  EXPECT_EQ(models_of(top()), RunSet::all());
  EXPECT_EQ(models_of(t_le(Run::We)), (RunSet{Run::Mo, Run::Tu, Run::We}));
  EXPECT_EQ(models_of(neg(t_day())), RunSet{Run::None});
}

TEST(ModelsOf, AgreesWithEvalRunAndCanonicalForm) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_formula(rng, 5, false);
    const RunSet m = models_of(f);
    for (surprise::Run r : kAllRuns) {
      EXPECT_EQ(m.contains(r), eval_run(f, r)) << render(f);
      EXPECT_EQ(eval_run(chi(m), r), eval_run(f, r)) << render(f);
    }
  }
}

TEST(Entails, Examples) {
  EXPECT_FALSE(entails(AxiomSystem{}, t_day()));
  EXPECT_TRUE(entails(sys({"T<=Th"}), t_le(Run::Fr)));
  EXPECT_TRUE(entails(AxiomSystem{bot()}, atom(Run::Mo)));
  EXPECT_TRUE(entails(AxiomSystem{bot()}, bot()));
}

TEST(KnowledgeSet, Examples) {
  EXPECT_EQ(knowledge_set(AxiomSystem{}), RunSet::all());
  EXPECT_EQ(knowledge_set(sys({"T<=Th"})), RunSet::at_most(Run::Th));
  EXPECT_EQ(knowledge_set(sys({"T=Mo", "T=Tu"})), RunSet{});
  EXPECT_FALSE(sys({"T=Mo", "T=Tu"}).consistent());
  EXPECT_THROW(AxiomSystem{box(top())}, ModalFormulaError);
}

TEST(KnowledgeSet, LatticeOverAll64) {
  for (RunSet ka : all_run_sets()) {
    const AxiomSystem a = AxiomSystem::canonical(ka);
    EXPECT_EQ(a.knowledge(), ka);
    EXPECT_EQ(a.consistent(), !ka.empty());
    for (RunSet k1 : all_run_sets()) {
      EXPECT_EQ(is_knowledge_set(a, k1), ka.subset_of(k1));
      for (RunSet k2 : all_run_sets())
        if (is_knowledge_set(a, k1) && is_knowledge_set(a, k2)) {
          EXPECT_TRUE(is_knowledge_set(a, k1 & k2));
          EXPECT_TRUE(is_knowledge_set(a, k1 | k2));
        }
    }
  }
}

TEST(AxiomEquiv, Examples) {
  EXPECT_TRUE(axiom_equiv(AxiomSystem{t_day()}, AxiomSystem{neg(atom(Run::None))}));
  EXPECT_TRUE(axiom_equiv(AxiomSystem{}, AxiomSystem{top()}));
  EXPECT_FALSE(axiom_equiv(AxiomSystem{t_eq(Run::Mo)}, AxiomSystem{t_eq(Run::Tu)}));
}

TEST(SurprisingDays, Examples) {
  EXPECT_EQ(surprising_days(AxiomSystem{}), RunSet::days());
  EXPECT_EQ(surprising_days(sys({"T<=Th"})), (RunSet{Run::Mo, Run::Tu, Run::We}));
  EXPECT_EQ(surprising_days(sys({"T=We"})), RunSet{});
}

TEST(SurprisingDays, DeductionForm) {
  EXPECT_TRUE(is_surprising_deduction_form(AxiomSystem{}, Run::Fr));
  EXPECT_FALSE(is_surprising_deduction_form(sys({"T<=Th"}), Run::Th));
  EXPECT_TRUE(is_surprising_deduction_form(sys({"D"}), Run::We));
  EXPECT_THROW(is_surprising_deduction_form(AxiomSystem{}, Run::None), PreconditionError);
  EXPECT_THROW(is_surprising_deduction_form(sys({"T<=Tu"}), Run::We), PreconditionError);
}

TEST(SurprisingDays, ThreeCharacterizationsAgree) {
  for (RunSet k : all_run_sets()) {
    const AxiomSystem a = AxiomSystem::canonical(k);
    const RunSet s = surprising_days(a);
    EXPECT_EQ(s, expected_surprise(k)) << k.to_string();
    const RunSet sigma_models = models_of(sigma_of(a));
    for (surprise::Run d : kDays) {
      EXPECT_EQ(sigma_models.contains(d), s.contains(d)) << k.to_string() << " " << run_name(d);
      if (k.contains(d)) {
        EXPECT_EQ(is_surprising_deduction_form(a, d), s.contains(d));
      }
    }
    if (k.size() <= 1) {
      EXPECT_TRUE(s.empty());
    }
    EXPECT_EQ(tau_of(a), !s.empty()) << k.to_string();
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(models_of(sigma_of(sys({"D"}))) & RunSet::days(), RunSet::at_most(Run::Th));
  EXPECT_EQ(models_of(sigma_of(AxiomSystem{bot()})), RunSet{});
  EXPECT_EQ(models_of(sigma_of(AxiomSystem{})), RunSet::days());
}

TEST(Sigma, RawAndSimplifiedAgree) {
  for (RunSet k : all_run_sets()) {
    const AxiomSystem a = AxiomSystem::canonical(k);
    EXPECT_EQ(models_of(sigma_of(a)), models_of(sigma_of_simplified(a)));
  }
  // 64 conjuncts: 63 conj nodes, each neg(implies(x, neg(y))).
  std::size_t n = 0;
  Formula f = sigma_of(AxiomSystem{});
  while (auto c = match_conj(f)) {
    ++n;
    f = c->second;
  }
  EXPECT_EQ(n, 63u);
}

TEST(Tau, Examples) {
  EXPECT_TRUE(tau_of(AxiomSystem{}));
  EXPECT_FALSE(tau_of(AxiomSystem{t_eq(Run::Mo)}));
  EXPECT_FALSE(tau_of(AxiomSystem{bot()}));
}

TEST(Profile, Fields) {
  const auto p = surprise_profile(AxiomSystem{t_day()});
  EXPECT_EQ(p.knowledge, RunSet::days());
  EXPECT_EQ(p.surprising, RunSet::at_most(Run::Th));
  EXPECT_TRUE(p.tau_holds);
  EXPECT_EQ(p.sigma, sigma_of(AxiomSystem{t_day()}));
}
