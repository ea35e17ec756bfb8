#include <gtest/gtest.h>

#include <algorithm>

#include "surprise/analysis.hpp"
#include "surprise/report.hpp"

using namespace surprise;

namespace {

RunSet oracle_surprise(RunSet law) {
  RunSet out;
  const Run top = *law.max();
  for (surprise::Run r : law)
    if (is_day(r) && r != top) out.insert(r);
  return out;
}

} // namespace

TEST(StudentsAxioms, Examples) {
  const auto empty = students_axioms(AxiomSystem{});
  ASSERT_EQ(empty.size(), 5u);
  EXPECT_EQ(empty[0], t_day());
  for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(empty[i], top());

  const auto incons = students_axioms(AxiomSystem{bot()});
  for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(incons[i], t_ne(kDays[i]));

  const AxiomSystem closed = students_closure();
  EXPECT_EQ(closed.knowledge(), RunSet{Run::Mo});
  EXPECT_TRUE(entails_students_axioms(closed));
  const auto fs = students_axioms(closed);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(fs[i], t_ne(kDays[i]));
}

TEST(StudentsCollapse, AllCanonicalSystems) {
  for (RunSet k : all_run_sets()) {
    const AxiomSystem a = AxiomSystem::canonical(k);
    EXPECT_TRUE(check_students_collapse(a)) << k.to_string();
    EXPECT_TRUE(check_sigma_inconsistency(a)) << k.to_string();
  }
  EXPECT_TRUE(check_students_collapse(AxiomSystem{t_eq(Run::Mo)}));
  EXPECT_FALSE(entails_students_axioms(AxiomSystem{}));
}

TEST(StudentsSteps, Initial) {
  const auto s = refute_initial_step();
  EXPECT_EQ(s.kind, StudentsStep::Kind::Initial);
  EXPECT_EQ(s.claimed, t_day());
  EXPECT_FALSE(s.entailed);
  EXPECT_EQ(s.witness, Run::None);
  EXPECT_EQ(s.knowledge, RunSet::all());
  EXPECT_EQ(s.surprising, RunSet::days());
  EXPECT_TRUE(s.system.consistent());
}

TEST(StudentsSteps, NoFriday) {
  for (surprise::Run d : {Run::Tu, Run::We, Run::Th, Run::Fr}) {
    const auto s = refute_no_friday_step(d);
    EXPECT_EQ(s.day, d);
    EXPECT_EQ(s.witness, d);
    EXPECT_FALSE(s.entailed);
    EXPECT_EQ(s.knowledge, RunSet::at_most(d));
    EXPECT_EQ(s.surprising, RunSet::at_most(predecessor(d)));
    // Witness soundness, checked directly.
    for (const Formula& ax : s.system.axioms()) EXPECT_TRUE(eval_run(ax, *s.witness));
    EXPECT_FALSE(eval_run(s.claimed, *s.witness));
  }
  EXPECT_EQ(refute_no_friday_step(Run::Fr).surprising, (RunSet{Run::Mo, Run::Tu, Run::We, Run::Th}));
  EXPECT_EQ(refute_no_friday_step(Run::Tu).surprising, RunSet{Run::Mo});
  EXPECT_THROW(refute_no_friday_step(Run::Mo), PreconditionError);
  EXPECT_THROW(refute_no_friday_step(Run::None), PreconditionError);
}

TEST(StudentsSteps, Final) {
  const auto s = final_step();
  EXPECT_TRUE(s.entailed);
  EXPECT_FALSE(s.witness);
  EXPECT_EQ(s.knowledge, RunSet{Run::Mo});
  EXPECT_TRUE(s.surprising.empty());
}

TEST(AnalyzeLaw, Examples) {
  const auto r = analyze_law(RunSet::all());
  EXPECT_EQ(r.case_tag, LawCase::Realizable);
  EXPECT_EQ(r.surprising, RunSet::days());
  EXPECT_EQ(analyze_law(RunSet::days()).surprising, RunSet::at_most(Run::Th));
  EXPECT_EQ(analyze_law({Run::Mo, Run::None}).surprising, RunSet{Run::Mo});
  const auto none = analyze_law({Run::None});
  EXPECT_EQ(none.case_tag, LawCase::Degenerate);
  EXPECT_TRUE(none.surprising.empty());
  EXPECT_THROW(analyze_law(RunSet{}), PreconditionError);
}

TEST(AnalyzeLaw, DichotomyAllLaws) {
  for (RunSet law : all_run_sets()) {
    if (law.empty()) continue;
    const auto r = analyze_law(law);
    const RunSet expected = oracle_surprise(law);
    EXPECT_EQ(r.surprising, expected) << law.to_string();
    EXPECT_EQ(r.rational_choices, r.surprising);
    std::vector<RunSet> consistent;
    for (RunSet k : r.fixed_points)
      if (!k.empty()) consistent.push_back(k);
    if (expected.empty()) {
      EXPECT_EQ(r.case_tag, LawCase::Degenerate);
      EXPECT_TRUE(consistent.empty()) << law.to_string();
    } else {
      EXPECT_EQ(r.case_tag, LawCase::Realizable);
      ASSERT_EQ(consistent.size(), 1u) << law.to_string();
      EXPECT_EQ(consistent[0], law);
    }
    // Every listed fixed point satisfies the defining equation.
    for (RunSet k : r.fixed_points) {
      const AxiomSystem a = AxiomSystem::canonical(k);
      EXPECT_TRUE(axiom_equiv(a, AxiomSystem::canonical(law).with(iverson(tau_of(a)))));
    }
  }
}

TEST(Enumerate, Records) {
  const auto recs = enumerate_axiom_systems();
  ASSERT_EQ(recs.size(), 64u);
  EXPECT_TRUE(recs[0].knowledge.empty());
  EXPECT_FALSE(recs[0].tau);
  EXPECT_TRUE(recs[0].surprising.empty());
  const RunSet tu_th{Run::Tu, Run::Th};
  auto it = std::find_if(recs.begin(), recs.end(), [&](auto& r) { return r.knowledge == tu_th; });
  ASSERT_NE(it, recs.end());
  EXPECT_EQ(it->surprising, RunSet{Run::Tu});
  EXPECT_EQ(it->case_tag, SystemCase::AtLeastTwo);
  for (const auto& r : recs) EXPECT_TRUE(r.case_holds) << r.knowledge.to_string();
}

TEST(Report, LawText) {
  const std::string t = law_report_text(analyze_law({Run::Mo, Run::None}));
  EXPECT_NE(t.find("case              Realizable"), std::string::npos);
  EXPECT_NE(t.find("surprising        {Mo}"), std::string::npos);
  const auto j = law_report_json(analyze_law({Run::None}));
  EXPECT_EQ(j["case"], "Degenerate");
  EXPECT_EQ(j["surprising"].size(), 0u);
  EXPECT_EQ(j["fixed_points"][0].size(), 0u);
}

TEST(Report, EnumerationTable) {
  const auto recs = enumerate_axiom_systems();
  const std::string t = enumeration_text(recs);
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 65);
  EXPECT_EQ(enumeration_json(recs).size(), 64u);
}
