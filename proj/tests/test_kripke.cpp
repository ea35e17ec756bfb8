#include <gtest/gtest.h>

#include "surprise/kripke.hpp"
#include "surprise/modal.hpp"
#include "surprise/random.hpp"
#include "surprise/syntax.hpp"

using namespace surprise;

namespace {

// Direct recursive reading of the truth clauses.
bool holds(const KripkeModel& m, std::size_t w, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Atom: return m.run(w) == f.run();
    case Formula::Kind::Implies: return !holds(m, w, f.lhs()) || holds(m, w, f.rhs());
    case Formula::Kind::Box:
      for (std::size_t v = 0; v < m.size(); ++v)
        if (m.has_edge(w, v) && !holds(m, v, f.body())) return false;
      return true;
  }
  return false;
}

const KripkeModel& mg() {
  static const KripkeModel m = standard_models().full;
  return m;
}

} // namespace

TEST(EvalWorld, Examples) {
  EXPECT_TRUE(eval_world(mg(), "w_We", atom(Run::We)));
  EXPECT_TRUE(eval_world(mg(), "w_We", sigma_formula()));
  const KripkeModel one({{"a", Run::Mo}}, {{0, 0}});
  EXPECT_TRUE(eval_world(one, "a", box(atom(Run::Mo))));
  EXPECT_THROW(eval_world(mg(), "nope", top()), UnknownWorldError);
}

TEST(EvalWorld, VacuousBoxAtDeadEnd) {
  const KripkeModel dead({{"a", Run::Tu}}, {});
  EXPECT_TRUE(eval_world(dead, "a", box(bot())));
  EXPECT_FALSE(eval_world(dead, "a", diamond(top())));
}

TEST(EvalWorld, MatchesDirectClauses) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const KripkeModel m = random_model(rng, FrameClass::General);
    const Formula f = random_formula(rng, 4);
    const auto t = truth_set(m, f);
    for (std::size_t w = 0; w < m.size(); ++w) ASSERT_EQ(t[w], holds(m, w, f)) << render(f);
  }
}

TEST(Frame, Properties) {
  const FrameProperties g = frame_properties(mg());
  EXPECT_TRUE(g.reflexive && g.transitive && g.symmetric && g.equivalence);
  const KripkeModel chain({{"a", Run::Mo}, {"b", Run::Tu}}, {{0, 0}, {1, 1}, {0, 1}});
  const auto c = chain.frame();
  EXPECT_TRUE(c.reflexive);
  EXPECT_TRUE(c.transitive);
  EXPECT_FALSE(c.symmetric);
  EXPECT_FALSE(c.equivalence);
  const KripkeModel bare({{"a", Run::Mo}}, {});
  EXPECT_FALSE(bare.frame().reflexive);
}

TEST(Frame, RandomClassesHaveTheirProperties) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(random_model(rng, FrameClass::Reflexive).frame().reflexive);
    const auto tr = random_model(rng, FrameClass::TransitiveReflexive).frame();
    EXPECT_TRUE(tr.reflexive && tr.transitive);
    EXPECT_TRUE(random_model(rng, FrameClass::Equivalence).frame().equivalence);
    const auto n = random_model(rng, FrameClass::General).size();
    EXPECT_GE(n, 1u);
    EXPECT_LE(n, 5u);
  }
}

TEST(Model, RejectsBadInput) {
  EXPECT_THROW(KripkeModel({{"a", Run::Mo}, {"a", Run::Tu}}, {}), ModelFormatError);
  EXPECT_THROW(KripkeModel::from_ids({{"a", Run::Mo}}, {{"a", "b"}}), ModelFormatError);
  EXPECT_THROW(KripkeModel({{"a", Run::Mo}}, {{0, 1}}), ModelFormatError);
}

TEST(Submodel, Examples) {
  EXPECT_EQ(submodel_at(mg(), "w_Th"), mg());
  std::vector<KripkeModel::World> ws = mg().worlds();
  ws.push_back({"iso", Run::Mo});
  auto edges = mg().edges();
  edges.emplace_back(6, 6);
  const KripkeModel joined(ws, edges);
  const KripkeModel sub = submodel_at(joined, "iso");
  EXPECT_EQ(sub, KripkeModel({{"iso", Run::Mo}}, {{0, 0}}));
}

TEST(Submodel, PreservesTruth) {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const KripkeModel m = random_model(rng, FrameClass::General);
    const Formula f = random_formula(rng, 4);
    for (const auto& w : m.worlds())
      ASSERT_EQ(eval_world(m, w.id, f), eval_world(submodel_at(m, w.id), w.id, f)) << render(f);
  }
}

TEST(RestrictGe, Examples) {
  const KripkeModel r = restrict_ge(mg(), Run::We);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r.world(0).id, "w_We");
  EXPECT_EQ(r.world(3).id, "w_none");
  EXPECT_EQ(r.edge_count(), 16u);
  EXPECT_EQ(restrict_ge(mg(), Run::Mo), mg());
  const KripkeModel plus_fr = restrict_ge(standard_models().days, Run::Fr);
  ASSERT_EQ(plus_fr.size(), 1u);
  EXPECT_EQ(plus_fr.world(0).id, "w_Fr");
  EXPECT_TRUE(restrict_ge(KripkeModel({{"a", Run::Mo}}, {{0, 0}}), Run::Tu).empty());
  EXPECT_THROW(restrict_ge(mg(), Run::None), PreconditionError);
}

TEST(StandardModels, Shape) {
  const auto s = standard_models();
  EXPECT_EQ(s.full.size(), 6u);
  EXPECT_EQ(s.full.edge_count(), 36u);
  EXPECT_EQ(s.days.size(), 5u);
  EXPECT_EQ(s.days.edge_count(), 25u);
  EXPECT_TRUE(s.full.frame().equivalence);
  EXPECT_TRUE(s.days.frame().equivalence);
}

TEST(Universal, Shape) {
  const KripkeModel& u = universal_model();
  EXPECT_EQ(u.size(), 192u);
  EXPECT_EQ(equivalence_class_count(u), 63u);
  EXPECT_TRUE(u.frame().equivalence);
  EXPECT_EQ(universal_class(RunSet::all()).size(), 6u);
  // Class of B has |B| worlds and |B|^2 edges; total edges = sum over B of |B|^2.
  std::size_t edges = 0;
  for (RunSet b : all_run_sets()) edges += b.size() * b.size();
  EXPECT_EQ(u.edge_count(), edges);
  EXPECT_EQ(u.world(0).id, "{Mo}:Mo");
  EXPECT_EQ(universal_index({RunSet::all(), Run::None}), 191u);
  EXPECT_THROW(universal_index({RunSet{Run::Mo}, Run::Tu}), UnknownWorldError);
}

TEST(BoxSignature, Examples) {
  EXPECT_EQ(box_signature(mg(), "w_Tu"), RunSet::all());
  EXPECT_EQ(box_signature(standard_models().days, "w_Fr"), RunSet::days());
  for (const auto& w : universal_worlds()) EXPECT_EQ(box_signature(universal_model(), universal_world_id(w)), w.visible);
  const KripkeModel chain({{"a", Run::Mo}, {"b", Run::Tu}}, {{0, 0}, {1, 1}, {0, 1}});
  EXPECT_THROW(box_signature(chain, "a"), FrameError);
}

TEST(Universal, AdequacyForEquivalenceModels) {
  Rng rng(17);
  const KripkeModel& u = universal_model();
  for (int i = 0; i < 500; ++i) {
    const KripkeModel m = random_model(rng, FrameClass::Equivalence);
    const Formula f = random_formula(rng, 4);
    for (std::size_t w = 0; w < m.size(); ++w) {
      const UniversalWorld uw{box_signature_at(m, w), m.run(w)};
      ASSERT_EQ(eval_at(m, w, f), eval_at(u, universal_index(uw), f)) << render(f);
    }
  }
}
