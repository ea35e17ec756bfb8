// surprise :: seeded random models and formulas

#ifndef SURPRISE_RANDOM_HPP_
#define SURPRISE_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "surprise/formula.hpp"
#include "surprise/kripke.hpp"
#include "surprise/run.hpp"

namespace surprise {

using Rng = std::mt19937_64;

enum class FrameClass { General, Reflexive, TransitiveReflexive, Equivalence };

inline std::string_view frame_class_name(FrameClass c) {
  switch (c) {
    case FrameClass::General: return "general";
    case FrameClass::Reflexive: return "reflexive";
    case FrameClass::TransitiveReflexive: return "transitive-reflexive";
    case FrameClass::Equivalence: return "equivalence";
  }
  return "?";
}

namespace detail {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline void close_reflexive(std::vector<std::vector<char>>& e) {
  for (std::size_t i = 0; i < e.size(); ++i) e[i][i] = 1;
}

inline void close_symmetric(std::vector<std::vector<char>>& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[i][j]) e[j][i] = 1;
}

inline void close_transitive(std::vector<std::vector<char>>& e) {
  const std::size_t n = e.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (e[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (e[k][j]) e[i][j] = 1;
}

} // namespace detail

// World count uniform in [1, max_worlds], run labels uniform, each edge kept
// with probability 1/2, then closed as the frame class requires.
inline KripkeModel random_model(Rng& rng, FrameClass cls, std::size_t max_worlds = 5) {
  const std::size_t n = detail::uniform(rng, 1, max_worlds);
  std::vector<KripkeModel::World> worlds(n);
  for (std::size_t i = 0; i < n; ++i)
    worlds[i] = {"w" + std::to_string(i), run_at(static_cast<int>(detail::uniform(rng, 0, kRunCount - 1)))};
  std::vector<std::vector<char>> e(n, std::vector<char>(n, 0));
  std::bernoulli_distribution coin(0.5);
  for (auto& row : e)
    for (auto& x : row) x = coin(rng);
  switch (cls) {
    case FrameClass::General: break;
    case FrameClass::Reflexive: detail::close_reflexive(e); break;
    case FrameClass::TransitiveReflexive:
      detail::close_reflexive(e);
      detail::close_transitive(e);
      break;
    case FrameClass::Equivalence:
      detail::close_reflexive(e);
      detail::close_symmetric(e);
      detail::close_transitive(e);
      break;
  }
  std::vector<KripkeModel::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (e[i][j]) edges.emplace_back(i, j);
  return KripkeModel(std::move(worlds), edges);
}

// Random formula of depth at most `depth`, mixing core and derived
// connectives. With `modal` false no box or diamond is generated.
inline Formula random_formula(Rng& rng, int depth, bool modal = true) {
  if (depth <= 0 || detail::uniform(rng, 0, 3) == 0) {
    const std::size_t pick = detail::uniform(rng, 0, 7);
    if (pick == 0) return bot();
    if (pick == 1) return top();
    return atom(run_at(static_cast<int>(detail::uniform(rng, 0, kRunCount - 1))));
  }
  const std::size_t op = detail::uniform(rng, 0, modal ? 7 : 5);
  auto sub = [&] { return random_formula(rng, depth - 1, modal); };
  switch (op) {
    case 0: return implies(sub(), sub());
    case 1: return neg(sub());
    case 2: return disj(sub(), sub());
    case 3: return conj(sub(), sub());
    case 4: return iff(sub(), sub());
    case 5: return chi(RunSet{static_cast<RunSet::Mask>(detail::uniform(rng, 0, 63))});
    case 6: return box(sub());
    default: return diamond(sub());
  }
}

} // namespace surprise

#endif // SURPRISE_RANDOM_HPP_
