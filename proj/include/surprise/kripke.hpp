// surprise :: Kripke models labeled with runs
//
// A world's valuation is its run label: world w satisfies Y_r iff run(w) == r.

#ifndef SURPRISE_KRIPKE_HPP_
#define SURPRISE_KRIPKE_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "surprise/error.hpp"
#include "surprise/formula.hpp"
#include "surprise/run.hpp"

namespace surprise {

struct FrameProperties {
  bool reflexive = false;
  bool transitive = false;
  bool symmetric = false;
  bool equivalence = false;
  friend bool operator==(const FrameProperties&, const FrameProperties&) = default;
};

class KripkeModel {
public:
  struct World {
    std::string id;
    Run run = Run::Mo;
    friend bool operator==(const World&, const World&) = default;
  };
  using Edge = std::pair<std::size_t, std::size_t>;

  KripkeModel() { finish(); }

  // Edges given by world index. Duplicate edges collapse.
  KripkeModel(std::vector<World> worlds, const std::vector<Edge>& edges) : worlds_(std::move(worlds)) {
    index_ids();
    adj_.assign(worlds_.size() * worlds_.size(), 0);
    for (auto [from, to] : edges) {
      if (from >= worlds_.size() || to >= worlds_.size()) throw ModelFormatError("edge endpoint out of range");
      adj_[from * worlds_.size() + to] = 1;
    }
    finish();
  }

  // Edges given by world id.
  static KripkeModel from_ids(std::vector<World> worlds, const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, std::size_t> ix;
    for (std::size_t i = 0; i < worlds.size(); ++i) ix.emplace(worlds[i].id, i);
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      auto ia = ix.find(a), ib = ix.find(b);
      if (ia == ix.end()) throw ModelFormatError("edge references unknown world '" + a + "'");
      if (ib == ix.end()) throw ModelFormatError("edge references unknown world '" + b + "'");
      es.emplace_back(ia->second, ib->second);
    }
    return KripkeModel(std::move(worlds), es);
  }

  std::size_t size() const noexcept { return worlds_.size(); }
  bool empty() const noexcept { return worlds_.empty(); }
  const std::vector<World>& worlds() const noexcept { return worlds_; }
  const World& world(std::size_t i) const { return worlds_.at(i); }
  Run run(std::size_t i) const { return worlds_.at(i).run; }

  std::optional<std::size_t> find(const std::string& id) const {
    auto it = ids_.find(id);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const std::string& id) const {
    if (auto i = find(id)) return *i;
    throw UnknownWorldError(id);
  }

  bool has_edge(std::size_t from, std::size_t to) const noexcept { return adj_[from * worlds_.size() + to] != 0; }
  std::span<const std::size_t> successors(std::size_t i) const { return succ_.at(i); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // All edges, ordered by (from, to).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j : succ_[i]) out.emplace_back(i, j);
    return out;
  }

  const FrameProperties& frame() const noexcept { return frame_; }

  friend bool operator==(const KripkeModel& a, const KripkeModel& b) {
    return a.worlds_ == b.worlds_ && a.adj_ == b.adj_;
  }

private:
  void index_ids() {
    for (std::size_t i = 0; i < worlds_.size(); ++i)
      if (!ids_.emplace(worlds_[i].id, i).second) throw ModelFormatError("duplicate world id '" + worlds_[i].id + "'");
  }

  void finish() {
    const std::size_t n = worlds_.size();
    succ_.assign(n, {});
    edge_count_ = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (has_edge(i, j)) {
          succ_[i].push_back(j);
          ++edge_count_;
        }
    FrameProperties f{true, true, true, false};
    for (std::size_t i = 0; i < n; ++i) {
      if (!has_edge(i, i)) f.reflexive = false;
      for (std::size_t j : succ_[i]) {
        if (!has_edge(j, i)) f.symmetric = false;
        for (std::size_t k : succ_[j])
          if (!has_edge(i, k)) f.transitive = false;
      }
    }
    f.equivalence = f.reflexive && f.transitive && f.symmetric;
    frame_ = f;
  }

  std::vector<World> worlds_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<char> adj_;
  std::vector<std::vector<std::size_t>> succ_;
  std::size_t edge_count_ = 0;
  FrameProperties frame_;
};

inline FrameProperties frame_properties(const KripkeModel& m) { return m.frame(); }

// ---- evaluation -----------------------------------------------------------

namespace detail {

class TruthSets {
public:
  explicit TruthSets(const KripkeModel& m) : m_(m) {}

  const std::vector<char>& of(const Formula& phi) {
    if (auto it = memo_.find(phi.id()); it != memo_.end()) return it->second;
    std::vector<char> v(m_.size(), 0);
    switch (phi.kind()) {
      case Formula::Kind::Bot: break;
      case Formula::Kind::Atom:
        for (std::size_t i = 0; i < m_.size(); ++i) v[i] = m_.run(i) == phi.run();
        break;
      case Formula::Kind::Implies: {
        const auto& a = of(phi.lhs());
        const auto& b = of(phi.rhs());
        for (std::size_t i = 0; i < m_.size(); ++i) v[i] = !a[i] || b[i];
        break;
      }
      case Formula::Kind::Box: {
        const auto& a = of(phi.body());
        for (std::size_t i = 0; i < m_.size(); ++i) {
          char all = 1;
          for (std::size_t j : m_.successors(i))
            if (!a[j]) {
              all = 0;
              break;
            }
          v[i] = all;
        }
        break;
      }
    }
    keep_.push_back(phi);
    return memo_.emplace(phi.id(), std::move(v)).first->second;
  }

private:
  const KripkeModel& m_;
  std::unordered_map<const void*, std::vector<char>> memo_;
  std::vector<Formula> keep_; // pins node addresses used as memo keys
};

} // namespace detail

// Truth value of phi at every world; box is vacuously true at dead ends.
inline std::vector<bool> truth_set(const KripkeModel& m, const Formula& phi) {
  detail::TruthSets ts(m);
  const auto& v = ts.of(phi);
  return {v.begin(), v.end()};
}

inline bool eval_at(const KripkeModel& m, std::size_t w, const Formula& phi) {
  if (w >= m.size()) throw UnknownWorldError("#" + std::to_string(w));
  return truth_set(m, phi)[w];
}

inline bool eval_world(const KripkeModel& m, const std::string& id, const Formula& phi) {
  return eval_at(m, m.index_of(id), phi);
}

inline bool holds_everywhere(const KripkeModel& m, const Formula& phi) {
  auto v = truth_set(m, phi);
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

// ---- derived models ----------------------------------------------------------

// Keeps the worlds selected by `keep` (in original order) and the edges between them.
inline KripkeModel restrict_to(const KripkeModel& m, const std::vector<bool>& keep) {
  std::vector<std::size_t> remap(m.size(), static_cast<std::size_t>(-1));
  std::vector<KripkeModel::World> worlds;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (keep[i]) {
      remap[i] = worlds.size();
      worlds.push_back(m.world(i));
    }
  std::vector<KripkeModel::Edge> edges;
  for (auto [a, b] : m.edges())
    if (keep[a] && keep[b]) edges.emplace_back(remap[a], remap[b]);
  return KripkeModel(std::move(worlds), edges);
}

inline std::vector<bool> reachable_from(const KripkeModel& m, std::size_t w) {
  std::vector<bool> seen(m.size(), false);
  std::deque<std::size_t> todo{w};
  seen[w] = true;
  while (!todo.empty()) {
    std::size_t u = todo.front();
    todo.pop_front();
    for (std::size_t v : m.successors(u))
      if (!seen[v]) {
        seen[v] = true;
        todo.push_back(v);
      }
  }
  return seen;
}

// M_w: the worlds reachable from w along E-paths (w included).
inline KripkeModel submodel_at(const KripkeModel& m, const std::string& id) {
  return restrict_to(m, reachable_from(m, m.index_of(id)));
}

// M|>=d: drops every world whose run precedes d. The result may be empty.
inline KripkeModel restrict_ge(const KripkeModel& m, Run d) {
  if (!is_day(d)) throw PreconditionError("restrict_ge needs a day");
  std::vector<bool> keep(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) keep[i] = index_of(m.run(i)) >= index_of(d);
  return restrict_to(m, keep);
}

inline KripkeModel complete_model(RunSet runs) {
  std::vector<KripkeModel::World> worlds;
  for (Run r : runs) worlds.push_back({"w_" + std::string(run_name(r)), r});
  std::vector<KripkeModel::Edge> edges;
  for (std::size_t i = 0; i < worlds.size(); ++i)
    for (std::size_t j = 0; j < worlds.size(); ++j) edges.emplace_back(i, j);
  return KripkeModel(std::move(worlds), edges);
}

struct StandardModels {
  KripkeModel full;  // one world per run, all visible from all
  KripkeModel days;  // the same without the none-world
};

inline StandardModels standard_models() { return {complete_model(RunSet::all()), complete_model(RunSet::days())}; }

// Run labels present in the equivalence class of w.
inline RunSet box_signature_at(const KripkeModel& m, std::size_t w) {
  if (!m.frame().equivalence) throw FrameError("box signature needs an equivalence model");
  RunSet b;
  for (std::size_t v : m.successors(w)) b.insert(m.run(v));
  return b;
}

inline RunSet box_signature(const KripkeModel& m, const std::string& id) { return box_signature_at(m, m.index_of(id)); }

// ---- the universal model ---------------------------------------------------

// A world (B, r) of the universal model: r in B, B nonempty.
struct UniversalWorld {
  RunSet visible;
  Run run = Run::Mo;
  friend bool operator==(const UniversalWorld&, const UniversalWorld&) = default;
};

inline std::string universal_world_id(const UniversalWorld& w) {
  return w.visible.to_string() + ":" + std::string(run_name(w.run));
}

// The 192 worlds, ordered by (mask of B, r).
inline const std::vector<UniversalWorld>& universal_worlds() {
  static const std::vector<UniversalWorld> worlds = [] {
    std::vector<UniversalWorld> out;
    for (RunSet b : all_run_sets())
      for (Run r : b) out.push_back({b, r});
    return out;
  }();
  return worlds;
}

inline std::size_t universal_index(const UniversalWorld& w) {
  const auto& ws = universal_worlds();
  auto it = std::find(ws.begin(), ws.end(), w);
  if (it == ws.end()) throw UnknownWorldError(universal_world_id(w));
  return static_cast<std::size_t>(it - ws.begin());
}

// Worlds see each other iff they share B.
inline const KripkeModel& universal_model() {
  static const KripkeModel model = [] {
    const auto& uw = universal_worlds();
    std::vector<KripkeModel::World> worlds;
    for (const auto& w : uw) worlds.push_back({universal_world_id(w), w.run});
    std::vector<KripkeModel::Edge> edges;
    for (std::size_t i = 0; i < uw.size(); ++i)
      for (std::size_t j = 0; j < uw.size(); ++j)
        if (uw[i].visible == uw[j].visible) edges.emplace_back(i, j);
    return KripkeModel(std::move(worlds), edges);
  }();
  return model;
}

// The class-B part of the universal model.
inline KripkeModel universal_class(RunSet b) {
  const auto& uw = universal_worlds();
  std::vector<bool> keep(uw.size());
  for (std::size_t i = 0; i < uw.size(); ++i) keep[i] = uw[i].visible == b;
  return restrict_to(universal_model(), keep);
}

// Number of equivalence classes of an equivalence model.
inline std::size_t equivalence_class_count(const KripkeModel& m) {
  if (!m.frame().equivalence) throw FrameError("not an equivalence model");
  std::vector<bool> seen(m.size(), false);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (std::size_t j : m.successors(i)) seen[j] = true;
  }
  return classes;
}

} // namespace surprise

#endif // SURPRISE_KRIPKE_HPP_
