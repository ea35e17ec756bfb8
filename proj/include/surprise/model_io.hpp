// surprise :: Kripke model import/export (JSON, Graphviz DOT)
//
//   {"worlds": [{"id": "w0", "run": "Mo"}, ...], "edges": [["w0", "w0"], ...]}

#ifndef SURPRISE_MODEL_IO_HPP_
#define SURPRISE_MODEL_IO_HPP_

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "surprise/error.hpp"
#include "surprise/kripke.hpp"
#include "surprise/run.hpp"

namespace surprise {

using Json = nlohmann::ordered_json;

// Worlds in model order, edges in (from, to) index order.
inline Json model_to_json(const KripkeModel& m) {
  Json worlds = Json::array();
  for (const auto& w : m.worlds()) worlds.push_back({{"id", w.id}, {"run", std::string(run_name(w.run))}});
  Json edges = Json::array();
  for (auto [a, b] : m.edges()) edges.push_back(Json::array({m.world(a).id, m.world(b).id}));
  return {{"worlds", std::move(worlds)}, {"edges", std::move(edges)}};
}

inline std::string model_to_json_string(const KripkeModel& m) { return model_to_json(m).dump(2) + "\n"; }

namespace detail {

inline void reject_unknown_keys(const Json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ModelFormatError("unknown field '" + key + "' in " + std::string(where));
  }
}

inline const Json& require_key(const Json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ModelFormatError("missing field '" + std::string(key) + "' in " + std::string(where));
  return *it;
}

} // namespace detail

inline KripkeModel model_from_json(const Json& j) {
  if (!j.is_object()) throw ModelFormatError("model must be a JSON object");
  detail::reject_unknown_keys(j, {"worlds", "edges"}, "model");
  const Json& jw = detail::require_key(j, "worlds", "model");
  const Json& je = detail::require_key(j, "edges", "model");
  if (!jw.is_array()) throw ModelFormatError("'worlds' must be an array");
  if (!je.is_array()) throw ModelFormatError("'edges' must be an array");

  std::vector<KripkeModel::World> worlds;
  for (const Json& w : jw) {
    if (!w.is_object()) throw ModelFormatError("world record must be an object");
    detail::reject_unknown_keys(w, {"id", "run"}, "world record");
    const Json& id = detail::require_key(w, "id", "world record");
    const Json& run = detail::require_key(w, "run", "world record");
    if (!id.is_string() || id.get<std::string>().empty()) throw ModelFormatError("world id must be a nonempty string");
    if (!run.is_string()) throw ModelFormatError("world run must be a string");
    auto r = run_from_name(run.get<std::string>());
    if (!r) throw ModelFormatError("unknown run '" + run.get<std::string>() + "'");
    worlds.push_back({id.get<std::string>(), *r});
  }

  std::vector<std::pair<std::string, std::string>> edges;
  for (const Json& e : je) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ModelFormatError("edge must be a pair of world ids");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return KripkeModel::from_ids(std::move(worlds), edges);
}

inline KripkeModel model_from_json_string(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelFormatError(std::string("malformed JSON: ") + e.what());
  }
  return model_from_json(j);
}

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace detail

inline std::string model_to_dot(const KripkeModel& m, std::string_view name = "M") {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n";
  for (const auto& w : m.worlds())
    os << "  " << detail::dot_quote(w.id) << " [label=" << detail::dot_quote(w.id + ":" + std::string(run_name(w.run)))
       << "];\n";
  for (auto [a, b] : m.edges())
    os << "  " << detail::dot_quote(m.world(a).id) << " -> " << detail::dot_quote(m.world(b).id) << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace surprise

#endif // SURPRISE_MODEL_IO_HPP_
