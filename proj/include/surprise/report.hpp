// surprise :: text and JSON renderings of analysis results

#ifndef SURPRISE_REPORT_HPP_
#define SURPRISE_REPORT_HPP_

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "surprise/analysis.hpp"
#include "surprise/model_io.hpp"
#include "surprise/run.hpp"

namespace surprise {

inline Json run_set_json(RunSet s) {
  Json out = Json::array();
  for (Run r : s) out.push_back(std::string(run_name(r)));
  return out;
}

inline Json law_report_json(const LawReport& r) {
  Json fps = Json::array();
  for (RunSet k : r.fixed_points) fps.push_back(run_set_json(k));
  return {{"law", run_set_json(r.law)},
          {"case", std::string(law_case_name(r.case_tag))},
          {"fixed_points", std::move(fps)},
          {"surprising", run_set_json(r.surprising)},
          {"rational_choices", run_set_json(r.rational_choices)}};
}

inline std::string law_report_text(const LawReport& r) {
  std::ostringstream os;
  os << "law               " << r.law.to_string() << "\n";
  os << "case              " << law_case_name(r.case_tag) << "\n";
  os << "fixed points     ";
  for (RunSet k : r.fixed_points) os << " " << k.to_string();
  os << "\n";
  os << "surprising        " << r.surprising.to_string() << "\n";
  os << "rational choices  " << r.rational_choices.to_string() << "\n";
  return os.str();
}

inline std::string_view system_case_name(SystemCase c) { return c == SystemCase::AtLeastTwo ? "|K|>=2" : "|K|<=1"; }

inline Json enumeration_json(const std::vector<AxiomSystemRecord>& recs) {
  Json out = Json::array();
  for (const auto& r : recs)
    out.push_back({{"knowledge", run_set_json(r.knowledge)},
                   {"surprising", run_set_json(r.surprising)},
                   {"tau", r.tau},
                   {"case", std::string(system_case_name(r.case_tag))},
                   {"case_holds", r.case_holds}});
  return out;
}

inline std::string enumeration_text(const std::vector<AxiomSystemRecord>& recs) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-4s %-22s %-20s %-5s %-7s %s\n", "#", "knowledge", "surprising", "tau", "case",
                "holds");
  os << line;
  int i = 0;
  for (const auto& r : recs) {
    std::snprintf(line, sizeof line, "%-4d %-22s %-20s %-5s %-7s %s\n", i++, r.knowledge.to_string().c_str(),
                  r.surprising.to_string().c_str(), r.tau ? "true" : "false",
                  std::string(system_case_name(r.case_tag)).c_str(), r.case_holds ? "yes" : "no");
    os << line;
  }
  return os.str();
}

} // namespace surprise

#endif // SURPRISE_REPORT_HPP_
