#include "spread/report.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace spread {
namespace {

nlohmann::json timing_value(double ms, bool timing) {
  if (!timing) return nullptr;
  return static_cast<std::int64_t>(ms + 0.5);
}

nlohmann::json sequence_json(const DegreeSequence& d) {
  return nlohmann::json(std::vector<int>(d.values().begin(), d.values().end()));
}

nlohmann::json part_json(const PartChoice& c) {
  nlohmann::json j{{"kind", to_string(c.kind)}};
  if (c.kind == PartKind::threshold) j["parameter"] = c.parameter;
  return j;
}

}  // namespace

nlohmann::json to_json(const SearchOutcome& o, bool timing) {
  const Count bound = f0(o.n, o.k);
  nlohmann::json j;
  j["n"] = o.n;
  j["k"] = o.k;
  j["f0"] = bound;
  j["min_h"] = o.min_h ? nlohmann::json(*o.min_h) : nlohmann::json(nullptr);
  j["conjecture_holds"] = conjecture_holds(o, bound);
  auto& w = j["witnesses"] = nlohmann::json::array();
  for (const auto& seq : o.witnesses) w.push_back(sequence_json(seq));
  j["nodes_visited"] = o.nodes_visited;
  j["exhausted"] = o.exhausted;
  j["wall_time_ms"] = timing_value(o.wall_time_ms, timing);
  return j;
}

nlohmann::json to_json(const VerificationReport& r, bool timing) {
  nlohmann::json j;
  j["n_max"] = r.n_max;
  j["k"] = r.k_filter ? nlohmann::json(*r.k_filter) : nlohmann::json(nullptr);
  auto& entries = j["entries"] = nlohmann::json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e.outcome, timing));
  j["totals"] = {{"entries", r.totals.entries},
                 {"holds", r.totals.holds},
                 {"counterexamples", r.totals.counterexamples},
                 {"incomplete", r.totals.incomplete},
                 {"nodes", r.totals.nodes}};
  j["complete"] = r.complete();
  j["all_hold"] = r.all_hold();
  return j;
}

nlohmann::json to_json(const ExtremalBlueprint& bp) {
  return {{"n", bp.params.n},
          {"k", bp.params.k},
          {"i", bp.params.i},
          {"t", bp.params.t},
          {"group_sizes", bp.group_sizes},
          {"f0", f0(bp.params.n, bp.params.k)}};
}

nlohmann::json to_json(const BlockFamilySpec& spec) {
  return {{"sizes", spec.sizes},
          {"b3_interior", part_json(spec.b3_interior)},
          {"b2_b4", part_json(spec.b2_b4)},
          {"b4_b5", part_json(spec.b4_b5)},
          {"b1_b5", part_json(spec.b1_b5)}};
}

nlohmann::json to_json(const FamilyOutcome& f, bool timing) {
  auto j = to_json(f.outcome, timing);
  j.erase("conjecture_holds");
  j["family_min_at_least_f0"] = f.outcome.min_h && *f.outcome.min_h >= f0(f.outcome.n, f.outcome.k);
  j["best"] = f.best ? to_json(*f.best) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SuiteResult& s) {
  return {{"lemma", s.lemma},
          {"trials", s.trials},
          {"checked", s.checked},
          {"rejected", s.rejected},
          {"violations", s.violations},
          {"holds", s.violations == 0},
          {"first_violation", s.first_violation.empty() ? nlohmann::json(nullptr) : nlohmann::json(s.first_violation)}};
}

nlohmann::json to_json(const GroupProfile& p) {
  return {{"n", p.params.n}, {"k", p.params.k}, {"i", p.params.i}, {"t", p.params.t},
          {"x", p.x},        {"p1", p.p1},      {"p2", p.p2}};
}

std::string to_csv_row(const VerificationEntry& e, bool timing) {
  std::ostringstream out;
  out << e.n << ',' << e.k << ',' << e.f0 << ',';
  if (e.outcome.min_h) out << *e.outcome.min_h;
  out << ',' << (e.conjecture_holds ? "true" : "false") << ',' << e.outcome.nodes_visited << ',';
  if (timing) out << static_cast<std::int64_t>(e.outcome.wall_time_ms + 0.5);
  return out.str();
}

std::vector<VerificationEntry> read_csv_entries(std::istream& in) {
  std::vector<VerificationEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kCsvHeader) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (cells.size() != 7) throw std::invalid_argument("csv line " + std::to_string(lineno) + ": expected 7 columns");
    try {
      VerificationEntry e;
      e.n = std::stoi(cells[0]);
      e.k = std::stoi(cells[1]);
      e.f0 = std::stoll(cells[2]);
      e.outcome.n = e.n;
      e.outcome.k = e.k;
      if (!cells[3].empty()) e.outcome.min_h = std::stoll(cells[3]);
      e.conjecture_holds = cells[4] == "true";
      e.outcome.nodes_visited = std::stoull(cells[5]);
      if (!cells[6].empty()) e.outcome.wall_time_ms = std::stod(cells[6]);
      // The row format has no exhausted column; a row is final when it holds or
      // records a value below f0.
      e.outcome.exhausted = e.conjecture_holds || (e.outcome.min_h && *e.outcome.min_h < e.f0);
      out.push_back(std::move(e));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("csv line " + std::to_string(lineno) + ": malformed number");
    }
  }
  return out;
}

}  // namespace spread
