#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "spread/extremal.hpp"
#include "spread/lemmas.hpp"
#include "spread/verifier.hpp"

namespace spread {

/// Timing fields are written as null unless `timing` is set, so identical runs
/// serialize byte for byte.
nlohmann::json to_json(const SearchOutcome& o, bool timing = false);
nlohmann::json to_json(const VerificationReport& r, bool timing = false);
nlohmann::json to_json(const ExtremalBlueprint& bp);
nlohmann::json to_json(const FamilyOutcome& f, bool timing = false);
nlohmann::json to_json(const BlockFamilySpec& spec);
nlohmann::json to_json(const SuiteResult& s);
nlohmann::json to_json(const GroupProfile& p);

inline constexpr const char* kCsvHeader = "n,k,f0,min_h,holds,nodes,ms";

/// One CSV row (no newline); ms is left empty unless `timing` is set.
std::string to_csv_row(const VerificationEntry& e, bool timing = false);

/// Reads rows written by to_csv_row (header optional). Witnesses are not
/// stored in CSV, so restored entries carry none.
std::vector<VerificationEntry> read_csv_entries(std::istream& in);

}  // namespace spread
