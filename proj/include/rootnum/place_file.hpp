#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rootnum/root_number.hpp"

namespace rootnum {

/// Parsed batch input: one twisting representation, one finite model, and a
/// list of place descriptors.
struct PlaceFile {
  std::string version;
  long genus = 1;
  GroupPtr group;
  TauData tau;
  std::vector<LocalPlace> places;
};

/// Parses and validates a place-descriptor file. Schema violations raise
/// SchemaError with the offending path; group-parameter violations raise
/// InconsistentGroup.
PlaceFile parse_place_file(const std::string& text);

/// Canonical re-emission; emit(parse(f)) is idempotent.
nlohmann::json emit_place_file(const PlaceFile& pf);

nlohmann::json trace_factor_json(const TraceFactor& f);
nlohmann::json sign_trace_json(const SignTrace& t);

/// Trace file: per-place records, the global product, and the verdict. The
/// product field is recomputed from the place signs as a self-check.
nlohmann::json trace_file_json(const std::vector<SignTrace>& traces,
                               Sign product, const std::string& verdict,
                               const std::string& failed_condition,
                               const std::string& note);

nlohmann::json ledger_json(const GrothendieckLedger& ledger);
GrothendieckLedger ledger_from_json(const nlohmann::json& j, GroupPtr group,
                                    const std::string& path);

nlohmann::json weil_irred_json(const WeilIrred& w);
nlohmann::json wdrep_json(const WDRep& rep);

}  // namespace rootnum
