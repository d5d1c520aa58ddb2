#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "implab/decisive.hpp"
#include "implab/fixed_point.hpp"
#include "implab/games.hpp"
#include "implab/prefs.hpp"
#include "implab/scf.hpp"
#include "implab/sperner.hpp"

// Readers throw InputError on anything malformed; writers are deterministic
// (keys sorted, same document every run). Rankings appear as arrays of
// alternative names, best first; each document carries the name list once
// under "alternatives".
namespace implab {

using Json = nlohmann::json;

Json ranking_to_json(const Ranking& r, const std::vector<std::string>& names);
Ranking ranking_from_json(const Json& j, const std::vector<std::string>& names);
Json profile_to_json(const Profile& p, const std::vector<std::string>& names);
Profile profile_from_json(const Json& j, const std::vector<std::string>& names);

Json rule_to_json(const ScfRule& rule, const std::vector<std::string>& names = {});
ScfRule rule_from_json(const Json& j);

Json axiom_report_to_json(const AxiomReport& report,
                          const std::vector<std::string>& names = {});
AxiomReport axiom_report_from_json(const Json& j);

Json certificate_to_json(const DecisiveCertificate& cert,
                         const std::vector<std::string>& names = {});
DecisiveCertificate certificate_from_json(const Json& j);

// Labels are written 0-based; files may declare "labels_base": 1 instead.
Json triangulation_to_json(const Triangulation& t, const Labeling* labels = nullptr);

struct TriangulationData {
  Triangulation triangulation;
  std::optional<Labeling> labels;
};
TriangulationData triangulation_from_json(const Json& j);

Json game_result_to_json(const GameResult& res);
GameResult game_result_from_json(const Json& j, const Triangulation& t);

Json transcript_to_json(const GameTranscript& tr,
                        const std::vector<std::string>& names = {});
GameTranscript transcript_from_json(const Json& j);

Json fixed_point_to_json(const FixedPointResult& res);
FixedPointResult fixed_point_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace implab
