#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "rankcodes/genweights.hpp"

namespace rankcodes {

using json = nlohmann::json;

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const FieldPtr& f, const json& j);

using AnyCode = std::variant<MatrixCode, VectorCode>;

/// Code file format: kind, field descriptor, n, m, and the basis (matrix
/// kind, flattened rows) or generator (vector kind).
json code_to_json(const MatrixCode& c);
json code_to_json(const VectorCode& c);
json code_to_json(const AnyCode& c);
AnyCode code_from_json(const json& j);

AnyCode load_code(const std::string& path);
void save_code(const AnyCode& c, const std::string& path);

json distribution_to_json(const RankDistribution& d);
std::string distributions_to_csv(const RankDistribution& primal,
                                 const RankDistribution& dual_dist);

json report_to_json(const CodeReport& r);
json profile_to_json(const GenWeightProfile& p);
json checks_to_json(const std::vector<CheckResult>& v);

}  // namespace rankcodes
