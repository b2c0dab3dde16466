#pragma once

#include <filesystem>

#include <json.hpp>

#include "pcf/classifiers.hpp"
#include "pcf/dataset.hpp"
#include "pcf/density.hpp"
#include "pcf/engine.hpp"
#include "pcf/pca.hpp"
#include "pcf/solver.hpp"

namespace pcf {

using Json = nlohmann::json;

// Matrices are {"rows", "cols", "data"} with data in row-major order; vectors
// are plain arrays. Doubles use the shortest representation that round-trips.
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

Json to_json(const AffineMap& map);
AffineMap affine_map_from_json(const Json& j);

Json to_json(const FoldPlan& plan);
FoldPlan fold_plan_from_json(const Json& j);

Json to_json(const SoftmaxModel& model);
Json to_json(const TreeModel& model);
Json to_json(const Classifier& model);
Classifier classifier_from_json(const Json& j);

Json to_json(const GaussianComponent& comp);
Json to_json(const ClassGmm& gmm);
ClassGmm gmm_from_json(const Json& j);

Json to_json(const ClassKde& kde);
ClassKde kde_from_json(const Json& j);

Json to_json(const DensityThreshold& threshold);
DensityThreshold threshold_from_json(const Json& j);

Json to_json(const ObjectiveSpec& objective);
ObjectiveSpec objective_from_json(const Json& j);

Json to_json(const CounterfactualRequest& req);
Json to_json(const PlausibilityAudit& audit);
Json to_json(const CounterfactualResult& result);
Json to_json(const IndependenceReport& report);

// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
// Throws IngestionError naming the path on a missing or malformed file.
Json read_json_file(const std::filesystem::path& path);

}  // namespace pcf
