// Copyright 2026 The hyperwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperwalk/report_json.h"

#include "json.hpp"

namespace hyperwalk {
namespace {

nlohmann::json GroupsToJson(const std::vector<EigenvalueGroup>& groups) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : groups) {
    out.push_back({{"re", g.value.real()},
                   {"im", g.value.imag()},
                   {"multiplicity", g.multiplicity}});
  }
  return out;
}

}  // namespace

std::string SpectralReportToJson(const SpectralReport& report, int indent) {
  nlohmann::json doc;
  doc["n"] = report.num_vertices;
  doc["m"] = report.num_edges;
  doc["k"] = report.edge_size ? nlohmann::json(*report.edge_size) : nullptr;
  doc["d"] = report.degree ? nlohmann::json(*report.degree) : nullptr;
  doc["N"] = report.dimension;
  doc["connected"] = report.connected;
  doc["singular_values"] = report.singular_values;
  nlohmann::json classes = nlohmann::json::array();
  for (SingularClass c : report.classification) {
    classes.push_back(std::string(SingularClassName(c)));
  }
  doc["classification"] = std::move(classes);
  doc["angles"] = report.angles;
  doc["predicted"] = GroupsToJson(report.predicted);
  doc["actual"] =
      report.actual ? GroupsToJson(*report.actual) : nlohmann::json(nullptr);
  doc["max_pairing_distance"] =
      report.max_pairing_distance
          ? nlohmann::json(*report.max_pairing_distance)
          : nlohmann::json(nullptr);
  doc["max_residual"] = report.max_residual;
  doc["deviations"] = report.deviations;
  doc["classification_tolerance"] = report.classification_tolerance;
  doc["verification_tolerance"] = report.verification_tolerance;
  doc["verified"] = report.actual.has_value();
  doc["verdict"] = std::string(VerdictName(report.verdict));
  return doc.dump(indent);
}

}  // namespace hyperwalk
