// Copyright 2026 The Pulseforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "json.hpp"

#include "pulseforge/designs.hpp"
#include "pulseforge/graphcolor.hpp"
#include "pulseforge/harmonic.hpp"
#include "pulseforge/netham.hpp"
#include "pulseforge/scheme.hpp"
#include "pulseforge/signs.hpp"

// JSON documents for every persisted type. Readers validate and throw
// std::invalid_argument; writers emit the shortest round-tripping doubles.
namespace pulseforge::io {

using nlohmann::json;

json to_json(const designs::OrthogonalArray& oa);
json to_json(const designs::DifferenceScheme& ds);
designs::OrthogonalArray oa_from_json(const json& j);
designs::DifferenceScheme ds_from_json(const json& j);

/// J is written flat, row-major; the reader also takes nested rows.
json to_json(const netham::PairHamiltonian& model);
netham::PairHamiltonian model_from_json(const json& j);

json to_json(const scheme::PulseScheme& sch);
scheme::PulseScheme scheme_from_json(const json& j);

json to_json(const harmonic::PhaseScheme& ps);
harmonic::PhaseScheme phase_scheme_from_json(const json& j);

json to_json(const harmonic::GramSynthesisReport& report);

/// Edges as [k, l] or [k, l, weight], 0-based.
json to_json(const graphcolor::InteractionGraph& g);
graphcolor::InteractionGraph graph_from_json(const json& j);

json to_json(const signs::SignTriple& st);
signs::SignTriple signs_from_json(const json& j);

json matrix_to_json(const RMatrix& M);
RMatrix matrix_from_json(const json& j, const std::string& what);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace pulseforge::io
