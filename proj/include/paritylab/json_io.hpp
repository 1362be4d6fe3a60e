// Copyright 2026 The ParityLab Authors
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

#include <json.hpp>

#include "paritylab/characters.hpp"
#include "paritylab/gme.hpp"
#include "paritylab/parity.hpp"
#include "paritylab/state.hpp"

namespace paritylab {

// ordered_json keeps key order fixed, so identical runs emit identical bytes.
using json = nlohmann::ordered_json;

json cyclo_to_json(const Cyclo &c);
Cyclo cyclo_from_json(const json &j);

json state_to_json(const StateVector &s);
StateVector state_from_json(const json &j);

json table_to_json(const CharacterTable &t);

json tableaux_to_json(const std::vector<StandardTableau> &ts);
json tableaux_to_json(const std::vector<SemiStandardTableau> &ts);

json recipe_to_json(const ParityRecipe &r);
ParityRecipe recipe_from_json(const json &j);

json parity_check_to_json(const ParityCheck &c);
json simulation_to_json(const SimulationReport &r, bool include_log = false);
json gme_to_json(const GmeResult &r, std::uint64_t seed);
json audit_to_json(const SchurWeylAudit &a);
json mechanisms_to_json(const MechanismReport &m);

}  // namespace paritylab
