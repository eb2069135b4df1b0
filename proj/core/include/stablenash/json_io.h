// Copyright 2026 The stablenash Authors
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

// JSON forms of games, profiles and every report type.
//
// Game:     {"rows": n, "cols": m, "R": [[...]], "C": [[...]], "range": [lo, hi]}
// Profile:  {"p": [...], "q": [...]}
// Embedded: a game object plus "eps", "delta", "source_shape".
//
// Objects are key-sorted, so equal inputs serialize to equal bytes.

#ifndef STABLENASH_JSON_IO_H_
#define STABLENASH_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "stablenash/constant_sum.h"
#include "stablenash/embedding.h"
#include "stablenash/exact_nash.h"
#include "stablenash/game.h"
#include "stablenash/stability.h"
#include "stablenash/support_search.h"

namespace stablenash {

using Json = nlohmann::json;

// Parsers throw ShapeError (a ValidationError) on schema violations.
Json ToJson(const BimatrixGame& game);
BimatrixGame GameFromJson(const Json& j);

Json ToJson(const MixedStrategy& x);
Json ToJson(const StrategyProfile& profile);
StrategyProfile ProfileFromJson(const Json& j, const Tolerances& tol = {});

Json ToJson(const EmbeddedGame& embedded);
EmbeddedGame EmbeddedGameFromJson(const Json& j);

Json ToJson(const RegretReport& report);
Json ToJson(const EquilibriumSet& set);
Json ToJson(const SearchResult& result);
Json ToJson(const HeavyLightSplit& split);
Json ToJson(const CompressionResult& result);
Json ToJson(const StabilityReport& report);
Json ToJson(const ProbeReport& report);
Json ToJson(const MinimaxSolution& solution);
Json ToJson(const StrongStabilityCertificate& cert);
Json ToJson(const WellSupportedCertificate& cert);
Json ToJson(const ExtractionResult& result);

}  // namespace stablenash

#endif  // STABLENASH_JSON_IO_H_
