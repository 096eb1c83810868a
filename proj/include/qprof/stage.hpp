// Copyright 2026 The qprof Authors
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

#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace qprof {

/// Pipeline phases, in execution order.
enum class Stage {
  kInitialization,
  kLayout,
  kRouting,
  kTranslation,
  kOptimization,
  kScheduling,
};

inline constexpr std::array<Stage, 6> kAllStages = {
    Stage::kInitialization, Stage::kLayout,       Stage::kRouting,
    Stage::kTranslation,    Stage::kOptimization, Stage::kScheduling};

std::string_view stage_name(Stage stage);
std::optional<Stage> stage_from_name(std::string_view name);

}  // namespace qprof
