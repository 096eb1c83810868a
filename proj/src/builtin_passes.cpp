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

#include <algorithm>

#include "qprof/errors.hpp"
#include "qprof/passes.hpp"

namespace qprof {

namespace {

using namespace pass_names;

PassRegistry make_builtin_registry() {
  const auto A = PassKind::kAnalysis;
  const auto T = PassKind::kTransformation;
  PassRegistry r;
  r.add({kTrivialLayout, A, "layout", {Stage::kLayout}});
  r.add({kVF2Layout, A, "layout", {Stage::kLayout}});
  r.add({kSwapRoute, T, "routing", {Stage::kRouting}});
  r.add({kPreExpandBoxes, T, "synthesis", {Stage::kInitialization}});
  r.add({kHighLevelSynthesis,
         T,
         "synthesis",
         {Stage::kInitialization, Stage::kTranslation}});
  r.add({kBasisTranslate, T, "basis", {Stage::kTranslation}});
  r.add({kInverseCancellation, T, "optimization", {Stage::kOptimization}});
  r.add({kOptimize1QGates, T, "optimization", {Stage::kOptimization}});
  r.add({kFixedPoint, T, "utils", {Stage::kOptimization}});
  r.add({kMinimumPoint, T, "utils", {Stage::kOptimization}});
  r.add({kASAPSchedule, T, "scheduling", {Stage::kScheduling}});
  return r;
}

class TrivialLayoutPass final : public Pass {
 public:
  TrivialLayoutPass() : Pass(builtin_descriptor(kTrivialLayout)) {}

 protected:
  // Fallback: only assigns when no earlier pass chose a layout.
  void run(Circuit& circuit, PassContext& ctx) const override {
    if (ctx.properties.get<Layout>(props::kLayout)) return;
    ctx.properties.set(props::kLayout, trivial_layout(circuit, ctx.target));
  }
};

class VF2LayoutPass final : public Pass {
 public:
  explicit VF2LayoutPass(const Vf2Budget& budget)
      : Pass(builtin_descriptor(kVF2Layout)), budget_(budget) {}

 protected:
  void run(Circuit& circuit, PassContext& ctx) const override {
    Vf2LayoutResult r = vf2_layout(circuit, ctx.target, budget_);
    ctx.properties.set(props::kVf2States,
                       static_cast<std::int64_t>(r.states_visited));
    ctx.properties.set(props::kVf2Found, r.layout.has_value());
    if (r.layout) ctx.properties.set(props::kLayout, std::move(*r.layout));
  }

 private:
  Vf2Budget budget_;
};

class SwapRoutePass final : public Pass {
 public:
  SwapRoutePass() : Pass(builtin_descriptor(kSwapRoute)) {}

 protected:
  void run(Circuit& circuit, PassContext& ctx) const override {
    const Layout* layout = ctx.properties.get<Layout>(props::kLayout);
    if (!layout) {
      throw InvalidArgument("no layout chosen; run a layout pass first");
    }
    RoutingResult r = swap_route(circuit, *layout, ctx.target);
    ctx.properties.set(props::kLayout, std::move(r.layout));
    circuit = std::move(r.circuit);
  }
};

class BoxExpansionPass final : public Pass {
 public:
  explicit BoxExpansionPass(const char* name)
      : Pass(builtin_descriptor(name)) {}

 protected:
  void run(Circuit& circuit, PassContext&) const override {
    const auto& ops = circuit.instructions();
    const bool boxed = std::any_of(ops.begin(), ops.end(), [](const auto& op) {
      return op.type == GateType::BOX;
    });
    if (boxed) circuit = high_level_synthesis(circuit);
  }
};

class BasisTranslatePass final : public Pass {
 public:
  BasisTranslatePass() : Pass(builtin_descriptor(kBasisTranslate)) {}

 protected:
  void run(Circuit& circuit, PassContext& ctx) const override {
    circuit = basis_translate(circuit, ctx.target);
  }
};

class InverseCancellationPass final : public Pass {
 public:
  InverseCancellationPass() : Pass(builtin_descriptor(kInverseCancellation)) {}

 protected:
  void run(Circuit& circuit, PassContext&) const override {
    circuit = inverse_cancellation(circuit);
  }
};

class Optimize1QGatesPass final : public Pass {
 public:
  Optimize1QGatesPass() : Pass(builtin_descriptor(kOptimize1QGates)) {}

 protected:
  // Output gates are RZ/SX/X; skip targets that cannot run them.
  void run(Circuit& circuit, PassContext& ctx) const override {
    const Target& t = ctx.target;
    if (!t.in_basis("RZ") || !t.in_basis("SX") || !t.in_basis("X")) return;
    circuit = optimize_1q_gates(circuit);
  }
};

class ASAPSchedulePass final : public Pass {
 public:
  ASAPSchedulePass() : Pass(builtin_descriptor(kASAPSchedule)) {}

 protected:
  void run(Circuit& circuit, PassContext& ctx) const override {
    Schedule s = asap_schedule(circuit, ctx.target);
    ctx.properties.set(props::kScheduleStart,
                       std::vector<std::int64_t>(s.start_times.begin(),
                                                 s.start_times.end()));
    ctx.properties.set(props::kScheduleDuration,
                       static_cast<std::int64_t>(s.total));
    circuit = std::move(s.circuit);
  }
};

}  // namespace

const PassRegistry& PassRegistry::builtin() {
  static const PassRegistry registry = make_builtin_registry();
  return registry;
}

const PassDescriptor& builtin_descriptor(const std::string& name) {
  return PassRegistry::builtin().at(name);
}

TaskPtr make_trivial_layout() { return std::make_shared<TrivialLayoutPass>(); }
TaskPtr make_vf2_layout(const Vf2Budget& budget) {
  return std::make_shared<VF2LayoutPass>(budget);
}
TaskPtr make_swap_route() { return std::make_shared<SwapRoutePass>(); }
TaskPtr make_pre_expand_boxes() {
  return std::make_shared<BoxExpansionPass>(kPreExpandBoxes);
}
TaskPtr make_high_level_synthesis() {
  return std::make_shared<BoxExpansionPass>(kHighLevelSynthesis);
}
TaskPtr make_basis_translate() {
  return std::make_shared<BasisTranslatePass>();
}
TaskPtr make_inverse_cancellation() {
  return std::make_shared<InverseCancellationPass>();
}
TaskPtr make_optimize_1q_gates() {
  return std::make_shared<Optimize1QGatesPass>();
}
TaskPtr make_asap_schedule() { return std::make_shared<ASAPSchedulePass>(); }

}  // namespace qprof
