// Copyright 2026 The qorder Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "qorder/core.hpp"

namespace qorder {

/// Flips whose gain is not below -kDescentTolerance are treated as non-improving.
inline constexpr double kDescentTolerance = 1e-10;

enum class InitialState { all_inactive, given, random };

struct SolverConfig {
    InitialState initial = InitialState::all_inactive;
    /// Used when initial == InitialState::given.
    BipolarState given_state;
    /// Flip budget per run; N^2 when unset.
    std::optional<int> max_steps;
    /// Extra runs from seeded random states when the feasibility check fails.
    int restarts = 0;
    std::uint64_t seed = 0;

    /// Throws InvalidConfig.
    void validate(std::size_t dimension) const;
};

using FeasibilityCheck = std::function<bool(std::span<const int>)>;

struct SolveResult {
    BipolarState state;
    /// Trace of the run that produced `state`.
    SolverTrace trace;
    /// Number of runs performed, 1 + restarts used.
    int attempts = 1;
    /// Result of the feasibility check on `state`; true when no check was given.
    bool feasible = true;
};

/// -1/2 s^T W s + <theta, s>. Throws DimensionMismatch or DomainError.
double energy(const HopfieldInstance& inst, std::span<const int> s);

/// E(s with s_i negated) - E(s) in O(N). Throws IndexOutOfRange.
double flip_gain(const HopfieldInstance& inst, std::span<const int> s, std::size_t i);

/// Steepest energy descent: every step flips the coordinate with the most
/// negative gain (lowest index on ties) until no flip improves the energy.
///
/// The trace holds the initial state, one row per flip, and a final repeat
/// of the stable state. Throws MaxStepsExceeded if a run does not settle
/// within its flip budget.
///
/// If `feasible` is given and rejects the converged state, up to
/// cfg.restarts further runs start from random states drawn from cfg.seed.
SolveResult solve(const HopfieldInstance& inst, const SolverConfig& cfg,
                  const FeasibilityCheck& feasible = {});

/// Feasibility check that accepts states decoding to a permutation matrix.
bool decodes_to_permutation(std::span<const int> s);

}  // namespace qorder
