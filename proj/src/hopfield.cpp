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

#include "qorder/hopfield.hpp"

#include <random>
#include <string>

#include "qorder/conversions.hpp"

namespace qorder {

namespace {

Vector to_vector(std::span<const int> s) {
    Vector v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] != -1 && s[k] != 1) {
            throw DomainError("entry " + std::to_string(k) + " is not bipolar");
        }
        v[static_cast<Eigen::Index>(k)] = s[k];
    }
    return v;
}

void check_dimension(const HopfieldInstance& inst, std::size_t size) {
    if (size != inst.dimension()) {
        throw DimensionMismatch("state has length " + std::to_string(size) +
                                ", network has " + std::to_string(inst.dimension()) + " neurons");
    }
}

BipolarState random_state(std::size_t n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    BipolarState s(n);
    for (auto& v : s) v = coin(rng) ? 1 : -1;
    return s;
}

// One descent run from `start`.
SolveResult descend(const HopfieldInstance& inst, BipolarState start, int max_steps) {
    const auto& W = inst.W();
    const auto& theta = inst.theta();
    const auto n = static_cast<Eigen::Index>(inst.dimension());

    SolveResult result;
    result.state = std::move(start);
    auto& s = result.state;
    auto& trace = result.trace;

    Vector sv = to_vector(s);
    Vector field = W * sv;
    double e = -0.5 * sv.dot(field) + theta.dot(sv);
    trace.steps.push_back({0, s, e});

    while (true) {
        Eigen::Index best = -1;
        double best_gain = -kDescentTolerance;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double gain = 2.0 * s[i] * (field[i] - theta[i]);
            if (gain < best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best < 0) {
            trace.converged = true;
            trace.steps.push_back({trace.flips + 1, s, e});
            return result;
        }
        if (trace.flips >= max_steps) {
            throw MaxStepsExceeded("no convergence within " + std::to_string(max_steps) +
                                   " flips");
        }
        field += W.col(best) * (-2.0 * s[best]);
        s[best] = -s[best];
        e += best_gain;
        ++trace.flips;
        trace.steps.push_back({trace.flips, s, e});
    }
}

}  // namespace

void SolverConfig::validate(std::size_t dimension) const {
    if (max_steps && *max_steps < 1) throw InvalidConfig("max_steps must be at least 1");
    if (restarts < 0) throw InvalidConfig("restarts must be non-negative");
    if (initial == InitialState::given) {
        if (given_state.size() != dimension) {
            throw InvalidConfig("given initial state has length " +
                                std::to_string(given_state.size()) + ", expected " +
                                std::to_string(dimension));
        }
        for (int v : given_state) {
            if (v != -1 && v != 1) throw InvalidConfig("given initial state is not bipolar");
        }
    }
}

double energy(const HopfieldInstance& inst, std::span<const int> s) {
    check_dimension(inst, s.size());
    const Vector sv = to_vector(s);
    return -0.5 * sv.dot(inst.W() * sv) + inst.theta().dot(sv);
}

double flip_gain(const HopfieldInstance& inst, std::span<const int> s, std::size_t i) {
    check_dimension(inst, s.size());
    if (i >= s.size()) {
        throw IndexOutOfRange("neuron " + std::to_string(i) + " out of range for " +
                              std::to_string(s.size()) + " neurons");
    }
    const auto row = inst.W().row(static_cast<Eigen::Index>(i));
    double field = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) field += row[static_cast<Eigen::Index>(j)] * s[j];
    return 2.0 * s[i] * (field - inst.theta()[static_cast<Eigen::Index>(i)]);
}

SolveResult solve(const HopfieldInstance& inst, const SolverConfig& cfg,
                  const FeasibilityCheck& feasible) {
    const std::size_t n = inst.dimension();
    cfg.validate(n);
    const int budget = cfg.max_steps.value_or(static_cast<int>(n * n));
    std::mt19937_64 rng(cfg.seed);

    BipolarState start;
    switch (cfg.initial) {
        case InitialState::all_inactive: start.assign(n, -1); break;
        case InitialState::given: start = cfg.given_state; break;
        case InitialState::random: start = random_state(n, rng); break;
    }

    SolveResult result = descend(inst, std::move(start), budget);
    if (!feasible) return result;
    result.feasible = feasible(result.state);
    for (int restart = 0; restart < cfg.restarts && !result.feasible; ++restart) {
        const int attempts = result.attempts + 1;
        result = descend(inst, random_state(n, rng), budget);
        result.attempts = attempts;
        result.feasible = feasible(result.state);
    }
    return result;
}

bool decodes_to_permutation(std::span<const int> s) {
    try {
        (void)decode_permutation(bipolar_to_binary(s));
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace qorder
