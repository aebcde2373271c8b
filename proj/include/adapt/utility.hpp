#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adapt/knowledge.hpp"

namespace adapt::utility {

using model::Id;

enum class TargetFactor { Services, Vulnerabilities, Connections, Exploitation };
enum class AttackFactor { Vector, Complexity, Privileges, Interaction, RunningTime };
enum class ScanFactor { Range, Targets, Duration, Complexity };

// Normalized value functions per factor. The shipped defaults are the tool's
// standard tables; the categorical case values can be overridden from the
// run configuration. Count factors are fixed-shape saturating curves:
// services min(S,10)/10, vulnerabilities min(V^2,10)/10, connections
// min(C^1.5,10)/10.
struct ValueTables {
    // indexed by ExploitationState: None, Initial, Elevated, C2C
    std::array<double, 4> exploitation_state{0.73, 0.9, 1.0, 0.23};

    // indexed by AttackVector: Network, Adjacent, Local, Physical
    std::array<double, 4> attack_vector{1.0, 0.73, 0.64, 0.23};
    // Low, High
    std::array<double, 2> attack_complexity{1.0, 0.57};
    // None, Low, High
    std::array<double, 3> attack_privileges{1.0, 0.73, 0.32};
    // None, Required
    std::array<double, 2> attack_interaction{1.0, 0.73};
    // Quick, Medium, Long, Guessing
    std::array<double, 4> attack_running_time{1.0, 0.73, 0.31, 0.12};

    // Network, Host, Local
    std::array<double, 3> scan_range{1.0, 0.73, 0.32};
    // Network, Multiple, One
    std::array<double, 3> scan_targets{1.0, 0.73, 0.32};
    // Quick, Medium, Long, Guessing
    std::array<double, 4> scan_duration{1.0, 0.73, 0.31, 0.12};
    // Low, High
    std::array<double, 2> scan_complexity{1.0, 0.73};
};

double target_value(TargetFactor f, const TargetFactors& v, const ValueTables& t = {});
double attack_value(AttackFactor f, const AttackFactors& v, const ValueTables& t = {});
double scan_value(ScanFactor f, const ScanFactors& v, const ValueTables& t = {});

// Per-category factor weights; each vector must sum to 1.
struct TargetWeights {
    double services = 0.2, vulnerabilities = 0.2, connections = 0.2, exploitation_state = 0.4;
};
struct AttackWeights {
    double vector = 0.3, complexity = 0.2, privileges = 0.2, interaction = 0.1,
           running_time = 0.2;
};
struct ScanWeights {
    double range = 0.25, targets = 0.25, duration = 0.25, complexity = 0.25;
};

struct WeightConfig {
    TargetWeights target;
    AttackWeights attack;
    ScanWeights scan;

    // ConfigError unless every weight vector sums to 1 within 1e-9.
    void validate() const;
};

// Weighted sum of per-factor values (the option utility). The weights must
// sum to 1 within 1e-9; values in [0,1] yield a utility in [0,1].
double utility(std::span<const double> values, std::span<const double> weights);

double target_utility(const TargetFactors& f, const TargetWeights& w, const ValueTables& t = {});
double attack_utility(const AttackFactors& f, const AttackWeights& w, const ValueTables& t = {});
double scan_utility(const ScanFactors& f, const ScanWeights& w, const ValueTables& t = {});

// An attack is viable when every step can be driven from current knowledge:
// target interfaces known, target component known, and each step's
// prerequisites covered by K plus grants of earlier steps.
bool attack_viable(const model::AttackTactic& tactic, const model::PentestState& state);
// A scan is viable when its prerequisite capabilities are held.
bool scan_viable(const model::ScanTemplate& scan, const model::PentestState& state);

struct RankedEntry {
    Id id;
    double utility = 0.0;

    bool operator==(const RankedEntry&) const = default;
};

// Strategy memory: weights, value registries, and the current rankings.
struct StrategyMemory {
    WeightConfig weights;
    ValueTables values;
    std::vector<RankedEntry> target_ranking;  // U_C
    std::vector<RankedEntry> attack_ranking;  // U_A
    std::vector<RankedEntry> scan_ranking;    // U_S
};

// Recomputes the three rankings over exactly the available targets, attacks
// and scans. Entries that are not viable or have zero utility are dropped;
// the rest are sorted by decreasing utility with seeded random tie-breaking.
// Weights and value registries pass through unchanged.
StrategyMemory memory_update(const StrategyMemory& memory, const knowledge::KnowledgeBase& kb,
                             std::uint64_t seed);

}  // namespace adapt::utility
