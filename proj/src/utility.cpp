#include "adapt/utility.hpp"

#include <algorithm>
#include <cmath>

#include "adapt/errors.hpp"
#include "adapt/rng.hpp"

namespace adapt::utility {

namespace {

double saturating(double raw) { return std::min(raw, 10.0) / 10.0; }

void check_weight_sum(double sum, const char* which) {
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError(std::string(which) + " weights must sum to 1, got " +
                          std::to_string(sum));
}

}  // namespace

double target_value(TargetFactor f, const TargetFactors& v, const ValueTables& t) {
    switch (f) {
        case TargetFactor::Services: return saturating(static_cast<double>(v.num_services));
        case TargetFactor::Vulnerabilities:
            return saturating(std::pow(static_cast<double>(v.num_vulnerabilities), 2.0));
        case TargetFactor::Connections:
            return saturating(std::pow(static_cast<double>(v.num_connections), 1.5));
        case TargetFactor::Exploitation:
            return t.exploitation_state[static_cast<int>(v.exploitation_state)];
    }
    return 0.0;
}

double attack_value(AttackFactor f, const AttackFactors& v, const ValueTables& t) {
    switch (f) {
        case AttackFactor::Vector: return t.attack_vector[static_cast<int>(v.vector)];
        case AttackFactor::Complexity: return t.attack_complexity[static_cast<int>(v.complexity)];
        case AttackFactor::Privileges: return t.attack_privileges[static_cast<int>(v.privileges)];
        case AttackFactor::Interaction:
            return t.attack_interaction[static_cast<int>(v.interaction)];
        case AttackFactor::RunningTime:
            return t.attack_running_time[static_cast<int>(v.running_time)];
    }
    return 0.0;
}

double scan_value(ScanFactor f, const ScanFactors& v, const ValueTables& t) {
    switch (f) {
        case ScanFactor::Range: return t.scan_range[static_cast<int>(v.range)];
        case ScanFactor::Targets: return t.scan_targets[static_cast<int>(v.targets)];
        case ScanFactor::Duration: return t.scan_duration[static_cast<int>(v.duration)];
        case ScanFactor::Complexity: return t.scan_complexity[static_cast<int>(v.complexity)];
    }
    return 0.0;
}

void WeightConfig::validate() const {
    check_weight_sum(target.services + target.vulnerabilities + target.connections +
                         target.exploitation_state,
                     "target");
    check_weight_sum(attack.vector + attack.complexity + attack.privileges + attack.interaction +
                         attack.running_time,
                     "attack");
    check_weight_sum(scan.range + scan.targets + scan.duration + scan.complexity, "scan");
}

double utility(std::span<const double> values, std::span<const double> weights) {
    if (values.size() != weights.size())
        throw ConfigError("utility: weight/value arity mismatch");
    double sum = 0.0;
    for (double w : weights) sum += w;
    check_weight_sum(sum, "option");
    double u = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) u += weights[i] * values[i];
    return u;
}

double target_utility(const TargetFactors& f, const TargetWeights& w, const ValueTables& t) {
    const double values[] = {
        target_value(TargetFactor::Services, f, t),
        target_value(TargetFactor::Vulnerabilities, f, t),
        target_value(TargetFactor::Connections, f, t),
        target_value(TargetFactor::Exploitation, f, t),
    };
    const double weights[] = {w.services, w.vulnerabilities, w.connections, w.exploitation_state};
    return utility(values, weights);
}

double attack_utility(const AttackFactors& f, const AttackWeights& w, const ValueTables& t) {
    const double values[] = {
        attack_value(AttackFactor::Vector, f, t),
        attack_value(AttackFactor::Complexity, f, t),
        attack_value(AttackFactor::Privileges, f, t),
        attack_value(AttackFactor::Interaction, f, t),
        attack_value(AttackFactor::RunningTime, f, t),
    };
    const double weights[] = {w.vector, w.complexity, w.privileges, w.interaction,
                              w.running_time};
    return utility(values, weights);
}

double scan_utility(const ScanFactors& f, const ScanWeights& w, const ValueTables& t) {
    const double values[] = {
        scan_value(ScanFactor::Range, f, t),
        scan_value(ScanFactor::Targets, f, t),
        scan_value(ScanFactor::Duration, f, t),
        scan_value(ScanFactor::Complexity, f, t),
    };
    const double weights[] = {w.range, w.targets, w.duration, w.complexity};
    return utility(values, weights);
}

bool attack_viable(const model::AttackTactic& tactic, const model::PentestState& state) {
    if (tactic.target_component && !state.known_components.contains(*tactic.target_component))
        return false;
    model::IdSet held = state.capabilities;
    for (const auto& step : tactic.steps) {
        if (step.target_interface && !state.known_interfaces.contains(*step.target_interface))
            return false;
        for (const auto& k : step.prereq_capabilities)
            if (!held.contains(k)) return false;
        held.insert(step.granted_capabilities.begin(), step.granted_capabilities.end());
    }
    return true;
}

bool scan_viable(const model::ScanTemplate& scan, const model::PentestState& state) {
    return std::ranges::all_of(scan.prereq_capabilities,
                               [&](const Id& k) { return state.capabilities.contains(k); });
}

namespace {

void sort_ranking(std::vector<RankedEntry>& ranking, std::uint64_t seed) {
    std::sort(ranking.begin(), ranking.end(), [seed](const RankedEntry& a, const RankedEntry& b) {
        if (a.utility != b.utility) return a.utility > b.utility;
        auto ka = rng::tie_key(seed, a.id), kb = rng::tie_key(seed, b.id);
        if (ka != kb) return ka < kb;
        return a.id < b.id;
    });
}

}  // namespace

StrategyMemory memory_update(const StrategyMemory& memory, const knowledge::KnowledgeBase& kb,
                             std::uint64_t seed) {
    StrategyMemory next = memory;
    next.target_ranking.clear();
    next.attack_ranking.clear();
    next.scan_ranking.clear();

    for (const auto& c : kb.available_targets()) {
        double u = target_utility(knowledge::target_factors(kb, c), memory.weights.target,
                                  memory.values);
        if (u > 0.0) next.target_ranking.push_back({c, u});
    }
    for (const auto* a : kb.available_attacks()) {
        if (!attack_viable(*a, kb.state)) continue;
        double u = attack_utility(a->factors, memory.weights.attack, memory.values);
        if (u > 0.0) next.attack_ranking.push_back({a->id, u});
    }
    for (const auto* s : kb.available_scans()) {
        if (!scan_viable(*s, kb.state)) continue;
        double u = scan_utility(s->factors, memory.weights.scan, memory.values);
        if (u > 0.0) next.scan_ranking.push_back({s->id, u});
    }

    sort_ranking(next.target_ranking, seed);
    sort_ranking(next.attack_ranking, seed);
    sort_ranking(next.scan_ranking, seed);
    return next;
}

}  // namespace adapt::utility
