#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adapt/model.hpp"

namespace adapt::knowledge {

using model::Id;
using model::IdSet;

// What the tester knows about a capability it may gain: which component it
// belongs to, the access level it represents on that component, and whether
// it is plumbing that should stay out of exploitation graphs.
struct CapabilityMeta {
    std::optional<Id> component;
    ExploitationState level = ExploitationState::None;
    bool hidden = false;
    std::string description;
};

struct ComponentFinding {
    Id id;
    std::map<std::string, std::string> properties;
};

struct InterfaceFinding {
    Id id;
    Id component;
    IdSet vulnerabilities;
    std::map<std::string, std::string> properties;
};

// Result payload of a completed action: newly observed components and
// interfaces, gained capabilities, and observed interactions.
struct Findings {
    std::vector<ComponentFinding> components;
    std::vector<InterfaceFinding> interfaces;
    IdSet capabilities;
    std::vector<model::Interaction> interactions;

    bool empty() const {
        return components.empty() && interfaces.empty() && capabilities.empty() &&
               interactions.empty();
    }
};

enum class EventKind {
    ScanStarted,
    ScanCompleted,
    AttackStarted,
    AttackSucceeded,
    AttackFailed,
    TargetEngaged,
    TargetReleased,
    TargetExploited,
};

std::string to_string(EventKind k);
EventKind event_kind_from(const std::string& s);

struct Event {
    EventKind kind;
    Id subject;                      // scan / tactic / component id
    Findings findings;               // completions: results (capabilities = grants)
    std::size_t steps_succeeded = 0; // attack completions
};

// The tester's architectural model of the target, grown from findings.
struct ArchView {
    std::map<Id, std::map<std::string, std::string>> components;
    std::map<Id, InterfaceFinding> interfaces;
    std::set<model::Interaction> interactions;
    std::map<Id, ExploitationState> exploitation;

    ExploitationState exploitation_of(const Id& component) const;
};

// Knowledge base: pentest state, the two repertoires, capability metadata,
// and the execution-history tracking sets. The active/successful/failed
// attack sets are pairwise disjoint, as are active/completed scans and
// active/exploited targets. transition() is the only mutator.
struct KnowledgeBase {
    model::PentestState state;
    std::vector<model::AttackTactic> attacks;
    std::vector<model::ScanTemplate> scans;
    std::map<Id, CapabilityMeta> capability_meta;

    IdSet active_attacks, successful_attacks, failed_attacks;
    IdSet active_scans, completed_scans;
    IdSet active_targets, exploited_targets;

    ArchView view;

    const model::AttackTactic* find_attack(const Id& id) const;
    const model::ScanTemplate* find_scan(const Id& id) const;

    // Repertoire entries not yet tried and not currently running.
    std::vector<const model::AttackTactic*> available_attacks() const;
    std::vector<const model::ScanTemplate*> available_scans() const;
    // Known components that are neither active nor exploited targets.
    std::vector<Id> available_targets() const;

    bool attack_tried(const Id& id) const {
        return successful_attacks.contains(id) || failed_attacks.contains(id);
    }
    // True if some attack targeting `component` has not been tried or is
    // still running (used for target engagement and release decisions).
    bool component_has_open_attacks(const Id& component) const;

    // Tracking-set invariant check; returns violations for tests/validators.
    std::vector<model::Violation> check_invariants() const;

    bool operator==(const KnowledgeBase&) const;
};

// Applies one event atomically and returns the successor knowledge base.
// Illegal moves (completing a scan that is not active, re-starting a tried
// attack, referencing unknown ids) raise ProtocolError.
KnowledgeBase transition(const KnowledgeBase& kb, const Event& event);

// Decision factors of a known component, derived from the current view:
// counts of known services / vulnerabilities / connections plus the tracked
// exploitation state. Unknown quantities count as zero.
TargetFactors target_factors(const KnowledgeBase& kb, const Id& component);

}  // namespace adapt::knowledge
