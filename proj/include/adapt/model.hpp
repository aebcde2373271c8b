#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adapt/factors.hpp"

namespace adapt::model {

using Id = std::string;
using IdSet = std::set<Id>;

enum class CapabilityClass { Intended, NonControllable, Weird };

std::string to_string(CapabilityClass c);
CapabilityClass capability_class_from(const std::string& s);

// The ability to perform a set of actions on a component or its environment.
// Ids are unique system-wide.
struct Capability {
    Id id;
    CapabilityClass cls = CapabilityClass::Intended;
    std::string description;
};

struct Interface {
    Id id;
    std::vector<Capability> capabilities;
    IdSet vulnerabilities;
    std::map<std::string, std::string> properties;  // e.g. port, service
};

struct Component {
    Id id;
    std::vector<Interface> interfaces;
    std::map<std::string, std::string> properties;  // e.g. operating system

    const Interface* find_interface(const Id& iface) const;
};

// Directed invocation between two interfaces.
struct Interaction {
    Id source;
    Id target;

    friend auto operator<=>(const Interaction&, const Interaction&) = default;
};

// Ground-truth system under test: components plus their interactions,
// annotated with vulnerabilities and capabilities.
struct SecurityInformedArchitecture {
    std::vector<Component> components;
    std::vector<Interaction> interactions;
    // Capabilities that exist system-wide without belonging to a specific
    // interface (credentials, segment access, crafted payloads, ...).
    std::vector<Capability> system_capabilities;

    const Component* find_component(const Id& id) const;
    const Component* component_of_interface(const Id& iface) const;
    const Interface* find_interface(const Id& iface) const;
    // All declared capability ids, interface-owned and system-wide.
    IdSet all_capability_ids() const;
};

// The attacker's view: capabilities K, known components C, known
// interfaces I. All three grow monotonically over a run.
struct PentestState {
    IdSet capabilities;
    IdSet known_components;
    IdSet known_interfaces;

    bool operator==(const PentestState&) const = default;
};

// One realized attack technique: the invoked interaction, the exploited
// vulnerabilities, required capabilities and the capabilities gained on
// success. Interfaces are optional so that self-hosted preparation steps
// (payload crafting) and local exploits can be expressed.
struct AttackStep {
    std::optional<Id> source_interface;
    std::optional<Id> target_interface;
    IdSet vulnerabilities;
    IdSet prereq_capabilities;
    IdSet granted_capabilities;
};

struct AttackTactic {
    Id id;
    std::optional<Id> target_component;
    std::vector<AttackStep> steps;  // non-empty
    AttackFactors factors;
    std::int64_t duration_ms = 1000;
    IdSet exclusion_tags;

    // Union of granted capabilities over all steps (K of the whole tactic).
    IdSet granted_union() const;
    // Prerequisites that must come from outside the tactic, i.e. not
    // satisfied by grants of earlier steps.
    IdSet external_prereqs() const;
    // Target interfaces across steps (used for interference checks).
    IdSet target_interfaces() const;
};

enum class ScanKind { RemoteProbe, LocalProbe };

struct ScanTemplate {
    Id id;
    IdSet prereq_capabilities;
    ScanKind kind = ScanKind::RemoteProbe;
    ScanFactors factors;
    std::int64_t duration_ms = 1000;
};

struct Violation {
    std::string code;     // e.g. "duplicate-interface"
    std::string subject;  // offending element id / path
    std::string message;

    bool operator==(const Violation&) const = default;
};

// Checks the structural invariants of an architecture: interface id sets of
// distinct components are disjoint, capability ids are unique system-wide,
// interaction endpoints reference existing interfaces, and each interface's
// capability classes form a partition (every capability carries exactly one
// class tag by construction; duplicates across classes show up as duplicate
// ids). Violations are data, not faults.
std::vector<Violation> validate_architecture(const SecurityInformedArchitecture& arch);

// State update after an attack whose first `succeeded_steps` steps
// succeeded: K gains the granted capabilities of the succeeded prefix.
// Components and interfaces are unchanged. If `universe` is given, grants
// outside it raise LoadError (malformed repertoire).
PentestState apply_attack_result(const PentestState& state, const AttackTactic& tactic,
                                 std::size_t succeeded_steps, const IdSet* universe = nullptr);

// State update after a scan: C and I gain the findings, K is unchanged.
PentestState apply_scan_result(const PentestState& state, const IdSet& found_components,
                               const IdSet& found_interfaces);

// Direct capability grant (used for post-exploitation probes that surface
// actionable capabilities, and for partial attack results).
PentestState apply_capability_grant(const PentestState& state, const IdSet& capabilities);

// Answers whether a hypothetical action, run from `state`, would enlarge the
// attacker's knowledge or power. Backed by scenario ground truth in the
// simulator; tests may supply table-driven fakes.
class OutcomeOracle {
public:
    virtual ~OutcomeOracle() = default;
    virtual bool attack_enlarges(const AttackTactic& tactic, const PentestState& state) const = 0;
    virtual bool scan_enlarges(const ScanTemplate& scan, const PentestState& state) const = 0;
};

// True iff no remaining attack would enlarge K and no remaining scan would
// enlarge C or I (the standard completion goal).
bool goal_reached(const PentestState& state, const std::vector<AttackTactic>& attacks,
                  const std::vector<ScanTemplate>& scans, const OutcomeOracle& oracle);

}  // namespace adapt::model
