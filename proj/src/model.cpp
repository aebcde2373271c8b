#include "adapt/model.hpp"

#include <algorithm>

#include "adapt/errors.hpp"

namespace adapt::model {

std::string to_string(CapabilityClass c) {
    switch (c) {
        case CapabilityClass::Intended: return "intended";
        case CapabilityClass::NonControllable: return "non-controllable";
        case CapabilityClass::Weird: return "weird";
    }
    return "intended";
}

CapabilityClass capability_class_from(const std::string& s) {
    if (s == "intended") return CapabilityClass::Intended;
    if (s == "non-controllable") return CapabilityClass::NonControllable;
    if (s == "weird") return CapabilityClass::Weird;
    throw LoadError("capability.class", "unknown value '" + s + "'");
}

const Interface* Component::find_interface(const Id& iface) const {
    for (const auto& i : interfaces)
        if (i.id == iface) return &i;
    return nullptr;
}

const Component* SecurityInformedArchitecture::find_component(const Id& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

const Component* SecurityInformedArchitecture::component_of_interface(const Id& iface) const {
    for (const auto& c : components)
        if (c.find_interface(iface)) return &c;
    return nullptr;
}

const Interface* SecurityInformedArchitecture::find_interface(const Id& iface) const {
    for (const auto& c : components)
        if (const Interface* i = c.find_interface(iface)) return i;
    return nullptr;
}

IdSet SecurityInformedArchitecture::all_capability_ids() const {
    IdSet out;
    for (const auto& c : components)
        for (const auto& i : c.interfaces)
            for (const auto& k : i.capabilities) out.insert(k.id);
    for (const auto& k : system_capabilities) out.insert(k.id);
    return out;
}

IdSet AttackTactic::granted_union() const {
    IdSet out;
    for (const auto& s : steps) out.insert(s.granted_capabilities.begin(), s.granted_capabilities.end());
    return out;
}

IdSet AttackTactic::external_prereqs() const {
    IdSet out;
    IdSet granted_so_far;
    for (const auto& s : steps) {
        for (const auto& k : s.prereq_capabilities)
            if (!granted_so_far.contains(k)) out.insert(k);
        granted_so_far.insert(s.granted_capabilities.begin(), s.granted_capabilities.end());
    }
    return out;
}

IdSet AttackTactic::target_interfaces() const {
    IdSet out;
    for (const auto& s : steps)
        if (s.target_interface) out.insert(*s.target_interface);
    return out;
}

std::vector<Violation> validate_architecture(const SecurityInformedArchitecture& arch) {
    std::vector<Violation> out;

    std::map<Id, Id> component_of;  // component id -> first owner (self)
    for (const auto& c : arch.components) {
        auto [it, fresh] = component_of.emplace(c.id, c.id);
        if (!fresh)
            out.push_back({"duplicate-component", c.id, "component id declared more than once"});
    }

    std::map<Id, Id> iface_owner;
    std::map<Id, std::string> cap_owner;  // capability id -> owning element
    for (const auto& c : arch.components) {
        for (const auto& i : c.interfaces) {
            auto [it, fresh] = iface_owner.emplace(i.id, c.id);
            if (!fresh && it->second != c.id)
                out.push_back({"duplicate-interface", i.id,
                               "interface shared by components '" + it->second + "' and '" + c.id + "'"});
            else if (!fresh)
                out.push_back({"duplicate-interface", i.id,
                               "interface declared twice in component '" + c.id + "'"});
            for (const auto& k : i.capabilities) {
                auto [kit, kfresh] = cap_owner.emplace(k.id, i.id);
                if (!kfresh)
                    out.push_back({"duplicate-capability", k.id,
                                   "capability declared by '" + kit->second + "' and '" + i.id + "'"});
            }
        }
    }
    for (const auto& k : arch.system_capabilities) {
        auto [kit, kfresh] = cap_owner.emplace(k.id, "system");
        if (!kfresh)
            out.push_back({"duplicate-capability", k.id,
                           "capability declared by '" + kit->second + "' and system-wide"});
    }

    for (const auto& r : arch.interactions) {
        if (!iface_owner.contains(r.source))
            out.push_back({"dangling-interaction", r.source + "->" + r.target,
                           "source interface '" + r.source + "' does not exist"});
        if (!iface_owner.contains(r.target))
            out.push_back({"dangling-interaction", r.source + "->" + r.target,
                           "target interface '" + r.target + "' does not exist"});
    }
    return out;
}

PentestState apply_attack_result(const PentestState& state, const AttackTactic& tactic,
                                 std::size_t succeeded_steps, const IdSet* universe) {
    if (succeeded_steps > tactic.steps.size())
        throw ProtocolError("succeeded step count exceeds tactic length for '" + tactic.id + "'");
    PentestState next = state;
    for (std::size_t s = 0; s < succeeded_steps; ++s) {
        for (const auto& k : tactic.steps[s].granted_capabilities) {
            if (universe && !universe->contains(k))
                throw LoadError("tactics." + tactic.id, "grants unknown capability '" + k + "'");
            next.capabilities.insert(k);
        }
    }
    return next;
}

PentestState apply_scan_result(const PentestState& state, const IdSet& found_components,
                               const IdSet& found_interfaces) {
    PentestState next = state;
    next.known_components.insert(found_components.begin(), found_components.end());
    next.known_interfaces.insert(found_interfaces.begin(), found_interfaces.end());
    return next;
}

PentestState apply_capability_grant(const PentestState& state, const IdSet& capabilities) {
    PentestState next = state;
    next.capabilities.insert(capabilities.begin(), capabilities.end());
    return next;
}

bool goal_reached(const PentestState& state, const std::vector<AttackTactic>& attacks,
                  const std::vector<ScanTemplate>& scans, const OutcomeOracle& oracle) {
    for (const auto& a : attacks)
        if (oracle.attack_enlarges(a, state)) return false;
    for (const auto& s : scans)
        if (oracle.scan_enlarges(s, state)) return false;
    return true;
}

}  // namespace adapt::model
