#include "adapt/knowledge.hpp"

#include <algorithm>

#include "adapt/errors.hpp"

namespace adapt::knowledge {

std::string to_string(EventKind k) {
    switch (k) {
        case EventKind::ScanStarted: return "scan-started";
        case EventKind::ScanCompleted: return "scan-completed";
        case EventKind::AttackStarted: return "attack-started";
        case EventKind::AttackSucceeded: return "attack-succeeded";
        case EventKind::AttackFailed: return "attack-failed";
        case EventKind::TargetEngaged: return "target-engaged";
        case EventKind::TargetReleased: return "target-released";
        case EventKind::TargetExploited: return "target-exploited";
    }
    return "?";
}

EventKind event_kind_from(const std::string& s) {
    if (s == "scan-started") return EventKind::ScanStarted;
    if (s == "scan-completed") return EventKind::ScanCompleted;
    if (s == "attack-started") return EventKind::AttackStarted;
    if (s == "attack-succeeded") return EventKind::AttackSucceeded;
    if (s == "attack-failed") return EventKind::AttackFailed;
    if (s == "target-engaged") return EventKind::TargetEngaged;
    if (s == "target-released") return EventKind::TargetReleased;
    if (s == "target-exploited") return EventKind::TargetExploited;
    throw LoadError("event.kind", "unknown value '" + s + "'");
}

ExploitationState ArchView::exploitation_of(const Id& component) const {
    auto it = exploitation.find(component);
    return it == exploitation.end() ? ExploitationState::None : it->second;
}

const model::AttackTactic* KnowledgeBase::find_attack(const Id& id) const {
    for (const auto& a : attacks)
        if (a.id == id) return &a;
    return nullptr;
}

const model::ScanTemplate* KnowledgeBase::find_scan(const Id& id) const {
    for (const auto& s : scans)
        if (s.id == id) return &s;
    return nullptr;
}

std::vector<const model::AttackTactic*> KnowledgeBase::available_attacks() const {
    std::vector<const model::AttackTactic*> out;
    for (const auto& a : attacks)
        if (!active_attacks.contains(a.id) && !attack_tried(a.id)) out.push_back(&a);
    return out;
}

std::vector<const model::ScanTemplate*> KnowledgeBase::available_scans() const {
    std::vector<const model::ScanTemplate*> out;
    for (const auto& s : scans)
        if (!active_scans.contains(s.id) && !completed_scans.contains(s.id)) out.push_back(&s);
    return out;
}

std::vector<Id> KnowledgeBase::available_targets() const {
    std::vector<Id> out;
    for (const auto& c : state.known_components)
        if (!active_targets.contains(c) && !exploited_targets.contains(c)) out.push_back(c);
    return out;
}

bool KnowledgeBase::component_has_open_attacks(const Id& component) const {
    for (const auto& a : attacks) {
        if (a.target_component != component) continue;
        if (!attack_tried(a.id)) return true;  // untried or still active
    }
    return false;
}

std::vector<model::Violation> KnowledgeBase::check_invariants() const {
    std::vector<model::Violation> out;
    auto overlap = [&](const IdSet& x, const IdSet& y, const char* code) {
        for (const auto& id : x)
            if (y.contains(id)) out.push_back({code, id, "id present in two tracking sets"});
    };
    overlap(active_attacks, successful_attacks, "attack-sets-overlap");
    overlap(active_attacks, failed_attacks, "attack-sets-overlap");
    overlap(successful_attacks, failed_attacks, "attack-sets-overlap");
    overlap(active_scans, completed_scans, "scan-sets-overlap");
    overlap(active_targets, exploited_targets, "target-sets-overlap");

    auto member = [&](const IdSet& set, auto exists, const char* code) {
        for (const auto& id : set)
            if (!exists(id)) out.push_back({code, id, "tracking set references unknown id"});
    };
    auto is_attack = [&](const Id& id) { return find_attack(id) != nullptr; };
    auto is_scan = [&](const Id& id) { return find_scan(id) != nullptr; };
    auto is_component = [&](const Id& id) { return state.known_components.contains(id); };
    member(active_attacks, is_attack, "unknown-attack");
    member(successful_attacks, is_attack, "unknown-attack");
    member(failed_attacks, is_attack, "unknown-attack");
    member(active_scans, is_scan, "unknown-scan");
    member(completed_scans, is_scan, "unknown-scan");
    member(active_targets, is_component, "unknown-target");
    member(exploited_targets, is_component, "unknown-target");
    return out;
}

bool KnowledgeBase::operator==(const KnowledgeBase& o) const {
    auto ids = [](const auto& items) {
        IdSet s;
        for (const auto& x : items) s.insert(x.id);
        return s;
    };
    return state == o.state && ids(attacks) == ids(o.attacks) && ids(scans) == ids(o.scans) &&
           active_attacks == o.active_attacks && successful_attacks == o.successful_attacks &&
           failed_attacks == o.failed_attacks && active_scans == o.active_scans &&
           completed_scans == o.completed_scans && active_targets == o.active_targets &&
           exploited_targets == o.exploited_targets;
}

namespace {

ExploitationState merge_level(ExploitationState a, ExploitationState b) {
    return static_cast<int>(b) > static_cast<int>(a) ? b : a;
}

void absorb_findings(KnowledgeBase& kb, const Findings& f) {
    for (const auto& c : f.components) {
        kb.state.known_components.insert(c.id);
        auto& props = kb.view.components[c.id];
        for (const auto& [k, v] : c.properties) props[k] = v;
    }
    for (const auto& i : f.interfaces) {
        // An interface implies knowledge of its owner.
        kb.state.known_components.insert(i.component);
        kb.view.components.try_emplace(i.component);
        kb.state.known_interfaces.insert(i.id);
        kb.view.interfaces[i.id] = i;
    }
    for (const auto& r : f.interactions) kb.view.interactions.insert(r);
    for (const auto& k : f.capabilities) {
        kb.state.capabilities.insert(k);
        auto it = kb.capability_meta.find(k);
        if (it != kb.capability_meta.end() && it->second.component &&
            it->second.level != ExploitationState::None) {
            auto& cur = kb.view.exploitation[*it->second.component];
            cur = merge_level(cur, it->second.level);
        }
    }
}

}  // namespace

KnowledgeBase transition(const KnowledgeBase& kb, const Event& event) {
    KnowledgeBase next = kb;
    const Id& id = event.subject;
    switch (event.kind) {
        case EventKind::ScanStarted: {
            if (!next.find_scan(id)) throw ProtocolError("scan-started: unknown scan '" + id + "'");
            if (next.active_scans.contains(id) || next.completed_scans.contains(id))
                throw ProtocolError("scan-started: scan '" + id + "' is not available");
            next.active_scans.insert(id);
            break;
        }
        case EventKind::ScanCompleted: {
            if (!next.active_scans.erase(id))
                throw ProtocolError("scan-completed: scan '" + id + "' is not active");
            next.completed_scans.insert(id);
            absorb_findings(next, event.findings);
            break;
        }
        case EventKind::AttackStarted: {
            if (!next.find_attack(id))
                throw ProtocolError("attack-started: unknown attack '" + id + "'");
            if (next.active_attacks.contains(id) || next.attack_tried(id))
                throw ProtocolError("attack-started: attack '" + id + "' is not available");
            next.active_attacks.insert(id);
            break;
        }
        case EventKind::AttackSucceeded:
        case EventKind::AttackFailed: {
            if (!next.active_attacks.erase(id))
                throw ProtocolError(to_string(event.kind) + ": attack '" + id + "' is not active");
            (event.kind == EventKind::AttackSucceeded ? next.successful_attacks
                                                      : next.failed_attacks)
                .insert(id);
            // Grants from succeeded steps stick even when the tactic as a
            // whole failed.
            absorb_findings(next, event.findings);
            break;
        }
        case EventKind::TargetEngaged: {
            if (!next.state.known_components.contains(id))
                throw ProtocolError("target-engaged: unknown component '" + id + "'");
            if (next.active_targets.contains(id) || next.exploited_targets.contains(id))
                throw ProtocolError("target-engaged: component '" + id + "' is not available");
            next.active_targets.insert(id);
            break;
        }
        case EventKind::TargetReleased: {
            if (!next.active_targets.erase(id))
                throw ProtocolError("target-released: component '" + id + "' is not active");
            break;
        }
        case EventKind::TargetExploited: {
            if (!next.active_targets.erase(id))
                throw ProtocolError("target-exploited: component '" + id + "' is not active");
            next.exploited_targets.insert(id);
            break;
        }
    }
    return next;
}

TargetFactors target_factors(const KnowledgeBase& kb, const Id& component) {
    TargetFactors f;
    IdSet ifaces;
    for (const auto& [iid, rec] : kb.view.interfaces) {
        if (rec.component != component) continue;
        ifaces.insert(iid);
        ++f.num_services;
        f.num_vulnerabilities += static_cast<int>(rec.vulnerabilities.size());
    }
    for (const auto& r : kb.view.interactions)
        if (ifaces.contains(r.source) || ifaces.contains(r.target)) ++f.num_connections;
    f.exploitation_state = kb.view.exploitation_of(component);
    return f;
}

}  // namespace adapt::knowledge
