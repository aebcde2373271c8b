#include "adapt/factors.hpp"

namespace adapt {

namespace {

[[noreturn]] void bad_value(const char* what, const std::string& s) {
    throw LoadError(what, "unknown value '" + s + "'");
}

}  // namespace

std::string to_string(ExploitationState v) {
    switch (v) {
        case ExploitationState::None: return "None";
        case ExploitationState::Initial: return "Initial";
        case ExploitationState::Elevated: return "Elevated";
        case ExploitationState::C2C: return "C2C";
    }
    return "None";
}

std::string to_string(AttackVector v) {
    switch (v) {
        case AttackVector::Network: return "Network";
        case AttackVector::Adjacent: return "Adjacent";
        case AttackVector::Local: return "Local";
        case AttackVector::Physical: return "Physical";
    }
    return "Network";
}

std::string to_string(Complexity v) { return v == Complexity::Low ? "Low" : "High"; }

std::string to_string(Privileges v) {
    switch (v) {
        case Privileges::None: return "None";
        case Privileges::Low: return "Low";
        case Privileges::High: return "High";
    }
    return "None";
}

std::string to_string(UserInteraction v) {
    return v == UserInteraction::None ? "None" : "Required";
}

std::string to_string(RunningTime v) {
    switch (v) {
        case RunningTime::Quick: return "Quick";
        case RunningTime::Medium: return "Medium";
        case RunningTime::Long: return "Long";
        case RunningTime::Guessing: return "Guessing";
    }
    return "Medium";
}

std::string to_string(ScanRange v) {
    switch (v) {
        case ScanRange::Network: return "Network";
        case ScanRange::Host: return "Host";
        case ScanRange::Local: return "Local";
    }
    return "Network";
}

std::string to_string(ScanTargets v) {
    switch (v) {
        case ScanTargets::Network: return "Network";
        case ScanTargets::Multiple: return "Multiple";
        case ScanTargets::One: return "One";
    }
    return "Network";
}

ExploitationState exploitation_state_from(const std::string& s) {
    if (s == "None") return ExploitationState::None;
    if (s == "Initial") return ExploitationState::Initial;
    if (s == "Elevated") return ExploitationState::Elevated;
    if (s == "C2C") return ExploitationState::C2C;
    bad_value("exploitation_state", s);
}

AttackVector attack_vector_from(const std::string& s) {
    if (s == "Network") return AttackVector::Network;
    if (s == "Adjacent") return AttackVector::Adjacent;
    if (s == "Local") return AttackVector::Local;
    if (s == "Physical") return AttackVector::Physical;
    bad_value("attack_vector", s);
}

Complexity complexity_from(const std::string& s) {
    if (s == "Low") return Complexity::Low;
    if (s == "High") return Complexity::High;
    bad_value("complexity", s);
}

Privileges privileges_from(const std::string& s) {
    if (s == "None") return Privileges::None;
    if (s == "Low") return Privileges::Low;
    if (s == "High") return Privileges::High;
    bad_value("privileges", s);
}

UserInteraction interaction_from(const std::string& s) {
    if (s == "None") return UserInteraction::None;
    if (s == "Required") return UserInteraction::Required;
    bad_value("interaction", s);
}

RunningTime running_time_from(const std::string& s) {
    if (s == "Quick") return RunningTime::Quick;
    if (s == "Medium") return RunningTime::Medium;
    if (s == "Long") return RunningTime::Long;
    if (s == "Guessing") return RunningTime::Guessing;
    bad_value("running_time", s);
}

ScanRange scan_range_from(const std::string& s) {
    if (s == "Network") return ScanRange::Network;
    if (s == "Host") return ScanRange::Host;
    if (s == "Local") return ScanRange::Local;
    bad_value("scan_range", s);
}

ScanTargets scan_targets_from(const std::string& s) {
    if (s == "Network") return ScanTargets::Network;
    if (s == "Multiple") return ScanTargets::Multiple;
    if (s == "One") return ScanTargets::One;
    bad_value("scan_targets", s);
}

}  // namespace adapt
