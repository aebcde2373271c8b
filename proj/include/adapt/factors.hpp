#pragma once

#include <string>

#include "adapt/errors.hpp"

namespace adapt {

// Decision factors for targets, attacks and scans. The enumerators mirror
// the cases of the default value tables (see utility.hpp); every option must
// carry a full factor assignment.

enum class ExploitationState { None, Initial, Elevated, C2C };

enum class AttackVector { Network, Adjacent, Local, Physical };
enum class Complexity { Low, High };
enum class Privileges { None, Low, High };
enum class UserInteraction { None, Required };
enum class RunningTime { Quick, Medium, Long, Guessing };

enum class ScanRange { Network, Host, Local };
enum class ScanTargets { Network, Multiple, One };

struct TargetFactors {
    int num_services = 0;
    int num_vulnerabilities = 0;
    int num_connections = 0;
    ExploitationState exploitation_state = ExploitationState::None;
};

struct AttackFactors {
    AttackVector vector = AttackVector::Network;
    Complexity complexity = Complexity::Low;
    Privileges privileges = Privileges::None;
    UserInteraction interaction = UserInteraction::None;
    RunningTime running_time = RunningTime::Medium;
};

struct ScanFactors {
    ScanRange range = ScanRange::Network;
    ScanTargets targets = ScanTargets::Network;
    RunningTime duration = RunningTime::Medium;
    Complexity complexity = Complexity::Low;
};

std::string to_string(ExploitationState v);
std::string to_string(AttackVector v);
std::string to_string(Complexity v);
std::string to_string(Privileges v);
std::string to_string(UserInteraction v);
std::string to_string(RunningTime v);
std::string to_string(ScanRange v);
std::string to_string(ScanTargets v);

ExploitationState exploitation_state_from(const std::string& s);
AttackVector attack_vector_from(const std::string& s);
Complexity complexity_from(const std::string& s);
Privileges privileges_from(const std::string& s);
UserInteraction interaction_from(const std::string& s);
RunningTime running_time_from(const std::string& s);
ScanRange scan_range_from(const std::string& s);
ScanTargets scan_targets_from(const std::string& s);

}  // namespace adapt
