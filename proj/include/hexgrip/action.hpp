#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hexgrip {

// Behaviors the arbiter can choose. Idle is the "no mission" output and is
// never scored; the remaining six compete by weighted affordance.
// Enum order doubles as the tie-break rank: higher value wins a priority tie.
enum class Action : std::uint8_t {
  Idle = 0,
  Stabilizing,
  Aligning,
  Approaching,
  ForwardApproaching,
  Grasping,
  Retry,
};

inline constexpr int kSelectableActionCount = 6;

// Scored actions, lowest tie-break rank first.
inline constexpr std::array<Action, kSelectableActionCount> kSelectableActions = {
    Action::Stabilizing,  Action::Aligning, Action::Approaching,
    Action::ForwardApproaching, Action::Grasping, Action::Retry,
};

// Index of a scored action into priority/eligibility arrays (Idle has none).
constexpr int action_index(Action a) {
  return static_cast<int>(a) - 1;
}

std::string_view action_name(Action a);
std::optional<Action> action_from_name(std::string_view name);

}  // namespace hexgrip
