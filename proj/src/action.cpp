#include "hexgrip/action.hpp"

namespace hexgrip {

std::string_view action_name(Action a) {
  switch (a) {
    case Action::Idle: return "Idle";
    case Action::Stabilizing: return "Stabilizing";
    case Action::Aligning: return "Aligning";
    case Action::Approaching: return "Approaching";
    case Action::ForwardApproaching: return "ForwardApproaching";
    case Action::Grasping: return "Grasping";
    case Action::Retry: return "Retry";
  }
  return "?";
}

std::optional<Action> action_from_name(std::string_view name) {
  for (Action a : {Action::Idle, Action::Stabilizing, Action::Aligning,
                   Action::Approaching, Action::ForwardApproaching,
                   Action::Grasping, Action::Retry}) {
    if (action_name(a) == name) return a;
  }
  return std::nullopt;
}

}  // namespace hexgrip
