#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcr/ext_cost.hpp"
#include "mcr/game.hpp"
#include "mcr/strategy.hpp"
#include "mcr/transforms.hpp"

namespace mcr {

// A single-player betrayal: at position `position` of the agreed play the
// deviator switched to `action`, landing in `new_vertex` while everyone
// else kept their agreed action (reconstructible thanks to action
// visibility).
struct Deviation {
  PlayerId player = -1;
  int position = -1;
  ActionId action = -1;
  VertexId new_vertex = -1;
  std::vector<VertexId> prefix;  // v_0 .. v_position, new_vertex
};

// All deviations strictly before the first target occurrence, sorted by
// (player, position, action). With require_target the play must reach a
// target; otherwise every position is eligible.
std::vector<Deviation> enumerate_deviations(const ConcurrentGame& g,
                                            std::span<const VertexId> play,
                                            bool require_target = true);

struct DeviationCheck {
  Deviation dev;
  ExtCost lhs;                // cost of the agreed play for the deviator
  ExtCost deviation_payoff;   // total payoff of the deviation prefix
  ExtCost retaliation;        // coalition game value from the landing vertex
  bool pass = false;          // lhs <= deviation_payoff + retaliation
};

// Positional retaliation table against one player: the coalition's joint
// action per vertex (the deviator's slot is -1; empty at targets).
struct PunishmentTable {
  PlayerId against = -1;
  std::vector<std::vector<ActionId>> profile_at;
};

struct NashCertificate {
  Play play;
  std::vector<ExtCost> costs;
  std::vector<DeviationCheck> checks;
  std::vector<PunishmentTable> punishments;
  bool valid = false;

  std::vector<DeviationCheck> failing() const;
};

// The outcome characterization: a play is a Nash equilibrium outcome iff
// every deviation satisfies cost_i(play) <= payoff(prefix) + value of the
// coalition game from the landing vertex. Lassos and non-target-reaching
// plays are analysed with cost +inf.
NashCertificate check_ne_outcome(const ConcurrentGame& g, const Play& play);

struct HeuristicResult {
  std::optional<NashCertificate> certificate;  // set when the outcome reached a target
  StrategyProfile profile;                     // the coalition-optimal strategies
  std::vector<VertexId> outcome;
  bool target_reached = false;
  std::string reason;  // non-empty on failure

  bool success() const { return certificate && certificate->valid; }
};

// Four-step construction: per-player coalition-optimal strategies, their
// joint outcome, the deviation checks, and retaliation tables on success.
// Requires a turn-based action-visible game; the outcome is capped at the
// number of game vertices (a positional profile that has not reached a
// target by then never will).
HeuristicResult construct_ne_heuristic(const ConcurrentGame& g, VertexId start);

// Exact best response of one player against the other players' fixed
// strategies: a one-player min-cost reachability problem on the product of
// the game with the others' memory states. -inf when a profitable negative
// cycle is reachable, +inf when no target is.
ExtCost best_response_value(const ConcurrentGame& g, VertexId start, PlayerId player,
                            const StrategyProfile& profile, std::size_t state_budget = 1 << 22);

struct ProfileAssessment {
  Play outcome;
  std::vector<ExtCost> costs;
  std::vector<ExtCost> best_responses;
  bool is_nash = false;
};

ProfileAssessment assess_profile(const ConcurrentGame& g, VertexId start,
                                 const StrategyProfile& profile);

// Agreed play plus positional punishments, as finite-memory machines:
// follow the play while everyone conforms, switch permanently to the
// punishment table against the first deviator otherwise.
StrategyProfile trigger_profile(const ConcurrentGame& g, std::span<const VertexId> play,
                                const std::vector<PunishmentTable>& punishments);

struct FoundEquilibrium {
  StrategyProfile profile;
  Play outcome;
  std::vector<ExtCost> costs;
  bool from_trigger = false;
};

// Test oracle. Enumerates positional profiles, plus trigger profiles over
// target-reaching plays (bounded vertex repeats) with coalition-optimal
// punishments; each candidate is verified against all deviations via
// best_response_value. Throws when the enumeration exceeds the budget.
std::vector<FoundEquilibrium> brute_force_ne(const ConcurrentGame& g, VertexId start, int horizon,
                                             std::size_t budget = 200000);

}  // namespace mcr
