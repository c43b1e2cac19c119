#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcr/ext_cost.hpp"
#include "mcr/game.hpp"

namespace mcr {

// Well-formedness violations are data, not failures.
struct Violation {
  enum class Kind {
    deadlock,          // vertex has no outgoing edge
    empty_action_set,  // a player has no available action at a vertex
    next_missing,      // an available profile has no next entry
    next_off_edge,     // next(v, a) is not an edge of v
    target_shape,      // target without the normalized zero self-loop
    weight_arity,      // edge weight vector does not have one entry per player
  };
  Kind kind;
  VertexId vertex = -1;
  VertexId to = -1;
  std::string detail;

  std::string message(const ConcurrentGame& g) const;
};

std::vector<Violation> validate_game(const ConcurrentGame& g);

// Sum of player i's edge weights along a finite play; 0 for a single vertex.
Weight total_payoff(const ConcurrentGame& g, PlayerId i, std::span<const VertexId> play);

// Total payoff up to the first target occurrence; +inf if no target is
// visited (for a lasso play, the cycle counts as visited forever).
ExtCost cost_of_play(const ConcurrentGame& g, PlayerId i, const Play& play);
ExtCost cost_of_play(const ConcurrentGame& g, PlayerId i, std::span<const VertexId> play);

// Owner map: vertex v belongs to i iff fixing a_i fixes next(v, .).
// Lowest qualifying player wins ties (vertices where nobody really
// chooses). nullopt if some vertex has no owner.
std::optional<std::vector<PlayerId>> is_turn_based(const ConcurrentGame& g);

// True iff for every vertex pair at most one profile realises the move.
bool is_action_visible(const ConcurrentGame& g);

// Unique profile with next(from, a) = to; nullopt if none (requires an
// action-visible game for uniqueness).
std::optional<std::vector<ActionId>> profile_for_move(const ConcurrentGame& g, VertexId from,
                                                      VertexId to);

}  // namespace mcr
