#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mcr/game.hpp"
#include "mcr/strategy.hpp"
#include "mcr/zerosum.hpp"

namespace mcr {

// Witness that every finite play from `initial` has total payoff >= -bound
// for `player`, or (bound absent) a reachable cycle with strictly negative
// player weight.
struct BoundCertificate {
  PlayerId player = -1;
  VertexId initial = -1;
  std::optional<Weight> bound;
  std::vector<VertexId> witness_cycle;  // nonempty iff unbounded

  bool is_bounded() const { return bound.has_value(); }
};

BoundCertificate bound_below_certificate(const ConcurrentGame& g, PlayerId player,
                                         VertexId initial);

// G' with only non-negative weights for one player. Vertices are (base,
// debt) pairs, debt in [-b, 0], reachable from (initial, 0); a fresh sink
// target absorbs old targets via a final edge of weight b + debt, so
// cost_i(G') = cost_i(G) + b and other players' costs are unchanged.
struct NonnegativeGame {
  ConcurrentGame game;
  PlayerId player = -1;
  Weight bound = 0;
  VertexId start = -1;                // (initial, 0)
  VertexId sink = -1;                 // the fresh target
  std::vector<VertexId> base_of;      // per G' vertex; -1 at the sink
  std::vector<Weight> debt_of;        // per G' vertex; 0 at the sink
  VertexId vertex_of(VertexId base, Weight debt) const;  // -1 if absent

private:
  friend NonnegativeGame to_nonnegative(const ConcurrentGame&, const BoundCertificate&);
  std::vector<std::vector<std::pair<Weight, VertexId>>> index_;
};

NonnegativeGame to_nonnegative(const ConcurrentGame& g, const BoundCertificate& cert);

// sigma-bar(pi-bar) = sigma(pi): the lifted strategy reads the base vertex.
Strategy lift_strategy(const NonnegativeGame& gp, const ConcurrentGame& base, const Strategy& s);
// sigma-star(pi) = sigma(pi-bar): the projected machine tracks the debt.
Strategy project_strategy(const NonnegativeGame& gp, const ConcurrentGame& base, const Strategy& s);

// Round-robin turnification: each concurrent step becomes a sequence of
// single-player moves; all weights are charged on the final stage edge
// (only there is the full joint choice known). Plays project 1-to-1 onto
// base plays with identical costs.
struct TurnifiedGame {
  ConcurrentGame game;
  std::vector<VertexId> base_of;       // per turnified vertex
  std::vector<int> stage_of;           // 0 = a base vertex
  std::vector<PlayerId> mover_of;      // player choosing there (-1 at targets)
  std::vector<VertexId> stage0_of;     // base vertex -> its stage-0 vertex
  std::vector<std::vector<PlayerId>> order_of;  // per base vertex

  // maps a turnified play back onto base vertices (stage-0 points only)
  std::vector<VertexId> project_play(std::span<const VertexId> tplay) const;
};

TurnifiedGame turnify_round_robin(const ConcurrentGame& g, std::span<const PlayerId> order);
TurnifiedGame turnify_round_robin(const ConcurrentGame& g,
                                  const std::function<std::vector<PlayerId>(VertexId)>& order_at);

// Coalition game G_{i,pi}: the adversary (all players but i) commits its
// joint action first at a Max-owned choice vertex, then i answers at a
// Min-owned commit vertex; the resolved move carries player i's weight.
// Values are fresh from the prefix's last vertex.
struct CoalitionGame {
  ZeroSumGame zs;
  PlayerId player = -1;
  std::vector<std::int32_t> choice_of;  // game vertex -> zs choice vertex
  struct CommitInfo {
    VertexId base = -1;
    std::vector<ActionId> coalition;  // full profile, own slot = -1
  };
  std::vector<CommitInfo> info;  // per zs vertex; base = -1 for choice vertices
};

CoalitionGame coalition_game(const ConcurrentGame& g, PlayerId player,
                             std::span<const VertexId> prefix);
CoalitionGame coalition_game(const ConcurrentGame& g, PlayerId player, VertexId root);

}  // namespace mcr
