#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcr/ext_cost.hpp"
#include "mcr/game.hpp"

namespace mcr {

// Two-player zero-sum turn-based min-cost reachability game: Min steers
// toward a target while minimising accumulated weight, Max opposes.
struct ZeroSumGame {
  struct Succ {
    std::int32_t to;
    Weight w;
  };
  std::vector<std::string> names;
  std::vector<bool> is_target;
  std::vector<bool> max_turn;           // true: Max moves, false: Min moves
  std::vector<std::vector<Succ>> succ;  // sorted by `to`
  std::int32_t initial = 0;

  int num_vertices() const { return static_cast<int>(names.size()); }
  Weight max_abs_weight() const;
};

struct ValueMap {
  std::vector<ExtCost> value;
  // index into succ[v] attaining the owner's extremum (lowest successor
  // index on ties); -1 where no successor exists
  std::vector<std::int32_t> choice;
  int sweeps = 0;
};

// Exact backward induction; requires the non-target part to be acyclic
// (throws std::invalid_argument on a cycle outside targets).
ValueMap solve_acyclic(const ZeroSumGame& zs);

// Fixpoint iteration from (0 on targets, +inf elsewhere). Finite values
// are bounded by (|V|-1)*W; a value dropping below -(|V|-1)*W certifies a
// profitable negative cycle for Min and is classified -inf.
ValueMap solve_value_iteration(const ZeroSumGame& zs);

enum class SolveMethod { automatic, backward, iterate };
ValueMap solve(const ZeroSumGame& zs, SolveMethod method = SolveMethod::automatic);

// Value at the initial vertex (backward induction when acyclic).
ExtCost value(const ZeroSumGame& zs);

}  // namespace mcr
