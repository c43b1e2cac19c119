#pragma once

#include <vector>

#include "mcr/game.hpp"

namespace mcr {

// A strategy maps vertex histories to actions. Two shapes are supported:
// positional (action per vertex) and a finite-memory machine whose state
// advances on every observed edge of the play. Bounded-history tables
// compile to machine states, and the machine form is what makes exact
// best-response computation possible (product with the game graph).
class Strategy {
public:
  struct Machine {
    int num_states = 1;
    // action[m][v]; -1 = undefined at that vertex
    std::vector<std::vector<ActionId>> action;
    // step[m][edge_index] = next state (edge indices per game.edge_index)
    std::vector<std::vector<int>> step;
  };

  Strategy() = default;

  static Strategy positional(std::vector<ActionId> action_at_vertex);
  static Strategy machine(Machine m);

  bool is_positional() const { return machine_.num_states == 1 && machine_.step.empty(); }
  int num_states() const { return machine_.num_states; }
  int initial_state() const { return 0; }

  ActionId act(int state, VertexId v) const { return machine_.action[state][v]; }
  int advance(const ConcurrentGame& g, int state, VertexId from, VertexId to) const;

  const Machine& raw() const { return machine_; }

private:
  Machine machine_;
};

using StrategyProfile = std::vector<Strategy>;

struct OutcomeResult {
  std::vector<VertexId> play;
  bool reached_target = false;
};

// Deterministic unfolding of a profile from `start`: stops at the first
// target (flag true) or after `horizon` edges (flag false). Throws if a
// consulted strategy is undefined at a reached decision point.
OutcomeResult outcome(const ConcurrentGame& g, VertexId start, const StrategyProfile& profile,
                      int horizon);

}  // namespace mcr
