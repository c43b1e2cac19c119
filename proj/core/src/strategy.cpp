#include "mcr/strategy.hpp"

#include <stdexcept>

namespace mcr {

Strategy Strategy::positional(std::vector<ActionId> action_at_vertex) {
  Strategy s;
  s.machine_.num_states = 1;
  s.machine_.action = {std::move(action_at_vertex)};
  return s;
}

Strategy Strategy::machine(Machine m) {
  if (m.num_states < 1 || m.action.size() != static_cast<std::size_t>(m.num_states) ||
      m.step.size() != static_cast<std::size_t>(m.num_states))
    throw std::invalid_argument("malformed strategy machine");
  Strategy s;
  s.machine_ = std::move(m);
  return s;
}

int Strategy::advance(const ConcurrentGame& g, int state, VertexId from, VertexId to) const {
  if (machine_.step.empty()) return 0;
  return machine_.step[state][g.edge_index(from, to)];
}

OutcomeResult outcome(const ConcurrentGame& g, VertexId start, const StrategyProfile& profile,
                      int horizon) {
  if (static_cast<int>(profile.size()) != g.num_players)
    throw std::invalid_argument("profile arity does not match player count");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");

  OutcomeResult res;
  res.play.push_back(start);
  std::vector<int> state(g.num_players, 0);
  std::vector<ActionId> acts(g.num_players);
  VertexId v = start;
  for (int step = 0; step < horizon; ++step) {
    if (g.is_target[v]) {
      res.reached_target = true;
      return res;
    }
    for (PlayerId i = 0; i < g.num_players; ++i) {
      acts[i] = profile[i].act(state[i], v);
      if (acts[i] < 0)
        throw std::runtime_error("strategy of player " + std::to_string(i + 1) +
                                 " is undefined at vertex " + g.name(v));
    }
    VertexId u = g.next(v, acts);
    for (PlayerId i = 0; i < g.num_players; ++i)
      state[i] = profile[i].advance(g, state[i], v, u);
    res.play.push_back(u);
    v = u;
  }
  res.reached_target = g.is_target[v];
  return res;
}

}  // namespace mcr
