#include "mcr/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcr {

std::string Violation::message(const ConcurrentGame& g) const {
  switch (kind) {
    case Kind::deadlock:
      return "deadlock at vertex " + g.name(vertex);
    case Kind::empty_action_set:
      return "no available action at vertex " + g.name(vertex) + " (" + detail + ")";
    case Kind::next_missing:
      return "next undefined at vertex " + g.name(vertex) + " for profile " + detail;
    case Kind::next_off_edge:
      return "next at vertex " + g.name(vertex) + " maps profile " + detail + " to " +
             g.name(to) + ", which is not a successor edge";
    case Kind::target_shape:
      return "target " + g.name(vertex) + " is not normalized (" + detail + ")";
    case Kind::weight_arity:
      return "edge " + g.name(vertex) + " -> " + g.name(to) + " has " + detail;
  }
  return "unknown violation";
}

static std::string profile_str(const ConcurrentGame& g, std::span<const ActionId> profile) {
  std::string s = "(";
  for (PlayerId i = 0; i < g.num_players; ++i) {
    if (i) s += ",";
    s += g.action_names[i][profile[i]];
  }
  return s + ")";
}

std::vector<Violation> validate_game(const ConcurrentGame& g) {
  std::vector<Violation> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.out[v].empty()) out.push_back({Violation::Kind::deadlock, v});
    for (const auto& e : g.out[v])
      if (e.w.size() != static_cast<std::size_t>(g.num_players))
        out.push_back({Violation::Kind::weight_arity, v, e.to,
                       std::to_string(e.w.size()) + " weights for " +
                           std::to_string(g.num_players) + " players"});
    bool profiles_ok = true;
    for (PlayerId i = 0; i < g.num_players; ++i)
      if (g.actions_at[v][i].empty()) {
        out.push_back({Violation::Kind::empty_action_set, v, -1,
                       "player " + std::to_string(i + 1)});
        profiles_ok = false;
      }
    if (profiles_ok) {
      const std::size_t n = g.profile_count(v);
      for (std::size_t r = 0; r < n; ++r) {
        VertexId u = g.next_flat[v][r];
        if (u < 0)
          out.push_back({Violation::Kind::next_missing, v, -1, profile_str(g, g.profile_at(v, r))});
        else if (!g.has_edge(v, u))
          out.push_back({Violation::Kind::next_off_edge, v, u, profile_str(g, g.profile_at(v, r))});
      }
    }
    if (g.is_target[v]) {
      if (g.out[v].size() != 1 || g.out[v][0].to != v)
        out.push_back({Violation::Kind::target_shape, v, -1, "expected a single self-loop"});
      else
        for (PlayerId i = 0; i < g.num_players; ++i)
          if (g.out[v][0].w[i] != 0) {
            out.push_back({Violation::Kind::target_shape, v, -1, "self-loop weight is not zero"});
            break;
          }
    }
  }
  return out;
}

Weight total_payoff(const ConcurrentGame& g, PlayerId i, std::span<const VertexId> play) {
  if (i < 0 || i >= g.num_players)
    throw std::invalid_argument("unknown player index " + std::to_string(i + 1));
  if (play.empty()) throw std::invalid_argument("empty play");
  Weight sum = 0;
  for (std::size_t k = 0; k + 1 < play.size(); ++k) sum += g.weight(play[k], play[k + 1], i);
  return sum;
}

ExtCost cost_of_play(const ConcurrentGame& g, PlayerId i, std::span<const VertexId> play) {
  Play p;
  p.prefix.assign(play.begin(), play.end());
  return cost_of_play(g, i, p);
}

ExtCost cost_of_play(const ConcurrentGame& g, PlayerId i, const Play& play) {
  if (i < 0 || i >= g.num_players)
    throw std::invalid_argument("unknown player index " + std::to_string(i + 1));
  if (play.prefix.empty()) throw std::invalid_argument("empty play");
  Weight sum = 0;
  VertexId prev = -1;
  for (VertexId v : play.prefix) {
    if (prev >= 0) sum += g.weight(prev, v, i);
    if (g.is_target[v]) return ExtCost(sum);
    prev = v;
  }
  for (VertexId v : play.cycle) {
    sum += g.weight(prev, v, i);
    if (g.is_target[v]) return ExtCost(sum);
    prev = v;
  }
  return ExtCost::infinity();
}

std::optional<std::vector<PlayerId>> is_turn_based(const ConcurrentGame& g) {
  std::vector<PlayerId> owner(g.num_vertices(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const std::size_t n = g.profile_count(v);
    for (PlayerId i = 0; i < g.num_players && owner[v] < 0; ++i) {
      // successor must be constant on every class of profiles sharing a_i
      bool owns = true;
      std::vector<VertexId> succ_for(g.actions_at[v][i].size(), -2);
      for (std::size_t r = 0; r < n && owns; ++r) {
        auto profile = g.profile_at(v, r);
        VertexId u = g.next_flat[v][r];
        const auto& avail = g.actions_at[v][i];
        std::size_t ai = std::lower_bound(avail.begin(), avail.end(), profile[i]) - avail.begin();
        if (succ_for[ai] == -2)
          succ_for[ai] = u;
        else if (succ_for[ai] != u)
          owns = false;
      }
      if (owns) owner[v] = i;
    }
    if (owner[v] < 0) return std::nullopt;
  }
  return owner;
}

bool is_action_visible(const ConcurrentGame& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::vector<VertexId> seen;
    const std::size_t n = g.profile_count(v);
    for (std::size_t r = 0; r < n; ++r) {
      VertexId u = g.next_flat[v][r];
      if (u < 0) continue;
      seen.push_back(u);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

std::optional<std::vector<ActionId>> profile_for_move(const ConcurrentGame& g, VertexId from,
                                                      VertexId to) {
  const std::size_t n = g.profile_count(from);
  for (std::size_t r = 0; r < n; ++r)
    if (g.next_flat[from][r] == to) return g.profile_at(from, r);
  return std::nullopt;
}

}  // namespace mcr
