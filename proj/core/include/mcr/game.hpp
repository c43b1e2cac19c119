#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcr {

using VertexId = std::int32_t;
using PlayerId = std::int32_t;  // 0-based in memory, 1-based in files and messages
using ActionId = std::int32_t;
using Weight = std::int64_t;

// Concurrent min-cost reachability game. All players pick an action
// simultaneously; `next` resolves the joint profile to a successor.
// Per-vertex action availability generalises the usual global action
// sets (a turn-based game gives every non-owner a single idle action).
//
// Weights live on edges, one integer per player. `next` must map every
// available profile onto an existing edge; validate_game checks this.
struct ConcurrentGame {
  struct OutEdge {
    VertexId to = -1;
    std::vector<Weight> w;  // one weight per player
  };

  int num_players = 0;
  std::vector<std::string> vertex_names;
  std::vector<bool> is_target;
  std::vector<std::vector<std::string>> action_names;          // [player][action]
  std::vector<std::vector<std::vector<ActionId>>> actions_at;  // [vertex][player], sorted
  std::vector<std::vector<OutEdge>> out;                       // sorted by `to`
  // next_flat[v][r] = successor for the profile of mixed-radix rank r
  // over actions_at[v]; -1 marks a missing table entry.
  std::vector<std::vector<VertexId>> next_flat;
  std::optional<VertexId> initial;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int num_edges() const { return static_cast<int>(edge_offset_.empty() ? 0 : edge_offset_.back()); }

  std::size_t profile_count(VertexId v) const;
  std::size_t profile_rank(VertexId v, std::span<const ActionId> profile) const;
  std::vector<ActionId> profile_at(VertexId v, std::size_t rank) const;

  // Successor under a joint profile; throws if the profile is unavailable
  // or the next table has no entry for it.
  VertexId next(VertexId v, std::span<const ActionId> profile) const;

  const OutEdge* find_edge(VertexId from, VertexId to) const;
  bool has_edge(VertexId from, VertexId to) const { return find_edge(from, to) != nullptr; }
  Weight weight(VertexId from, VertexId to, PlayerId i) const;

  // Dense edge numbering (per `out` order), used by strategy machines.
  int edge_index(VertexId from, VertexId to) const;
  void reindex_edges();  // must be called after `out` changes

  VertexId vertex(std::string_view name) const;  // -1 if absent
  const std::string& name(VertexId v) const { return vertex_names[v]; }

private:
  std::vector<int> edge_offset_;  // prefix sums of out-degrees
};

// Incremental construction helper. Does not insist on well-formedness:
// validate_game reports problems as data, so deliberately broken games
// must be constructible.
class GameBuilder {
public:
  explicit GameBuilder(int num_players);

  ActionId add_action(PlayerId p, std::string name);
  VertexId add_vertex(std::string name, bool target = false);
  void set_actions(VertexId v, PlayerId p, std::vector<ActionId> actions);
  void add_edge(VertexId from, VertexId to);  // weights default to 0
  void set_weight(VertexId from, VertexId to, PlayerId p, Weight w);
  void set_next(VertexId v, std::span<const ActionId> profile, VertexId to);
  void set_initial(VertexId v) { game_.initial = v; }

  int num_players() const { return game_.num_players; }
  ActionId action(PlayerId p, std::string_view name) const;

  // Finalises the next tables and edge index. With normalize_targets,
  // every target keeps exactly one outgoing edge: a self-loop with zero
  // weight for every player (and a single-profile next entry).
  ConcurrentGame build(bool normalize_targets = true);

private:
  ConcurrentGame game_;
  // (vertex, profile) -> successor, applied to next_flat at build time
  std::vector<std::vector<std::pair<std::vector<ActionId>, VertexId>>> next_entries_;
};

// Rewrites targets in place to the normalized single-self-loop form.
void normalize_targets(ConcurrentGame& g);

// A finite play is a vertex sequence; a Play may carry a lasso cycle
// (empty cycle = finite play). All plays of interest are either finite
// or eventually periodic.
struct Play {
  std::vector<VertexId> prefix;
  std::vector<VertexId> cycle;  // starts right after prefix.back()

  bool is_finite() const { return cycle.empty(); }
};

bool is_valid_play(const ConcurrentGame& g, std::span<const VertexId> vs);
bool is_valid_play(const ConcurrentGame& g, const Play& p);

std::string play_str(const ConcurrentGame& g, std::span<const VertexId> vs);

}  // namespace mcr
