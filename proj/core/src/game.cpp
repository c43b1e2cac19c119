#include "mcr/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcr {

std::size_t ConcurrentGame::profile_count(VertexId v) const {
  std::size_t n = 1;
  for (PlayerId i = 0; i < num_players; ++i) n *= actions_at[v][i].size();
  return actions_at[v].empty() ? 0 : n;
}

std::size_t ConcurrentGame::profile_rank(VertexId v, std::span<const ActionId> profile) const {
  std::size_t rank = 0;
  for (PlayerId i = 0; i < num_players; ++i) {
    const auto& avail = actions_at[v][i];
    auto it = std::lower_bound(avail.begin(), avail.end(), profile[i]);
    if (it == avail.end() || *it != profile[i])
      throw std::invalid_argument("action " + std::to_string(profile[i]) +
                                  " of player " + std::to_string(i + 1) +
                                  " is not available at vertex " + vertex_names[v]);
    rank = rank * avail.size() + static_cast<std::size_t>(it - avail.begin());
  }
  return rank;
}

std::vector<ActionId> ConcurrentGame::profile_at(VertexId v, std::size_t rank) const {
  std::vector<ActionId> profile(num_players);
  for (PlayerId i = num_players - 1; i >= 0; --i) {
    const auto& avail = actions_at[v][i];
    profile[i] = avail[rank % avail.size()];
    rank /= avail.size();
  }
  return profile;
}

VertexId ConcurrentGame::next(VertexId v, std::span<const ActionId> profile) const {
  VertexId u = next_flat[v][profile_rank(v, profile)];
  if (u < 0)
    throw std::invalid_argument("next undefined at vertex " + vertex_names[v]);
  return u;
}

const ConcurrentGame::OutEdge* ConcurrentGame::find_edge(VertexId from, VertexId to) const {
  const auto& es = out[from];
  auto it = std::lower_bound(es.begin(), es.end(), to,
                             [](const OutEdge& e, VertexId t) { return e.to < t; });
  if (it == es.end() || it->to != to) return nullptr;
  return &*it;
}

Weight ConcurrentGame::weight(VertexId from, VertexId to, PlayerId i) const {
  const OutEdge* e = find_edge(from, to);
  if (!e) throw std::invalid_argument("no edge " + vertex_names[from] + " -> " + vertex_names[to]);
  if (i < 0 || i >= num_players) throw std::invalid_argument("unknown player index " + std::to_string(i + 1));
  return e->w[i];
}

int ConcurrentGame::edge_index(VertexId from, VertexId to) const {
  const auto& es = out[from];
  auto it = std::lower_bound(es.begin(), es.end(), to,
                             [](const OutEdge& e, VertexId t) { return e.to < t; });
  if (it == es.end() || it->to != to)
    throw std::invalid_argument("no edge " + vertex_names[from] + " -> " + vertex_names[to]);
  return edge_offset_[from] + static_cast<int>(it - es.begin());
}

void ConcurrentGame::reindex_edges() {
  edge_offset_.assign(num_vertices() + 1, 0);
  for (VertexId v = 0; v < num_vertices(); ++v)
    edge_offset_[v + 1] = edge_offset_[v] + static_cast<int>(out[v].size());
}

VertexId ConcurrentGame::vertex(std::string_view name) const {
  for (VertexId v = 0; v < num_vertices(); ++v)
    if (vertex_names[v] == name) return v;
  return -1;
}

GameBuilder::GameBuilder(int num_players) {
  if (num_players < 1) throw std::invalid_argument("a game needs at least one player");
  game_.num_players = num_players;
  game_.action_names.resize(num_players);
}

ActionId GameBuilder::add_action(PlayerId p, std::string name) {
  game_.action_names[p].push_back(std::move(name));
  return static_cast<ActionId>(game_.action_names[p].size() - 1);
}

VertexId GameBuilder::add_vertex(std::string name, bool target) {
  game_.vertex_names.push_back(std::move(name));
  game_.is_target.push_back(target);
  game_.actions_at.emplace_back(game_.num_players);
  game_.out.emplace_back();
  next_entries_.emplace_back();
  return static_cast<VertexId>(game_.vertex_names.size() - 1);
}

void GameBuilder::set_actions(VertexId v, PlayerId p, std::vector<ActionId> actions) {
  std::sort(actions.begin(), actions.end());
  actions.erase(std::unique(actions.begin(), actions.end()), actions.end());
  game_.actions_at[v][p] = std::move(actions);
}

void GameBuilder::add_edge(VertexId from, VertexId to) {
  auto& es = game_.out[from];
  auto it = std::lower_bound(es.begin(), es.end(), to,
                             [](const ConcurrentGame::OutEdge& e, VertexId t) { return e.to < t; });
  if (it != es.end() && it->to == to) return;
  ConcurrentGame::OutEdge e;
  e.to = to;
  e.w.assign(game_.num_players, 0);
  es.insert(it, std::move(e));
}

void GameBuilder::set_weight(VertexId from, VertexId to, PlayerId p, Weight w) {
  add_edge(from, to);
  auto& es = game_.out[from];
  auto it = std::lower_bound(es.begin(), es.end(), to,
                             [](const ConcurrentGame::OutEdge& e, VertexId t) { return e.to < t; });
  it->w[p] = w;
}

void GameBuilder::set_next(VertexId v, std::span<const ActionId> profile, VertexId to) {
  next_entries_[v].emplace_back(std::vector<ActionId>(profile.begin(), profile.end()), to);
}

ActionId GameBuilder::action(PlayerId p, std::string_view name) const {
  const auto& names = game_.action_names[p];
  for (std::size_t a = 0; a < names.size(); ++a)
    if (names[a] == name) return static_cast<ActionId>(a);
  return -1;
}

ConcurrentGame GameBuilder::build(bool normalize) {
  game_.next_flat.assign(game_.num_vertices(), {});
  for (VertexId v = 0; v < game_.num_vertices(); ++v) {
    game_.next_flat[v].assign(game_.profile_count(v), -1);
    for (const auto& [profile, to] : next_entries_[v])
      game_.next_flat[v][game_.profile_rank(v, profile)] = to;
  }
  if (normalize) normalize_targets(game_);
  game_.reindex_edges();
  return std::move(game_);
}

void normalize_targets(ConcurrentGame& g) {
  for (PlayerId i = 0; i < g.num_players; ++i)
    if (g.action_names[i].empty())
      throw std::invalid_argument("player " + std::to_string(i + 1) +
                                  " has no actions; targets cannot be normalized");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_target[v]) continue;
    for (PlayerId i = 0; i < g.num_players; ++i) g.actions_at[v][i] = {0};
    ConcurrentGame::OutEdge loop;
    loop.to = v;
    loop.w.assign(g.num_players, 0);
    g.out[v] = {std::move(loop)};
    g.next_flat[v] = {v};
  }
  g.reindex_edges();
}

bool is_valid_play(const ConcurrentGame& g, std::span<const VertexId> vs) {
  if (vs.empty()) return false;
  for (std::size_t k = 0; k + 1 < vs.size(); ++k)
    if (!g.has_edge(vs[k], vs[k + 1])) return false;
  return true;
}

bool is_valid_play(const ConcurrentGame& g, const Play& p) {
  if (!is_valid_play(g, p.prefix)) return false;
  if (p.cycle.empty()) return true;
  if (!g.has_edge(p.prefix.back(), p.cycle.front())) return false;
  for (std::size_t k = 0; k + 1 < p.cycle.size(); ++k)
    if (!g.has_edge(p.cycle[k], p.cycle[k + 1])) return false;
  return g.has_edge(p.cycle.back(), p.cycle.front());
}

std::string play_str(const ConcurrentGame& g, std::span<const VertexId> vs) {
  std::string s;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) s += ' ';
    s += g.name(vs[k]);
  }
  return s;
}

}  // namespace mcr
