#include "mcr/transforms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "mcr/semantics.hpp"

namespace mcr {

BoundCertificate bound_below_certificate(const ConcurrentGame& g, PlayerId player,
                                         VertexId initial) {
  if (player < 0 || player >= g.num_players)
    throw std::invalid_argument("unknown player index " + std::to_string(player + 1));
  const int n = g.num_vertices();

  // Bellman-Ford on prefix sums of player weights over E; a relaxation in
  // sweep n certifies a reachable negative cycle.
  constexpr Weight unreached = std::numeric_limits<Weight>::max();
  std::vector<Weight> dist(n, unreached);
  std::vector<VertexId> pred(n, -1);
  dist[initial] = 0;
  VertexId touched = -1;
  for (int sweep = 0; sweep < n; ++sweep) {
    touched = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (dist[v] == unreached) continue;
      for (const auto& e : g.out[v]) {
        Weight cand = dist[v] + e.w[player];
        if (cand < dist[e.to]) {
          dist[e.to] = cand;
          pred[e.to] = v;
          touched = e.to;
        }
      }
    }
    if (touched < 0) break;
  }

  BoundCertificate cert;
  cert.player = player;
  cert.initial = initial;
  if (touched >= 0) {
    // a relaxation in sweep n certifies a negative cycle; any cycle of the
    // predecessor graph is such a cycle, found by walking pred with colors
    std::vector<int> color(n, 0);  // 0 new, 1 current walk, 2 done
    for (VertexId u = 0; u < n && cert.witness_cycle.empty(); ++u) {
      VertexId v = u;
      std::vector<VertexId> walk;
      while (v >= 0 && color[v] == 0) {
        color[v] = 1;
        walk.push_back(v);
        v = pred[v];
      }
      if (v >= 0 && color[v] == 1) {
        std::vector<VertexId> cycle{v};
        for (VertexId x = pred[v]; x != v; x = pred[x]) cycle.push_back(x);
        std::reverse(cycle.begin(), cycle.end());
        cert.witness_cycle = std::move(cycle);
      }
      for (VertexId x : walk) color[x] = 2;
    }
    if (cert.witness_cycle.empty())
      throw std::logic_error("negative cycle detected but no witness found");
    return cert;
  }
  Weight lowest = 0;
  for (VertexId v = 0; v < n; ++v)
    if (dist[v] != unreached) lowest = std::min(lowest, dist[v]);
  cert.bound = -lowest;
  return cert;
}

VertexId NonnegativeGame::vertex_of(VertexId base, Weight debt) const {
  if (base < 0 || base >= static_cast<VertexId>(index_.size())) return -1;
  for (const auto& [d, v] : index_[base])
    if (d == debt) return v;
  return -1;
}

NonnegativeGame to_nonnegative(const ConcurrentGame& g, const BoundCertificate& cert) {
  if (!cert.is_bounded())
    throw std::invalid_argument("cannot build the non-negative game from an unbounded certificate");
  const PlayerId i = cert.player;
  const Weight b = *cert.bound;

  NonnegativeGame gp;
  gp.player = i;
  gp.bound = b;
  gp.index_.resize(g.num_vertices());

  GameBuilder builder(g.num_players);
  for (PlayerId j = 0; j < g.num_players; ++j)
    for (const auto& a : g.action_names[j]) builder.add_action(j, a);

  auto intern = [&](VertexId base, Weight debt) -> VertexId {
    for (const auto& [d, v] : gp.index_[base])
      if (d == debt) return v;
    VertexId v = builder.add_vertex(g.name(base) + "@" + std::to_string(debt));
    gp.index_[base].emplace_back(debt, v);
    gp.base_of.push_back(base);
    gp.debt_of.push_back(debt);
    for (PlayerId j = 0; j < g.num_players; ++j) {
      auto avail = g.actions_at[base][j];
      builder.set_actions(v, j, std::move(avail));
    }
    return v;
  };

  gp.start = intern(cert.initial, 0);
  std::deque<VertexId> work{gp.start};
  while (!work.empty()) {
    VertexId v = work.front();
    work.pop_front();
    VertexId base = gp.base_of[v];
    Weight debt = gp.debt_of[v];
    if (g.is_target[base]) continue;  // resolved after the sink exists
    for (const auto& e : g.out[base]) {
      const Weight shifted = debt + e.w[i];
      const Weight debt2 = std::min<Weight>(0, shifted);
      if (debt2 < -b)
        throw std::logic_error("debt fell below the certified bound: bad certificate");
      bool fresh = gp.vertex_of(e.to, debt2) < 0;
      VertexId u = intern(e.to, debt2);
      if (fresh) work.push_back(u);
      builder.add_edge(v, u);
      builder.set_weight(v, u, i, std::max<Weight>(0, shifted));
      for (PlayerId j = 0; j < g.num_players; ++j)
        if (j != i) builder.set_weight(v, u, j, e.w[j]);
    }
    const std::size_t nprof = g.profile_count(base);
    for (std::size_t r = 0; r < nprof; ++r) {
      VertexId succ = g.next_flat[base][r];
      if (succ < 0) continue;
      Weight debt2 = std::min<Weight>(0, debt + g.weight(base, succ, i));
      builder.set_next(v, g.profile_at(base, r), gp.vertex_of(succ, debt2));
    }
  }

  // fresh sink target; every reached (old target, debt) pays b + debt there
  gp.sink = builder.add_vertex("sink", true);
  gp.base_of.push_back(-1);
  gp.debt_of.push_back(0);
  for (VertexId base = 0; base < g.num_vertices(); ++base) {
    if (!g.is_target[base]) continue;
    for (const auto& [debt, v] : gp.index_[base]) {
      builder.add_edge(v, gp.sink);
      builder.set_weight(v, gp.sink, i, b + debt);
      const std::size_t nprof = g.profile_count(base);
      for (std::size_t r = 0; r < nprof; ++r)
        builder.set_next(v, g.profile_at(base, r), gp.sink);
    }
  }
  builder.set_initial(gp.start);
  gp.game = builder.build();
  return gp;
}

Strategy lift_strategy(const NonnegativeGame& gp, const ConcurrentGame& base, const Strategy& s) {
  Strategy::Machine m;
  m.num_states = s.num_states();
  m.action.assign(m.num_states, std::vector<ActionId>(gp.game.num_vertices(), -1));
  m.step.assign(m.num_states, std::vector<int>(gp.game.num_edges(), 0));
  for (int st = 0; st < m.num_states; ++st)
    for (VertexId v = 0; v < gp.game.num_vertices(); ++v) {
      VertexId b = gp.base_of[v];
      if (b < 0) continue;
      // old targets are plain vertices of G'; their single forced move
      // to the sink is action 0 for every player
      m.action[st][v] = base.is_target[b] ? 0 : s.act(st, b);
    }
  for (VertexId v = 0; v < gp.game.num_vertices(); ++v)
    for (const auto& e : gp.game.out[v]) {
      int idx = gp.game.edge_index(v, e.to);
      VertexId bf = gp.base_of[v], bt = gp.base_of[e.to];
      for (int st = 0; st < m.num_states; ++st)
        m.step[st][idx] =
            (bf >= 0 && bt >= 0) ? s.advance(base, st, bf, bt) : st;
    }
  return Strategy::machine(std::move(m));
}

Strategy project_strategy(const NonnegativeGame& gp, const ConcurrentGame& base,
                          const Strategy& s) {
  // memory = (machine state of s, debt); the debt replays the G' vertex
  const PlayerId i = gp.player;
  std::vector<Weight> debts;
  for (Weight d = -gp.bound; d <= 0; ++d) debts.push_back(d);
  const int nd = static_cast<int>(debts.size());
  auto debt_slot = [&](Weight d) { return static_cast<int>(d + gp.bound); };

  Strategy::Machine m;
  m.num_states = s.num_states() * nd;
  m.action.assign(m.num_states, std::vector<ActionId>(base.num_vertices(), -1));
  m.step.assign(m.num_states, std::vector<int>(base.num_edges(), 0));
  auto enc = [&](int st, int dslot) { return st * nd + dslot; };
  // initial memory must be (state 0, debt 0)
  // -> encode debt relative so that enc(0, slot(0)) == 0: remap via xor trick
  const int zero_slot = debt_slot(0);
  auto code = [&](int st, int dslot) {
    int c = enc(st, dslot);
    int z = enc(0, zero_slot);
    return c == z ? 0 : (c == 0 ? z : c);
  };
  for (int st = 0; st < s.num_states(); ++st)
    for (int ds = 0; ds < nd; ++ds)
      for (VertexId v = 0; v < base.num_vertices(); ++v) {
        VertexId vp = gp.vertex_of(v, debts[ds]);
        if (vp >= 0) m.action[code(st, ds)][v] = s.act(st, vp);
      }
  for (VertexId v = 0; v < base.num_vertices(); ++v)
    for (const auto& e : base.out[v]) {
      int idx = base.edge_index(v, e.to);
      for (int st = 0; st < s.num_states(); ++st)
        for (int ds = 0; ds < nd; ++ds) {
          Weight debt2 = std::min<Weight>(0, debts[ds] + e.w[i]);
          if (debt2 < -gp.bound) debt2 = -gp.bound;  // unreachable in valid plays
          VertexId vp = gp.vertex_of(v, debts[ds]);
          VertexId up = gp.vertex_of(e.to, debt2);
          int st2 = (vp >= 0 && up >= 0) ? s.advance(gp.game, st, vp, up) : st;
          m.step[code(st, ds)][idx] = code(st2, debt_slot(debt2));
        }
    }
  return Strategy::machine(std::move(m));
}

std::vector<VertexId> TurnifiedGame::project_play(std::span<const VertexId> tplay) const {
  std::vector<VertexId> base;
  for (VertexId v : tplay)
    if (stage_of[v] == 0) base.push_back(base_of[v]);
  return base;
}

TurnifiedGame turnify_round_robin(const ConcurrentGame& g, std::span<const PlayerId> order) {
  std::vector<PlayerId> o(order.begin(), order.end());
  return turnify_round_robin(g, [o](VertexId) { return o; });
}

TurnifiedGame turnify_round_robin(const ConcurrentGame& g,
                                  const std::function<std::vector<PlayerId>(VertexId)>& order_at) {
  const int N = g.num_players;
  TurnifiedGame t;
  GameBuilder builder(N);
  for (PlayerId j = 0; j < N; ++j) {
    for (const auto& a : g.action_names[j]) builder.add_action(j, a);
    builder.add_action(j, "-wait-");
  }
  std::vector<ActionId> waits(N);
  for (PlayerId j = 0; j < N; ++j) waits[j] = static_cast<ActionId>(g.action_names[j].size());

  auto add_vertex = [&](std::string name, VertexId base, int stage, PlayerId mover,
                        bool target) -> VertexId {
    VertexId v = builder.add_vertex(std::move(name), target);
    t.base_of.push_back(base);
    t.stage_of.push_back(stage);
    t.mover_of.push_back(mover);
    return v;
  };

  t.order_of.resize(g.num_vertices());
  t.stage0_of.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::vector<PlayerId> order = order_at(v);
    if (static_cast<int>(order.size()) != N)
      throw std::invalid_argument("turnification order must list every player once");
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (PlayerId j = 0; j < N; ++j)
      if (sorted[j] != j) throw std::invalid_argument("turnification order is not a permutation");
    t.order_of[v] = std::move(order);
    t.stage0_of[v] = add_vertex(g.name(v), v, 0, g.is_target[v] ? -1 : t.order_of[v][0],
                                g.is_target[v]);
  }

  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.is_target[v]) continue;  // normalized self-loop, added below
    const auto& order = t.order_of[v];
    // stage vertices roll up the partial choices of earlier movers
    struct Pending {
      VertexId vertex;
      std::vector<ActionId> chosen;  // full profile, unchosen slots = -1
    };
    std::vector<Pending> layer{{t.stage0_of[v], std::vector<ActionId>(N, -1)}};
    for (int stage = 0; stage < N; ++stage) {
      const PlayerId mover = order[stage];
      const bool last = stage == N - 1;
      std::vector<Pending> next_layer;
      for (auto& p : layer) {
        builder.set_actions(p.vertex, mover, g.actions_at[v][mover]);
        for (PlayerId j = 0; j < N; ++j)
          if (j != mover) builder.set_actions(p.vertex, j, {waits[j]});
        for (ActionId a : g.actions_at[v][mover]) {
          auto chosen = p.chosen;
          chosen[mover] = a;
          std::vector<ActionId> stage_profile(N);
          for (PlayerId j = 0; j < N; ++j) stage_profile[j] = (j == mover) ? a : waits[j];
          if (last) {
            VertexId succ = g.next_flat[v][g.profile_rank(v, chosen)];
            if (succ < 0)
              throw std::invalid_argument("next undefined at vertex " + g.name(v) +
                                          "; turnification needs a complete next table");
            VertexId tsucc = t.stage0_of[succ];
            builder.add_edge(p.vertex, tsucc);
            for (PlayerId j = 0; j < N; ++j)
              builder.set_weight(p.vertex, tsucc, j, g.weight(v, succ, j));
            builder.set_next(p.vertex, stage_profile, tsucc);
          } else {
            std::string nm = g.name(v) + "|";
            for (PlayerId j = 0; j <= stage; ++j) {
              if (j) nm += ",";
              nm += std::to_string(order[j] + 1) + ":" +
                    g.action_names[order[j]][chosen[order[j]]];
            }
            VertexId u = add_vertex(std::move(nm), v, stage + 1, order[stage + 1], false);
            builder.add_edge(p.vertex, u);  // weight 0 until the final stage
            builder.set_next(p.vertex, stage_profile, u);
            next_layer.push_back({u, std::move(chosen)});
          }
        }
      }
      layer = std::move(next_layer);
    }
  }

  if (g.initial) builder.set_initial(t.stage0_of[*g.initial]);
  t.game = builder.build();
  return t;
}

CoalitionGame coalition_game(const ConcurrentGame& g, PlayerId player,
                             std::span<const VertexId> prefix) {
  if (prefix.empty() || !is_valid_play(g, prefix))
    throw std::invalid_argument("coalition game needs a valid non-empty prefix");
  return coalition_game(g, player, prefix.back());
}

CoalitionGame coalition_game(const ConcurrentGame& g, PlayerId player, VertexId root) {
  if (player < 0 || player >= g.num_players)
    throw std::invalid_argument("unknown player index " + std::to_string(player + 1));
  if (!is_action_visible(g))
    throw std::invalid_argument("coalition games require an action-visible game");

  CoalitionGame cg;
  cg.player = player;
  auto& zs = cg.zs;

  cg.choice_of.assign(g.num_vertices(), -1);
  auto add = [&](std::string name, bool target, bool max_turn) -> std::int32_t {
    zs.names.push_back(std::move(name));
    zs.is_target.push_back(target);
    zs.max_turn.push_back(max_turn);
    zs.succ.emplace_back();
    cg.info.emplace_back();
    return static_cast<std::int32_t>(zs.names.size()) - 1;
  };

  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    cg.choice_of[v] = add(g.name(v), g.is_target[v], /*max_turn=*/true);
    cg.info[cg.choice_of[v]].base = v;  // choice vertices keep an empty coalition
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::int32_t cv = cg.choice_of[v];
    if (g.is_target[v]) {
      zs.succ[cv].push_back({cv, 0});
      continue;
    }
    // enumerate the coalition's joint choices: profiles modulo player i
    std::vector<std::vector<ActionId>> coalition_choices;
    {
      std::vector<ActionId> cur(g.num_players, -1);
      std::vector<PlayerId> others;
      for (PlayerId j = 0; j < g.num_players; ++j)
        if (j != player) others.push_back(j);
      std::vector<std::size_t> idx(others.size(), 0);
      while (true) {
        for (std::size_t k = 0; k < others.size(); ++k)
          cur[others[k]] = g.actions_at[v][others[k]][idx[k]];
        coalition_choices.push_back(cur);
        std::size_t k = others.size();
        while (k > 0) {
          --k;
          if (++idx[k] < g.actions_at[v][others[k]].size()) break;
          idx[k] = 0;
          if (k == 0) {
            k = others.size() + 1;
            break;
          }
        }
        if (others.empty() || k == others.size() + 1) break;
      }
    }
    for (auto& coalition : coalition_choices) {
      std::int32_t commit = add(g.name(v) + "#", false, /*max_turn=*/false);
      cg.info[commit].base = v;
      cg.info[commit].coalition = coalition;
      zs.succ[cv].push_back({commit, 0});
      auto profile = coalition;
      for (ActionId a : g.actions_at[v][player]) {
        profile[player] = a;
        VertexId u = g.next_flat[v][g.profile_rank(v, profile)];
        if (u < 0) continue;
        std::int32_t cu = cg.choice_of[u];
        Weight w = g.weight(v, u, player);
        auto& es = zs.succ[commit];
        auto it = std::find_if(es.begin(), es.end(),
                               [&](const ZeroSumGame::Succ& s) { return s.to == cu; });
        if (it == es.end()) es.push_back({cu, w});
      }
      std::sort(zs.succ[commit].begin(), zs.succ[commit].end(),
                [](const auto& a, const auto& b) { return a.to < b.to; });
    }
    std::sort(zs.succ[cv].begin(), zs.succ[cv].end(),
              [](const auto& a, const auto& b) { return a.to < b.to; });
  }
  zs.initial = cg.choice_of[root];
  return cg;
}

}  // namespace mcr
