#include "mcr/zerosum.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcr {

Weight ZeroSumGame::max_abs_weight() const {
  Weight w = 0;
  for (const auto& es : succ)
    for (const auto& e : es) w = std::max(w, e.w < 0 ? -e.w : e.w);
  return w;
}

namespace {

// ω + val with +inf absorbing (target unreachable through that successor)
// and -inf absorbing.
ExtCost edge_plus(Weight w, ExtCost val) {
  if (val.is_pos_inf()) return ExtCost::infinity();
  if (val.is_neg_inf()) return ExtCost::minus_infinity();
  return ExtCost(w + val.finite());
}

void pick(const ZeroSumGame& zs, const std::vector<ExtCost>& val, std::int32_t v,
          ExtCost& best, std::int32_t& choice) {
  const bool maxing = zs.max_turn[v];
  best = maxing ? ExtCost::minus_infinity() : ExtCost::infinity();
  choice = -1;
  for (std::size_t k = 0; k < zs.succ[v].size(); ++k) {
    ExtCost c = edge_plus(zs.succ[v][k].w, val[zs.succ[v][k].to]);
    const bool better = maxing ? (c > best) : (c < best);
    if (choice < 0 || better) {
      best = c;
      choice = static_cast<std::int32_t>(k);
    }
  }
}

}  // namespace

ValueMap solve_acyclic(const ZeroSumGame& zs) {
  const int n = zs.num_vertices();
  // iterative DFS topological sort, target self-loops excepted
  std::vector<int> state(n, 0);  // 0 new, 1 open, 2 done
  std::vector<std::int32_t> order;
  order.reserve(n);
  for (std::int32_t root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<std::int32_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, k] = stack.back();
      if (zs.is_target[v] || k == zs.succ[v].size()) {
        state[v] = 2;
        order.push_back(v);
        stack.pop_back();
        continue;
      }
      std::int32_t u = zs.succ[v][k++].to;
      if (u == v) continue;
      if (state[u] == 1)
        throw std::invalid_argument("cycle outside targets through vertex " + zs.names[u]);
      if (state[u] == 0) {
        state[u] = 1;
        stack.emplace_back(u, 0);
      }
    }
  }

  ValueMap vm;
  vm.value.assign(n, ExtCost::infinity());
  vm.choice.assign(n, -1);
  for (std::int32_t v : order) {
    if (zs.is_target[v]) {
      vm.value[v] = ExtCost(0);
      vm.choice[v] = zs.succ[v].empty() ? -1 : 0;
      continue;
    }
    if (zs.succ[v].empty()) continue;  // deadlock: +inf, reported by validation
    pick(zs, vm.value, v, vm.value[v], vm.choice[v]);
  }
  vm.sweeps = 1;
  return vm;
}

ValueMap solve_value_iteration(const ZeroSumGame& zs) {
  const int n = zs.num_vertices();
  const Weight W = zs.max_abs_weight();
  const ExtCost floor = ExtCost(-static_cast<Weight>(n > 0 ? n - 1 : 0) * W);

  ValueMap vm;
  vm.value.assign(n, ExtCost::infinity());
  vm.choice.assign(n, -1);
  for (std::int32_t v = 0; v < n; ++v)
    if (zs.is_target[v]) vm.value[v] = ExtCost(0);

  std::vector<ExtCost> next(vm.value);
  bool changed = true;
  while (changed) {
    changed = false;
    ++vm.sweeps;
    for (std::int32_t v = 0; v < n; ++v) {
      if (zs.is_target[v] || zs.succ[v].empty()) continue;
      ExtCost best;
      std::int32_t choice;
      pick(zs, vm.value, v, best, choice);
      if (best < floor) best = ExtCost::minus_infinity();
      // the iteration is non-increasing from the all +inf start
      if (!(best <= vm.value[v]))
        throw std::logic_error("value iteration increased at vertex " + zs.names[v]);
      next[v] = best;
      if (best != vm.value[v]) changed = true;
    }
    std::swap(vm.value, next);
  }
  for (std::int32_t v = 0; v < n; ++v) {
    if (zs.is_target[v]) {
      vm.choice[v] = zs.succ[v].empty() ? -1 : 0;
    } else if (!zs.succ[v].empty()) {
      ExtCost best;
      pick(zs, vm.value, v, best, vm.choice[v]);
    }
  }
  return vm;
}

ValueMap solve(const ZeroSumGame& zs, SolveMethod method) {
  switch (method) {
    case SolveMethod::backward:
      return solve_acyclic(zs);
    case SolveMethod::iterate:
      return solve_value_iteration(zs);
    case SolveMethod::automatic:
      try {
        return solve_acyclic(zs);
      } catch (const std::invalid_argument&) {
        return solve_value_iteration(zs);
      }
  }
  throw std::logic_error("unknown solve method");
}

ExtCost value(const ZeroSumGame& zs) { return solve(zs).value[zs.initial]; }

}  // namespace mcr
