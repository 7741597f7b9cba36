#include "complexity.hpp"

#include "errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oodq {

int cyclomatic(const ControlFlowGraph& cfg) {
  return static_cast<int>(cfg.edges.size()) - static_cast<int>(cfg.nodes.size()) + 2;
}

int cyclomatic_by_decisions(const ControlFlowGraph& cfg) {
  std::map<int, int> outs;
  for (const CfgEdge& e : cfg.edges) outs[e.from]++;
  int decisions = 0;
  for (const auto& [node, degree] : outs) decisions += std::max(0, degree - 1);
  return decisions + 1;
}

namespace {

// Mutable working graph for the reducers. Node ids are stable; merged
// or removed nodes leave the live set.
struct WorkGraph {
  struct Edge {
    int from, to;
    EdgeLabel label;
  };
  std::vector<Edge> edges;
  std::set<int> live;
  std::vector<char> marked; // design reduction: node contains internal call
  int entry, exit;

  static WorkGraph from_cfg(const ControlFlowGraph& cfg) {
    WorkGraph g;
    g.entry = cfg.entry;
    g.exit = cfg.exit;
    g.marked.assign(cfg.nodes.size(), 0);
    for (std::size_t i = 0; i < cfg.nodes.size(); ++i) g.live.insert(static_cast<int>(i));
    for (const CfgEdge& e : cfg.edges) g.edges.push_back({e.from, e.to, e.label});
    return g;
  }

  int cyclomatic() const {
    return static_cast<int>(edges.size()) - static_cast<int>(live.size()) + 2;
  }

  int out_degree(int n) const {
    int d = 0;
    for (const Edge& e : edges) d += e.from == n ? 1 : 0;
    return d;
  }
  int in_degree(int n) const {
    int d = 0;
    for (const Edge& e : edges) d += e.to == n ? 1 : 0;
    return d;
  }

  // Sequence rule: single edge a->b, out(a)==1, in(b)==1 merges b into a.
  bool try_merge_sequences() {
    for (const Edge& e : edges) {
      int a = e.from, b = e.to;
      if (a == b) continue;
      if (a == entry && b == exit) continue;
      if (out_degree(a) != 1 || in_degree(b) != 1) continue;
      std::vector<Edge> next;
      next.reserve(edges.size());
      for (Edge ed : edges) {
        if (ed.from == a && ed.to == b) continue;
        if (ed.from == b) ed.from = a;
        if (ed.to == b) ed.to = a;
        next.push_back(ed);
      }
      edges = std::move(next);
      live.erase(b);
      if (marked[static_cast<std::size_t>(b)]) marked[static_cast<std::size_t>(a)] = 1;
      if (exit == b) exit = a;
      return true;
    }
    return false;
  }

  bool try_drop_self_loop(bool require_unmarked) {
    for (const Edge& e : edges) {
      if (e.from != e.to) continue;
      if (e.label == EdgeLabel::Jump) continue;
      if (out_degree(e.from) != 2) continue;
      if (require_unmarked && marked[static_cast<std::size_t>(e.from)]) continue;
      int n = e.from;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].from == n && edges[i].to == n) {
          edges.erase(edges.begin() + static_cast<long>(i));
          return true;
        }
      }
    }
    return false;
  }

  // Branch rule; see tests/reduction_oracle.hpp for the shared contract.
  bool try_collapse_branch(int d) {
    if (out_degree(d) < 2) return false;

    // Pure diamond: every out-edge parallels to one reconvergence node.
    // What follows the reconvergence (even a jump) is outside the prime.
    {
      int target = -2;
      bool parallel = true;
      for (const Edge& e : edges) {
        if (e.from != d) continue;
        if (target == -2) target = e.to;
        else if (target != e.to) parallel = false;
      }
      if (parallel && target != d) {
        std::vector<Edge> next;
        for (const Edge& e : edges)
          if (e.from != d) next.push_back(e);
        next.push_back({d, target, EdgeLabel::Fallthrough});
        edges = std::move(next);
        return true;
      }
      if (parallel) return false; // all edges self-looped; not ours
    }

    bool strict = false;
    for (const Edge& e : edges)
      if (e.from == d && (e.label == EdgeLabel::True || e.label == EdgeLabel::False))
        strict = true;

    std::set<int> relays;
    int join = -1;
    for (const Edge& e : edges) {
      if (e.from != d) continue;
      int t = e.to;
      if (t == d) return false;
      bool relay = t != entry && t != exit && out_degree(t) == 1;
      if (relay)
        for (const Edge& in : edges)
          if (in.to == t && in.from != d) relay = false;
      if (relay) {
        int cont = -1;
        EdgeLabel cont_label = EdgeLabel::Fallthrough;
        for (const Edge& oe : edges)
          if (oe.from == t) { cont = oe.to; cont_label = oe.label; }
        if (cont == d) return false; // loop-shaped: the while rule owns it
        if (strict && cont_label == EdgeLabel::Jump) return false;
        relays.insert(t);
        if (join == -1) join = cont;
        else if (join != cont) return false;
      } else {
        if (join == -1) join = t;
        else if (join != t) return false;
      }
    }
    if (join == -1 || join == d || relays.count(join)) return false;

    std::vector<Edge> next;
    for (const Edge& e : edges) {
      if (e.from == d) continue;
      if (relays.count(e.from) || relays.count(e.to)) continue;
      next.push_back(e);
    }
    next.push_back({d, join, EdgeLabel::Fallthrough});
    edges = std::move(next);
    for (int r : relays) live.erase(r);
    return true;
  }

  // While rule: D -> B, B fed only by D, single back edge B -> D.
  bool try_collapse_while(int d, bool require_unmarked_body) {
    if (out_degree(d) != 2) return false;
    for (const Edge& e : edges) {
      if (e.from != d) continue;
      int b = e.to;
      if (b == d || b == entry || b == exit) continue;
      if (out_degree(b) != 1) continue;
      if (require_unmarked_body && marked[static_cast<std::size_t>(b)]) continue;
      bool fed_only_by_d = true;
      for (const Edge& in : edges)
        if (in.to == b && in.from != d) fed_only_by_d = false;
      if (!fed_only_by_d) continue;
      int back = -1;
      for (const Edge& oe : edges)
        if (oe.from == b) back = oe.to;
      if (back != d) continue;
      std::vector<Edge> next;
      for (const Edge& ed : edges)
        if (ed.from != b && ed.to != b) next.push_back(ed);
      edges = std::move(next);
      live.erase(b);
      return true;
    }
    return false;
  }

  // Immediate postdominators over live nodes (exit is the root).
  std::map<int, int> postdominators() const {
    std::vector<int> order; // reverse BFS from exit over reversed edges
    std::map<int, std::set<int>> preds_of; // successors in reversed view
    for (const Edge& e : edges) preds_of[e.to].insert(e.from);
    std::map<int, int> ipdom;
    ipdom[exit] = exit;
    // iterative dataflow: pdom sets, small graphs only
    std::map<int, std::set<int>> pdom;
    std::set<int> all(live.begin(), live.end());
    for (int n : live) pdom[n] = n == exit ? std::set<int>{exit} : all;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int n : live) {
        if (n == exit) continue;
        std::set<int> meet;
        bool first = true;
        for (const Edge& e : edges) {
          if (e.from != n) continue;
          if (first) {
            meet = pdom[e.to];
            first = false;
          } else {
            std::set<int> inter;
            std::set_intersection(meet.begin(), meet.end(), pdom[e.to].begin(),
                                  pdom[e.to].end(), std::inserter(inter, inter.begin()));
            meet = std::move(inter);
          }
        }
        meet.insert(n);
        if (meet != pdom[n]) {
          pdom[n] = std::move(meet);
          changed = true;
        }
      }
    }
    for (int n : live) {
      if (n == exit) continue;
      // the immediate postdominator is the strict postdominator whose
      // own set contains every other strict postdominator of n
      int best = exit;
      std::size_t best_size = 0;
      for (int p : pdom[n]) {
        if (p == n) continue;
        if (pdom[p].size() > best_size) {
          best = p;
          best_size = pdom[p].size();
        }
      }
      ipdom[n] = best;
    }
    return ipdom;
  }
};

} // namespace

int essential(const ControlFlowGraph& cfg) {
  WorkGraph g = WorkGraph::from_cfg(cfg);
  bool changed = true;
  while (changed) {
    changed = false;
    if (g.try_merge_sequences()) { changed = true; continue; }
    if (g.try_drop_self_loop(false)) { changed = true; continue; }
    for (int d : std::vector<int>(g.live.begin(), g.live.end())) {
      if (g.try_collapse_branch(d)) { changed = true; break; }
      if (g.try_collapse_while(d, false)) { changed = true; break; }
    }
  }
  return std::max(1, g.cyclomatic());
}

int design_complexity(const ControlFlowGraph& cfg,
                      const std::function<bool(int)>& is_internal_call) {
  WorkGraph g = WorkGraph::from_cfg(cfg);
  for (std::size_t i = 0; i < cfg.nodes.size(); ++i)
    for (int call : cfg.nodes[i].calls)
      if (is_internal_call(call)) g.marked[i] = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    if (g.try_merge_sequences()) { changed = true; continue; }
    if (g.try_drop_self_loop(true)) { changed = true; continue; }

    // Region rule: a decision whose whole span to its immediate
    // postdominator is unmarked carries no call-relevant control.
    auto ipdom = g.postdominators();
    for (int d : std::vector<int>(g.live.begin(), g.live.end())) {
      if (g.out_degree(d) < 2) continue;
      auto it = ipdom.find(d);
      if (it == ipdom.end()) continue;
      int join = it->second;
      if (join == d) continue;
      // region: nodes reachable from d without passing through join
      std::set<int> region;
      std::vector<int> work;
      for (const WorkGraph::Edge& e : g.edges)
        if (e.from == d && e.to != join && e.to != d) work.push_back(e.to);
      bool blocked = false;
      while (!work.empty()) {
        int n = work.back();
        work.pop_back();
        if (n == join || n == d || region.count(n)) continue;
        region.insert(n);
        if (g.marked[static_cast<std::size_t>(n)]) { blocked = true; break; }
        for (const WorkGraph::Edge& e : g.edges)
          if (e.from == n && e.to != join) work.push_back(e.to);
      }
      if (blocked) continue;
      // side entrances keep the region alive
      for (const WorkGraph::Edge& e : g.edges)
        if (region.count(e.to) && e.from != d && !region.count(e.from)) blocked = true;
      if (blocked) continue;

      std::vector<WorkGraph::Edge> next;
      for (const WorkGraph::Edge& e : g.edges) {
        if (e.from == d) continue;
        if (region.count(e.from) || region.count(e.to)) continue;
        next.push_back(e);
      }
      next.push_back({d, join, EdgeLabel::Fallthrough});
      g.edges = std::move(next);
      for (int r : region) g.live.erase(r);
      changed = true;
      break;
    }
  }
  return std::max(1, g.cyclomatic());
}

int design_complexity(const ControlFlowGraph& cfg, const MethodModel& method,
                      const ProjectModel& project) {
  return design_complexity(cfg, [&](int call_index) {
    if (call_index < 0 || call_index >= static_cast<int>(method.invocations.size()))
      return false;
    const CallSite& call = method.invocations[static_cast<std::size_t>(call_index)];
    if (!call.receiver_type) return false;
    if (call.receiver_type->resolved) return true;
    // unresolved names may still be the project class itself (bare calls
    // record the qualified owner name before resolution)
    return project.index_of(call.receiver_type->name) >= 0;
  });
}

const char* scatter_quadrant_name(ScatterQuadrant quadrant) {
  switch (quadrant) {
  case ScatterQuadrant::ReliableMaintainable: return "reliable_maintainable";
  case ScatterQuadrant::ReliableUnmaintainable: return "reliable_unmaintainable";
  case ScatterQuadrant::UnreliableMaintainable: return "unreliable_maintainable";
  case ScatterQuadrant::UnreliableUnmaintainable: return "unreliable_unmaintainable";
  }
  return "reliable_maintainable";
}

ScatterQuadrant scatter_quadrant(int v, int ev) {
  if (ev > v) fail(ErrorCode::DomainError, "essential complexity exceeds cyclomatic");
  if (ev <= 4) {
    return v <= 10 ? ScatterQuadrant::ReliableMaintainable
                   : ScatterQuadrant::ReliableUnmaintainable;
  }
  return v <= 10 ? ScatterQuadrant::UnreliableMaintainable
                 : ScatterQuadrant::UnreliableUnmaintainable;
}

} // namespace oodq
