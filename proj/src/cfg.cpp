#include "cfg.hpp"

#include "errors.hpp"

#include <string>

namespace oodq {

const char* edge_label_name(EdgeLabel label) {
  switch (label) {
  case EdgeLabel::True: return "true";
  case EdgeLabel::False: return "false";
  case EdgeLabel::Case: return "case";
  case EdgeLabel::Exception: return "exception";
  case EdgeLabel::Fallthrough: return "fallthrough";
  case EdgeLabel::Jump: return "jump";
  }
  return "fallthrough";
}

int ControlFlowGraph::out_degree(int node) const {
  int d = 0;
  for (const CfgEdge& e : edges) d += e.from == node ? 1 : 0;
  return d;
}

int ControlFlowGraph::in_degree(int node) const {
  int d = 0;
  for (const CfgEdge& e : edges) d += e.to == node ? 1 : 0;
  return d;
}

namespace {

// A dangling edge waiting for its target.
struct Dangler {
  int from;
  EdgeLabel label;
};

struct LoopCtx {
  std::string label;        // statement label, possibly empty
  bool is_loop;             // switches accept break only
  int continue_target = -1; // loop head
  std::vector<Dangler>* break_sink = nullptr;
};

class Builder {
public:
  Builder(const CfgOptions& options, std::vector<std::string>* warnings)
      : options_(options), warnings_(warnings) {
    graph_.nodes.resize(2); // entry, exit
    graph_.entry = 0;
    graph_.exit = 1;
  }

  ControlFlowGraph build(const Statement& body) {
    std::vector<Dangler> tails = lower(body, {{graph_.entry, EdgeLabel::Fallthrough}});
    connect_all(tails, graph_.exit);
    drop_unreachable();
    return std::move(graph_);
  }

private:
  int new_node(const Statement& stmt) {
    CfgNode node;
    node.calls = stmt.calls;
    node.line = stmt.line;
    graph_.nodes.push_back(std::move(node));
    return static_cast<int>(graph_.nodes.size()) - 1;
  }

  int new_plain_node(int line) {
    CfgNode node;
    node.line = line;
    graph_.nodes.push_back(std::move(node));
    return static_cast<int>(graph_.nodes.size()) - 1;
  }

  void connect_all(const std::vector<Dangler>& from, int to) {
    for (const Dangler& d : from) graph_.edges.push_back({d.from, to, d.label});
  }

  void warn(const std::string& message) {
    if (warnings_) warnings_->push_back(message);
  }

  // Decision diamonds for short-circuit / conditional operators in the
  // statement's header expressions. Each one is a 2-way node whose arms
  // reconverge immediately.
  std::vector<Dangler> lower_op_diamonds(const Statement& stmt, std::vector<Dangler> in) {
    if (!options_.count_short_circuit) return in;
    int count = stmt.short_circuit_ops + stmt.conditional_ops;
    for (int i = 0; i < count; ++i) {
      int d = new_plain_node(stmt.line);
      connect_all(in, d);
      in = {{d, EdgeLabel::True}, {d, EdgeLabel::False}};
    }
    return in;
  }

  std::vector<Dangler> lower(const Statement& stmt, std::vector<Dangler> in) {
    switch (stmt.kind) {
    case StmtKind::Sequence:
    case StmtKind::Block: {
      // A Block from `synchronized (expr)` carries header stats; give
      // them a node ahead of the body.
      if (stmt.short_circuit_ops || stmt.conditional_ops || !stmt.calls.empty()) {
        in = lower_op_diamonds(stmt, std::move(in));
        int n = new_node(stmt);
        connect_all(in, n);
        in = {{n, EdgeLabel::Fallthrough}};
      }
      for (std::size_t i = 0; i < stmt.children.size(); ++i) {
        if (in.empty()) {
          warn("unreachable code dropped at line " +
               std::to_string(stmt.children[i].line));
          break;
        }
        in = lower(stmt.children[i], std::move(in));
      }
      return in;
    }
    case StmtKind::Expression:
    case StmtKind::LocalDecl: {
      in = lower_op_diamonds(stmt, std::move(in));
      int n = new_node(stmt);
      connect_all(in, n);
      return {{n, EdgeLabel::Fallthrough}};
    }
    case StmtKind::If: {
      in = lower_op_diamonds(stmt, std::move(in));
      int d = new_node(stmt);
      connect_all(in, d);
      auto then_tails = lower(stmt.children[0], {{d, EdgeLabel::True}});
      then_tails.push_back({d, EdgeLabel::False});
      return then_tails;
    }
    case StmtKind::IfElse: {
      in = lower_op_diamonds(stmt, std::move(in));
      int d = new_node(stmt);
      connect_all(in, d);
      auto tails = lower(stmt.children[0], {{d, EdgeLabel::True}});
      auto else_tails = lower(stmt.children[1], {{d, EdgeLabel::False}});
      tails.insert(tails.end(), else_tails.begin(), else_tails.end());
      return tails;
    }
    case StmtKind::While:
    case StmtKind::For: {
      // Header operators re-evaluate each iteration: the op chain sits
      // at the loop head and receives the back edges.
      int head;
      std::vector<Dangler> cond_in;
      int op_count = options_.count_short_circuit
                         ? stmt.short_circuit_ops + stmt.conditional_ops
                         : 0;
      int d;
      if (op_count > 0) {
        head = new_plain_node(stmt.line);
        connect_all(in, head);
        cond_in = {{head, EdgeLabel::True}, {head, EdgeLabel::False}};
        for (int i = 1; i < op_count; ++i) {
          int o = new_plain_node(stmt.line);
          connect_all(cond_in, o);
          cond_in = {{o, EdgeLabel::True}, {o, EdgeLabel::False}};
        }
        d = new_node(stmt);
        connect_all(cond_in, d);
      } else {
        d = new_node(stmt);
        connect_all(in, d);
        head = d;
      }
      std::vector<Dangler> breaks;
      loops_.push_back({stmt.label, true, head, &breaks});
      auto body_tails = lower(stmt.children[0], {{d, EdgeLabel::True}});
      loops_.pop_back();
      connect_all(body_tails, head);
      std::vector<Dangler> out{{d, EdgeLabel::False}};
      out.insert(out.end(), breaks.begin(), breaks.end());
      return out;
    }
    case StmtKind::DoWhile: {
      // Condition chain is created first so continue has a target.
      int op_count = options_.count_short_circuit
                         ? stmt.short_circuit_ops + stmt.conditional_ops
                         : 0;
      std::vector<int> chain;
      for (int i = 0; i < op_count; ++i) chain.push_back(new_plain_node(stmt.line));
      int d = new_node(stmt);
      chain.push_back(d);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        graph_.edges.push_back({chain[i], chain[i + 1], EdgeLabel::True});
        graph_.edges.push_back({chain[i], chain[i + 1], EdgeLabel::False});
      }
      int cond_head = chain.front();
      std::vector<Dangler> breaks;
      loops_.push_back({stmt.label, true, cond_head, &breaks});
      in.push_back({d, EdgeLabel::True}); // loop back to the body head
      auto body_tails = lower(stmt.children[0], std::move(in));
      loops_.pop_back();
      connect_all(body_tails, cond_head);
      std::vector<Dangler> out{{d, EdgeLabel::False}};
      out.insert(out.end(), breaks.begin(), breaks.end());
      return out;
    }
    case StmtKind::Switch: {
      in = lower_op_diamonds(stmt, std::move(in));
      int s = new_node(stmt);
      connect_all(in, s);
      std::vector<Dangler> breaks;
      loops_.push_back({stmt.label, false, -1, &breaks});
      std::vector<Dangler> falls; // previous group's fall-through tails
      for (std::size_t g = 0; g < stmt.children.size(); ++g) {
        std::vector<Dangler> group_in = falls;
        int labels = g < stmt.group_labels.size() ? stmt.group_labels[g] : 1;
        for (int l = 0; l < labels; ++l) group_in.push_back({s, EdgeLabel::Case});
        falls = lower(stmt.children[g], std::move(group_in));
      }
      loops_.pop_back();
      std::vector<Dangler> out = std::move(falls);
      if (!stmt.has_default) out.push_back({s, EdgeLabel::Case}); // no match: skip
      out.insert(out.end(), breaks.begin(), breaks.end());
      return out;
    }
    case StmtKind::Try: {
      // Guarded body; exception edges leave from one node, the region's
      // exit (a synthetic join when the body ends in several places).
      int before = static_cast<int>(graph_.nodes.size());
      std::vector<Dangler> body_tails;
      if (stmt.children.empty()) {
        body_tails = std::move(in);
      } else {
        body_tails = lower(stmt.children[0], std::move(in));
      }
      bool body_made_nodes = static_cast<int>(graph_.nodes.size()) > before;
      int guard;
      if (!body_made_nodes) {
        guard = new_node(stmt); // empty try body: explicit guard node
        connect_all(body_tails, guard);
        body_tails = {{guard, EdgeLabel::Fallthrough}};
      } else if (body_tails.empty()) {
        guard = static_cast<int>(graph_.nodes.size()) - 1; // body never falls out
      } else {
        // A fresh region-exit node keeps exception edges off body
        // structure (a tail that is a loop head must stay reducible).
        guard = new_plain_node(stmt.line);
        connect_all(body_tails, guard);
        body_tails = {{guard, EdgeLabel::Fallthrough}};
      }
      std::vector<Dangler> tails = body_tails;
      for (int c = 0; c < stmt.catch_count; ++c) {
        const Statement& handler = stmt.children[static_cast<std::size_t>(1 + c)];
        auto catch_tails = lower(handler, {{guard, EdgeLabel::Exception}});
        tails.insert(tails.end(), catch_tails.begin(), catch_tails.end());
      }
      if (stmt.has_finally) {
        const Statement& fin = stmt.children.back();
        return lower(fin, std::move(tails));
      }
      return tails;
    }
    case StmtKind::Return:
    case StmtKind::Throw: {
      in = lower_op_diamonds(stmt, std::move(in));
      int n = new_node(stmt);
      connect_all(in, n);
      graph_.edges.push_back({n, graph_.exit, EdgeLabel::Jump});
      return {};
    }
    case StmtKind::Break: {
      int n = new_node(stmt);
      connect_all(in, n);
      std::vector<Dangler>* sink = nullptr;
      for (auto it = loops_.rbegin(); it != loops_.rend(); ++it) {
        if (stmt.labeled ? it->label == stmt.target_label : true) {
          sink = it->break_sink;
          break;
        }
      }
      if (!sink)
        fail(ErrorCode::MalformedBody,
             stmt.labeled ? "break to unknown label '" + stmt.target_label + "'"
                          : "break outside loop or switch");
      sink->push_back({n, EdgeLabel::Jump});
      return {};
    }
    case StmtKind::Continue: {
      int n = new_node(stmt);
      connect_all(in, n);
      int target = -1;
      for (auto it = loops_.rbegin(); it != loops_.rend(); ++it) {
        if (!it->is_loop) continue;
        if (stmt.labeled && it->label != stmt.target_label) continue;
        target = it->continue_target;
        break;
      }
      if (target < 0)
        fail(ErrorCode::MalformedBody,
             stmt.labeled ? "continue to unknown label '" + stmt.target_label + "'"
                          : "continue outside loop");
      graph_.edges.push_back({n, target, EdgeLabel::Jump});
      return {};
    }
    }
    return in;
  }

  // Dead structure (a loop condition whose body never completes, say)
  // leaves nodes without in-edges; they are dropped like any other
  // unreachable code.
  void drop_unreachable() {
    const int n = static_cast<int>(graph_.nodes.size());
    std::vector<char> reach(static_cast<std::size_t>(n), 0);
    std::vector<int> work{graph_.entry};
    reach[static_cast<std::size_t>(graph_.entry)] = 1;
    while (!work.empty()) {
      int cur = work.back();
      work.pop_back();
      for (const CfgEdge& e : graph_.edges) {
        if (e.from == cur && !reach[static_cast<std::size_t>(e.to)]) {
          reach[static_cast<std::size_t>(e.to)] = 1;
          work.push_back(e.to);
        }
      }
    }
    bool all = true;
    for (char r : reach) all = all && r;
    if (all) return;
    warn("dead control structure dropped");
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    ControlFlowGraph compact;
    for (int i = 0; i < n; ++i) {
      if (!reach[static_cast<std::size_t>(i)]) continue;
      remap[static_cast<std::size_t>(i)] = static_cast<int>(compact.nodes.size());
      compact.nodes.push_back(std::move(graph_.nodes[static_cast<std::size_t>(i)]));
    }
    for (const CfgEdge& e : graph_.edges) {
      int f = remap[static_cast<std::size_t>(e.from)];
      int t = remap[static_cast<std::size_t>(e.to)];
      if (f >= 0 && t >= 0) compact.edges.push_back({f, t, e.label});
    }
    compact.entry = remap[static_cast<std::size_t>(graph_.entry)];
    compact.exit = remap[static_cast<std::size_t>(graph_.exit)];
    graph_ = std::move(compact);
  }

  CfgOptions options_;
  std::vector<std::string>* warnings_;
  ControlFlowGraph graph_;
  std::vector<LoopCtx> loops_;
};

} // namespace

ControlFlowGraph build_cfg(const Statement& body, const CfgOptions& options,
                           std::vector<std::string>* warnings) {
  Builder builder(options, warnings);
  return builder.build(body);
}

bool cfg_is_valid(const ControlFlowGraph& cfg) {
  const int n = static_cast<int>(cfg.nodes.size());
  std::vector<char> fwd(static_cast<std::size_t>(n), 0);
  std::vector<int> work{cfg.entry};
  fwd[static_cast<std::size_t>(cfg.entry)] = 1;
  while (!work.empty()) {
    int cur = work.back();
    work.pop_back();
    for (const CfgEdge& e : cfg.edges) {
      if (e.from == cur && !fwd[static_cast<std::size_t>(e.to)]) {
        fwd[static_cast<std::size_t>(e.to)] = 1;
        work.push_back(e.to);
      }
    }
  }
  std::vector<char> bwd(static_cast<std::size_t>(n), 0);
  work.push_back(cfg.exit);
  bwd[static_cast<std::size_t>(cfg.exit)] = 1;
  while (!work.empty()) {
    int cur = work.back();
    work.pop_back();
    for (const CfgEdge& e : cfg.edges) {
      if (e.to == cur && !bwd[static_cast<std::size_t>(e.from)]) {
        bwd[static_cast<std::size_t>(e.from)] = 1;
        work.push_back(e.from);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!fwd[static_cast<std::size_t>(i)] || !bwd[static_cast<std::size_t>(i)])
      return false;
  return true;
}

} // namespace oodq
