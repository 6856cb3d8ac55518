#include "t2p/ir.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

namespace t2p {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Task: return "task";
    case NodeKind::XorGateway: return "xor-gateway";
    case NodeKind::AndGateway: return "and-gateway";
    case NodeKind::StartEvent: return "start-event";
    case NodeKind::EndEvent: return "end-event";
  }
  return "unknown";
}

bool is_gateway(NodeKind kind) {
  return kind == NodeKind::XorGateway || kind == NodeKind::AndGateway;
}

bool is_event(NodeKind kind) {
  return kind == NodeKind::StartEvent || kind == NodeKind::EndEvent;
}

const Node* ProcessGraph::find_node(std::string_view id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_trailing_punct(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?';
}

}  // namespace

std::string canonicalize_label(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (is_ascii_space(c)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  // Drop trailing sentence punctuation, including runs mixed with spaces.
  while (!out.empty() && (is_trailing_punct(out.back()) || out.back() == ' ')) {
    out.pop_back();
  }
  return out;
}

std::vector<Violation> validate_graph(const ProcessGraph& g) {
  std::vector<Violation> out;
  std::set<std::string> seen_ids;
  for (const auto& n : g.nodes) {
    if (!seen_ids.insert(n.id).second) out.push_back({"duplicate-node-id", n.id});
    if (n.kind == NodeKind::Task && canonicalize_label(n.label).empty()) {
      out.push_back({"empty-task-label", n.id});
    }
  }

  std::map<std::string, int> in_degree;
  std::map<std::string, int> out_degree;
  for (const auto& e : g.edges) {
    const Node* src = g.find_node(e.source);
    const Node* tgt = g.find_node(e.target);
    std::string edge_name = e.source + " -> " + e.target;
    if (!src) out.push_back({"dangling-source", e.source});
    if (!tgt) out.push_back({"dangling-target", e.target});
    if (e.condition && (!src || src->kind != NodeKind::XorGateway)) {
      out.push_back({"condition-on-non-xor", edge_name});
    }
    ++out_degree[e.source];
    ++in_degree[e.target];
  }

  int start_count = 0;
  for (const auto& n : g.nodes) {
    if (n.kind == NodeKind::StartEvent) {
      ++start_count;
      if (in_degree[n.id] > 0) out.push_back({"start-has-incoming", n.id});
    }
    if (n.kind == NodeKind::EndEvent && out_degree[n.id] > 0) {
      out.push_back({"end-has-outgoing", n.id});
    }
  }
  if (start_count > 1) out.push_back({"multiple-start-events", std::to_string(start_count)});

  std::map<std::string, std::string> task_lane;  // task id -> first lane seen
  for (const auto& [actor, members] : g.lanes) {
    for (const auto& id : members) {
      const Node* n = g.find_node(id);
      if (!n) {
        out.push_back({"lane-unknown-node", actor + ": " + id});
        continue;
      }
      if (n->kind != NodeKind::Task) {
        out.push_back({"lane-non-task", actor + ": " + id});
        continue;
      }
      auto [it, inserted] = task_lane.emplace(id, actor);
      if (!inserted && it->second != actor) {
        out.push_back({"task-in-multiple-lanes", id});
      }
    }
  }
  return out;
}

bool operator<(const DeclareConstraint& a, const DeclareConstraint& b) {
  return std::tie(a.tmpl, a.activity_a, a.activity_b) <
         std::tie(b.tmpl, b.activity_a, b.activity_b);
}

const char* to_string(DeclareTemplate t) {
  switch (t) {
    case DeclareTemplate::Precedence: return "Precedence";
    case DeclareTemplate::Response: return "Response";
    case DeclareTemplate::Succession: return "Succession";
    case DeclareTemplate::Init: return "Init";
    case DeclareTemplate::End: return "End";
  }
  return "unknown";
}

bool is_unary(DeclareTemplate t) {
  return t == DeclareTemplate::Init || t == DeclareTemplate::End;
}

std::optional<DeclareTemplate> declare_template_from_string(std::string_view name) {
  std::string key = canonicalize_label(name);
  if (key == "precedence") return DeclareTemplate::Precedence;
  if (key == "response") return DeclareTemplate::Response;
  if (key == "succession") return DeclareTemplate::Succession;
  if (key == "init" || key == "initialization") return DeclareTemplate::Init;
  if (key == "end") return DeclareTemplate::End;
  return std::nullopt;
}

const char* to_string(TaskLabel label) {
  switch (label) {
    case TaskLabel::Manual: return "Manual";
    case TaskLabel::User: return "User";
    case TaskLabel::Automated: return "Automated";
  }
  return "unknown";
}

std::optional<TaskLabel> task_label_from_string(std::string_view name) {
  std::string key = canonicalize_label(name);
  if (key.size() > 5 && key.compare(key.size() - 5, 5, " task") == 0) {
    key.erase(key.size() - 5);
  }
  if (key == "manual") return TaskLabel::Manual;
  if (key == "user") return TaskLabel::User;
  if (key == "automated") return TaskLabel::Automated;
  return std::nullopt;
}

const char* to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Task: return "task";
    case EntityKind::Actor: return "actor";
    case EntityKind::Gateway: return "gateway";
    case EntityKind::Event: return "event";
  }
  return "unknown";
}

const char* to_string(RelationType type) {
  switch (type) {
    case RelationType::Flow: return "flow";
    case RelationType::ActorPerformer: return "actor_performer";
  }
  return "unknown";
}

std::optional<EntityKind> entity_kind_from_string(std::string_view name) {
  std::string key = canonicalize_label(name);
  if (key == "task") return EntityKind::Task;
  if (key == "actor") return EntityKind::Actor;
  if (key == "gateway") return EntityKind::Gateway;
  if (key == "event") return EntityKind::Event;
  return std::nullopt;
}

std::optional<RelationType> relation_type_from_string(std::string_view name) {
  std::string key = canonicalize_label(name);
  if (key == "flow") return RelationType::Flow;
  if (key == "actor_performer" || key == "actor performer") return RelationType::ActorPerformer;
  return std::nullopt;
}

const GoldEntity* GoldAnnotation::find_entity(std::string_view id) const {
  for (const auto& e : entities) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

}  // namespace t2p
