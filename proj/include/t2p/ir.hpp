#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace t2p {

// ---------------------------------------------------------------------------
// Imperative process models
// ---------------------------------------------------------------------------

enum class NodeKind { Task, XorGateway, AndGateway, StartEvent, EndEvent };

const char* to_string(NodeKind kind);
bool is_gateway(NodeKind kind);
bool is_event(NodeKind kind);

/// One element of a process graph. Ids are synthetic and assigned at
/// construction time; labels carry the meaning across system boundaries.
/// Tasks must have a non-empty label (after canonicalization); gateways get
/// synthetic labels (XOR1, AND2, ...) in encounter order so that external
/// annotations can reference them stably.
struct Node {
  std::string id;
  NodeKind kind = NodeKind::Task;
  std::string label;
};

struct Edge {
  std::string source;
  std::string target;
  std::optional<std::string> condition;  // only meaningful out of an XOR gateway

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.source == b.source && a.target == b.target && a.condition == b.condition;
  }
};

struct ProcessGraph {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  // actor name -> ordered list of Task node ids
  std::map<std::string, std::vector<std::string>> lanes;

  const Node* find_node(std::string_view id) const;
  bool has_node(std::string_view id) const { return find_node(id) != nullptr; }
};

/// A broken invariant, reported as data. `rule` names the invariant,
/// `element` the offending node/edge/lane.
struct Violation {
  std::string rule;
  std::string element;

  std::string str() const { return rule + ": " + element; }
  friend bool operator==(const Violation& a, const Violation& b) {
    return a.rule == b.rule && a.element == b.element;
  }
};

/// Normalizes a label for matching: lowercases ASCII letters, trims and
/// collapses whitespace, and strips trailing sentence punctuation (.,;:!?).
/// Idempotent. May return an empty string; callers reject that where a
/// non-empty label is required.
std::string canonicalize_label(std::string_view raw);

/// Checks every structural invariant of the graph and returns one entry per
/// broken rule occurrence. Empty result means the graph is well-formed.
///
/// Rules: duplicate-node-id, empty-task-label, dangling-source,
/// dangling-target, condition-on-non-xor, start-has-incoming,
/// end-has-outgoing, multiple-start-events, lane-unknown-node,
/// lane-non-task, task-in-multiple-lanes.
std::vector<Violation> validate_graph(const ProcessGraph& g);

// ---------------------------------------------------------------------------
// Declarative process models
// ---------------------------------------------------------------------------

enum class DeclareTemplate { Precedence, Response, Succession, Init, End };

const char* to_string(DeclareTemplate t);
/// Init and End take a single activity; the others take two.
bool is_unary(DeclareTemplate t);
/// Case-insensitive template name lookup ("precedence", "Init", ...).
std::optional<DeclareTemplate> declare_template_from_string(std::string_view name);

struct DeclareConstraint {
  DeclareTemplate tmpl = DeclareTemplate::Precedence;
  std::string activity_a;
  std::optional<std::string> activity_b;  // absent for Init/End

  friend bool operator==(const DeclareConstraint& a, const DeclareConstraint& b) {
    return a.tmpl == b.tmpl && a.activity_a == b.activity_a && a.activity_b == b.activity_b;
  }
  friend bool operator<(const DeclareConstraint& a, const DeclareConstraint& b);
};

/// Ordered list of constraints, each tagged with the id of the sentence it
/// was discovered in. No exact duplicate (template, A, B) within a sentence.
struct DeclareModel {
  struct Entry {
    DeclareConstraint constraint;
    std::string sentence_id;
  };
  std::vector<Entry> entries;
};

// ---------------------------------------------------------------------------
// Task automation classification
// ---------------------------------------------------------------------------

enum class TaskLabel { Manual, User, Automated };

const char* to_string(TaskLabel label);
/// Case-insensitive label lookup; a trailing " task" is accepted and ignored
/// ("User task" == "user").
std::optional<TaskLabel> task_label_from_string(std::string_view name);

struct TaskClassification {
  std::string task;
  std::optional<std::string> actor;
  TaskLabel label = TaskLabel::Manual;
};

// ---------------------------------------------------------------------------
// Gold annotations and alias maps
// ---------------------------------------------------------------------------

enum class EntityKind { Task, Actor, Gateway, Event };
enum class RelationType { Flow, ActorPerformer };

const char* to_string(EntityKind kind);
const char* to_string(RelationType type);
std::optional<EntityKind> entity_kind_from_string(std::string_view name);
std::optional<RelationType> relation_type_from_string(std::string_view name);

struct GoldEntity {
  std::string id;
  EntityKind kind = EntityKind::Task;
  std::string label;
};

struct GoldRelation {
  RelationType type = RelationType::Flow;
  std::string source;  // entity id
  std::string target;  // entity id
  std::optional<std::string> condition;
};

struct GoldAnnotation {
  std::string text_id;
  std::vector<GoldEntity> entities;
  std::vector<GoldRelation> relations;

  const GoldEntity* find_entity(std::string_view id) const;
};

/// Frozen matching judgments: one predicted label may stand for several gold
/// entities (a merged task) and the evaluator honors the relation at each of
/// them. Predicted labels are compared canonically.
struct AliasEntry {
  std::string predicted;
  std::vector<std::string> gold_ids;
};

struct AliasMap {
  std::vector<AliasEntry> entries;
};

}  // namespace t2p
