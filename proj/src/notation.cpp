#include "t2p/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "t2p/errors.hpp"

namespace t2p {
namespace {

// --- small text helpers ---------------------------------------------------

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

char lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool ci_starts_with(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (lower(s[i]) != lower(prefix[i])) return false;
  }
  return true;
}

struct InputLine {
  int no = 0;
  std::string text;
};

std::vector<InputLine> non_blank_lines(std::string_view text) {
  std::vector<InputLine> out;
  int no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        (nl == std::string_view::npos) ? text.substr(pos) : text.substr(pos, nl - pos);
    ++no;
    std::string_view t = trim(line);
    if (!t.empty()) out.push_back({no, std::string(t)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

// Drops leading list markers ("1. ", "2) ", "- ", "* ") that chat models like
// to prepend even when told not to.
std::string_view strip_bullet(std::string_view s) {
  std::string_view t = s;
  if (!t.empty() && (t.front() == '-' || t.front() == '*')) {
    std::string_view rest = t.substr(1);
    if (!rest.empty() && is_space(rest.front())) return trim(rest);
  }
  size_t i = 0;
  while (i < t.size() && i < 3 && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i > 0 && i < t.size() && (t[i] == '.' || t[i] == ')')) {
    std::string_view rest = t.substr(i + 1);
    if (!rest.empty() && is_space(rest.front())) return trim(rest);
  }
  return t;
}

enum class Disposition { Clean, Warned, Rejected };

template <typename T>
struct Accounting {
  ParseReport<T>& report;

  void settle(Disposition d, int line_no, std::string reason = {}) {
    switch (d) {
      case Disposition::Clean:
        ++report.parsed_line_count;
        break;
      case Disposition::Warned:
        ++report.warned_line_count;
        break;
      case Disposition::Rejected:
        report.rejected_lines.push_back({line_no, std::move(reason)});
        break;
    }
  }
  void warn(int line_no, std::string_view message) {
    report.warnings.push_back("line " + std::to_string(line_no) + ": " + std::string(message));
  }
};

// --- process-model notation -------------------------------------------------

struct ElementRef {
  enum class Kind { Task, Gateway, Start, End, Bad };
  Kind kind = Kind::Bad;
  NodeKind gateway_kind = NodeKind::XorGateway;
  std::optional<int> gateway_number;
  std::string label;                     // canonical, tasks only
  std::optional<std::string> condition;  // canonical, gateways only
  std::string error;
};

ElementRef parse_element(std::string_view part) {
  std::string_view s = trim(part);
  ElementRef ref;
  if (s.empty()) {
    ref.error = "empty-element";
    return ref;
  }

  NodeKind gw = NodeKind::Task;
  if (ci_starts_with(s, "xor")) gw = NodeKind::XorGateway;
  else if (ci_starts_with(s, "and")) gw = NodeKind::AndGateway;
  if (gw != NodeKind::Task) {
    size_t i = 3;
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    size_t k = j;
    while (k < s.size() && is_space(s[k])) ++k;
    bool gateway_shaped = false;
    std::optional<std::string> condition;
    if (k == s.size()) {
      gateway_shaped = true;
    } else if (s[k] == '(' && s.back() == ')') {
      gateway_shaped = true;
      std::string cond = canonicalize_label(s.substr(k + 1, s.size() - k - 2));
      if (!cond.empty()) condition = std::move(cond);
    }
    if (gateway_shaped) {
      ref.kind = ElementRef::Kind::Gateway;
      ref.gateway_kind = gw;
      if (j > i) ref.gateway_number = std::stoi(std::string(s.substr(i, j - i)));
      ref.condition = std::move(condition);
      return ref;
    }
  }

  std::string canon = canonicalize_label(s);
  if (canon == "start") {
    ref.kind = ElementRef::Kind::Start;
    return ref;
  }
  if (canon == "end") {
    ref.kind = ElementRef::Kind::End;
    return ref;
  }
  if (canon.empty()) {
    ref.error = "empty-label";
    return ref;
  }
  ref.kind = ElementRef::Kind::Task;
  ref.label = std::move(canon);
  return ref;
}

class GraphBuilder {
 public:
  std::string ensure_task(const std::string& canonical_label) {
    auto it = tasks_.find(canonical_label);
    if (it != tasks_.end()) return it->second;
    std::string id = fresh_id();
    graph_.nodes.push_back({id, NodeKind::Task, canonical_label});
    tasks_.emplace(canonical_label, id);
    return id;
  }

  // A numbered reference resolves by synthetic label, creating the gateway on
  // first mention. A bare reference means the most recently mentioned gateway
  // of that kind, or a fresh one if none exists yet.
  std::string ensure_gateway(NodeKind kind, std::optional<int> number) {
    std::string& last = (kind == NodeKind::XorGateway) ? last_xor_ : last_and_;
    if (!number && !last.empty()) return last;
    int n = number ? *number : next_gateway_;
    std::string label = std::string(kind == NodeKind::XorGateway ? "XOR" : "AND") +
                        std::to_string(n);
    std::string key = canonicalize_label(label);
    auto it = gateways_.find(key);
    if (it != gateways_.end()) {
      last = it->second;
      return it->second;
    }
    std::string id = fresh_id();
    graph_.nodes.push_back({id, kind, label});
    gateways_.emplace(key, id);
    next_gateway_ = std::max(next_gateway_, n + 1);
    last = id;
    return id;
  }

  std::string ensure_event(NodeKind kind) {
    std::string& slot = (kind == NodeKind::StartEvent) ? start_ : end_;
    if (slot.empty()) {
      slot = fresh_id();
      graph_.nodes.push_back({slot, kind, ""});
    }
    return slot;
  }

  // Returns false when the identical edge is already present.
  bool add_edge(std::string source, std::string target, std::optional<std::string> condition) {
    Edge e{std::move(source), std::move(target), std::move(condition)};
    if (std::find(graph_.edges.begin(), graph_.edges.end(), e) != graph_.edges.end()) {
      return false;
    }
    graph_.edges.push_back(std::move(e));
    return true;
  }

  ProcessGraph& graph() { return graph_; }

 private:
  std::string fresh_id() { return "n" + std::to_string(next_node_++); }

  ProcessGraph graph_;
  std::map<std::string, std::string> tasks_;     // canonical label -> id
  std::map<std::string, std::string> gateways_;  // canonical label -> id
  std::string last_xor_;
  std::string last_and_;
  std::string start_;
  std::string end_;
  int next_node_ = 1;
  int next_gateway_ = 1;
};

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t hit = s.find(sep, pos);
    if (hit == std::string_view::npos) {
      parts.emplace_back(s.substr(pos));
      return parts;
    }
    parts.emplace_back(s.substr(pos, hit - pos));
    pos = hit + sep.size();
  }
}

}  // namespace

ParseReport<ProcessGraph> parse_bpmn_notation(std::string_view text) {
  std::vector<InputLine> lines = non_blank_lines(text);
  if (lines.empty()) throw EmptyInputError("no non-blank input line");

  ParseReport<ProcessGraph> report;
  Accounting<ProcessGraph> acct{report};
  GraphBuilder builder;

  for (const auto& [no, raw] : lines) {
    std::string_view stripped = strip_bullet(raw);
    std::string line(stripped);

    // Long arrows ("-->") collapse to the grammar's "->".
    bool arrow_recovered = false;
    for (size_t hit = line.find("-->"); hit != std::string::npos; hit = line.find("-->")) {
      line.erase(hit, 1);
      arrow_recovered = true;
    }

    if (line.find("->") != std::string::npos) {
      std::vector<std::string> parts = split(line, "->");
      std::vector<ElementRef> refs;
      std::string bad_reason;
      for (const auto& p : parts) {
        refs.push_back(parse_element(p));
        if (refs.back().kind == ElementRef::Kind::Bad) bad_reason = refs.back().error;
      }
      if (!bad_reason.empty()) {
        acct.settle(Disposition::Rejected, no, bad_reason);
        continue;
      }

      Disposition d = Disposition::Clean;
      if (refs.size() > 2) {
        acct.warn(no, "chained arrows split into consecutive flows");
        d = Disposition::Warned;
      }
      bool added_any = false;
      for (size_t i = 0; i + 1 < refs.size(); ++i) {
        ElementRef& src = refs[i];
        ElementRef& tgt = refs[i + 1];
        if (tgt.condition) {
          acct.warn(no, "condition on arrow target ignored");
          d = Disposition::Warned;
        }
        auto resolve = [&](const ElementRef& r) -> std::string {
          switch (r.kind) {
            case ElementRef::Kind::Task: return builder.ensure_task(r.label);
            case ElementRef::Kind::Gateway:
              return builder.ensure_gateway(r.gateway_kind, r.gateway_number);
            case ElementRef::Kind::Start: return builder.ensure_event(NodeKind::StartEvent);
            case ElementRef::Kind::End: return builder.ensure_event(NodeKind::EndEvent);
            case ElementRef::Kind::Bad: break;
          }
          return {};
        };
        std::string source_id = resolve(src);
        std::string target_id = resolve(tgt);
        if (builder.add_edge(source_id, target_id, src.condition)) {
          added_any = true;
        } else {
          acct.warn(no, "duplicate flow ignored");
          d = Disposition::Warned;
        }
      }
      (void)added_any;
      acct.settle(d, no);
      continue;
    }

    size_t colon = line.find(':');
    if (colon != std::string_view::npos) {
      std::string actor = canonicalize_label(line.substr(0, colon));
      std::string_view rest = trim(line.substr(colon + 1));
      if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') {
        acct.settle(Disposition::Rejected, no, "malformed-lane");
        continue;
      }
      if (actor.empty()) {
        acct.settle(Disposition::Rejected, no, "empty-actor");
        continue;
      }
      Disposition d = Disposition::Clean;
      std::vector<std::string>& members = builder.graph().lanes[actor];
      std::string_view inner = trim(rest.substr(1, rest.size() - 2));
      if (!inner.empty()) {
        for (const auto& item : split(inner, ",")) {
          std::string label = canonicalize_label(item);
          if (label.empty()) {
            acct.warn(no, "empty lane entry ignored");
            d = Disposition::Warned;
            continue;
          }
          std::string id = builder.ensure_task(label);
          if (std::find(members.begin(), members.end(), id) != members.end()) {
            acct.warn(no, "duplicate lane entry ignored");
            d = Disposition::Warned;
            continue;
          }
          members.push_back(std::move(id));
        }
      }
      acct.settle(d, no);
      continue;
    }

    acct.settle(Disposition::Rejected, no, "unrecognized-line");
  }

  report.value = std::move(builder.graph());
  for (const auto& v : validate_graph(report.value)) {
    report.warnings.push_back("invariant " + v.str());
  }
  return report;
}

namespace {

// Total order on synthetic node ids: numeric for the parser's n1, n2, ...
// scheme, still deterministic for arbitrary ids.
bool id_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_reserved_label(const std::string& canonical) {
  if (canonical == "start" || canonical == "end") return true;
  std::string_view s = canonical;
  if (!ci_starts_with(s, "xor") && !ci_starts_with(s, "and")) return false;
  size_t i = 3;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i == s.size();
}

std::vector<std::string> representability_issues(const ProcessGraph& g) {
  std::vector<std::string> issues;

  int end_events = 0;
  for (const auto& n : g.nodes) {
    if (n.kind == NodeKind::EndEvent) ++end_events;
  }
  if (end_events > 1) issues.push_back("more than one end event");

  std::set<std::string> covered;
  for (const auto& e : g.edges) {
    covered.insert(e.source);
    covered.insert(e.target);
  }
  for (const auto& [actor, members] : g.lanes) {
    covered.insert(members.begin(), members.end());
    std::string canon = canonicalize_label(actor);
    if (canon.find_first_of(":[],") != std::string::npos) {
      issues.push_back("lane actor '" + actor + "' contains reserved characters");
    }
  }
  std::set<std::string> in_lane;
  for (const auto& [actor, members] : g.lanes) in_lane.insert(members.begin(), members.end());

  std::set<std::string> task_labels;
  for (const auto& n : g.nodes) {
    if (!covered.count(n.id)) issues.push_back("node " + n.id + " is on no arc and in no lane");
    if (n.kind != NodeKind::Task) continue;
    std::string canon = canonicalize_label(n.label);
    if (canon.find("->") != std::string::npos) {
      issues.push_back("task label '" + n.label + "' contains an arrow");
    }
    if (is_reserved_label(canon)) {
      issues.push_back("task label '" + n.label + "' collides with a notation keyword");
    }
    if (in_lane.count(n.id) && canon.find_first_of("[],") != std::string::npos) {
      issues.push_back("lane task label '" + n.label + "' contains reserved characters");
    }
    if (!task_labels.insert(canon).second) {
      issues.push_back("duplicate task label '" + canon + "'");
    }
  }
  for (const auto& e : g.edges) {
    if (!e.condition) continue;
    std::string canon = canonicalize_label(*e.condition);
    if (canon.empty()) issues.push_back("empty condition label");
    if (canon.find_first_of("()") != std::string::npos || canon.find("->") != std::string::npos) {
      issues.push_back("condition label '" + *e.condition + "' contains reserved characters");
    }
  }
  return issues;
}

}  // namespace

std::string serialize_bpmn_notation(const ProcessGraph& g) {
  {
    std::vector<Violation> violations = validate_graph(g);
    if (!violations.empty()) {
      throw InvalidGraphError("graph violates invariants: " + violations.front().str());
    }
    std::vector<std::string> issues = representability_issues(g);
    if (!issues.empty()) {
      throw InvalidGraphError("graph not representable in notation: " + issues.front());
    }
  }

  // Stable reference text per node. Gateways keep a conforming synthetic
  // label; anything else gets the next free number in id order.
  std::map<std::string, std::string> ref;
  std::vector<const Node*> ordered;
  for (const auto& n : g.nodes) ordered.push_back(&n);
  std::sort(ordered.begin(), ordered.end(),
            [](const Node* a, const Node* b) { return id_less(a->id, b->id); });

  std::set<std::string> used_gateway_labels;
  int next_gateway = 1;
  for (const Node* n : ordered) {
    switch (n->kind) {
      case NodeKind::Task:
        ref[n->id] = canonicalize_label(n->label);
        break;
      case NodeKind::StartEvent:
        ref[n->id] = "START";
        break;
      case NodeKind::EndEvent:
        ref[n->id] = "END";
        break;
      case NodeKind::XorGateway:
      case NodeKind::AndGateway: {
        const char* prefix = (n->kind == NodeKind::XorGateway) ? "XOR" : "AND";
        std::string canon = canonicalize_label(n->label);
        std::string token;
        if (canon.size() > 3 && ci_starts_with(canon, prefix) &&
            canon.find_first_not_of("0123456789", 3) == std::string::npos &&
            !used_gateway_labels.count(canon)) {
          token = std::string(prefix) + canon.substr(3);
          next_gateway = std::max(next_gateway, std::stoi(canon.substr(3)) + 1);
        } else {
          token = std::string(prefix) + std::to_string(next_gateway++);
        }
        used_gateway_labels.insert(canonicalize_label(token));
        ref[n->id] = token;
        break;
      }
    }
  }

  std::vector<Edge> edges = g.edges;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.source != b.source) return id_less(a.source, b.source);
    if (a.target != b.target) return id_less(a.target, b.target);
    return a.condition < b.condition;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::ostringstream out;
  for (const auto& e : edges) {
    out << ref.at(e.source);
    if (e.condition) out << " (" << canonicalize_label(*e.condition) << ")";
    out << " -> " << ref.at(e.target) << "\n";
  }
  for (const auto& [actor, members] : g.lanes) {  // std::map: alphabetical
    out << canonicalize_label(actor) << ": [";
    for (size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out << ", ";
      out << ref.at(members[i]);
    }
    out << "]\n";
  }
  return out.str();
}

// --- temporal-constraint notation -------------------------------------------

namespace {

// Strips one or more enclosing balanced parenthesis pairs.
std::string_view unwrap_parens(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')') --depth;
      if (depth == 0) {
        wraps = false;
        break;
      }
    }
    if (!wraps) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

// Position of the first top-level (not inside parentheses) occurrence.
size_t find_top_level(std::string_view s, std::string_view token) {
  int depth = 0;
  for (size_t i = 0; i + token.size() <= s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') depth = std::max(0, depth - 1);
    if (depth != 0) continue;
    bool hit = true;
    for (size_t j = 0; j < token.size(); ++j) {
      if (lower(s[i + j]) != lower(token[j])) {
        hit = false;
        break;
      }
    }
    if (hit) return i;
  }
  return std::string_view::npos;
}

struct ActivityPair {
  std::string a;
  std::string b;
};

// NOT(B) U A
std::optional<ActivityPair> match_precedence(std::string_view s) {
  s = trim(s);
  if (!ci_starts_with(s, "not")) return std::nullopt;
  std::string_view rest = trim(s.substr(3));
  if (rest.empty() || rest.front() != '(') return std::nullopt;
  int depth = 0;
  size_t close = std::string_view::npos;
  for (size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == '(') ++depth;
    else if (rest[i] == ')' && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::string_view::npos) return std::nullopt;
  std::string b = canonicalize_label(unwrap_parens(rest.substr(1, close - 1)));
  std::string_view after = trim(rest.substr(close + 1));
  if (after.size() < 2 || lower(after.front()) != 'u' || !is_space(after[1])) {
    return std::nullopt;
  }
  std::string a = canonicalize_label(unwrap_parens(after.substr(2)));
  if (a.empty() || b.empty()) return std::nullopt;
  return ActivityPair{std::move(a), std::move(b)};
}

// A -> B  or  A -> F(B)
std::optional<ActivityPair> match_response(std::string_view s) {
  s = trim(s);
  size_t arrow = find_top_level(s, "->");
  if (arrow == std::string_view::npos) return std::nullopt;
  std::string_view left = s.substr(0, arrow);
  std::string_view right = trim(s.substr(arrow + 2));
  if (find_top_level(right, "->") != std::string_view::npos) return std::nullopt;
  std::string a = canonicalize_label(unwrap_parens(left));
  std::string b;
  if ((ci_starts_with(right, "f ") || ci_starts_with(right, "f(")) && right.back() == ')') {
    std::string_view inner = trim(right.substr(1));
    if (!inner.empty() && inner.front() == '(') {
      b = canonicalize_label(unwrap_parens(inner));
    }
  }
  if (b.empty()) b = canonicalize_label(unwrap_parens(right));
  if (a.empty() || b.empty()) return std::nullopt;
  return ActivityPair{std::move(a), std::move(b)};
}

// START -> A / END -> A
std::optional<std::string> match_event_rule(std::string_view s, std::string_view keyword) {
  s = trim(s);
  if (!ci_starts_with(s, keyword)) return std::nullopt;
  std::string_view rest = trim(s.substr(keyword.size()));
  if (!ci_starts_with(rest, "->")) return std::nullopt;
  std::string a = canonicalize_label(unwrap_parens(rest.substr(2)));
  if (a.empty()) return std::nullopt;
  return a;
}

struct LtlMatch {
  DeclareConstraint constraint;
  std::string reject_reason;  // set when the line is recognizably broken
};

std::optional<LtlMatch> match_constraint(std::string_view body) {
  // Succession first: the conjunction of its precedence and response parts.
  size_t conj = find_top_level(body, " and ");
  if (conj != std::string_view::npos) {
    std::string_view left = unwrap_parens(body.substr(0, conj));
    std::string_view right = unwrap_parens(body.substr(conj + 5));
    auto prec = match_precedence(left);
    auto resp = match_response(right);
    if (!prec && !resp) {
      prec = match_precedence(right);
      resp = match_response(left);
    }
    if (prec && resp) {
      if (prec->a != resp->a || prec->b != resp->b) {
        return LtlMatch{{}, "succession-parts-mismatch"};
      }
      return LtlMatch{{DeclareTemplate::Succession, prec->a, prec->b}, {}};
    }
  }
  if (auto a = match_event_rule(body, "start")) {
    return LtlMatch{{DeclareTemplate::Init, *a, std::nullopt}, {}};
  }
  if (auto a = match_event_rule(body, "end")) {
    return LtlMatch{{DeclareTemplate::End, *a, std::nullopt}, {}};
  }
  if (auto p = match_precedence(body)) {
    return LtlMatch{{DeclareTemplate::Precedence, p->a, p->b}, {}};
  }
  if (auto p = match_response(body)) {
    return LtlMatch{{DeclareTemplate::Response, p->a, p->b}, {}};
  }
  return std::nullopt;
}

}  // namespace

ParseReport<DeclareModel> parse_ltl_output(std::string_view text) {
  std::vector<InputLine> lines = non_blank_lines(text);
  if (lines.empty()) throw EmptyInputError("no non-blank input line");

  ParseReport<DeclareModel> report;
  Accounting<DeclareModel> acct{report};
  std::set<std::tuple<DeclareTemplate, std::string, std::optional<std::string>>> seen;

  for (const auto& [no, raw] : lines) {
    std::string_view line = strip_bullet(raw);

    // Optional template-name prefix, e.g. "precedence: NOT(b) U a".
    std::optional<DeclareTemplate> prefix;
    for (DeclareTemplate t : {DeclareTemplate::Precedence, DeclareTemplate::Response,
                              DeclareTemplate::Succession, DeclareTemplate::Init,
                              DeclareTemplate::End}) {
      std::string_view name = to_string(t);
      if (!ci_starts_with(line, name)) continue;
      std::string_view rest = trim(line.substr(name.size()));
      if (!rest.empty() && rest.front() == ':') {
        prefix = t;
        line = trim(rest.substr(1));
        break;
      }
    }

    std::optional<LtlMatch> match = match_constraint(line);
    if (!match) {
      acct.settle(Disposition::Rejected, no, "no-template-matched");
      continue;
    }
    if (!match->reject_reason.empty()) {
      acct.settle(Disposition::Rejected, no, match->reject_reason);
      continue;
    }

    Disposition d = Disposition::Clean;
    if (prefix && *prefix != match->constraint.tmpl) {
      acct.warn(no, std::string("template label '") + to_string(*prefix) +
                        "' disagrees with formula form '" +
                        to_string(match->constraint.tmpl) + "'; using the formula");
      d = Disposition::Warned;
    }
    auto key = std::make_tuple(match->constraint.tmpl, match->constraint.activity_a,
                               match->constraint.activity_b);
    if (!seen.insert(key).second) {
      acct.warn(no, "duplicate constraint ignored");
      acct.settle(Disposition::Warned, no);
      continue;
    }
    report.value.entries.push_back({std::move(match->constraint), ""});
    acct.settle(d, no);
  }
  return report;
}

// --- task-classification notation -------------------------------------------

namespace {

bool is_table_rule(std::string_view s) {
  bool any = false;
  for (char c : s) {
    if (c == '-' || c == '|' || c == ':' || c == '=' || c == '+' || c == ' ') {
      any = any || c == '-' || c == '=';
      continue;
    }
    return false;
  }
  return any;
}

// Splits "<task phrase> performed by <actor>"; the last occurrence wins.
void split_performer(std::string_view phrase, std::string& task,
                     std::optional<std::string>& actor) {
  static constexpr std::string_view kMarker = " performed by ";
  std::string low;
  low.reserve(phrase.size());
  for (char c : phrase) low.push_back(lower(c));
  size_t hit = low.rfind(kMarker);
  if (hit == std::string::npos) {
    task = canonicalize_label(phrase);
    actor = std::nullopt;
    return;
  }
  task = canonicalize_label(phrase.substr(0, hit));
  std::string a = canonicalize_label(phrase.substr(hit + kMarker.size()));
  actor = a.empty() ? std::optional<std::string>{} : std::optional<std::string>{std::move(a)};
}

}  // namespace

ParseReport<std::vector<TaskClassification>> parse_rpa_output(std::string_view text) {
  std::vector<InputLine> lines = non_blank_lines(text);
  if (lines.empty()) throw EmptyInputError("no non-blank input line");

  ParseReport<std::vector<TaskClassification>> report;
  Accounting<std::vector<TaskClassification>> acct{report};

  for (const auto& [no, raw] : lines) {
    std::string_view line = strip_bullet(raw);

    if (is_table_rule(line)) {
      acct.warn(no, "table rule ignored");
      acct.settle(Disposition::Warned, no);
      continue;
    }

    std::string_view body = trim(line);
    Disposition d = Disposition::Clean;
    std::string task_part;
    std::optional<TaskLabel> label;
    std::string last_label_text;

    if (body.find('|') != std::string_view::npos) {
      // Table row: first cell is the task, last non-empty cell the label.
      while (!body.empty() && body.front() == '|') body.remove_prefix(1);
      while (!body.empty() && body.back() == '|') body.remove_suffix(1);
      std::vector<std::string> cells;
      for (const auto& c : split(body, "|")) {
        std::string t(trim(c));
        if (!t.empty()) cells.push_back(std::move(t));
      }
      if (cells.size() >= 2) {
        last_label_text = cells.back();
        label = task_label_from_string(cells.back());
        task_part = cells.front();
        if (label && cells.size() > 2) {
          acct.warn(no, "extra table cells ignored");
          d = Disposition::Warned;
        }
      }
    } else {
      // Plain line: try separators right to left (tab, " - ", ":").
      std::vector<size_t> cuts;  // position, length handled below
      struct Sep {
        size_t pos;
        size_t skip;
      };
      std::vector<Sep> seps;
      for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '\t') seps.push_back({i, 1});
        else if (body[i] == ':') seps.push_back({i, 1});
        else if (body[i] == '-' && i > 0 && body[i - 1] == ' ' && i + 1 < body.size() &&
                 body[i + 1] == ' ') {
          seps.push_back({i, 1});
        }
      }
      for (auto it = seps.rbegin(); it != seps.rend(); ++it) {
        std::string right(trim(body.substr(it->pos + it->skip)));
        if (auto l = task_label_from_string(right)) {
          label = l;
          task_part = std::string(trim(body.substr(0, it->pos)));
          break;
        }
        if (last_label_text.empty()) last_label_text = right;
      }
      (void)cuts;
    }

    if (!label) {
      if (!last_label_text.empty()) {
        acct.settle(Disposition::Rejected, no, "unknown-label: '" + last_label_text + "'");
      } else {
        acct.settle(Disposition::Rejected, no, "no-separator");
      }
      continue;
    }

    TaskClassification record;
    split_performer(task_part, record.task, record.actor);
    if (record.task.empty()) {
      acct.settle(Disposition::Rejected, no, "empty-task");
      continue;
    }
    record.label = *label;
    report.value.push_back(std::move(record));
    acct.settle(d, no);
  }
  return report;
}

}  // namespace t2p
