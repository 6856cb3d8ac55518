#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "t2p/ir.hpp"

namespace t2p {

// Parsers for the constrained text formats an instruction-following model is
// asked to produce. All matching is case-insensitive via canonicalize_label;
// lines that cannot be recovered are reported, never silently dropped.

struct RejectedLine {
  int line = 0;  // 1-based line number in the input
  std::string reason;
};

/// Result of parsing one model response. Every non-blank input line is
/// accounted for: parsed cleanly, parsed with recovery (warned), or rejected.
template <typename T>
struct ParseReport {
  T value{};
  std::vector<std::string> warnings;  // line recoveries and graph-level issues
  std::vector<RejectedLine> rejected_lines;
  int parsed_line_count = 0;
  int warned_line_count = 0;

  int accounted_lines() const {
    return parsed_line_count + warned_line_count + static_cast<int>(rejected_lines.size());
  }
};

/// Parses the line-based process-model notation:
///
///   a -> b                     flow between two elements
///   XOR (cond) -> b            decision branch with its criterion
///   a -> XOR                   arc into a (new) exclusive gateway
///   XOR2 -> b                  numbered gateway reference
///   START -> a, a -> END       explicit start/end events
///   actor: [a, b, c]           lane: actor-to-activity mapping
///
/// Repeated mention of the same canonical task label refers to the same
/// node. A bare XOR/AND on the left of an arrow refers to the most recently
/// mentioned gateway of that kind. Structural violations of the resulting
/// graph are listed as warnings, not failures.
///
/// Throws EmptyInputError when the input contains no non-blank line.
ParseReport<ProcessGraph> parse_bpmn_notation(std::string_view text);

/// Inverse of parse_bpmn_notation: emits the same line grammar with a
/// deterministic ordering (edges by node id, lanes alphabetical). Throws
/// InvalidGraphError when the graph fails validate_graph or cannot be
/// represented in the notation (more than one end event, a node on no edge
/// and in no lane, or labels that collide with the grammar's tokens).
std::string serialize_bpmn_notation(const ProcessGraph& g);

/// Parses temporal-constraint lines, one constraint per line, with an
/// optional template-name prefix ("precedence: ..."):
///
///   NOT(b) U a                 Precedence(a, b)
///   a -> b      a -> F(b)      Response(a, b)
///   (NOT(b) U a) AND (a -> F(b))   Succession(a, b)
///   START -> a                 Init(a)
///   END -> a                   End(a)
///
/// Unrecognized lines are rejected and never become predictions.
/// Throws EmptyInputError when the input contains no non-blank line.
ParseReport<DeclareModel> parse_ltl_output(std::string_view text);

/// Parses task-classification lines or table rows pairing a task phrase with
/// one of the labels {manual, user, automated} (trailing "task" optional).
/// "... performed by X" splits the task phrase from the actor. Lines with an
/// unknown label are rejected with reason "unknown-label".
/// Throws EmptyInputError when the input contains no non-blank line.
ParseReport<std::vector<TaskClassification>> parse_rpa_output(std::string_view text);

}  // namespace t2p
