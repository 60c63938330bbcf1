#ifndef EXCONS_RULE_HPP
#define EXCONS_RULE_HPP

#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "excons/types.hpp"

namespace excons {

/// Closed-form expression over features F1..Fn that defines a synthetic
/// target. Two shapes exist: a plain arithmetic expression (regression) and
/// a thresholded comparison "if <expr> < <expr> then 0 else 1"
/// (classification). Cheap to copy; the tree is shared and immutable.
///
/// Grammar accepted by parse():
///   rule    := 'if' cond 'then' INT 'else' INT | 'if' cond | expr
///   cond    := expr cmp expr | '(' expr cmp expr ')'
///   cmp     := '<' | '<=' | '>' | '>='
///   expr    := term (('+'|'-') term)*
///   term    := unary (('*'|'/') unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' unary)?
///   atom    := NUMBER | 'F' INT | ('sin'|'cos'|'tanh') '(' expr ')' | '(' expr ')'
///
/// Division guards tiny denominators: |d| < 1e-9 is clamped to 1e-9 with the
/// sign kept, so evaluation over [0,1] inputs is always finite. A comparison
/// that lands exactly on the threshold takes the else branch.
class RuleExpr {
public:
    RuleExpr() = default;

    static RuleExpr parse(std::string_view text);

    bool empty() const { return root_ == nullptr; }

    /// classification when the rule is a thresholded comparison.
    Task task() const { return task_; }

    /// Evaluate on a full feature row (0-based layout, F1 == row[0]).
    /// Assumes the row is wide enough; see evaluate_checked for validation.
    double evaluate(std::span<const double> row) const;

    /// Validating variant: checks width and finiteness of referenced inputs.
    double evaluate_checked(std::span<const double> row, std::size_t n_features) const;

    /// 1-based indices of every feature the rule reads.
    const std::set<int>& referenced_features() const { return features_; }

    /// Canonical text form; parse(text()) reproduces the same rule.
    const std::string& text() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
    std::set<int> features_;
    Task task_ = Task::regression;
};

} // namespace excons

#endif
