#include "excons/rule.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <string>
#include <tuple>
#include <utility>

namespace excons {

namespace {

enum class CmpOp { lt, le, gt, ge };

const char* cmp_text(CmpOp op) {
    switch (op) {
    case CmpOp::lt: return "<";
    case CmpOp::le: return "<=";
    case CmpOp::gt: return ">";
    default: return ">=";
    }
}

} // namespace

struct RuleExpr::Node {
    enum class Kind { number, feature, neg, add, sub, mul, div, pow, sin, cos, tanh_fn, cmp };

    Kind kind;
    double value = 0.0;  // number; for cmp, then/else live in value/value2
    double value2 = 0.0;
    int feature = 0;     // 0-based
    CmpOp op = CmpOp::lt;
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = RuleExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

double eval(const Node& n, std::span<const double> row) {
    switch (n.kind) {
    case Node::Kind::number:
        return n.value;
    case Node::Kind::feature:
        return row[static_cast<std::size_t>(n.feature)];
    case Node::Kind::neg:
        return -eval(*n.a, row);
    case Node::Kind::add:
        return eval(*n.a, row) + eval(*n.b, row);
    case Node::Kind::sub:
        return eval(*n.a, row) - eval(*n.b, row);
    case Node::Kind::mul:
        return eval(*n.a, row) * eval(*n.b, row);
    case Node::Kind::div: {
        double num = eval(*n.a, row);
        double den = eval(*n.b, row);
        if (std::abs(den) < 1e-9)
            den = std::signbit(den) ? -1e-9 : 1e-9;
        return num / den;
    }
    case Node::Kind::pow:
        return std::pow(eval(*n.a, row), eval(*n.b, row));
    case Node::Kind::sin:
        return std::sin(eval(*n.a, row));
    case Node::Kind::cos:
        return std::cos(eval(*n.a, row));
    case Node::Kind::tanh_fn:
        return std::tanh(eval(*n.a, row));
    case Node::Kind::cmp: {
        double lhs = eval(*n.a, row);
        double rhs = eval(*n.b, row);
        bool taken = false;
        switch (n.op) {
        case CmpOp::lt: taken = lhs < rhs; break;
        case CmpOp::le: taken = lhs <= rhs; break;
        case CmpOp::gt: taken = lhs > rhs; break;
        case CmpOp::ge: taken = lhs >= rhs; break;
        }
        return taken ? n.value : n.value2;
    }
    }
    return 0.0; // unreachable
}

void collect_features(const Node& n, std::set<int>& out) {
    if (n.kind == Node::Kind::feature)
        out.insert(n.feature + 1);
    if (n.a)
        collect_features(*n.a, out);
    if (n.b)
        collect_features(*n.b, out);
}

int precedence(const Node& n) {
    switch (n.kind) {
    case Node::Kind::add:
    case Node::Kind::sub: return 1;
    case Node::Kind::mul:
    case Node::Kind::div: return 2;
    case Node::Kind::neg: return 3;
    case Node::Kind::pow: return 4;
    default: return 5;
    }
}

std::string number_text(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Precedence-aware printer. Parentheses are kept wherever dropping them would
// regroup the tree on reparse; floating-point arithmetic is not associative,
// so grouping is part of the rule's identity.
void print(const Node& n, std::string& out) {
    auto child = [&](const Node& c, bool needs_parens) {
        if (needs_parens)
            out += '(';
        print(c, out);
        if (needs_parens)
            out += ')';
    };
    switch (n.kind) {
    case Node::Kind::number:
        out += number_text(n.value);
        return;
    case Node::Kind::feature:
        out += 'F';
        out += std::to_string(n.feature + 1);
        return;
    case Node::Kind::neg:
        out += '-';
        child(*n.a, precedence(*n.a) < 3);
        return;
    case Node::Kind::add:
    case Node::Kind::sub:
    case Node::Kind::mul:
    case Node::Kind::div: {
        int p = precedence(n);
        child(*n.a, precedence(*n.a) < p);
        switch (n.kind) {
        case Node::Kind::add: out += " + "; break;
        case Node::Kind::sub: out += " - "; break;
        case Node::Kind::mul: out += "*"; break;
        default: out += "/"; break;
        }
        child(*n.b, precedence(*n.b) <= p);
        return;
    }
    case Node::Kind::pow:
        child(*n.a, precedence(*n.a) <= 4);
        out += '^';
        child(*n.b, precedence(*n.b) < 4);
        return;
    case Node::Kind::sin:
    case Node::Kind::cos:
    case Node::Kind::tanh_fn:
        out += n.kind == Node::Kind::sin ? "sin" : n.kind == Node::Kind::cos ? "cos" : "tanh";
        out += '(';
        print(*n.a, out);
        out += ')';
        return;
    case Node::Kind::cmp:
        out += "if ";
        print(*n.a, out);
        out += ' ';
        out += cmp_text(n.op);
        out += ' ';
        print(*n.b, out);
        out += " then ";
        out += number_text(n.value);
        out += " else ";
        out += number_text(n.value2);
        return;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse_rule() {
        skip_ws();
        NodePtr root;
        if (try_word("if")) {
            auto [lhs, op, rhs] = parse_condition();
            Node n;
            n.kind = Node::Kind::cmp;
            n.op = op;
            n.a = lhs;
            n.b = rhs;
            n.value = 1.0;
            n.value2 = 0.0;
            if (try_word("then")) {
                n.value = parse_label();
                expect_word("else");
                n.value2 = parse_label();
            }
            root = make(std::move(n));
        } else {
            root = parse_expr();
        }
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return root;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::parse,
                    "rule parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool try_char(char c) {
        skip_ws();
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect_char(char c) {
        if (!try_char(c))
            fail(std::string("expected '") + c + "'");
    }

    std::string_view peek_word() {
        skip_ws();
        std::size_t end = pos_;
        while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end])))
            ++end;
        return text_.substr(pos_, end - pos_);
    }

    bool try_word(std::string_view w) {
        if (peek_word() != w)
            return false;
        pos_ += w.size();
        return true;
    }

    void expect_word(std::string_view w) {
        if (!try_word(w))
            fail("expected keyword '" + std::string(w) + "'");
    }

    // The condition's parentheses are ambiguous: in "(F2*F3)/F9 < F17" the
    // paren opens an arithmetic group, in "(F1 < F2)" it wraps the whole
    // comparison. Try the bare form first and fall back to the wrapped one.
    std::tuple<NodePtr, CmpOp, NodePtr> parse_condition() {
        std::size_t saved = pos_;
        try {
            NodePtr lhs = parse_expr();
            CmpOp op = parse_cmp();
            NodePtr rhs = parse_expr();
            return {lhs, op, rhs};
        } catch (const Error&) {
            pos_ = saved;
        }
        expect_char('(');
        NodePtr lhs = parse_expr();
        CmpOp op = parse_cmp();
        NodePtr rhs = parse_expr();
        expect_char(')');
        return {lhs, op, rhs};
    }

    CmpOp parse_cmp() {
        skip_ws();
        if (try_char('<'))
            return try_char('=') ? CmpOp::le : CmpOp::lt;
        if (try_char('>'))
            return try_char('=') ? CmpOp::ge : CmpOp::gt;
        fail("expected a comparison (<, <=, >, >=)");
    }

    double parse_label() {
        skip_ws();
        int v = 0;
        auto res = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (res.ec != std::errc())
            fail("expected a class label");
        if (v != 0 && v != 1)
            fail("class labels must be 0 or 1");
        pos_ = static_cast<std::size_t>(res.ptr - text_.data());
        return static_cast<double>(v);
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (try_char('+')) {
                Node n{.kind = Node::Kind::add, .a = lhs, .b = parse_term()};
                lhs = make(std::move(n));
            } else if (try_char('-')) {
                Node n{.kind = Node::Kind::sub, .a = lhs, .b = parse_term()};
                lhs = make(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (try_char('*')) {
                Node n{.kind = Node::Kind::mul, .a = lhs, .b = parse_unary()};
                lhs = make(std::move(n));
            } else if (try_char('/')) {
                Node n{.kind = Node::Kind::div, .a = lhs, .b = parse_unary()};
                lhs = make(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        if (try_char('-')) {
            Node n{.kind = Node::Kind::neg, .a = parse_unary()};
            return make(std::move(n));
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (try_char('^')) {
            Node n{.kind = Node::Kind::pow, .a = base, .b = parse_unary()};
            return make(std::move(n));
        }
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of rule");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            expect_char(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = 0.0;
            auto res = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
            if (res.ec != std::errc())
                fail("malformed number");
            pos_ = static_cast<std::size_t>(res.ptr - text_.data());
            Node n{.kind = Node::Kind::number, .value = v};
            return make(std::move(n));
        }
        std::string_view word = peek_word();
        if (word == "F") {
            pos_ += 1;
            int idx = 0;
            auto res = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), idx);
            if (res.ec != std::errc() || idx < 1)
                fail("feature references look like F1, F2, ...");
            pos_ = static_cast<std::size_t>(res.ptr - text_.data());
            Node n{.kind = Node::Kind::feature, .feature = idx - 1};
            return make(std::move(n));
        }
        if (word == "sin" || word == "cos" || word == "tanh") {
            pos_ += word.size();
            expect_char('(');
            NodePtr inner = parse_expr();
            expect_char(')');
            Node n{.kind = word == "sin"   ? Node::Kind::sin
                         : word == "cos" ? Node::Kind::cos
                                         : Node::Kind::tanh_fn,
                   .a = inner};
            return make(std::move(n));
        }
        fail(word.empty() ? "expected a number, feature or '('"
                          : "unknown name '" + std::string(word) + "'");
    }
};

} // namespace

RuleExpr RuleExpr::parse(std::string_view text) {
    bool blank = true;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            blank = false;
    if (blank)
        throw Error(ErrorKind::parse, "rule parse error: empty rule");

    RuleExpr rule;
    rule.root_ = Parser(text).parse_rule();
    rule.task_ = rule.root_->kind == Node::Kind::cmp ? Task::classification : Task::regression;
    collect_features(*rule.root_, rule.features_);
    std::string canon;
    print(*rule.root_, canon);
    rule.text_ = std::move(canon);
    return rule;
}

double RuleExpr::evaluate(std::span<const double> row) const {
    return eval(*root_, row);
}

double RuleExpr::evaluate_checked(std::span<const double> row, std::size_t n_features) const {
    if (empty())
        throw Error(ErrorKind::invalid_argument, "cannot evaluate an empty rule");
    if (row.size() < n_features)
        throw Error(ErrorKind::invalid_argument,
                    "row has " + std::to_string(row.size()) + " values but "
                        + std::to_string(n_features) + " features were promised");
    if (!features_.empty() && static_cast<std::size_t>(*features_.rbegin()) > n_features)
        throw Error(ErrorKind::invalid_argument,
                    "rule reads F" + std::to_string(*features_.rbegin()) + " but only "
                        + std::to_string(n_features) + " features exist");
    for (int f : features_)
        if (!std::isfinite(row[static_cast<std::size_t>(f - 1)]))
            throw Error(ErrorKind::invalid_argument,
                        "non-finite value for F" + std::to_string(f));
    double v = eval(*root_, row);
    if (!std::isfinite(v))
        throw Error(ErrorKind::internal, "rule evaluated to a non-finite value");
    return v;
}

} // namespace excons
