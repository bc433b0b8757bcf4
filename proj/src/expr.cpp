#include "kmfold/expr.hpp"

#include <cctype>
#include <vector>

namespace kmfold {

struct Expr::Node {
    enum Kind { Num, Var, Unary, Binary, Ternary } kind;
    std::int64_t value = 0;
    std::string name;  // variable name or operator
    std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodeP = std::shared_ptr<const Expr::Node>;

NodeP make(Expr::Node::Kind k, std::string op, std::vector<NodeP> kids, std::int64_t v = 0) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    n->name = std::move(op);
    n->kids = std::move(kids);
    n->value = v;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodeP parse() {
        NodeP n = ternary();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return n;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ExprError("expression '" + s_ + "': " + what + " at " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    NodeP ternary() {
        NodeP c = orexpr();
        if (eat("?")) {
            NodeP a = ternary();
            if (!eat(":")) fail("expected ':'");
            NodeP b = ternary();
            return make(Expr::Node::Ternary, "?", {c, a, b});
        }
        return c;
    }
    NodeP orexpr() {
        NodeP l = andexpr();
        while (eat("||")) l = make(Expr::Node::Binary, "||", {l, andexpr()});
        return l;
    }
    NodeP andexpr() {
        NodeP l = cmp();
        while (eat("&&")) l = make(Expr::Node::Binary, "&&", {l, cmp()});
        return l;
    }
    NodeP cmp() {
        NodeP l = add();
        for (const char* op : {"==", "!=", "<=", ">=", "<", ">"}) {
            if (eat(op)) return make(Expr::Node::Binary, op, {l, add()});
        }
        return l;
    }
    NodeP add() {
        NodeP l = mul();
        for (;;) {
            if (eat("+"))
                l = make(Expr::Node::Binary, "+", {l, mul()});
            else if (eat("-"))
                l = make(Expr::Node::Binary, "-", {l, mul()});
            else
                return l;
        }
    }
    NodeP mul() {
        NodeP l = unary();
        for (;;) {
            if (eat("*"))
                l = make(Expr::Node::Binary, "*", {l, unary()});
            else if (eat("/"))
                l = make(Expr::Node::Binary, "/", {l, unary()});
            else if (eat("%"))
                l = make(Expr::Node::Binary, "%", {l, unary()});
            else
                return l;
        }
    }
    NodeP unary() {
        if (eat("-")) return make(Expr::Node::Unary, "-", {unary()});
        if (eat("!")) return make(Expr::Node::Unary, "!", {unary()});
        return power();
    }
    NodeP power() {
        NodeP b = atom();
        if (eat("^")) return make(Expr::Node::Binary, "^", {b, unary()});
        return b;
    }
    NodeP atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            NodeP n = ternary();
            if (!eat(")")) fail("expected ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::int64_t v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = v * 10 + (s_[pos_++] - '0');
            return make(Expr::Node::Num, "", {}, v);
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                id += s_[pos_++];
            return make(Expr::Node::Var, id, {});
        }
        fail(std::string("unexpected character '") + ch + "'");
    }
};

std::int64_t ev(const Expr::Node& n, const Env& env, const std::string& src) {
    auto err = [&](const std::string& w) { return ExprError("expression '" + src + "': " + w); };
    switch (n.kind) {
        case Expr::Node::Num:
            return n.value;
        case Expr::Node::Var: {
            auto it = env.find(n.name);
            if (it == env.end()) throw err("unbound variable " + n.name);
            return it->second;
        }
        case Expr::Node::Unary: {
            std::int64_t v = ev(*n.kids[0], env, src);
            return n.name == "-" ? -v : static_cast<std::int64_t>(!v);
        }
        case Expr::Node::Ternary:
            return ev(*n.kids[0], env, src) ? ev(*n.kids[1], env, src) : ev(*n.kids[2], env, src);
        case Expr::Node::Binary:
            break;
    }
    const std::string& op = n.name;
    if (op == "&&") return ev(*n.kids[0], env, src) && ev(*n.kids[1], env, src);
    if (op == "||") return ev(*n.kids[0], env, src) || ev(*n.kids[1], env, src);
    std::int64_t a = ev(*n.kids[0], env, src);
    std::int64_t b = ev(*n.kids[1], env, src);
    if (op == "+") return detail::narrow(__int128(a) + b);
    if (op == "-") return detail::narrow(__int128(a) - b);
    if (op == "*") return detail::narrow(__int128(a) * b);
    if (op == "/") {
        if (b == 0 || a % b != 0) throw err("inexact division " + std::to_string(a) + "/" + std::to_string(b));
        return a / b;
    }
    if (op == "%") {
        if (b == 0) throw err("modulo by zero");
        std::int64_t r = a % b;
        return r < 0 ? r + (b < 0 ? -b : b) : r;
    }
    if (op == "^") {
        if (b < 0) throw err("negative exponent");
        std::int64_t r = 1;
        for (std::int64_t i = 0; i < b; ++i) r = detail::narrow(__int128(r) * a);
        return r;
    }
    if (op == "==") return a == b;
    if (op == "!=") return a != b;
    if (op == "<") return a < b;
    if (op == "<=") return a <= b;
    if (op == ">") return a > b;
    if (op == ">=") return a >= b;
    throw err("unknown operator " + op);
}

Poly evp(const Expr::Node& n, const Env& env, const std::string& src) {
    auto err = [&](const std::string& w) { return ExprError("expression '" + src + "': " + w); };
    switch (n.kind) {
        case Expr::Node::Num:
            return Poly::constant(n.value);
        case Expr::Node::Var:
            if (n.name == "t") return Poly::t();
            return Poly::constant(ev(n, env, src));
        case Expr::Node::Unary:
            if (n.name == "-") return Poly() - evp(*n.kids[0], env, src);
            throw err("logical operator in polynomial");
        case Expr::Node::Ternary:
            return ev(*n.kids[0], env, src) ? evp(*n.kids[1], env, src) : evp(*n.kids[2], env, src);
        case Expr::Node::Binary:
            break;
    }
    const std::string& op = n.name;
    if (op == "^") {
        std::int64_t e = ev(*n.kids[1], env, src);
        return evp(*n.kids[0], env, src).pow(static_cast<int>(e));
    }
    Poly a = evp(*n.kids[0], env, src);
    Poly b = evp(*n.kids[1], env, src);
    if (op == "+") return a + b;
    if (op == "-") return a - b;
    if (op == "*") return a * b;
    if (op == "/") return a / b;
    throw err("operator " + op + " not allowed in polynomial");
}

}  // namespace

Expr::Expr(const std::string& src) : src_(src), root_(Parser(src).parse()) {}

std::int64_t Expr::eval(const Env& env) const {
    if (!root_) throw ExprError("empty expression");
    return ev(*root_, env, src_);
}

Poly Expr::eval_poly(const Env& env) const {
    if (!root_) throw ExprError("empty expression");
    return evp(*root_, env, src_);
}

std::int64_t eval_int(const std::string& src, const Env& env) { return Expr(src).eval(env); }

}  // namespace kmfold
