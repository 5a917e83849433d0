#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "microlang/source.hpp"
#include "microlang/typespec.hpp"
#include "microlang/value.hpp"

namespace microlang {

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnOp { Neg, Not, Count };
enum class BinOp { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or };

struct Expr {
    struct Lit {
        BasicValue value;
        friend bool operator==(const Lit&, const Lit&) = default;
    };
    struct Read {
        Path path;
        friend bool operator==(const Read&, const Read&) = default;
    };
    struct New {
        friend bool operator==(const New&, const New&) { return true; }
    };
    struct Unary {
        UnOp op;
        ExprPtr operand;
        friend bool operator==(const Unary& a, const Unary& b);
    };
    struct Binary {
        BinOp op;
        ExprPtr lhs, rhs;
        friend bool operator==(const Binary& a, const Binary& b);
    };

    std::variant<Lit, Read, New, Unary, Binary> node;
    SourceSpan span;

    friend bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }
};

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    return *a == *b;
}
inline bool operator==(const Expr::Unary& a, const Expr::Unary& b) {
    return a.op == b.op && expr_equal(a.operand, b.operand);
}
inline bool operator==(const Expr::Binary& a, const Expr::Binary& b) {
    return a.op == b.op && expr_equal(a.lhs, b.lhs) && expr_equal(a.rhs, b.rhs);
}

inline ExprPtr make_expr(std::variant<Expr::Lit, Expr::Read, Expr::New, Expr::Unary, Expr::Binary> node,
                         SourceSpan span = {}) {
    auto e = std::make_shared<Expr>();
    e->node = std::move(node);
    e->span = std::move(span);
    return e;
}

inline ExprPtr lit_expr(BasicValue v, SourceSpan span = {}) { return make_expr(Expr::Lit{std::move(v)}, std::move(span)); }
inline ExprPtr read_expr(Path p, SourceSpan span = {}) { return make_expr(Expr::Read{std::move(p)}, std::move(span)); }

// ---------------------------------------------------------------------------
// Behaviors (the workflow AST)
// ---------------------------------------------------------------------------

struct Behavior;
using BehaviorPtr = std::shared_ptr<const Behavior>;

bool behavior_equal(const BehaviorPtr& a, const BehaviorPtr& b);

/// One guarded arm of an input choice or provide/until block.
struct InputBranch {
    enum class Kind { OneWay, RequestResponse };
    Kind kind = Kind::OneWay;
    std::string op;
    std::optional<Path> req_path;    // where the request payload is bound
    ExprPtr resp_source;             // RR only: value sent back after the body
    BehaviorPtr body;                // may be null (empty body)
    SourceSpan span;

    friend bool operator==(const InputBranch& a, const InputBranch& b) {
        return a.kind == b.kind && a.op == b.op && a.req_path == b.req_path &&
               expr_equal(a.resp_source, b.resp_source) && behavior_equal(a.body, b.body);
    }
};

struct Behavior {
    struct Nil {
        friend bool operator==(const Nil&, const Nil&) { return true; }
    };
    struct Assign {
        Path target;
        ExprPtr value;
        friend bool operator==(const Assign& a, const Assign& b) {
            return a.target == b.target && expr_equal(a.value, b.value);
        }
    };
    struct Seq {
        BehaviorPtr first, second;
        friend bool operator==(const Seq& a, const Seq& b) {
            return behavior_equal(a.first, b.first) && behavior_equal(a.second, b.second);
        }
    };
    struct Par {
        BehaviorPtr left, right;
        friend bool operator==(const Par& a, const Par& b) {
            return behavior_equal(a.left, b.left) && behavior_equal(a.right, b.right);
        }
    };
    struct If {
        ExprPtr cond;
        BehaviorPtr then_branch;
        BehaviorPtr else_branch;  // null when absent
        friend bool operator==(const If& a, const If& b) {
            return expr_equal(a.cond, b.cond) && behavior_equal(a.then_branch, b.then_branch) &&
                   behavior_equal(a.else_branch, b.else_branch);
        }
    };
    struct While {
        ExprPtr cond;
        BehaviorPtr body;
        friend bool operator==(const While& a, const While& b) {
            return expr_equal(a.cond, b.cond) && behavior_equal(a.body, b.body);
        }
    };
    struct Call {
        std::string procedure;
        friend bool operator==(const Call&, const Call&) = default;
    };
    struct InputChoice {
        std::vector<InputBranch> branches;
        friend bool operator==(const InputChoice&, const InputChoice&) = default;
    };
    struct ProvideUntil {
        std::vector<InputBranch> provide;
        std::vector<InputBranch> until;
        friend bool operator==(const ProvideUntil&, const ProvideUntil&) = default;
    };
    struct Notify {
        std::string op;
        std::string port;
        ExprPtr request;
        friend bool operator==(const Notify& a, const Notify& b) {
            return a.op == b.op && a.port == b.port && expr_equal(a.request, b.request);
        }
    };
    struct Solicit {
        std::string op;
        std::string port;
        ExprPtr request;
        Path resp_path;
        friend bool operator==(const Solicit& a, const Solicit& b) {
            return a.op == b.op && a.port == b.port && expr_equal(a.request, b.request) &&
                   a.resp_path == b.resp_path;
        }
    };
    struct Rebind {
        std::string port;
        ExprPtr location;
        ExprPtr protocol;
        friend bool operator==(const Rebind& a, const Rebind& b) {
            return a.port == b.port && expr_equal(a.location, b.location) && expr_equal(a.protocol, b.protocol);
        }
    };
    struct Sleep {
        ExprPtr millis;
        friend bool operator==(const Sleep& a, const Sleep& b) { return expr_equal(a.millis, b.millis); }
    };

    using Node = std::variant<Nil, Assign, Seq, Par, If, While, Call, InputChoice, ProvideUntil,
                              Notify, Solicit, Rebind, Sleep>;
    Node node;
    SourceSpan span;

    friend bool operator==(const Behavior& a, const Behavior& b) { return a.node == b.node; }
};

inline bool behavior_equal(const BehaviorPtr& a, const BehaviorPtr& b) {
    if (!a || !b) return a == b;
    return *a == *b;
}

inline BehaviorPtr make_behavior(Behavior::Node node, SourceSpan span = {}) {
    auto b = std::make_shared<Behavior>();
    b->node = std::move(node);
    b->span = std::move(span);
    return b;
}

inline BehaviorPtr nil_behavior(SourceSpan span = {}) { return make_behavior(Behavior::Nil{}, std::move(span)); }

inline BehaviorPtr seq_behavior(BehaviorPtr a, BehaviorPtr b) {
    SourceSpan sp = a && b ? SourceSpan::join(a->span, b->span) : SourceSpan{};
    return make_behavior(Behavior::Seq{std::move(a), std::move(b)}, sp);
}

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

/// Signature of a remotely invocable operation.
struct OpSig {
    enum class Kind { OneWay, RequestResponse };
    Kind kind = Kind::OneWay;
    std::string name;
    TypeExprPtr req_type;
    TypeExprPtr resp_type;  // RR only
    SourceSpan span;

    friend bool operator==(const OpSig& a, const OpSig& b) {
        if (a.kind != b.kind || a.name != b.name) return false;
        auto teq = [](const TypeExprPtr& x, const TypeExprPtr& y) {
            if (!x || !y) return x == y;
            return *x == *y;
        };
        return teq(a.req_type, b.req_type) && teq(a.resp_type, b.resp_type);
    }
};

struct InterfaceExpr;
using InterfaceExprPtr = std::shared_ptr<const InterfaceExpr>;

struct InterfaceExpr {
    struct Lit {
        std::vector<OpSig> ops;
        friend bool operator==(const Lit&, const Lit&) = default;
    };
    struct Ref {
        std::string name;
        friend bool operator==(const Ref&, const Ref&) = default;
    };
    struct Union {
        InterfaceExprPtr lhs, rhs;
        friend bool operator==(const Union& a, const Union& b);
    };
    struct Intersect {
        InterfaceExprPtr lhs, rhs;
        friend bool operator==(const Intersect& a, const Intersect& b);
    };

    std::variant<Lit, Ref, Union, Intersect> node;
    SourceSpan span;

    friend bool operator==(const InterfaceExpr& a, const InterfaceExpr& b) { return a.node == b.node; }
};

inline bool iface_expr_equal(const InterfaceExprPtr& a, const InterfaceExprPtr& b) {
    if (!a || !b) return a == b;
    return *a == *b;
}
inline bool operator==(const InterfaceExpr::Union& a, const InterfaceExpr::Union& b) {
    return iface_expr_equal(a.lhs, b.lhs) && iface_expr_equal(a.rhs, b.rhs);
}
inline bool operator==(const InterfaceExpr::Intersect& a, const InterfaceExpr::Intersect& b) {
    return iface_expr_equal(a.lhs, b.lhs) && iface_expr_equal(a.rhs, b.rhs);
}

inline InterfaceExprPtr make_iface_expr(std::variant<InterfaceExpr::Lit, InterfaceExpr::Ref,
                                                     InterfaceExpr::Union, InterfaceExpr::Intersect> node,
                                        SourceSpan span = {}) {
    auto e = std::make_shared<InterfaceExpr>();
    e->node = std::move(node);
    e->span = std::move(span);
    return e;
}

struct InterfaceDecl {
    std::string name;
    InterfaceExprPtr expr;
    SourceSpan span;

    friend bool operator==(const InterfaceDecl& a, const InterfaceDecl& b) {
        return a.name == b.name && iface_expr_equal(a.expr, b.expr);
    }
};

struct TypeDef {
    std::string name;
    TypeExprPtr type;
    SourceSpan span;

    friend bool operator==(const TypeDef& a, const TypeDef& b) {
        if (a.name != b.name) return false;
        if (!a.type || !b.type) return a.type == b.type;
        return *a.type == *b.type;
    }
};

enum class PortDirection { Input, Output };

struct PortDecl {
    std::string name;
    PortDirection direction = PortDirection::Input;
    std::string location;                                        // literal, parsed at check time
    std::string protocol;                                        // e.g. "http", "sodep-lite"
    std::vector<std::pair<std::string, BasicValue>> protocol_params;
    std::vector<std::string> interfaces;
    SourceSpan span;
    SourceSpan location_span;
    SourceSpan protocol_span;

    friend bool operator==(const PortDecl& a, const PortDecl& b) {
        return a.name == b.name && a.direction == b.direction && a.location == b.location &&
               a.protocol == b.protocol && a.protocol_params == b.protocol_params &&
               a.interfaces == b.interfaces;
    }
};

struct CsetAlias {
    std::string op;
    Path path;
    SourceSpan span;

    friend bool operator==(const CsetAlias& a, const CsetAlias& b) {
        return a.op == b.op && a.path == b.path;
    }
};

struct CsetDecl {
    std::string variable;  // stored under csets.<variable>
    std::vector<CsetAlias> aliases;
    SourceSpan span;

    friend bool operator==(const CsetDecl& a, const CsetDecl& b) {
        return a.variable == b.variable && a.aliases == b.aliases;
    }
};

enum class ExecMode { Concurrent, Sequential };

struct Procedure {
    std::string name;
    BehaviorPtr body;
    SourceSpan span;

    friend bool operator==(const Procedure& a, const Procedure& b) {
        return a.name == b.name && behavior_equal(a.body, b.body);
    }
};

/// One source file, one service.
struct Program {
    std::string file;
    std::vector<TypeDef> type_defs;
    std::vector<InterfaceDecl> interfaces;
    std::vector<PortDecl> input_ports;
    std::vector<PortDecl> output_ports;
    std::vector<CsetDecl> csets;
    ExecMode execution = ExecMode::Concurrent;  // default when no execution block
    bool execution_declared = false;
    std::vector<Procedure> procedures;
    BehaviorPtr main;

    friend bool operator==(const Program& a, const Program& b) {
        return a.type_defs == b.type_defs && a.interfaces == b.interfaces &&
               a.input_ports == b.input_ports && a.output_ports == b.output_ports &&
               a.csets == b.csets && a.execution == b.execution &&
               a.execution_declared == b.execution_declared && a.procedures == b.procedures &&
               behavior_equal(a.main, b.main);
    }
};

}  // namespace microlang
