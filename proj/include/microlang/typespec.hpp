#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "microlang/value.hpp"

namespace microlang {

/// Allowed element count for a child vector. `hi == unbounded()` means no cap.
struct Cardinality {
    std::uint32_t lo = 1;
    std::uint32_t hi = 1;

    static constexpr std::uint32_t unbounded() { return std::numeric_limits<std::uint32_t>::max(); }

    bool admits(std::size_t n) const { return n >= lo && (hi == unbounded() || n <= hi); }

    std::string str() const {
        if (lo == 0 && hi == unbounded()) return "[0,*]";
        if (hi == unbounded()) return "[" + std::to_string(lo) + ",*]";
        return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }

    friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

struct TypeExpr;
using TypeExprPtr = std::shared_ptr<const TypeExpr>;

/// Root kinds a type can require. `Any` admits every root kind.
enum class TypeKind { Void, Bool, Int, Double, String, Any };

inline const char* type_kind_name(TypeKind k) {
    switch (k) {
        case TypeKind::Void: return "void";
        case TypeKind::Bool: return "bool";
        case TypeKind::Int: return "int";
        case TypeKind::Double: return "double";
        case TypeKind::String: return "string";
        case TypeKind::Any: return "any";
    }
    return "?";
}

struct TypeField {
    std::string name;
    Cardinality card;
    TypeExprPtr type;

    friend bool operator==(const TypeField& a, const TypeField& b);
};

/// A message type: a bare kind, a reference to a named definition, or a node
/// form with a root kind and closed field set.
struct TypeExpr {
    enum class Form { Basic, Named, Node };
    Form form = Form::Basic;
    TypeKind kind = TypeKind::Void;   // Basic and Node root
    std::string name;                 // Named
    std::vector<TypeField> fields;    // Node

    static TypeExprPtr basic(TypeKind k) {
        auto t = std::make_shared<TypeExpr>();
        t->form = Form::Basic;
        t->kind = k;
        return t;
    }
    static TypeExprPtr named(std::string n) {
        auto t = std::make_shared<TypeExpr>();
        t->form = Form::Named;
        t->name = std::move(n);
        return t;
    }
    static TypeExprPtr node(TypeKind root, std::vector<TypeField> fs) {
        auto t = std::make_shared<TypeExpr>();
        t->form = Form::Node;
        t->kind = root;
        t->fields = std::move(fs);
        return t;
    }

    friend bool operator==(const TypeExpr& a, const TypeExpr& b) {
        if (a.form != b.form) return false;
        switch (a.form) {
            case Form::Basic: return a.kind == b.kind;
            case Form::Named: return a.name == b.name;
            case Form::Node: return a.kind == b.kind && a.fields == b.fields;
        }
        return false;
    }
};

inline bool operator==(const TypeField& a, const TypeField& b) {
    if (a.name != b.name || !(a.card == b.card)) return false;
    if (!a.type || !b.type) return a.type == b.type;
    return *a.type == *b.type;
}

/// Named type definitions visible to conformance checks.
using TypeEnv = std::map<std::string, TypeExprPtr>;

/// Raised when a Named reference cannot be resolved; this is a checker-level
/// error, distinct from value non-conformance.
class UnknownTypeError : public std::runtime_error {
public:
    explicit UnknownTypeError(const std::string& name)
        : std::runtime_error("unknown type '" + name + "'"), type_name(name) {}
    std::string type_name;
};

struct TypeViolation {
    std::string path;    // "(root)" for the node itself
    std::string reason;
};

struct Conformance {
    std::vector<TypeViolation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

inline bool root_matches(TypeKind k, const BasicValue& v) {
    switch (k) {
        case TypeKind::Any: return true;
        case TypeKind::Void: return kind_of(v) == BasicKind::Void;
        case TypeKind::Bool: return kind_of(v) == BasicKind::Bool;
        case TypeKind::Int: return kind_of(v) == BasicKind::Int;
        case TypeKind::Double: return kind_of(v) == BasicKind::Double;
        case TypeKind::String: return kind_of(v) == BasicKind::String;
    }
    return false;
}

inline std::string join_path(const std::string& prefix, const std::string& name, std::size_t idx) {
    std::string out = prefix.empty() ? name : prefix + "." + name;
    if (idx != 0) out += "[" + std::to_string(idx) + "]";
    return out;
}

inline const TypeExpr& deref(const TypeExpr& t, const TypeEnv& env) {
    const TypeExpr* cur = &t;
    int hops = 0;
    while (cur->form == TypeExpr::Form::Named) {
        auto it = env.find(cur->name);
        if (it == env.end()) throw UnknownTypeError(cur->name);
        cur = it->second.get();
        // Reference chains are acyclic by checker guarantee; the hop cap just
        // turns a broken env into an error instead of a spin.
        if (++hops > 1024) throw UnknownTypeError(t.name);
    }
    return *cur;
}

inline void conform_rec(const ValueNode& value, const TypeExpr& type, const TypeEnv& env,
                        const std::string& at, Conformance& out) {
    const TypeExpr& t = deref(type, env);
    const std::string where = at.empty() ? "(root)" : at;
    if (!root_matches(t.kind, value.root)) {
        out.violations.push_back({where, std::string("wrong root kind: expected ") + type_kind_name(t.kind) +
                                             ", got " + kind_name(kind_of(value.root))});
    }
    if (t.form == TypeExpr::Form::Basic) {
        if (t.kind == TypeKind::Any) return;  // fully open escape hatch
        for (const auto& [name, vec] : value.children) {
            (void)vec;
            out.violations.push_back({where, "unexpected child '" + name + "'"});
        }
        return;
    }
    // Node form: closed world over the declared fields.
    for (const auto& f : t.fields) {
        const auto* vec = value.find(f.name);
        std::size_t n = vec ? vec->size() : 0;
        if (!f.card.admits(n)) {
            out.violations.push_back({at.empty() ? f.name : at + "." + f.name,
                                      "cardinality " + std::to_string(n) + " not in " + f.card.str()});
        }
        if (vec)
            for (std::size_t i = 0; i < vec->size(); ++i)
                conform_rec((*vec)[i], *f.type, env, join_path(at, f.name, i), out);
    }
    for (const auto& [name, vec] : value.children) {
        (void)vec;
        bool declared = false;
        for (const auto& f : t.fields)
            if (f.name == name) { declared = true; break; }
        if (!declared) out.violations.push_back({where, "unexpected child '" + name + "'"});
    }
}

}  // namespace detail

/// Checks `value` against `type`, resolving named references through `env`.
/// Returns the full violation list; throws UnknownTypeError on a dangling name.
inline Conformance type_conforms(const ValueNode& value, const TypeExpr& type, const TypeEnv& env = {}) {
    Conformance out;
    detail::conform_rec(value, type, env, "", out);
    return out;
}

inline Conformance type_conforms(const ValueNode& value, const TypeExprPtr& type, const TypeEnv& env = {}) {
    return type_conforms(value, *type, env);
}

}  // namespace microlang
