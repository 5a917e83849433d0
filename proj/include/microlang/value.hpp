#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace microlang {

/// Scalar payload of a tree node. Exactly one variant is held; monostate is void.
using BasicValue = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

enum class BasicKind { Void, Bool, Int, Double, String };

inline BasicKind kind_of(const BasicValue& v) {
    return static_cast<BasicKind>(v.index());
}

inline const char* kind_name(BasicKind k) {
    switch (k) {
        case BasicKind::Void: return "void";
        case BasicKind::Bool: return "bool";
        case BasicKind::Int: return "int";
        case BasicKind::Double: return "double";
        case BasicKind::String: return "string";
    }
    return "?";
}

/// Tree-structured datum: a scalar root plus ordered named child vectors.
/// Child names are unique within a node; every name maps to >= 1 element.
/// Plain value semantics, so copies are deep and cross-thread handoff is safe.
struct ValueNode {
    BasicValue root{};
    std::vector<std::pair<std::string, std::vector<ValueNode>>> children;

    ValueNode() = default;
    explicit ValueNode(BasicValue r) : root(std::move(r)) {}

    static ValueNode of() { return ValueNode{}; }
    static ValueNode of(bool b) { return ValueNode{BasicValue{b}}; }
    static ValueNode of(std::int64_t i) { return ValueNode{BasicValue{i}}; }
    static ValueNode of(int i) { return ValueNode{BasicValue{static_cast<std::int64_t>(i)}}; }
    static ValueNode of(double d) { return ValueNode{BasicValue{d}}; }
    static ValueNode of(std::string s) { return ValueNode{BasicValue{std::move(s)}}; }
    static ValueNode of(const char* s) { return ValueNode{BasicValue{std::string(s)}}; }

    bool is_void() const { return root.index() == 0 && children.empty(); }

    const std::vector<ValueNode>* find(std::string_view name) const {
        for (const auto& [n, v] : children)
            if (n == name) return &v;
        return nullptr;
    }

    std::vector<ValueNode>& vector_for(std::string_view name) {
        for (auto& [n, v] : children)
            if (n == name) return v;
        children.emplace_back(std::string(name), std::vector<ValueNode>{});
        return children.back().second;
    }

    /// Fluent child append, handy in tests and fixtures.
    ValueNode& put(std::string_view name, ValueNode child) {
        vector_for(name).push_back(std::move(child));
        return *this;
    }

    friend bool operator==(const ValueNode& a, const ValueNode& b) {
        return a.root == b.root && a.children == b.children;
    }
};

/// One step of a tree path: child name plus vector index (bare `a.b` means index 0).
struct PathSegment {
    std::string name;
    std::size_t index = 0;

    friend bool operator==(const PathSegment&, const PathSegment&) = default;
};

/// Dotted access path, optionally rooted in the correlation scope (`csets.`).
struct Path {
    bool csets = false;
    std::vector<PathSegment> segments;

    bool empty() const { return segments.empty(); }

    std::string str() const {
        std::string out = csets ? "csets" : "";
        for (const auto& s : segments) {
            if (!out.empty()) out += '.';
            out += s.name;
            if (s.index != 0) {
                out += '[';
                out += std::to_string(s.index);
                out += ']';
            }
        }
        return out;
    }

    /// Parses "a.b[2].c"; a leading "csets." segment selects the correlation scope.
    /// Throws std::invalid_argument on malformed input (used by tests and the CLI).
    static Path parse(std::string_view text) {
        Path p;
        std::size_t i = 0;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("bad path '" + std::string(text) + "': " + why);
        };
        bool first = true;
        while (i < text.size()) {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            if (i == start) fail("expected identifier");
            std::string name(text.substr(start, i - start));
            std::size_t index = 0;
            if (i < text.size() && text[i] == '[') {
                ++i;
                std::size_t ds = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == ds || i >= text.size() || text[i] != ']') fail("expected [index]");
                index = static_cast<std::size_t>(std::stoull(std::string(text.substr(ds, i - ds))));
                ++i;
            }
            if (first && name == "csets" && index == 0)
                p.csets = true;
            else
                p.segments.push_back({std::move(name), index});
            first = false;
            if (i < text.size()) {
                if (text[i] != '.') fail("expected '.'");
                ++i;
                if (i == text.size()) fail("trailing '.'");
            }
        }
        if (p.segments.empty() && !p.csets) fail("empty path");
        return p;
    }

    friend bool operator==(const Path&, const Path&) = default;
};

/// Reads the node at `path`. Absent segments read as a fresh void node; the
/// input state is never modified.
inline ValueNode path_get(const ValueNode& state, const Path& path) {
    const ValueNode* cur = &state;
    for (const auto& seg : path.segments) {
        const auto* vec = cur->find(seg.name);
        if (!vec || seg.index >= vec->size()) return ValueNode{};
        cur = &(*vec)[seg.index];
    }
    return *cur;
}

/// Pointer form of path_get; null when any segment is absent.
inline const ValueNode* path_find(const ValueNode& state, const Path& path) {
    const ValueNode* cur = &state;
    for (const auto& seg : path.segments) {
        const auto* vec = cur->find(seg.name);
        if (!vec || seg.index >= vec->size()) return nullptr;
        cur = &(*vec)[seg.index];
    }
    return cur;
}

/// Replaces the node at `path`, creating void-rooted intermediates and padding
/// child vectors as needed. Mutating form; the functional form wraps it.
inline void path_set_inplace(ValueNode& state, const Path& path, ValueNode value) {
    if (path.segments.empty()) {
        state = std::move(value);
        return;
    }
    ValueNode* cur = &state;
    for (std::size_t k = 0; k + 1 < path.segments.size(); ++k) {
        const auto& seg = path.segments[k];
        auto& vec = cur->vector_for(seg.name);
        if (vec.size() <= seg.index) vec.resize(seg.index + 1);
        cur = &vec[seg.index];
    }
    const auto& last = path.segments.back();
    auto& vec = cur->vector_for(last.name);
    if (vec.size() <= last.index) vec.resize(last.index + 1);
    vec[last.index] = std::move(value);
}

inline ValueNode path_set(ValueNode state, const Path& path, ValueNode value) {
    path_set_inplace(state, path, std::move(value));
    return state;
}

/// Source of fresh correlation tokens (the `new` keyword). Tokens are
/// 32 lowercase hex chars; a run seed makes the stream reproducible.
class TokenSource {
public:
    TokenSource() {
        std::random_device rd;
        std::seed_seq seq{rd(), rd(), rd(), rd()};
        rng_.seed(seq);
    }
    explicit TokenSource(std::uint64_t seed) : rng_(seed) {}

    std::string fresh_token() {
        static const char* hex = "0123456789abcdef";
        std::string out;
        out.reserve(32);
        for (int w = 0; w < 2; ++w) {
            std::uint64_t x = rng_();
            for (int i = 15; i >= 0; --i) out += hex[(x >> (i * 4)) & 0xF];
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

/// Debug rendering used in test failure messages; not a wire format.
inline void dump_value(const ValueNode& n, std::ostream& os) {
    switch (kind_of(n.root)) {
        case BasicKind::Void: os << "void"; break;
        case BasicKind::Bool: os << (std::get<bool>(n.root) ? "true" : "false"); break;
        case BasicKind::Int: os << std::get<std::int64_t>(n.root); break;
        case BasicKind::Double: os << std::get<double>(n.root); break;
        case BasicKind::String: os << '"' << std::get<std::string>(n.root) << '"'; break;
    }
    if (!n.children.empty()) {
        os << " {";
        bool firstName = true;
        for (const auto& [name, vec] : n.children) {
            os << (firstName ? " " : ", ") << name << ": [";
            firstName = false;
            for (std::size_t i = 0; i < vec.size(); ++i) {
                if (i) os << ", ";
                dump_value(vec[i], os);
            }
            os << ']';
        }
        os << " }";
    }
}

inline std::string dump_value(const ValueNode& n) {
    std::ostringstream os;
    dump_value(n, os);
    return os.str();
}

}  // namespace microlang
