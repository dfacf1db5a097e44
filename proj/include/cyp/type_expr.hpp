#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace cyp {

/// Simple type: variable, constructor application, or function arrow.
/// Variables whose names start with '?' are unification variables; all
/// others are rigid (declared parameters or generalized scheme variables).
struct Type {
    enum class Kind { Var, Con, Arrow };

    Kind kind = Kind::Var;
    std::string name;
    std::vector<Type> args;

    static Type var(std::string n) { return Type{Kind::Var, std::move(n), {}}; }
    static Type con(std::string n, std::vector<Type> a = {}) { return Type{Kind::Con, std::move(n), std::move(a)}; }
    static Type arrow(Type dom, Type cod) { return Type{Kind::Arrow, "->", {std::move(dom), std::move(cod)}}; }

    /// a1 -> a2 -> ... -> result
    static Type function(const std::vector<Type>& doms, Type result) {
        for (auto it = doms.rbegin(); it != doms.rend(); ++it) result = arrow(*it, std::move(result));
        return result;
    }

    bool is_var() const { return kind == Kind::Var; }
    bool is_con() const { return kind == Kind::Con; }
    bool is_arrow() const { return kind == Kind::Arrow; }
    bool is_flexible() const { return is_var() && !name.empty() && name[0] == '?'; }
    const Type& dom() const { return args[0]; }
    const Type& cod() const { return args[1]; }

    friend bool operator==(const Type& a, const Type& b) {
        return a.kind == b.kind && a.name == b.name && a.args == b.args;
    }
    friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
};

namespace detail {
inline void print_type(const Type& t, std::string& out, int prec) {
    switch (t.kind) {
        case Type::Kind::Var: out += t.name; return;
        case Type::Kind::Con:
            if (t.args.empty()) {
                out += t.name;
                return;
            }
            if (prec > 1) out += '(';
            out += t.name;
            for (const auto& a : t.args) {
                out += ' ';
                print_type(a, out, 2);
            }
            if (prec > 1) out += ')';
            return;
        case Type::Kind::Arrow:
            if (prec > 0) out += '(';
            print_type(t.dom(), out, 1);
            out += " -> ";
            print_type(t.cod(), out, 0);
            if (prec > 0) out += ')';
            return;
    }
}
}  // namespace detail

inline std::string to_string(const Type& t) {
    std::string s;
    detail::print_type(t, s, 0);
    return s;
}

inline void type_vars(const Type& t, std::vector<std::string>& out) {
    if (t.is_var()) {
        for (const auto& v : out)
            if (v == t.name) return;
        out.push_back(t.name);
        return;
    }
    for (const auto& a : t.args) type_vars(a, out);
}

inline std::vector<std::string> type_vars(const Type& t) {
    std::vector<std::string> out;
    type_vars(t, out);
    return out;
}

inline bool type_occurs(const Type& t, const std::string& v) {
    if (t.is_var()) return t.name == v;
    for (const auto& a : t.args)
        if (type_occurs(a, v)) return true;
    return false;
}

inline Type substitute_type(const Type& t, const std::map<std::string, Type>& m) {
    if (t.is_var()) {
        auto it = m.find(t.name);
        return it == m.end() ? t : it->second;
    }
    Type r = t;
    for (auto& a : r.args) a = substitute_type(a, m);
    return r;
}

/// Name for the i-th generalized variable: a, b, ..., z, a1, b1, ...
inline std::string scheme_var_name(std::size_t i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    return s;
}

/// Universally quantified type.
struct TypeScheme {
    std::vector<std::string> quantified;
    Type body;
};

inline std::string to_string(const TypeScheme& s) {
    if (s.quantified.empty()) return to_string(s.body);
    std::string out = "forall";
    for (const auto& q : s.quantified) out += " " + q;
    return out + ". " + to_string(s.body);
}

}  // namespace cyp
