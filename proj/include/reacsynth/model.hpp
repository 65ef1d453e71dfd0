#pragma once

#include "reacsynth/expr.hpp"

#include <map>
#include <optional>
#include <variant>

namespace reacsynth {

using Value = std::variant<bool, Rational>;

inline bool value_matches_sort(const Value& v, Sort s) {
    if (std::holds_alternative<bool>(v)) return s == Sort::Bool;
    if (s == Sort::Int) return is_integer(std::get<Rational>(v));
    return s == Sort::Real;
}

inline std::string to_string(const Value& v) {
    if (auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    return to_string(std::get<Rational>(v));
}

// Total valuation of a variable scope. Keyed by variable name; names are
// unique within a contract.
class Model {
public:
    Model() = default;

    void set(const Var& v, Value val) {
        if (!value_matches_sort(val, v.sort))
            throw SortMismatch("value " + reacsynth::to_string(val) + " for " + v.name + " : " +
                               sort_name(v.sort));
        vals_[v.name] = std::move(val);
    }
    void set(const Var& v, bool b) { set(v, Value(b)); }
    void set(const Var& v, Rational r) { set(v, Value(std::move(r))); }

    bool contains(const std::string& name) const { return vals_.count(name) != 0; }

    const Value& get(const std::string& name) const {
        auto it = vals_.find(name);
        if (it == vals_.end()) throw UnboundVariable(name);
        return it->second;
    }

    Rational get_rational(const std::string& name) const {
        const Value& v = get(name);
        if (auto* r = std::get_if<Rational>(&v)) return *r;
        throw SortMismatch("boolean value for arithmetic variable " + name);
    }

    bool get_bool(const std::string& name) const {
        const Value& v = get(name);
        if (auto* b = std::get_if<bool>(&v)) return *b;
        throw SortMismatch("arithmetic value for boolean variable " + name);
    }

    const std::map<std::string, Value>& values() const { return vals_; }
    std::size_t size() const { return vals_.size(); }
    bool empty() const { return vals_.empty(); }

    // Restriction to a sub-scope; missing entries are an error.
    Model restrict(const std::vector<Var>& scope) const {
        Model out;
        for (const auto& v : scope) out.set(v, get(v.name));
        return out;
    }

    // Union of two disjoint-scope models; right side wins on overlap.
    Model merged(const Model& other) const {
        Model out = *this;
        for (const auto& [k, v] : other.vals_) out.vals_[k] = v;
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [k, v] : vals_) {
            if (!first) s += ", ";
            first = false;
            s += k + " = " + reacsynth::to_string(v);
        }
        return s + "}";
    }

private:
    std::map<std::string, Value> vals_;
};

} // namespace reacsynth
