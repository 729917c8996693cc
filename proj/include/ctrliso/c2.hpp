#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctrliso/graph.hpp"

namespace ctrliso {

// Two-variable first-order logic with counting quantifiers over graphs.
// Formulas use exactly the variable names X and Y; re-quantifying a variable
// inside a subformula about the other one realizes two-variable nesting, and
// the evaluator resolves each occurrence to its innermost binding.

enum class Var : int { X = 0, Y = 1 };

inline Var other(Var v) { return v == Var::X ? Var::Y : Var::X; }
inline const char* var_name(Var v) { return v == Var::X ? "x" : "y"; }

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { True, False, Edge, Equal, Not, And, Or, CountAtLeast };

    explicit Formula(Kind k) : kind(k) {}
    Formula(Kind k, Var first, Var second) : kind(k), a(first), b(second) {}

    Kind kind;
    Var a = Var::X;  // Edge/Equal first variable; CountAtLeast bound variable
    Var b = Var::Y;  // Edge/Equal second variable
    long threshold = 0;  // CountAtLeast d
    std::vector<FormulaPtr> children;
};

inline FormulaPtr f_true() {
    static const FormulaPtr f = std::make_shared<const Formula>(Formula::Kind::True);
    return f;
}

inline FormulaPtr f_false() {
    static const FormulaPtr f = std::make_shared<const Formula>(Formula::Kind::False);
    return f;
}

inline FormulaPtr f_edge(Var a, Var b) {
    return std::make_shared<const Formula>(Formula::Kind::Edge, a, b);
}

inline FormulaPtr f_equal(Var a, Var b) {
    return std::make_shared<const Formula>(Formula::Kind::Equal, a, b);
}

inline FormulaPtr f_not(FormulaPtr f) {
    Formula node(Formula::Kind::Not);
    node.children = {std::move(f)};
    return std::make_shared<const Formula>(std::move(node));
}

inline FormulaPtr f_and(std::vector<FormulaPtr> children) {
    Formula node(Formula::Kind::And);
    node.children = std::move(children);
    return std::make_shared<const Formula>(std::move(node));
}

inline FormulaPtr f_or(std::vector<FormulaPtr> children) {
    Formula node(Formula::Kind::Or);
    node.children = std::move(children);
    return std::make_shared<const Formula>(std::move(node));
}

inline FormulaPtr f_count_at_least(Var v, long d, FormulaPtr f) {
    if (d < 0) throw std::invalid_argument("f_count_at_least: negative threshold");
    Formula node(Formula::Kind::CountAtLeast);
    node.a = v;
    node.threshold = d;
    node.children = {std::move(f)};
    return std::make_shared<const Formula>(std::move(node));
}

// Optional values for X and Y.
struct Assignment {
    std::optional<int> x;
    std::optional<int> y;

    std::optional<int> get(Var v) const { return v == Var::X ? x : y; }
    Assignment with(Var v, int value) const {
        Assignment out = *this;
        (v == Var::X ? out.x : out.y) = value;
        return out;
    }
};

// Memoizing evaluator for one graph. Shared subformulas are evaluated once
// per (node, assignment), so DAG-shaped formulas stay cheap. The evaluator
// keeps every formula it has seen alive: the memo is keyed by node address,
// which must stay unique for the evaluator's lifetime.
class Evaluator {
public:
    explicit Evaluator(const Graph& g) : g_(&g) {}

    bool eval(const FormulaPtr& f, const Assignment& a = {}) {
        if (!f) throw std::invalid_argument("eval: null formula");
        roots_.push_back(f);
        return eval_node(f, a);
    }

private:
    bool eval_node(const FormulaPtr& f, const Assignment& a) {
        switch (f->kind) {
            case Formula::Kind::True:
                return true;
            case Formula::Kind::False:
                return false;
            case Formula::Kind::Edge: {
                ++steps_;
                return g_->has_edge(value_of(f->a, a), value_of(f->b, a));
            }
            case Formula::Kind::Equal: {
                ++steps_;
                return value_of(f->a, a) == value_of(f->b, a);
            }
            case Formula::Kind::Not:
                return !eval_node(f->children[0], a);
            case Formula::Kind::And:
                for (const auto& c : f->children)
                    if (!eval_node(c, a)) return false;
                return true;
            case Formula::Kind::Or:
                for (const auto& c : f->children)
                    if (eval_node(c, a)) return true;
                return false;
            case Formula::Kind::CountAtLeast:
                return eval_count(f, a);
        }
        throw std::logic_error("eval: unknown formula kind");
    }

public:
    std::size_t steps() const { return steps_; }

private:
    struct Key {
        const Formula* node;
        int x;
        int y;
        bool operator==(const Key& o) const { return node == o.node && x == o.x && y == o.y; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            auto h = reinterpret_cast<std::uintptr_t>(k.node);
            h ^= static_cast<std::uintptr_t>(k.x + 1) * 0x9E3779B97F4A7C15ULL;
            h ^= static_cast<std::uintptr_t>(k.y + 1) * 0xC2B2AE3D27D4EB4FULL;
            return static_cast<std::size_t>(h ^ (h >> 29));
        }
    };

    int value_of(Var v, const Assignment& a) const {
        const auto val = a.get(v);
        if (!val) throw std::invalid_argument("eval: unassigned free variable");
        if (*val < 0 || *val >= g_->order()) throw std::out_of_range("eval: assigned vertex out of range");
        return *val;
    }

    bool eval_count(const FormulaPtr& f, const Assignment& a) {
        if (f->threshold <= 0) return true;
        // The bound variable is overwritten before any read, so its incoming
        // value is not part of the memo key.
        const Key key{f.get(), f->a == Var::X ? -1 : a.x.value_or(-1),
                      f->a == Var::Y ? -1 : a.y.value_or(-1)};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        long count = 0;
        bool result = false;
        for (int u = 0; u < g_->order(); ++u) {
            ++steps_;
            if (eval_node(f->children[0], a.with(f->a, u)) && ++count >= f->threshold) {
                result = true;
                break;
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    const Graph* g_;
    std::vector<FormulaPtr> roots_;
    std::unordered_map<Key, bool, KeyHash> memo_;
    std::size_t steps_ = 0;
};

inline bool eval_formula(const Graph& g, const FormulaPtr& f, const Assignment& a = {}) {
    Evaluator ev(g);
    return ev.eval(f, a);
}

// One part of a decomposition: (value, multiplicity).
using DecompPart = std::pair<long, long>;
using Decomposition = std::vector<DecompPart>;

namespace detail {

// Emits all multisets {(q_i, a_i)} with distinct values q_i in
// [min_value, max_value], a_i >= 1, sum a_i <= max_parts, sum a_i q_i = q.
// Values are tried in descending order, multiplicities ascending, which fixes
// the enumeration order. Returns false if the callback aborted.
inline bool enumerate_decompositions(long q, long max_value, long max_parts, long min_value,
                                     const std::function<bool(const Decomposition&)>& emit) {
    if (q < 0 || max_parts < 0) return true;
    Decomposition current;
    std::function<bool(long, long, long)> recurse = [&](long value, long remaining, long parts_left) -> bool {
        if (value < min_value) {
            if (remaining != 0) return true;
            return emit(current);
        }
        const long max_mult = value == 0 ? parts_left
                                         : std::min(parts_left, remaining / value);
        for (long m = 0; m <= max_mult; ++m) {
            if (value == 0 && remaining != 0) break;  // zero parts cannot close a gap
            if (m > 0) current.emplace_back(value, m);
            const bool keep_going = recurse(value - 1, remaining - m * value, parts_left - m);
            if (m > 0) current.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    return recurse(max_value, q, max_parts);
}

inline long bounded_pow(long base, int exp, long cap) {
    long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / std::max(base, 1L)) return cap;
        v *= base;
        if (v >= cap) return cap;
    }
    return v;
}

}  // namespace detail

// All decompositions q = sum a_i q_i with distinct values q_i in
// [0, max_value] and sum a_i <= max_parts.
inline std::vector<Decomposition> count_decompositions(long q, long max_value, long max_parts) {
    if (q < 0 || max_value < 0 || max_parts < 0)
        throw std::invalid_argument("count_decompositions: bounds must be nonnegative");
    std::vector<Decomposition> out;
    detail::enumerate_decompositions(q, max_value, max_parts, 0, [&](const Decomposition& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

struct C2CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Builds the walk-counting formulas: psi(q, r) holds at a vertex with exactly
// q walks of length r, phi(q, r) holds in a graph with exactly q walks of
// length r in total, for any graph whose maximum degree is at most
// degree_bound. Construction refuses once a single build exceeds node_cap.
class C2Builder {
public:
    explicit C2Builder(int degree_bound, std::size_t node_cap = 1'000'000)
        : degree_bound_(degree_bound), cap_(node_cap) {
        if (degree_bound < 0) throw std::invalid_argument("C2Builder: negative degree bound");
    }

    FormulaPtr psi(long q, int r) {
        build_nodes_ = 0;
        return psi(q, r, Var::X);
    }

    FormulaPtr phi(long q, int r) {
        if (q < 0 || r < 0) throw std::invalid_argument("C2Builder: negative parameters");
        build_nodes_ = 0;
        // Decompose q into the positive per-vertex counts; vertices with zero
        // walks are absorbed by the coverage conjunct, so the sentence does
        // not depend on the order of the evaluated graph.
        const long max_value = detail::bounded_pow(degree_bound_, r, q);
        std::vector<FormulaPtr> disjuncts;
        const bool complete = detail::enumerate_decompositions(
            q, max_value, q, 1, [&](const Decomposition& d) {
                std::vector<FormulaPtr> conjuncts;
                std::vector<FormulaPtr> covered{psi(0, r, Var::X)};
                for (const auto& [value, mult] : d) {
                    const FormulaPtr part = psi(value, r, Var::X);
                    conjuncts.push_back(count_exact(Var::X, mult, part));
                    covered.push_back(part);
                }
                conjuncts.push_back(forall(Var::X, mk_or(std::move(covered))));
                disjuncts.push_back(mk_and(std::move(conjuncts)));
                return build_nodes_ <= cap_;
            });
        if (!complete || build_nodes_ > cap_) throw cap_error(q, r);
        return mk_or(std::move(disjuncts));
    }

    std::size_t nodes_created() const { return total_nodes_; }
    std::size_t last_build_nodes() const { return build_nodes_; }

    FormulaPtr count_exact(Var v, long d, const FormulaPtr& f) {
        return mk_and({f_count_at_least_counted(v, d, f), mk_not(f_count_at_least_counted(v, d + 1, f))});
    }

    FormulaPtr forall(Var v, FormulaPtr f) {
        return mk_not(f_count_at_least_counted(v, 1, mk_not(std::move(f))));
    }

private:
    FormulaPtr psi(long q, int r, Var v) {
        if (q < 0 || r < 0) throw std::invalid_argument("C2Builder: negative parameters");
        const auto key = std::make_tuple(q, r, v == Var::X);
        if (auto it = psi_cache_.find(key); it != psi_cache_.end()) return it->second;
        FormulaPtr out;
        if (r == 0) {
            // Exactly one walk of length zero from any vertex.
            out = q == 1 ? f_true() : f_false();
        } else {
            // q walks of length r from v split over the neighbors by their
            // length-(r-1) counts; the total-degree conjunct pins the number
            // of neighbors so no unlisted count can contribute.
            const long max_value = detail::bounded_pow(degree_bound_, r - 1, q);
            std::vector<FormulaPtr> disjuncts;
            const Var w = other(v);
            const bool complete = detail::enumerate_decompositions(
                q, max_value, degree_bound_, 0, [&](const Decomposition& d) {
                    std::vector<FormulaPtr> conjuncts;
                    long neighbor_total = 0;
                    for (const auto& [value, mult] : d) {
                        neighbor_total += mult;
                        conjuncts.push_back(
                            count_exact(w, mult, mk_and({f_edge_counted(v, w), psi(value, r - 1, w)})));
                    }
                    conjuncts.push_back(count_exact(w, neighbor_total, f_edge_counted(v, w)));
                    disjuncts.push_back(mk_and(std::move(conjuncts)));
                    return build_nodes_ <= cap_;
                });
            if (!complete || build_nodes_ > cap_) throw cap_error(q, r);
            out = mk_or(std::move(disjuncts));
        }
        psi_cache_.emplace(key, out);
        return out;
    }

    C2CapError cap_error(long q, int r) const {
        return C2CapError("C2Builder: formula for q=" + std::to_string(q) + ", r=" + std::to_string(r) +
                          " exceeds the node cap of " + std::to_string(cap_) + " AST nodes");
    }

    FormulaPtr note(FormulaPtr f) {
        ++total_nodes_;
        if (++build_nodes_ > cap_)
            throw C2CapError("C2Builder: node cap of " + std::to_string(cap_) + " AST nodes exceeded");
        return f;
    }

    FormulaPtr f_edge_counted(Var a, Var b) {
        auto key = std::make_pair(a == Var::X, b == Var::X);
        if (auto it = edge_cache_.find(key); it != edge_cache_.end()) return it->second;
        FormulaPtr f = note(f_edge(a, b));
        edge_cache_.emplace(key, f);
        return f;
    }

    FormulaPtr f_count_at_least_counted(Var v, long d, FormulaPtr f) {
        if (d <= 0) return f_true();
        return note(f_count_at_least(v, d, std::move(f)));
    }

    FormulaPtr mk_not(FormulaPtr f) {
        if (f->kind == Formula::Kind::True) return f_false();
        if (f->kind == Formula::Kind::False) return f_true();
        return note(f_not(std::move(f)));
    }

    FormulaPtr mk_and(std::vector<FormulaPtr> children) {
        std::vector<FormulaPtr> kept;
        for (auto& c : children) {
            if (c->kind == Formula::Kind::False) return f_false();
            if (c->kind == Formula::Kind::True) continue;
            kept.push_back(std::move(c));
        }
        if (kept.empty()) return f_true();
        if (kept.size() == 1) return kept[0];
        return note(f_and(std::move(kept)));
    }

    FormulaPtr mk_or(std::vector<FormulaPtr> children) {
        std::vector<FormulaPtr> kept;
        for (auto& c : children) {
            if (c->kind == Formula::Kind::True) return f_true();
            if (c->kind == Formula::Kind::False) continue;
            kept.push_back(std::move(c));
        }
        if (kept.empty()) return f_false();
        if (kept.size() == 1) return kept[0];
        return note(f_or(std::move(kept)));
    }

    int degree_bound_;
    std::size_t cap_;
    std::size_t total_nodes_ = 0;
    std::size_t build_nodes_ = 0;
    std::map<std::tuple<long, int, bool>, FormulaPtr> psi_cache_;
    std::map<std::pair<bool, bool>, FormulaPtr> edge_cache_;
};

// Free-standing builders matching the operation contracts. degree_bound must
// be at least the maximum degree of any graph the formula is evaluated on.
inline FormulaPtr build_psi(long q, int r, int degree_bound) {
    C2Builder b(degree_bound);
    return b.psi(q, r);
}

inline FormulaPtr build_phi(long q, int r, int degree_bound) {
    C2Builder b(degree_bound);
    return b.phi(q, r);
}

// Prefix serialization; grammar documented in the README.
inline void format_formula(const FormulaPtr& f, std::string& out) {
    switch (f->kind) {
        case Formula::Kind::True:
            out += "true";
            return;
        case Formula::Kind::False:
            out += "false";
            return;
        case Formula::Kind::Edge:
            out += "(edge ";
            out += var_name(f->a);
            out += ' ';
            out += var_name(f->b);
            out += ')';
            return;
        case Formula::Kind::Equal:
            out += "(= ";
            out += var_name(f->a);
            out += ' ';
            out += var_name(f->b);
            out += ')';
            return;
        case Formula::Kind::Not:
            out += "(not ";
            format_formula(f->children[0], out);
            out += ')';
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            out += f->kind == Formula::Kind::And ? "(and" : "(or";
            for (const auto& c : f->children) {
                out += ' ';
                format_formula(c, out);
            }
            out += ')';
            return;
        case Formula::Kind::CountAtLeast:
            out += "(count>= ";
            out += var_name(f->a);
            out += ' ';
            out += std::to_string(f->threshold);
            out += ' ';
            format_formula(f->children[0], out);
            out += ')';
            return;
    }
}

inline std::string to_string(const FormulaPtr& f) {
    std::string out;
    format_formula(f, out);
    return out;
}

}  // namespace ctrliso
