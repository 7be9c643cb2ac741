#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "plethysm/partition.hpp"

namespace plethysm {

// Box of a Young diagram, 1-based, row 1 at the top.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::vector<Cell> skew_cells(const SkewShape& s) {
    std::vector<Cell> cells;
    for (int i = 1; i <= s.outer().length(); ++i)
        for (int j = s.inner().part(i) + 1; j <= s.outer().part(i); ++j)
            cells.push_back(Cell{i, j});
    return cells;
}

// Border strip: edge-connected skew diagram with no 2x2 square.
inline bool is_border_strip(const SkewShape& s) {
    std::vector<Cell> cells = skew_cells(s);
    if (cells.empty()) return false;
    std::set<Cell> in(cells.begin(), cells.end());
    for (const Cell& c : cells) {
        if (in.count(Cell{c.row, c.col + 1}) && in.count(Cell{c.row + 1, c.col}) &&
            in.count(Cell{c.row + 1, c.col + 1}))
            return false;
    }
    // flood fill over shared edges
    std::set<Cell> seen;
    std::vector<Cell> stack{cells.front()};
    seen.insert(cells.front());
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (Cell d : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1},
                       Cell{c.row, c.col + 1}}) {
            if (in.count(d) && seen.insert(d).second) stack.push_back(d);
        }
    }
    return seen.size() == cells.size();
}

// Number of occupied rows minus 1.
inline int spin(const SkewShape& s) {
    if (!is_border_strip(s))
        throw std::invalid_argument("NotABorderStrip: spin of " + s.outer().to_string() + "/" +
                                    s.inner().to_string());
    int first = 0, last = 0;
    for (int i = 1; i <= s.outer().length(); ++i) {
        if (s.outer().part(i) > s.inner().part(i)) {
            if (first == 0) first = i;
            last = i;
        }
    }
    return last - first;
}

// Topmost cell of each column of the skew shape; always a horizontal strip.
inline std::vector<Cell> top_strip(const SkewShape& s) {
    std::map<int, int> top;  // col -> min row
    for (int i = 1; i <= s.outer().length(); ++i)
        for (int j = s.inner().part(i) + 1; j <= s.outer().part(i); ++j)
            if (!top.count(j)) top[j] = i;  // rows scanned top-down
    std::vector<Cell> out;
    out.reserve(top.size());
    for (auto [col, row] : top) out.push_back(Cell{row, col});
    return out;
}

namespace detail {

// Border strips of `size` cells addable to `base` without leaving `bound`,
// returned as the enlarged partitions. A strip spanning rows i1..i2 forces
// row i to start one column right of base row i-1 (connected, no 2x2), so the
// whole strip is determined by (i1, i2, size); candidates come out ordered by
// (i1, i2).
inline std::vector<Partition> addable_strips(const Partition& base, const Partition& bound,
                                             int size) {
    std::vector<Partition> out;
    if (size < 1) return out;
    int rows = bound.length();
    for (int i1 = 1; i1 <= rows; ++i1) {
        for (int i2 = i1; i2 <= rows; ++i2) {
            std::vector<int> next(base.parts());
            if (static_cast<int>(next.size()) < i2) next.resize(i2, 0);
            bool feasible = true;
            int forced = 0;  // cells in the forced rows i1+1..i2, each >= 1
            for (int i = i1 + 1; i <= i2; ++i) {
                int v = base.part(i - 1) + 1;
                if (v > bound.part(i)) {
                    feasible = false;
                    break;
                }
                forced += v - base.part(i);
                next[i - 1] = v;
            }
            if (!feasible) break;        // longer spans contain this row too
            if (forced >= size) break;   // forced only grows with i2
            int head = base.part(i1) + (size - forced);
            if (head > bound.part(i1)) continue;  // shrinks as i2 grows, keep trying
            if (i1 > 1 && head > base.part(i1 - 1)) continue;
            next[i1 - 1] = head;
            out.push_back(Partition{std::move(next)});
        }
    }
    return out;
}

// Border strips of `size` cells removable from `outer`, returned as the
// shrunken partitions. Mirror of addable_strips: row i of the strip must end
// one column right of where row i+1 of the result starts.
inline std::vector<Partition> removable_strips(const Partition& outer, int size) {
    std::vector<Partition> out;
    if (size < 1) return out;
    int rows = outer.length();
    for (int i1 = 1; i1 <= rows; ++i1) {
        for (int i2 = i1; i2 <= rows; ++i2) {
            std::vector<int> next(outer.parts());
            int forced = 0;  // cells in the forced rows i1..i2-1, each >= 1
            for (int i = i1; i < i2; ++i) {
                int v = outer.part(i + 1) - 1;
                forced += outer.part(i) - v;
                next[i - 1] = v;
            }
            if (forced >= size) break;  // forced only grows with i2
            int tail = outer.part(i2) - (size - forced);
            if (tail < 0 || tail < outer.part(i2 + 1)) continue;
            next[i2 - 1] = tail;
            out.push_back(Partition{std::move(next)});
        }
    }
    return out;
}

}  // namespace detail

// Nested stages inner = alpha^0 c alpha^1 c ... c alpha^l = outer whose i-th
// step is a border strip of weights[i-1] * n cells.
struct StripChain {
    std::vector<Partition> stages;
    std::vector<int> weights;

    const Partition& inner() const { return stages.front(); }
    const Partition& outer() const { return stages.back(); }
    int length() const { return static_cast<int>(weights.size()); }
    friend bool operator==(const StripChain&, const StripChain&) = default;
};

// Depth-first visit of every n-border strip chain decomposing the shape, in a
// fixed order (per step: strip weight ascending, then row span). The visitor
// returns false to stop the walk; walk_chains returns false iff stopped.
inline bool walk_chains(const SkewShape& s, int n, bool unit_weight_only,
                        const std::function<bool(const StripChain&)>& visit) {
    if (n < 1) throw std::invalid_argument("walk_chains: n must be positive");
    long long size = s.size();
    if (size % n != 0) return true;  // no chain can exist
    StripChain chain;
    chain.stages.push_back(s.inner());
    auto rec = [&](auto&& self) -> bool {
        Partition base = chain.stages.back();  // by value: recursion reallocates stages
        long long remaining = s.outer().weight() - base.weight();
        if (remaining == 0) return visit(chain);
        int max_tau = unit_weight_only ? 1 : static_cast<int>(remaining / n);
        for (int tau = 1; tau <= max_tau; ++tau) {
            for (Partition& next : detail::addable_strips(base, s.outer(), tau * n)) {
                chain.stages.push_back(std::move(next));
                chain.weights.push_back(tau);
                bool keep_going = self(self);
                chain.stages.pop_back();
                chain.weights.pop_back();
                if (!keep_going) return false;
            }
        }
        return true;
    };
    return rec(rec);
}

// All chains, in walk order. The empty shape has exactly the empty chain.
inline std::vector<StripChain> enumerate_chains(const SkewShape& s, int n,
                                                bool unit_weight_only) {
    std::vector<StripChain> out;
    walk_chains(s, n, unit_weight_only, [&](const StripChain& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

namespace detail {

// Starting box of a strip step: uppermost row, rightmost cell in it.
inline Cell strip_start(const Partition& from, const Partition& to) {
    for (int i = 1; i <= to.length(); ++i)
        if (to.part(i) > from.part(i)) return Cell{i, to.part(i)};
    throw std::logic_error("strip_start: stages are equal");
}

}  // namespace detail

// True iff every step's starting box lies in the top strip of the chain's
// whole shape.
inline bool is_horizontal_chain(const StripChain& c, int n) {
    if (c.stages.size() != c.weights.size() + 1 || c.stages.empty())
        throw std::invalid_argument("is_horizontal_chain: malformed chain");
    std::vector<Cell> top = top_strip(SkewShape{c.outer(), c.inner()});
    std::set<Cell> top_set(top.begin(), top.end());
    for (size_t i = 1; i < c.stages.size(); ++i) {
        long long step = c.stages[i].weight() - c.stages[i - 1].weight();
        if (step != static_cast<long long>(c.weights[i - 1]) * n)
            throw std::invalid_argument("is_horizontal_chain: weights do not match stages");
        if (!top_set.count(detail::strip_start(c.stages[i - 1], c.stages[i]))) return false;
    }
    return true;
}

enum class StripKind { NotWeightKStrip, NonHorizontal, Horizontal };

struct StripClassification {
    StripKind kind = StripKind::NotWeightKStrip;
    int m_value = 0;  // max horizontal chain length, 0 when no chain exists
    int sign = 0;     // product of (-1)^spin along a maximal chain, else 0
    friend bool operator==(const StripClassification&, const StripClassification&) = default;
};

// Classification of lambda/mu as an n-border strip of weight k. Computed by
// dynamic programming over intermediate stages rather than chain listing, so
// shapes whose chain count explodes still classify quickly. The sign set over
// all maximum-length horizontal chains is tracked; a non-singleton set would
// contradict the determinant identity and raises logic_error.
inline StripClassification classify(const SkewShape& s, int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("classify: n and k must be positive");
    if (s.size() != static_cast<long long>(n) * k)
        throw std::invalid_argument("SizeMismatch: |" + s.outer().to_string() + "/" +
                                    s.inner().to_string() + "| != n*k");

    std::vector<Cell> top = top_strip(s);
    std::set<Cell> top_set(top.begin(), top.end());

    // any chain at all?
    std::map<Partition, bool> reach;
    auto reachable = [&](auto&& self, const Partition& base) -> bool {
        if (base == s.outer()) return true;
        auto it = reach.find(base);
        if (it != reach.end()) return it->second;
        bool ok = false;
        long long remaining = s.outer().weight() - base.weight();
        for (int tau = 1; !ok && tau <= remaining / n; ++tau)
            for (Partition& next : detail::addable_strips(base, s.outer(), tau * n))
                if (self(self, next)) {
                    ok = true;
                    break;
                }
        return reach[base] = ok;
    };

    // longest horizontal continuation and the sign set at that length;
    // len = -1 marks "no horizontal chain from here".
    struct Best {
        int len;
        unsigned signs;  // bit0: +1 achievable, bit1: -1 achievable
    };
    std::map<Partition, Best> memo;
    auto best = [&](auto&& self, const Partition& base) -> Best {
        if (base == s.outer()) return Best{0, 1u};
        auto it = memo.find(base);
        if (it != memo.end()) return it->second;
        Best b{-1, 0u};
        long long remaining = s.outer().weight() - base.weight();
        for (int tau = 1; tau <= remaining / n; ++tau) {
            for (Partition& next : detail::addable_strips(base, s.outer(), tau * n)) {
                if (!top_set.count(detail::strip_start(base, next))) continue;
                int step_spin = spin(SkewShape{next, base});
                Best sub = self(self, next);
                if (sub.len < 0) continue;
                unsigned signs = step_spin % 2 == 0 ? sub.signs
                                                    : ((sub.signs & 1u) << 1) | (sub.signs >> 1);
                if (sub.len + 1 > b.len) {
                    b = Best{sub.len + 1, signs};
                } else if (sub.len + 1 == b.len) {
                    b.signs |= signs;
                }
            }
        }
        return memo[base] = b;
    };

    StripClassification out;
    if (!reachable(reachable, s.inner())) return out;  // NotWeightKStrip
    Best b = best(best, s.inner());
    if (b.len < 0)
        throw std::logic_error("classify: chain exists but no horizontal chain");
    out.m_value = b.len;
    if (b.len == k) {
        if (b.signs == 3u)
            throw std::logic_error("classify: maximal horizontal chains disagree on sign");
        out.kind = StripKind::Horizontal;
        out.sign = b.signs == 1u ? 1 : -1;
    } else {
        out.kind = StripKind::NonHorizontal;
        out.sign = 0;
    }
    return out;
}

}  // namespace plethysm
