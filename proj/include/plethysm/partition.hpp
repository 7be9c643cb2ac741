#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plethysm/bigint.hpp"

namespace plethysm {

// Integer partition: weakly decreasing positive parts, stored without
// trailing zeros. The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i - 1] < parts_[i]))
                throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    long long weight() const {
        long long w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    // 1-based part access, zero-padded beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) cols.resize(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[j];
        return Partition{std::move(cols)};
    }

    // inner is zero-padded: true iff inner_i <= this_i for all i.
    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 0; i < inner.length(); ++i)
            if (inner.parts_[i] > parts_[i]) return false;
        return true;
    }

    // "3,1,1"; empty string or "0" denotes the empty partition.
    static Partition parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        if (text.empty() || text == "0") return Partition{};
        std::vector<int> parts;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : comma - pos));
            if (tok.empty()) throw std::invalid_argument("Partition: empty part in \"" + std::string(text) + "\"");
            int value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("Partition: bad character in \"" + std::string(text) + "\"");
                if (value > (std::numeric_limits<int>::max() - 9) / 10)
                    throw std::invalid_argument("Partition: part too large");
                value = value * 10 + (c - '0');
            }
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Partition{std::move(parts)};  // validates order/positivity
    }

    // "[3,1,1]"; the empty partition renders "[]".
    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        s += ']';
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << p.to_string();
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
};

// Reverse-lexicographic key order: (4) before (3,1) before (2,2) before ...
// Fixed so rendered expansions and golden files are stable.
struct RevLexLess {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

// Finite list of non-negative integers; exponent vectors in straightening
// sums and the nu |= k of the vertex-operator expansion.
struct Composition {
    std::vector<int> parts;

    long long weight() const {
        long long w = 0;
        for (int p : parts) w += p;
        return w;
    }
    friend bool operator==(const Composition&, const Composition&) = default;
};

// Pair of nested partitions; all strip queries run on this.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw std::invalid_argument("NotContained: " + inner_.to_string() +
                                        " is not contained in " + outer_.to_string());
    }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    long long size() const { return outer_.weight() - inner_.weight(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of cycle type lambda.
inline BigInt z_of(const Partition& p) {
    BigInt z{1};
    int i = 0;
    while (i < p.length()) {
        int j = i;
        while (j < p.length() && p.parts()[j] == p.parts()[i]) ++j;
        for (int m = 1; m <= j - i; ++m) z *= BigInt{static_cast<long long>(p.parts()[i]) * m};
        i = j;
    }
    return z;
}

namespace detail {

inline void enum_partitions(int remaining, int max_part, int max_len, int pos,
                            const std::vector<int>& floor, std::vector<int>& cur,
                            std::vector<Partition>& out) {
    if (remaining == 0) {
        // remaining floor entries must all be consumed
        if (pos >= static_cast<int>(floor.size())) out.push_back(Partition{cur});
        return;
    }
    if (pos >= max_len) return;
    int lo = pos < static_cast<int>(floor.size()) ? floor[pos] : 1;
    if (lo < 1) lo = 1;
    for (int v = std::min(max_part, remaining); v >= lo; --v) {
        // the rest must fit above the floor and within the length budget
        long long tail_min = 0;
        for (int t = pos + 1; t < static_cast<int>(floor.size()); ++t) tail_min += floor[t];
        if (remaining - v < tail_min) continue;
        if (static_cast<long long>(remaining - v) > static_cast<long long>(max_len - pos - 1) * v)
            continue;
        cur.push_back(v);
        enum_partitions(remaining - v, v, max_len, pos + 1, floor, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// All partitions of given weight containing `inner`, with part/length bounds,
// in reverse-lexicographic order. weight < |inner| yields an empty list.
inline std::vector<Partition> partitions_containing(const Partition& inner, long long weight,
                                                    int max_first_part, int max_length) {
    std::vector<Partition> out;
    if (weight < inner.weight() || weight > 0x7fffffff) return out;
    if (inner.length() > max_length || inner.part(1) > max_first_part) return out;
    std::vector<int> cur;
    detail::enum_partitions(static_cast<int>(weight), max_first_part, max_length, 0,
                            inner.parts(), cur, out);
    return out;
}

// All partitions of n in reverse-lexicographic order: (n), ..., (1^n).
inline std::vector<Partition> partitions_of(long long n,
                                            int max_length = std::numeric_limits<int>::max()) {
    if (n == 0) return {Partition{}};
    int first = static_cast<int>(std::min<long long>(n, std::numeric_limits<int>::max()));
    return partitions_containing(Partition{}, n, first, max_length);
}

// All length-tuples of non-negative integers summing to k, first entry
// descending: (k,0,..), ..., (0,..,k). Length 0 admits only k = 0.
inline std::vector<Composition> compositions_of(int k, int length) {
    std::vector<Composition> out;
    if (length == 0) {
        if (k == 0) out.push_back(Composition{});
        return out;
    }
    std::vector<int> cur(length, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == length - 1) {
            cur[pos] = remaining;
            out.push_back(Composition{cur});
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, k);
    return out;
}

}  // namespace plethysm
