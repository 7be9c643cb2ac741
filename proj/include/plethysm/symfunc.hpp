#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plethysm/bigint.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/rational.hpp"
#include "plethysm/strips.hpp"

namespace plethysm {

// Partition-indexed linear combination; zero coefficients are never stored.
// Keys iterate in reverse-lexicographic order, which fixes all rendered and
// serialized term orders.
template <typename Coeff>
class Expansion {
public:
    using Map = std::map<Partition, Coeff, RevLexLess>;

    Expansion() = default;
    Expansion(std::initializer_list<std::pair<Partition, Coeff>> init) {
        for (auto& [key, c] : init) add(key, c);
    }

    void add(const Partition& key, const Coeff& c) {
        if (c == Coeff{}) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == Coeff{}) terms_.erase(it);
        }
    }

    Coeff coeff(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool homogeneous() const {
        long long w = -1;
        for (const auto& [key, c] : terms_) {
            if (w < 0) w = key.weight();
            if (key.weight() != w) return false;
        }
        return true;
    }

    // degree of a homogeneous expansion; -1 when empty
    long long degree() const { return terms_.empty() ? -1 : terms_.begin()->first.weight(); }

    friend Expansion operator+(Expansion a, const Expansion& b) {
        for (const auto& [key, c] : b.terms_) a.add(key, c);
        return a;
    }

    Expansion scaled(const Coeff& f) const {
        Expansion r;
        for (const auto& [key, c] : terms_) r.add(key, c * f);
        return r;
    }

    friend bool operator==(const Expansion&, const Expansion&) = default;

private:
    Map terms_;
};

using PExpansion = Expansion<Rational>;      // power-sum basis, rational coefficients
using SchurExpansion = Expansion<BigInt>;    // Schur basis, integer coefficients
using EExpansion = Expansion<Rational>;      // products e_{k1} e_{k2} ..., key = sorted indices

// Irreducible symmetric-group character chi^lambda_rho by the classical
// Murnaghan-Nakayama recursion: strip a border strip of rho_1 cells, sign
// (-1)^height. Memoized globally; the table is guarded by a mutex, so calls
// may come from any thread.
inline BigInt mn_character(const Partition& lam, const Partition& rho) {
    if (lam.weight() != rho.weight())
        throw std::invalid_argument("WeightMismatch: |" + lam.to_string() + "| != |" +
                                    rho.to_string() + "|");

    struct Table {
        std::mutex mutex;
        std::map<std::pair<Partition, Partition>, BigInt> values;
    };
    static Table table;

    auto rec = [&](auto&& self, const Partition& l, const Partition& r) -> BigInt {
        if (l.empty()) return BigInt{1};
        auto key = std::make_pair(l, r);
        auto it = table.values.find(key);
        if (it != table.values.end()) return it->second;
        int strip = r.parts().front();  // largest part first, fixed for determinism
        Partition rest{std::vector<int>(r.parts().begin() + 1, r.parts().end())};
        BigInt total;
        for (const Partition& inner : detail::removable_strips(l, strip)) {
            int height = spin(SkewShape{l, inner});
            BigInt term = self(self, inner, rest);
            total += height % 2 == 0 ? term : -term;
        }
        table.values.emplace(std::move(key), total);
        return total;
    };

    std::scoped_lock lock(table.mutex);
    return rec(rec, lam, rho);
}

// s_lambda = sum_rho chi^lambda_rho / z_rho * p_rho
inline PExpansion schur_to_p(const Partition& lam) {
    PExpansion out;
    for (const Partition& rho : partitions_of(lam.weight()))
        out.add(rho, Rational{mn_character(lam, rho), z_of(rho)});
    return out;
}

// Inverse transform: the s_lambda coefficient of a homogeneous f is
// <f, s_lambda> = sum_rho c_rho chi^lambda_rho, which must come out integral.
inline SchurExpansion p_to_schur(const PExpansion& f) {
    if (!f.homogeneous())
        throw std::invalid_argument("p_to_schur: expansion is not homogeneous");
    SchurExpansion out;
    if (f.empty()) return out;
    for (const Partition& lam : partitions_of(f.degree())) {
        Rational c;
        for (const auto& [rho, coeff] : f.terms()) c += coeff * Rational{mn_character(lam, rho)};
        if (!c.is_integer())
            throw std::domain_error("NotSchurIntegral: coefficient of s" + lam.to_string() +
                                    " is " + c.to_string());
        out.add(lam, c.as_integer());
    }
    return out;
}

// Product in the ring: keys concatenate and resort, coefficients multiply.
inline PExpansion p_multiply(const PExpansion& f, const PExpansion& g) {
    PExpansion out;
    for (const auto& [fk, fc] : f.terms()) {
        for (const auto& [gk, gc] : g.terms()) {
            std::vector<int> parts = fk.parts();
            parts.insert(parts.end(), gk.parts().begin(), gk.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            out.add(Partition{std::move(parts)}, fc * gc);
        }
    }
    return out;
}

// p_n o h_k = sum_{lambda |- k} p_{n lambda} / z_lambda
inline PExpansion plethysm_pn_hk(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("plethysm_pn_hk: need n >= 1, k >= 0");
    PExpansion out;
    for (const Partition& lam : partitions_of(k)) {
        std::vector<int> scaled = lam.parts();
        for (int& p : scaled) p *= n;
        out.add(Partition{std::move(scaled)}, Rational{BigInt{1}, z_of(lam)});
    }
    return out;
}

// h_k in the power-sum basis (the n = 1 plethysm).
inline PExpansion h_to_p(int k) { return plethysm_pn_hk(1, k); }

// e_r = sum_{lambda |- r} (-1)^{r - l(lambda)} p_lambda / z_lambda
inline PExpansion e_to_p(int r) {
    PExpansion out;
    for (const Partition& lam : partitions_of(r)) {
        Rational c{BigInt{1}, z_of(lam)};
        if ((r - lam.length()) % 2 != 0) c = -c;
        out.add(lam, c);
    }
    return out;
}

// omega involution: the p_lambda coefficient picks up (-1)^{|lambda|-l(lambda)}.
inline PExpansion omega(const PExpansion& f) {
    PExpansion out;
    for (const auto& [key, c] : f.terms()) {
        bool flip = (key.weight() - key.length()) % 2 != 0;
        out.add(key, flip ? -c : c);
    }
    return out;
}

// Plethysm by p_n from the right: substitutes p_m -> p_{nm}.
inline PExpansion substitute_power(const PExpansion& f, int n) {
    PExpansion out;
    for (const auto& [key, c] : f.terms()) {
        std::vector<int> scaled = key.parts();
        for (int& p : scaled) p *= n;
        out.add(Partition{std::move(scaled)}, c);
    }
    return out;
}

// Merca's recursion for the generalized Waring coefficients. The index is a
// part multiset, so recursion products are resorted; requires |lambda| = k*r
// and l(lambda) <= r.
inline BigInt merca_M(const Partition& lam, int k, int r) {
    if (k < 1 || r < 1 || lam.weight() != static_cast<long long>(k) * r || lam.length() > r)
        throw std::invalid_argument("BadShape: merca_M needs |lambda| = k*r and l(lambda) <= r");
    auto rec = [&](auto&& self, const std::vector<int>& parts, int kk) -> BigInt {
        if (parts.size() == 1) return BigInt{r};
        int last = parts.back();
        BigInt total;
        for (size_t i = 0; i + 1 < parts.size(); ++i) {
            std::vector<int> sibling(parts.begin(), parts.end() - 1);
            sibling[i] += last;
            std::sort(sibling.rbegin(), sibling.rend());
            total -= self(self, sibling, kk);
        }
        if (last % r == 0) {
            std::vector<int> head(parts.begin(), parts.end() - 1);
            total += BigInt{r} * self(self, head, kk - last / r);
        }
        return total;
    };
    return rec(rec, lam.parts(), k);
}

// e_k(x_1^r, x_2^r, ...) assembled from Merca's recursion:
// (-1)^{k(r+1)} sum_{lambda |- kr, l <= r} M^{(k,r)}_lambda / prod m_i! e_lambda.
inline EExpansion merca_waring(int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("merca_waring: need k, r >= 1");
    EExpansion out;
    bool flip = (static_cast<long long>(k) * (r + 1)) % 2 != 0;
    for (const Partition& lam : partitions_of(static_cast<long long>(k) * r, r)) {
        BigInt mult{1};
        int i = 0;
        const auto& parts = lam.parts();
        while (i < static_cast<int>(parts.size())) {
            int j = i;
            while (j < static_cast<int>(parts.size()) && parts[j] == parts[i]) ++j;
            for (int m = 2; m <= j - i; ++m) mult *= BigInt{m};
            i = j;
        }
        Rational c{merca_M(lam, k, r), mult};
        out.add(lam, flip ? -c : c);
    }
    return out;
}

// Dual Jacobi-Trudi determinant det(e_{lambda_i + j - i}) expanded into
// e-monomials, with e_0 = 1 and e_{<0} = 0. Keys are the sorted multisets of
// surviving indices.
inline EExpansion schur_to_e(const Partition& lam) {
    EExpansion out;
    int l = lam.length();
    if (l == 0) {
        out.add(Partition{}, Rational{1});
        return out;
    }
    std::vector<bool> used(l, false);
    std::vector<int> indices;
    auto rec = [&](auto&& self, int row, int sign) -> void {
        if (row == l) {
            std::vector<int> key = indices;
            std::sort(key.rbegin(), key.rend());
            out.add(Partition{std::move(key)}, Rational{sign});
            return;
        }
        for (int col = 0; col < l; ++col) {
            if (used[col]) continue;
            int idx = lam.part(row + 1) + col - row;
            if (idx < 0) continue;  // e_{negative} kills the term
            used[col] = true;
            int inversions = 0;
            for (int c = col + 1; c < l; ++c)
                if (used[c]) ++inversions;
            if (idx > 0) indices.push_back(idx);
            self(self, row + 1, inversions % 2 == 0 ? sign : -sign);
            if (idx > 0) indices.pop_back();
            used[col] = false;
        }
    };
    rec(rec, 0, 1);
    return out;
}

// e-monomial expansion pushed down to the power-sum basis.
inline PExpansion e_terms_to_p(const EExpansion& f) {
    PExpansion out;
    for (const auto& [key, c] : f.terms()) {
        PExpansion monomial;
        monomial.add(Partition{}, Rational{1});
        for (int part : key.parts()) monomial = p_multiply(monomial, e_to_p(part));
        out = out + monomial.scaled(c);
    }
    return out;
}

}  // namespace plethysm
