#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plethysm/bigint.hpp"
#include "plethysm/partition.hpp"

namespace plethysm {

// Dense square matrix of exact integers. Entries of the matrices built here
// are structurally small (0/1 for M, shifted part differences for A); all
// growth happens inside det(), which accumulates exactly.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int dim, long long fill = 0)
        : dim_(dim), a_(static_cast<size_t>(dim) * dim, fill) {
        if (dim < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }

    int dim() const { return dim_; }
    long long at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
    long long& at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int dim_ = 0;
    std::vector<long long> a_;  // row-major
};

namespace detail {

inline void require_contained(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner))
        throw std::invalid_argument("NotContained: " + inner.to_string() +
                                    " is not contained in " + outer.to_string());
}

inline int pick_dim(const Partition& outer, int dim) {
    if (dim < 0) return outer.length();
    if (dim < outer.length())
        throw std::invalid_argument("matrix dimension smaller than l(outer)");
    return dim;
}

}  // namespace detail

// m_ij = 1 iff lambda_i - i >= mu_j - j and n | (lambda_i - i - mu_j + j).
// Dimension defaults to l(outer); a larger dim zero-pads both partitions,
// which extends the matrix by a unit lower-right block and keeps det fixed.
inline IntMatrix build_M(const Partition& outer, const Partition& inner, int n, int dim = -1) {
    detail::require_contained(outer, inner);
    if (n < 1) throw std::invalid_argument("build_M: n must be positive");
    int d = detail::pick_dim(outer, dim);
    IntMatrix m(d);
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            long long diff = static_cast<long long>(outer.part(i)) - i - inner.part(j) + j;
            m.at(i - 1, j - 1) = (diff >= 0 && diff % n == 0) ? 1 : 0;
        }
    }
    return m;
}

// a_ij = lambda_i - i - mu_j + j; strictly increasing along rows and strictly
// decreasing down columns.
inline IntMatrix build_A(const Partition& outer, const Partition& inner, int dim = -1) {
    detail::require_contained(outer, inner);
    int d = detail::pick_dim(outer, dim);
    IntMatrix m(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m.at(i - 1, j - 1) = static_cast<long long>(outer.part(i)) - i - inner.part(j) + j;
    return m;
}

namespace detail {

// Fraction-free Bareiss elimination; every division is exact. Returns false
// if an intermediate leaves the int64 range (caller reruns with BigInt).
inline bool bareiss_int(std::vector<long long> a, int n, long long& out) {
    constexpr long long kLimit = 0x7fffffffffffffffLL;
    auto at = [&](int i, int j) -> long long& { return a[static_cast<size_t>(i) * n + j]; };
    int sign = 1;
    __int128 prev = 1;
    for (int k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) {
                out = 0;
                return true;
            }
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                __int128 v = (static_cast<__int128>(at(i, j)) * at(k, k) -
                              static_cast<__int128>(at(i, k)) * at(k, j)) /
                             prev;
                if (v > kLimit || v < -kLimit) return false;
                at(i, j) = static_cast<long long>(v);
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    out = sign * at(n - 1, n - 1);
    return true;
}

inline BigInt bareiss_big(const IntMatrix& m) {
    int n = m.dim();
    std::vector<BigInt> a;
    a.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.push_back(BigInt{m.at(i, j)});
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<size_t>(i) * n + j]; };
    int sign = 1;
    BigInt prev{1};
    for (int k = 0; k < n; ++k) {
        if (at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return BigInt{};
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = BigInt{};
        }
        prev = at(k, k);
    }
    BigInt d = at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

}  // namespace detail

// Exact determinant. The empty 0x0 matrix has determinant 1.
inline BigInt det(const IntMatrix& m) {
    if (m.dim() == 0) return BigInt{1};
    std::vector<long long> a;
    a.reserve(static_cast<size_t>(m.dim()) * m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) a.push_back(m.at(i, j));
    long long fast = 0;
    if (detail::bareiss_int(std::move(a), m.dim(), fast)) return BigInt{fast};
    return detail::bareiss_big(m);
}

// C^p_{k,l}: columns k+1..l shift left one place, the former column k plus
// p*n lands in column l. Indices are 1-based; k == l degenerates to adding
// p*n to column k (a one-row strip in the transform identities).
inline IntMatrix col_transform(const IntMatrix& m, int k, int l, int p, int n) {
    if (k < 1 || l > m.dim() || k > l)
        throw std::invalid_argument("BadIndices: col_transform requires 1 <= k <= l <= dim");
    IntMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 1; j <= m.dim(); ++j) {
            if (j < k || j > l)
                r.at(i, j - 1) = m.at(i, j - 1);
            else if (j == l)
                r.at(i, j - 1) = m.at(i, k - 1) + static_cast<long long>(p) * n;
            else
                r.at(i, j - 1) = m.at(i, j);
        }
    }
    return r;
}

// R^p_{r,s}: rows s..r-1 shift down one place, the former row r plus p*n
// lands in row s. Indices are 1-based; r == s degenerates to adding p*n to
// row r.
inline IntMatrix row_transform(const IntMatrix& m, int r, int s, int p, int n) {
    if (s < 1 || r > m.dim() || r < s)
        throw std::invalid_argument("BadIndices: row_transform requires 1 <= s <= r <= dim");
    IntMatrix out(m.dim());
    for (int i = 1; i <= m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (i < s || i > r)
                out.at(i - 1, j) = m.at(i - 1, j);
            else if (i == s)
                out.at(i - 1, j) = m.at(r - 1, j) + static_cast<long long>(p) * n;
            else
                out.at(i - 1, j) = m.at(i - 2, j);
        }
    }
    return out;
}

}  // namespace plethysm
