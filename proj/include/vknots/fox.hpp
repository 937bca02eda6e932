#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "vknots/pd_code.hpp"
#include "vknots/rational.hpp"

namespace vknots {

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Number of Fox p-colorings: solutions over Z_p of the per-crossing rules
/// 2*(over) = under-in + under-out, with the two over-arc edges of each
/// crossing forced equal. Computed by Gaussian elimination mod p; the count
/// is p^(arcs - rank), always a power of p and at least p^components.
inline Integer fox_colorings(const PDCode& pd, long p) {
    if (!is_prime(p)) throw std::invalid_argument("fox_colorings: p must be prime");
    detail::validate_pd(pd);
    if (pd.crossings.empty()) return Integer(p);  // constant colorings of the unknot

    const int n = pd.arc_count;
    std::vector<std::vector<long>> rows;
    for (const auto& x : pd.crossings) {
        std::vector<long> r1(static_cast<std::size_t>(n), 0);
        // over edges equal: x[1] - x[3] = 0
        r1[static_cast<std::size_t>(x[1] - 1)] += 1;
        r1[static_cast<std::size_t>(x[3] - 1)] -= 1;
        rows.push_back(r1);
        std::vector<long> r2(static_cast<std::size_t>(n), 0);
        // 2*over - under-in - under-out = 0
        r2[static_cast<std::size_t>(x[1] - 1)] += 2;
        r2[static_cast<std::size_t>(x[0] - 1)] -= 1;
        r2[static_cast<std::size_t>(x[2] - 1)] -= 1;
        rows.push_back(r2);
    }
    auto mod = [&](long v) { return ((v % p) + p) % p; };
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (mod(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        long pv = mod(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)]);
        // modular inverse by Fermat
        long inv = 1;
        for (long e = p - 2; e > 0; e >>= 1) {
            if (e & 1) inv = inv * pv % p;
            pv = pv * pv % p;
        }
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
                mod(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * inv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            long f = mod(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    mod(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -
                        f * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]);
        }
        ++rank;
    }
    Integer count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(n - rank));
    return count;
}

/// Determinant of the link from the Fox coloring matrix: group the edges
/// into over-strand arcs (underpass to underpass), build the integer matrix
/// with +2 at the over arc and -1 at the two under arcs per crossing, and
/// take |det| of a first minor. Independent of any polynomial engine.
inline Integer coloring_minor_determinant(const PDCode& pd) {
    detail::validate_pd(pd);
    if (pd.crossings.empty()) return Integer(1);

    const int n = pd.arc_count;
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& x : pd.crossings) {
        int a = find(x[1]), b = find(x[3]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
    int classes = 0;
    for (int a = 1; a <= n; ++a) {
        int r = find(a);
        if (index[static_cast<std::size_t>(r)] < 0) index[static_cast<std::size_t>(r)] = classes++;
    }
    auto cls = [&](int a) { return index[static_cast<std::size_t>(find(a))]; };

    if (classes != static_cast<int>(pd.crossings.size()))
        throw std::domain_error("coloring matrix is not square for this diagram");

    const int m = classes - 1;  // delete last row and column
    if (m == 0) return Integer(1);
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(m),
                                        std::vector<Integer>(static_cast<std::size_t>(m), 0));
    for (int r = 0; r < m; ++r) {
        const auto& x = pd.crossings[static_cast<std::size_t>(r)];
        auto add = [&](int arc, long v) {
            int c = cls(arc);
            if (c < m) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += v;
        };
        add(x[1], 2);
        add(x[0], -1);
        add(x[2], -1);
    }
    // Bareiss fraction-free elimination.
    Integer prev(1);
    Integer sign(1);
    for (int k = 0; k < m; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < m; ++r)
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Integer(0);
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < m; ++j) {
                Integer num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                  a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                              a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                  a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                mpz_divexact(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    Integer det = sign * a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(m - 1)];
    return det < 0 ? Integer(-det) : det;
}

}  // namespace vknots
