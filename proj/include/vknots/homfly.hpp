#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "vknots/braid.hpp"
#include "vknots/config.hpp"
#include "vknots/laurent.hpp"
#include "vknots/two_var.hpp"

namespace vknots {

/// HOMFLY polynomial of a braid closure, convention
///     a P(L+) - a^{-1} P(L-) = z P(L0),   P(unknot) = 1,
/// so the N = -2 specialization a = t^{-1}, z = t^{1/2} - t^{-1/2}
/// reproduces the bracket-normalized Jones polynomial.
struct HomflyPolynomial {
    TwoVarLaurent poly;
};

namespace hecke {

// Basis elements T_pi of the Hecke algebra are indexed by permutations in
// one-line notation (0-based). Words multiply on the right generator by
// generator with T_j^2 = z T_j + 1.
using Perm = std::vector<int>;
using Element = std::map<Perm, TwoVarLaurent>;

inline Perm identity(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

inline void add_to(Element& e, const Perm& p, const TwoVarLaurent& c) {
    auto it = e.find(p);
    if (it == e.end()) {
        if (!c.is_zero()) e.emplace(p, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) e.erase(it);
    }
}

/// Right-multiply by the generator T_j.
inline Element mult_gen(const Element& e, int j) {
    const TwoVarLaurent z = TwoVarLaurent::monomial(0, 1);
    Element out;
    for (const auto& [p, c] : e) {
        Perm q = p;
        std::swap(q[static_cast<std::size_t>(j)], q[static_cast<std::size_t>(j) + 1]);
        if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(j) + 1]) {
            add_to(out, q, c);  // length goes up: T_pi T_j = T_{pi s_j}
        } else {
            add_to(out, p, c * z);  // T_pi T_j = z T_pi + T_{pi s_j}
            add_to(out, q, c);
        }
    }
    return out;
}

/// Right-multiply by T_j^{-1} = T_j - z.
inline Element mult_gen_inverse(const Element& e, int j) {
    const TwoVarLaurent z = TwoVarLaurent::monomial(0, 1);
    Element out = mult_gen(e, j);
    for (const auto& [p, c] : e) add_to(out, p, -(c * z));
    return out;
}

/// A reduced word for pi (letters are 0-based adjacent transpositions,
/// to be applied left to right as right multiplications).
inline std::vector<int> reduced_word(Perm p) {
    std::vector<int> swaps;
    const int n = static_cast<int>(p.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 0; j + 1 < n; ++j) {
            if (p[static_cast<std::size_t>(j)] > p[static_cast<std::size_t>(j) + 1]) {
                std::swap(p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j) + 1]);
                swaps.push_back(j);
                changed = true;
            }
        }
    }
    return {swaps.rbegin(), swaps.rend()};
}

/// Scalars produced by the Ocneanu trace: Laurent polynomials in a, z
/// together with powers of mu = (a - a^{-1})/z, kept symbolic so the whole
/// computation stays division-free.
using MuPoly = std::map<int, TwoVarLaurent>;

inline void mu_add(MuPoly& acc, int mu_exp, const TwoVarLaurent& c) {
    auto it = acc.find(mu_exp);
    if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(mu_exp, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

/// Ocneanu trace with parameter c = a/mu: tr(x T_{n-1} y) = c tr(x y) for
/// x, y in H_{n-1}, tr(1) = 1. Terms whose permutation moves the top
/// strand are rewritten via the coset factorization
/// pi = (s_k s_{k+1} ... s_{n-2}) s_{n-1} rho with rho in S_{n-1}.
inline MuPoly ocneanu_trace(const Element& element, int n) {
    if (n <= 1) {
        MuPoly out;
        for (const auto& [p, c] : element) mu_add(out, 0, c);
        return out;
    }
    Element kept;     // permutations fixing the top strand, restricted
    Element lowered;  // accumulated reductions into H_{n-1}
    for (const auto& [p, c] : element) {
        if (p[static_cast<std::size_t>(n) - 1] == n - 1) {
            Perm q(p.begin(), p.end() - 1);
            add_to(kept, q, c);
            continue;
        }
        const int k = p[static_cast<std::size_t>(n) - 1];
        // rho = u_k^{-1} pi restricted to the first n-1 strands
        Perm rho(static_cast<std::size_t>(n) - 1);
        for (int i = 0; i + 1 < n; ++i) {
            int m = p[static_cast<std::size_t>(i)];
            rho[static_cast<std::size_t>(i)] = m > k ? m - 1 : m;
        }
        // chain part of u_k that stays inside H_{n-1}: s_k ... s_{n-3}
        Perm chain = identity(n - 1);
        for (int i = k; i <= n - 3; ++i) chain[static_cast<std::size_t>(i)] = i + 1;
        chain[static_cast<std::size_t>(n) - 2] = k;
        Element prod;
        prod.emplace(chain, c);
        for (int j : reduced_word(rho)) prod = mult_gen(prod, j);
        for (const auto& [q, qc] : prod) add_to(lowered, q, qc);
    }
    MuPoly out = ocneanu_trace(kept, n - 1);
    MuPoly low = ocneanu_trace(lowered, n - 1);
    const TwoVarLaurent a = TwoVarLaurent::monomial(1, 0);
    for (const auto& [mu_exp, c] : low) mu_add(out, mu_exp - 1, c * a);
    return out;
}

}  // namespace hecke

inline HomflyPolynomial homfly(const BraidWord& braid, const EngineLimits& limits = {}) {
    validate_braid(braid);
    if (braid.strands > limits.max_strands)
        throw std::invalid_argument("homfly: strand count exceeds limit");
    if (static_cast<int>(braid.word.size()) > limits.max_word)
        throw std::invalid_argument("homfly: word length exceeds limit");

    const int n = braid.strands;
    hecke::Element e;
    e.emplace(hecke::identity(n), TwoVarLaurent::one());
    for (int w : braid.word) {
        int j = (w < 0 ? -w : w) - 1;
        e = (w > 0) ? hecke::mult_gen(e, j) : hecke::mult_gen_inverse(e, j);
    }
    hecke::MuPoly tr = hecke::ocneanu_trace(e, n);

    const int writhe_sum = writhe(braid);
    // P = a^{-writhe} mu^{n-1} tr, mu = (a - a^{-1}) z^{-1}
    const TwoVarLaurent mu =
        TwoVarLaurent::monomial(1, -1) - TwoVarLaurent::monomial(-1, -1);
    HomflyPolynomial out;
    for (const auto& [mu_exp, c] : tr) {
        int e_total = mu_exp + n - 1;
        if (e_total < 0) throw std::logic_error("homfly: negative mu power after closure");
        TwoVarLaurent term = c * TwoVarLaurent::monomial(-writhe_sum, 0);
        for (int i = 0; i < e_total; ++i) term = term * mu;
        out.poly = out.poly + term;
    }
    return out;
}

/// The N-th specialization a = t^{N/2}, z = t^{1/2} - t^{-1/2}; N = -2 is
/// the Jones polynomial.
inline HalfGridLaurent homfly_specialize(const HomflyPolynomial& h, int N) {
    if (N == 0) throw std::invalid_argument("homfly_specialize: N must be nonzero");
    HalfGridLaurent a_sub = HalfGridLaurent::monomial(N);
    HalfGridLaurent z_sub =
        HalfGridLaurent::monomial(1) + HalfGridLaurent::monomial(-1, Rational(-1));
    return substitute_two_var(h.poly, a_sub, z_sub);
}

/// Alexander-Conway polynomial from HOMFLY: a = 1, z = t^{1/2} - t^{-1/2}.
inline HalfGridLaurent alexander(const HomflyPolynomial& h) {
    HalfGridLaurent a_sub = HalfGridLaurent::one();
    HalfGridLaurent z_sub =
        HalfGridLaurent::monomial(1) + HalfGridLaurent::monomial(-1, Rational(-1));
    return substitute_two_var(h.poly, a_sub, z_sub);
}

/// Checks the defining skein relation at one crossing of the word:
/// a H(w with +sigma at pos) - a^{-1} H(w with -sigma) - z H(w with the
/// letter deleted) must vanish identically.
inline bool skein_check(const BraidWord& braid, std::size_t position,
                        const EngineLimits& limits = {}) {
    if (position >= braid.word.size())
        throw std::out_of_range("skein_check: position out of range");
    BraidWord plus = braid;
    plus.word[position] = std::abs(plus.word[position]);
    BraidWord minus = braid;
    minus.word[position] = -std::abs(minus.word[position]);
    BraidWord zero = braid;
    zero.word.erase(zero.word.begin() + static_cast<std::ptrdiff_t>(position));

    TwoVarLaurent lhs = TwoVarLaurent::monomial(1, 0) * homfly(plus, limits).poly -
                        TwoVarLaurent::monomial(-1, 0) * homfly(minus, limits).poly -
                        TwoVarLaurent::monomial(0, 1) * homfly(zero, limits).poly;
    return lhs.is_zero();
}

}  // namespace vknots
