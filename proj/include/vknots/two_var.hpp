#pragma once

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <utility>

#include "vknots/complex_hp.hpp"
#include "vknots/laurent.hpp"
#include "vknots/rational.hpp"

namespace vknots {

/// Integer-coefficient Laurent polynomial in a^{+-1}, z^{+-1}. Houses the
/// HOMFLY polynomial and ingested Dubrovnik Kauffman polynomials.
class TwoVarLaurent {
  public:
    using Key = std::pair<int, int>;  // (a exponent, z exponent)
    using Terms = std::map<Key, Integer>;

    TwoVarLaurent() = default;
    explicit TwoVarLaurent(Integer constant) {
        if (constant != 0) terms_[{0, 0}] = std::move(constant);
    }
    static TwoVarLaurent monomial(int a_exp, int z_exp, Integer coeff = Integer(1)) {
        TwoVarLaurent p;
        if (coeff != 0) p.terms_[{a_exp, z_exp}] = std::move(coeff);
        return p;
    }
    static TwoVarLaurent one() { return TwoVarLaurent(Integer(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coeff(int a_exp, int z_exp) const {
        auto it = terms_.find({a_exp, z_exp});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    friend TwoVarLaurent operator+(const TwoVarLaurent& a, const TwoVarLaurent& b) {
        TwoVarLaurent r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend TwoVarLaurent operator-(const TwoVarLaurent& a, const TwoVarLaurent& b) {
        TwoVarLaurent r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }
    friend TwoVarLaurent operator*(const TwoVarLaurent& a, const TwoVarLaurent& b) {
        TwoVarLaurent r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
    TwoVarLaurent operator-() const {
        TwoVarLaurent r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    friend bool operator==(const TwoVarLaurent& a, const TwoVarLaurent& b) {
        return a.terms_ == b.terms_;
    }

    /// Mirror image: a -> a^{-1}, z -> -z.
    TwoVarLaurent mirrored() const {
        TwoVarLaurent r;
        for (const auto& [k, c] : terms_)
            r.terms_[{-k.first, k.second}] = (k.second % 2 == 0) ? c : -c;
        return r;
    }

    ComplexHP eval(const ComplexHP& a, const ComplexHP& z) const {
        mpfr_prec_t p = a.prec() > z.prec() ? a.prec() : z.prec();
        ComplexHP acc(0, p);
        for (const auto& [k, c] : terms_)
            acc = acc + a.pow_int(k.first) * z.pow_int(k.second) * ComplexHP(Rational(c), p);
        return acc;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [k, c] : terms_) {
            nlohmann::json t = nlohmann::json::array();
            t.push_back(k.first);
            t.push_back(k.second);
            if (fits_int64(c))
                t.push_back(static_cast<std::int64_t>(c.get_si()));
            else
                t.push_back(c.get_str());
            arr.push_back(t);
        }
        return arr;
    }

    static TwoVarLaurent from_json(const nlohmann::json& arr) {
        if (!arr.is_array()) throw std::invalid_argument("two-var laurent: expected array");
        TwoVarLaurent p;
        for (const auto& t : arr) {
            if (!t.is_array() || t.size() != 3)
                throw std::invalid_argument("two-var laurent: expected [a,z,coeff] triple");
            Integer c = t[2].is_string() ? Integer(t[2].get<std::string>())
                                         : Integer(static_cast<long>(t[2].get<std::int64_t>()));
            p.add_term({t[0].get<int>(), t[1].get<int>()}, c);
        }
        return p;
    }

  private:
    void add_term(const Key& k, const Integer& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (c != 0) terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

/// Substitutes one-variable Laurent polynomials for a and z. Negative powers
/// of a non-monomial z substitution are handled by one exact division at the
/// end, so specializations like z = t^{1/2} - t^{-1/2} work for link
/// polynomials carrying z^{-1} terms.
inline HalfGridLaurent substitute_two_var(const TwoVarLaurent& f, const HalfGridLaurent& a_sub,
                                          const HalfGridLaurent& z_sub) {
    int min_z = 0;
    for (const auto& [k, c] : f.terms())
        if (k.second < min_z) min_z = k.second;
    const unsigned lift = static_cast<unsigned>(-min_z);

    auto power_of = [](const HalfGridLaurent& base, int e, unsigned extra) {
        // base^(e + extra) with e + extra >= 0
        long total = static_cast<long>(e) + static_cast<long>(extra);
        if (total < 0) throw std::domain_error("substitute_two_var: negative lifted power");
        return base.pow(static_cast<unsigned>(total));
    };

    HalfGridLaurent acc;
    for (const auto& [k, c] : f.terms()) {
        HalfGridLaurent term = HalfGridLaurent(Rational(c));
        if (k.first >= 0) {
            term = term * a_sub.pow(static_cast<unsigned>(k.first));
        } else {
            // a substitutions are monomials (possibly signed); invert directly.
            if (a_sub.term_count() != 1)
                throw std::domain_error("substitute_two_var: negative power of non-monomial a");
            const auto& [h, coeff] = *a_sub.terms().begin();
            HalfGridLaurent inv = HalfGridLaurent::monomial(-h, Rational(1) / coeff);
            term = term * inv.pow(static_cast<unsigned>(-k.first));
        }
        term = term * power_of(z_sub, k.second, lift);
        acc = acc + term;
    }
    if (lift == 0) return acc;
    return exact_div(acc, z_sub.pow(lift));
}

}  // namespace vknots
