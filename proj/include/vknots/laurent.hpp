#pragma once

#include <json.hpp>

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "vknots/complex_hp.hpp"
#include "vknots/rational.hpp"

namespace vknots {

/// Laurent polynomial on the half-integer exponent grid: the stored key h
/// denotes the monomial t^{h/2}, so integer-exponent polynomials are exactly
/// those with every h even. One type covers Jones polynomials of knots
/// (integer grid) and of links / HOMFLY specializations (half grid).
///
/// Zero coefficients are never stored.
class HalfGridLaurent {
  public:
    using Terms = std::map<int, Rational>;

    HalfGridLaurent() = default;
    explicit HalfGridLaurent(Rational constant) {
        if (constant != 0) terms_[0] = std::move(constant);
    }

    static HalfGridLaurent monomial(int h, Rational coeff = Rational(1)) {
        HalfGridLaurent p;
        if (coeff != 0) p.terms_[h] = std::move(coeff);
        return p;
    }
    static HalfGridLaurent one() { return HalfGridLaurent(Rational(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(int h) const {
        auto it = terms_.find(h);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    /// Coefficient of t^e for integer e.
    Rational coeff_at_exponent(int e) const { return coeff(2 * e); }

    void set_coeff(int h, const Rational& c) {
        if (c == 0)
            terms_.erase(h);
        else
            terms_[h] = c;
    }

    bool is_integer_grid() const {
        for (const auto& [h, c] : terms_)
            if (h % 2 != 0) return false;
        return true;
    }

    int min_h() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_h() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    friend HalfGridLaurent operator+(const HalfGridLaurent& a, const HalfGridLaurent& b) {
        HalfGridLaurent r = a;
        for (const auto& [h, c] : b.terms_) r.add_term(h, c);
        return r;
    }
    friend HalfGridLaurent operator-(const HalfGridLaurent& a, const HalfGridLaurent& b) {
        HalfGridLaurent r = a;
        for (const auto& [h, c] : b.terms_) r.add_term(h, -c);
        return r;
    }
    friend HalfGridLaurent operator*(const HalfGridLaurent& a, const HalfGridLaurent& b) {
        HalfGridLaurent r;
        for (const auto& [ha, ca] : a.terms_)
            for (const auto& [hb, cb] : b.terms_) r.add_term(ha + hb, ca * cb);
        return r;
    }
    HalfGridLaurent operator-() const {
        HalfGridLaurent r;
        for (const auto& [h, c] : terms_) r.terms_[h] = -c;
        return r;
    }
    friend bool operator==(const HalfGridLaurent& a, const HalfGridLaurent& b) {
        return a.terms_ == b.terms_;
    }

    HalfGridLaurent scaled(const Rational& s) const {
        HalfGridLaurent r;
        if (s == 0) return r;
        for (const auto& [h, c] : terms_) r.terms_[h] = c * s;
        return r;
    }

    /// t -> t^{-1}: negates every exponent.
    HalfGridLaurent mirrored() const {
        HalfGridLaurent r;
        for (const auto& [h, c] : terms_) r.terms_[-h] = c;
        return r;
    }

    /// Multiply by the monomial t^{h/2}.
    HalfGridLaurent shifted(int h) const {
        HalfGridLaurent r;
        for (const auto& [k, c] : terms_) r.terms_[k + h] = c;
        return r;
    }

    HalfGridLaurent pow(unsigned e) const {
        HalfGridLaurent acc = one();
        HalfGridLaurent base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    /// Exact division; throws if the divisor does not divide exactly.
    friend HalfGridLaurent exact_div(HalfGridLaurent num, const HalfGridLaurent& den) {
        if (den.is_zero()) throw std::domain_error("exact_div: zero divisor");
        if (num.is_zero()) return num;
        // An exact Laurent quotient is bounded below by the difference of
        // the lowest exponents; hitting anything lower means "not divisible".
        const int qh_floor = num.min_h() - den.min_h();
        HalfGridLaurent q;
        const int dh = den.max_h();
        const Rational dc = den.terms_.rbegin()->second;
        while (!num.is_zero()) {
            int nh = num.max_h();
            int qh = nh - dh;
            if (qh < qh_floor) throw std::domain_error("exact_div: not divisible");
            Rational qc = num.terms_.rbegin()->second / dc;
            q.add_term(qh, qc);
            num = num - den.shifted(qh).scaled(qc);
            if (!num.is_zero() && num.max_h() >= nh)
                throw std::logic_error("exact_div: no progress");
        }
        return q;
    }

    /// Evaluation at a complex point. Odd half-exponents use the principal
    /// branch of sqrt(z); zero is rejected when negative exponents occur.
    ComplexHP eval(const ComplexHP& z) const {
        mpfr_prec_t p = z.prec();
        ComplexHP acc(0, p);
        if (terms_.empty()) return acc;
        if (z.is_zero()) {
            if (min_h() < 0) throw std::domain_error("eval: z = 0 with negative exponents");
            return ComplexHP(coeff(0), p);
        }
        bool need_sqrt = !is_integer_grid();
        ComplexHP w = need_sqrt ? z.sqrt_principal() : z;
        for (const auto& [h, c] : terms_) {
            ComplexHP term = need_sqrt ? w.pow_int(h) : z.pow_int(h / 2);
            acc = acc + term * ComplexHP(c, p);
        }
        return acc;
    }

    /// Exact evaluation at a rational point; requires an integer-grid
    /// polynomial (or x = 1, where the branch is trivial).
    Rational eval_rational(const Rational& x) const {
        if (x == 1) {
            Rational s(0);
            for (const auto& [h, c] : terms_) s += c;
            return s;
        }
        if (!is_integer_grid())
            throw std::domain_error("eval_rational: half-grid polynomial at x != 1");
        Rational s(0);
        for (const auto& [h, c] : terms_) s += c * rat_pow(x, h / 2);
        return s;
    }

    /// Serialization: array of [h, num, den] triples in ascending h.
    /// Numerators/denominators that do not fit in 64 bits become strings.
    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [h, c] : terms_) {
            nlohmann::json t = nlohmann::json::array();
            t.push_back(h);
            if (fits_int64(c.get_num()))
                t.push_back(static_cast<std::int64_t>(c.get_num().get_si()));
            else
                t.push_back(c.get_num().get_str());
            if (fits_int64(c.get_den()))
                t.push_back(static_cast<std::int64_t>(c.get_den().get_si()));
            else
                t.push_back(c.get_den().get_str());
            arr.push_back(t);
        }
        return arr;
    }

    static HalfGridLaurent from_json(const nlohmann::json& arr) {
        if (!arr.is_array()) throw std::invalid_argument("laurent: expected array");
        HalfGridLaurent p;
        for (const auto& t : arr) {
            if (!t.is_array() || t.size() != 3)
                throw std::invalid_argument("laurent: expected [h,num,den] triple");
            int h = t[0].get<int>();
            Integer num = json_integer(t[1]);
            Integer den = json_integer(t[2]);
            if (den == 0) throw std::invalid_argument("laurent: zero denominator");
            Rational c(num, den);
            c.canonicalize();
            p.add_term(h, c);
        }
        return p;
    }

    std::string str() const { return to_json().dump(); }

  private:
    void add_term(int h, const Rational& c) {
        auto it = terms_.find(h);
        if (it == terms_.end()) {
            if (c != 0) terms_[h] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static Integer json_integer(const nlohmann::json& v) {
        if (v.is_number_integer()) return Integer(static_cast<long>(v.get<std::int64_t>()));
        if (v.is_string()) return Integer(v.get<std::string>());
        throw std::invalid_argument("laurent: expected integer or string");
    }

    Terms terms_;
};

}  // namespace vknots
