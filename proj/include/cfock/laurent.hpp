#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cfock/errors.hpp"

namespace cfock {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one variable v, stored sparsely as
// exponent -> coefficient. Zero coefficients are never stored, so
// structural equality is exact equality. All arithmetic is exact.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Int constant) {
        if (constant != 0) terms_.emplace(0, std::move(constant));
    }
    LaurentPoly(long long constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly monomial(long exp, Int coeff = 1) {
        LaurentPoly p;
        if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
        return p;
    }
    static LaurentPoly v() { return monomial(1); }

    const std::map<long, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second == 1;
    }

    Int coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    // Lowest/highest stored exponent; only meaningful on nonzero values.
    long min_exp() const { return terms_.begin()->first; }
    long max_exp() const { return terms_.rbegin()->first; }

    LaurentPoly& operator+=(const LaurentPoly& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& other) {
        *this = *this * other;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        a += b;
        return a;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        a -= b;
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly prod;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) prod.add_term(ea + eb, ca * cb);
        return prod;
    }
    LaurentPoly operator-() const {
        LaurentPoly neg;
        for (const auto& [e, c] : terms_) neg.terms_.emplace(e, -c);
        return neg;
    }

    bool operator==(const LaurentPoly&) const = default;

    // v -> v^{-1}
    LaurentPoly bar() const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
        return out;
    }

    Int at_one() const {
        Int sum = 0;
        for (const auto& [e, c] : terms_) sum += c;
        return sum;
    }

    // True iff the value lies in v*Z[v], i.e. every exponent is >= 1.
    bool in_v_span() const { return terms_.empty() || min_exp() >= 1; }

    std::vector<std::pair<long, Int>> pairs() const {
        return {terms_.begin(), terms_.end()};
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Int mag = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out << '-';
                first = false;
            } else {
                out << (c < 0 ? '-' : '+');
            }
            if (mag != 1 || e == 0) out << mag.str();
            if (e == 1)
                out << 'v';
            else if (e != 0)
                out << "v^" << e;
        }
        return out.str();
    }

private:
    void add_term(long exp, const Int& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(exp, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<long, Int> terms_;
};

inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

// [k] = v^{k-1} + v^{k-3} + ... + v^{1-k}
inline LaurentPoly quantum_int(long k) {
    if (k < 0) throw InternalError("quantum_int: negative argument");
    LaurentPoly sum;
    for (long e = k - 1; e >= 1 - k; e -= 2) sum += LaurentPoly::monomial(e);
    return sum;
}

// [k]! = [1][2]...[k]
inline LaurentPoly quantum_factorial(long k) {
    if (k < 0) throw InternalError("quantum_factorial: negative argument");
    LaurentPoly prod(1);
    for (long j = 2; j <= k; ++j) prod *= quantum_int(j);
    return prod;
}

// m = c_0 + sum_{k>0} c_{-k} (v^k + v^{-k}).  Then bar(m) = m and
// c - m lies in v*Z[v].
inline LaurentPoly symmetric_completion(const LaurentPoly& c) {
    LaurentPoly m(c.coeff(0));
    for (const auto& [e, coef] : c.terms()) {
        if (e >= 0) continue;
        m += LaurentPoly::monomial(e, coef);
        m += LaurentPoly::monomial(-e, coef);
    }
    return m;
}

// Exact quotient p/q in Z[v, v^{-1}].  Throws NotDivisible when q does not
// divide p; divisibility failures signal a logic bug upstream.
inline LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw NotDivisible("exact_div: zero divisor");
    if (p.is_zero()) return {};

    // Shift both operands to ordinary polynomials with nonzero constant term;
    // any Laurent quotient then lives in Z[v] again.
    const long shift = p.min_exp() - q.min_exp();
    std::vector<Int> num(static_cast<size_t>(p.max_exp() - p.min_exp()) + 1);
    for (const auto& [e, c] : p.terms()) num[static_cast<size_t>(e - p.min_exp())] = c;
    std::vector<Int> den(static_cast<size_t>(q.max_exp() - q.min_exp()) + 1);
    for (const auto& [e, c] : q.terms()) den[static_cast<size_t>(e - q.min_exp())] = c;

    if (num.size() < den.size()) throw NotDivisible("exact_div: remainder nonzero");
    std::vector<Int> quot(num.size() - den.size() + 1);
    for (size_t d = quot.size(); d-- > 0;) {
        const Int& lead = num[d + den.size() - 1];
        if (lead == 0) continue;
        if (lead % den.back() != 0) throw NotDivisible("exact_div: coefficient not divisible");
        quot[d] = lead / den.back();
        for (size_t j = 0; j < den.size(); ++j) num[d + j] -= quot[d] * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw NotDivisible("exact_div: remainder nonzero");

    LaurentPoly result;
    for (size_t d = 0; d < quot.size(); ++d)
        if (quot[d] != 0) result += LaurentPoly::monomial(static_cast<long>(d) + shift, quot[d]);
    return result;
}

} // namespace cfock
