#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cfock/crystal.hpp"
#include "cfock/laurent.hpp"
#include "cfock/partition.hpp"

namespace cfock {

// Which of the two basis actions to use.  Both are parameterized by the
// vector's own ResidueParams; pairing the dual action with a particular
// charge (for instance the negated reversed one) is the caller's choice.
//
//   gamma:  e has exponent -N^a (count above), f has exponent +N^b (below)
//   dual:   e has exponent +N^l (count left),  f has exponent -N^r (right)
enum class ActionConvention { gamma, dual };

enum class OpKind { e, f };

// Finitely supported map Multipartition -> LaurentPoly over fixed charge
// data.  No zero coefficients are stored.
class FockVector {
public:
    explicit FockVector(ResidueParams params) : params_(std::move(params)) {}

    static FockVector basis(ResidueParams params, const Multipartition& mp) {
        FockVector x(std::move(params));
        if (mp.level() != x.params_.level())
            throw SizeMismatch("FockVector: level mismatch");
        x.terms_.emplace(mp, LaurentPoly(1));
        return x;
    }
    static FockVector vacuum(ResidueParams params) {
        const long m = params.level();
        return basis(std::move(params), Multipartition::empty(m));
    }

    const ResidueParams& params() const { return params_; }
    const std::map<Multipartition, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly coeff(const Multipartition& mp) const {
        auto it = terms_.find(mp);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    void add_term(const Multipartition& mp, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(mp, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& other) {
        require_same_params(other);
        for (const auto& [mp, c] : other.terms_) add_term(mp, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& other) {
        require_same_params(other);
        for (const auto& [mp, c] : other.terms_) add_term(mp, -c);
        return *this;
    }
    FockVector& operator*=(const LaurentPoly& scalar) {
        std::map<Multipartition, LaurentPoly> scaled;
        if (!scalar.is_zero())
            for (const auto& [mp, c] : terms_) scaled.emplace(mp, c * scalar);
        terms_ = std::move(scaled);
        return *this;
    }

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const LaurentPoly& s, FockVector x) { return x *= s; }

    bool operator==(const FockVector&) const = default;

    // Support sorted most dominant first.
    std::vector<Multipartition> support() const {
        std::vector<Multipartition> out;
        out.reserve(terms_.size());
        for (const auto& [mp, c] : terms_) out.push_back(mp);
        std::sort(out.begin(), out.end(), mpart_order_less);
        return out;
    }

private:
    void require_same_params(const FockVector& other) const {
        if (!(params_ == other.params_))
            throw SizeMismatch("FockVector: mixed charge data");
    }

    ResidueParams params_;
    std::map<Multipartition, LaurentPoly> terms_;
};

// Signed counts of addable minus removable i-nodes of lam relative to the
// position x, split by direction.  "Above" means an earlier component or a
// smaller row in the same component; "left" means an earlier component or a
// smaller column in the same component; "below"/"right" are the opposites.
struct NodeStats {
    long above = 0;
    long below = 0;
    long left_of = 0;
    long right_of = 0;
};

inline NodeStats node_stats(const ResidueParams& params, const Multipartition& lam,
                            const NodeRef& x, long i) {
    if (!is_addable(lam, x) && !is_removable(lam, x))
        throw InvalidNode("node_stats: position is neither addable nor removable");
    const auto above = [&x](const NodeRef& y) {
        return y.component < x.component || (y.component == x.component && y.row < x.row);
    };
    const auto below = [&x](const NodeRef& y) {
        return y.component > x.component || (y.component == x.component && y.row > x.row);
    };
    const auto left_of = [&x](const NodeRef& y) {
        return y.component < x.component || (y.component == x.component && y.col < x.col);
    };
    const auto right_of = [&x](const NodeRef& y) {
        return y.component > x.component || (y.component == x.component && y.col > x.col);
    };
    NodeStats stats;
    for (const NodeRef& y : addable_nodes(params, lam, i)) {
        stats.above += above(y);
        stats.below += below(y);
        stats.left_of += left_of(y);
        stats.right_of += right_of(y);
    }
    for (const NodeRef& y : removable_nodes(params, lam, i)) {
        stats.above -= above(y);
        stats.below -= below(y);
        stats.left_of -= left_of(y);
        stats.right_of -= right_of(y);
    }
    return stats;
}

// N_i(lam) = |A_i| - |R_i|, the h_i weight exponent.
inline long h_weight(const ResidueParams& params, const Multipartition& lam, long i) {
    return static_cast<long>(addable_nodes(params, lam, i).size()) -
           static_cast<long>(removable_nodes(params, lam, i).size());
}

// Exponent of the degree operator: minus the number of 0-nodes.
inline long d_weight(const ResidueParams& params, const Multipartition& lam) {
    const auto content = residue_content(params, lam);
    auto it = content.find(params.reduce(0));
    return it == content.end() ? 0 : -it->second;
}

inline FockVector f_op(ActionConvention conv, const FockVector& x, long i) {
    FockVector out(x.params());
    for (const auto& [lam, c] : x.terms()) {
        for (const NodeRef& node : addable_nodes(x.params(), lam, i)) {
            const NodeStats stats = node_stats(x.params(), lam, node, i);
            const long exp =
                conv == ActionConvention::gamma ? stats.below : -stats.right_of;
            out.add_term(add_node(lam, node), c * LaurentPoly::monomial(exp));
        }
    }
    return out;
}

inline FockVector e_op(ActionConvention conv, const FockVector& x, long i) {
    FockVector out(x.params());
    for (const auto& [lam, c] : x.terms()) {
        for (const NodeRef& node : removable_nodes(x.params(), lam, i)) {
            const NodeStats stats = node_stats(x.params(), lam, node, i);
            const long exp =
                conv == ActionConvention::gamma ? -stats.above : stats.left_of;
            out.add_term(remove_node(lam, node), c * LaurentPoly::monomial(exp));
        }
    }
    return out;
}

// f_i^{(k)} = f_i^k / [k]!.  A divisibility failure here means the action
// formulas are wrong, so it surfaces as NotDivisible.
inline FockVector divided_f(ActionConvention conv, const FockVector& x, long i, long k) {
    if (k < 0) throw InternalError("divided_f: negative power");
    FockVector powered = x;
    for (long t = 0; t < k; ++t) powered = f_op(conv, powered, i);
    const LaurentPoly factorial = quantum_factorial(k);
    FockVector out(x.params());
    for (const auto& [mp, c] : powered.terms()) out.add_term(mp, exact_div(c, factorial));
    return out;
}

// Fold divided powers over the vacuum vector:  f_{i_t}^{(k_t)} ... f_{i_1}^{(k_1)} |empty>.
inline FockVector monomial_apply(ActionConvention conv, const ResidueParams& params,
                                 const std::vector<LadderStep>& seq) {
    FockVector x = FockVector::vacuum(params);
    for (const LadderStep& step : seq) x = divided_f(conv, x, step.residue, step.power);
    return x;
}

namespace detail {

// Level-1 action on a single partition with charge g, kept separate from the
// multipartition code so the tensor route is an independent oracle.

struct Level1Term {
    Partition result;
    long exponent = 0;
};

inline bool level1_row_addable(const Partition& p, long a) {
    return a == 1 || p.row(a - 1) > p.row(a);
}

inline bool level1_row_removable(const Partition& p, long a) {
    return p.row(a) > 0 && p.row(a) > p.row(a + 1);
}

inline long level1_weight(const ResidueParams& params, const Partition& p, long g, long i) {
    const long target = params.reduce(i);
    long n = 0;
    for (long a = 1; a <= p.length() + 1; ++a) {
        if (level1_row_addable(p, a) && params.reduce(g + p.row(a) + 1 - a) == target) ++n;
        if (level1_row_removable(p, a) && params.reduce(g + p.row(a) - a) == target) --n;
    }
    return n;
}

inline std::vector<Level1Term> level1_f(const ResidueParams& params, const Partition& p,
                                        long g, long i) {
    const long target = params.reduce(i);
    std::vector<Level1Term> out;
    for (long a = 1; a <= p.length() + 1; ++a) {
        if (!level1_row_addable(p, a) || params.reduce(g + p.row(a) + 1 - a) != target)
            continue;
        long below = 0;
        for (long b = a + 1; b <= p.length() + 1; ++b) {
            if (level1_row_addable(p, b) && params.reduce(g + p.row(b) + 1 - b) == target)
                ++below;
            if (level1_row_removable(p, b) && params.reduce(g + p.row(b) - b) == target)
                --below;
        }
        Partition grown = p;
        if (a > grown.length())
            grown.rows.push_back(1);
        else
            ++grown.rows[static_cast<size_t>(a - 1)];
        out.push_back({std::move(grown), below});
    }
    return out;
}

inline std::vector<Level1Term> level1_e(const ResidueParams& params, const Partition& p,
                                        long g, long i) {
    const long target = params.reduce(i);
    std::vector<Level1Term> out;
    for (long a = 1; a <= p.length(); ++a) {
        if (!level1_row_removable(p, a) || params.reduce(g + p.row(a) - a) != target)
            continue;
        long above = 0;
        for (long b = 1; b < a; ++b) {
            if (level1_row_addable(p, b) && params.reduce(g + p.row(b) + 1 - b) == target)
                ++above;
            if (level1_row_removable(p, b) && params.reduce(g + p.row(b) - b) == target)
                --above;
        }
        Partition shrunk = p;
        if (--shrunk.rows[static_cast<size_t>(a - 1)] == 0) shrunk.rows.pop_back();
        out.push_back({std::move(shrunk), -above});
    }
    return out;
}

} // namespace detail

// The gamma-convention action computed through the tensor product of level-1
// Fock spaces with the coproduct
//   f_i -> 1 (x) f_i + f_i (x) v^{h_i},   e_i -> v^{-h_i} (x) e_i + e_i (x) 1,
// iterated over the m factors.  Used as an oracle for f_op/e_op.
inline FockVector tensor_action(const ResidueParams& params, const FockVector& x,
                                long i, OpKind op) {
    if (!(x.params() == params)) throw SizeMismatch("tensor_action: charge data mismatch");
    const long m = params.level();
    FockVector out(params);
    for (const auto& [lam, c] : x.terms()) {
        for (long comp = 1; comp <= m; ++comp) {
            const long g = params.gamma()[static_cast<size_t>(comp - 1)];
            long weight = 0;
            if (op == OpKind::f) {
                for (long k = comp + 1; k <= m; ++k)
                    weight += detail::level1_weight(params, lam.component(k),
                                                    params.gamma()[static_cast<size_t>(k - 1)], i);
            } else {
                for (long k = 1; k < comp; ++k)
                    weight -= detail::level1_weight(params, lam.component(k),
                                                    params.gamma()[static_cast<size_t>(k - 1)], i);
            }
            const auto factor_terms =
                op == OpKind::f ? detail::level1_f(params, lam.component(comp), g, i)
                                : detail::level1_e(params, lam.component(comp), g, i);
            for (const auto& term : factor_terms) {
                Multipartition image = lam;
                image.components[static_cast<size_t>(comp - 1)] = term.result;
                out.add_term(image, c * LaurentPoly::monomial(term.exponent + weight));
            }
        }
    }
    return out;
}

// Linear relabeling along the flip transpose; the charge data transforms by
// reversal and negation.
inline FockVector sigma_map(const FockVector& x) {
    const ResidueParams& in = x.params();
    std::vector<long> gamma(in.gamma().rbegin(), in.gamma().rend());
    for (long& g : gamma) g = -g;
    ResidueParams out_params = in.is_finite()
                                   ? ResidueParams::finite(in.modulus(), std::move(gamma))
                                   : ResidueParams::infinite(std::move(gamma));
    FockVector out(out_params);
    for (const auto& [mp, c] : x.terms()) out.add_term(flip_transpose(mp), c);
    return out;
}

// Semilinear relabeling along the transpose: coefficients are barred and the
// charge data is negated.
inline FockVector xi_map(const FockVector& x) {
    const ResidueParams& in = x.params();
    std::vector<long> gamma = in.gamma();
    for (long& g : gamma) g = -g;
    ResidueParams out_params = in.is_finite()
                                   ? ResidueParams::finite(in.modulus(), std::move(gamma))
                                   : ResidueParams::infinite(std::move(gamma));
    FockVector out(out_params);
    for (const auto& [mp, c] : x.terms()) out.add_term(transpose(mp), c.bar());
    return out;
}

} // namespace cfock
