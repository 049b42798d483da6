#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cfock/errors.hpp"

namespace cfock {

// Integer partition: weakly decreasing positive rows.
struct Partition {
    std::vector<long> rows;

    Partition() = default;
    Partition(std::initializer_list<long> r) : rows(r) { validate(); }
    explicit Partition(std::vector<long> r) : rows(std::move(r)) { validate(); }

    long size() const { return std::accumulate(rows.begin(), rows.end(), 0L); }
    long length() const { return static_cast<long>(rows.size()); }
    bool empty() const { return rows.empty(); }

    // 1-based row length, 0 beyond the last row.
    long row(long a) const {
        return (a >= 1 && a <= length()) ? rows[static_cast<size_t>(a - 1)] : 0;
    }

    Partition conjugate() const {
        Partition out;
        if (rows.empty()) return out;
        out.rows.assign(static_cast<size_t>(rows[0]), 0);
        for (long j = 1; j <= rows[0]; ++j)
            out.rows[static_cast<size_t>(j - 1)] =
                static_cast<long>(std::count_if(rows.begin(), rows.end(),
                                                [j](long r) { return r >= j; }));
        return out;
    }

    auto operator<=>(const Partition&) const = default;

private:
    void validate() const {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] <= 0 || (i > 0 && rows[i - 1] < rows[i]))
                throw InternalError("Partition: rows must be weakly decreasing and positive");
        }
    }
};

// Ordered m-tuple of partitions, m >= 1.
struct Multipartition {
    std::vector<Partition> components;

    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> c) : components(std::move(c)) {}
    Multipartition(std::initializer_list<Partition> c) : components(c) {}

    static Multipartition empty(long m) {
        Multipartition mp;
        mp.components.assign(static_cast<size_t>(m), Partition{});
        return mp;
    }

    long level() const { return static_cast<long>(components.size()); }
    long size() const {
        long n = 0;
        for (const auto& p : components) n += p.size();
        return n;
    }
    bool is_empty() const {
        return std::all_of(components.begin(), components.end(),
                           [](const Partition& p) { return p.empty(); });
    }

    // 1-based component access.
    const Partition& component(long c) const {
        return components[static_cast<size_t>(c - 1)];
    }

    auto operator<=>(const Multipartition&) const = default;
};

// Position of a diagram node: component c, row a, column b, all 1-based.
struct NodeRef {
    long component = 0;
    long row = 0;
    long col = 0;

    auto operator<=>(const NodeRef&) const = default;
};

// Charge data (r, gamma) fixing node residues: residue of (c, a, b) is
// gamma_c + b - a, reduced mod r when r is finite.  r may be infinite, in
// which case residues are plain integers.
class ResidueParams {
public:
    static ResidueParams finite(long r, std::vector<long> gamma) {
        if (r < 2) throw InternalError("ResidueParams: modulus must be >= 2");
        check_level(gamma);
        for (long& g : gamma) g = ((g % r) + r) % r;
        return ResidueParams(r, std::move(gamma));
    }
    static ResidueParams infinite(std::vector<long> gamma) {
        check_level(gamma);
        return ResidueParams(0, std::move(gamma));
    }

    bool is_finite() const { return modulus_ != 0; }
    long modulus() const { return modulus_; }
    long level() const { return static_cast<long>(gamma_.size()); }
    const std::vector<long>& gamma() const { return gamma_; }

    // Canonical representative of a residue class.
    long reduce(long x) const {
        if (!is_finite()) return x;
        return ((x % modulus_) + modulus_) % modulus_;
    }

    bool operator==(const ResidueParams&) const = default;

private:
    ResidueParams(long r, std::vector<long> gamma)
        : modulus_(r), gamma_(std::move(gamma)) {}
    static void check_level(const std::vector<long>& gamma) {
        if (gamma.empty()) throw InternalError("ResidueParams: gamma must be nonempty");
    }

    long modulus_; // 0 encodes the infinite modulus
    std::vector<long> gamma_;
};

inline long residue(const ResidueParams& params, const NodeRef& node) {
    return params.reduce(params.gamma()[static_cast<size_t>(node.component - 1)] +
                         node.col - node.row);
}

// Cumulative partial sums sum_{l<k}|lam^(l)| + sum_{i<=j} lam^(k)_i for
// k = 1..m and j = 1..n.  The vector determines the multipartition, so at
// fixed size the induced lexicographic order is total.
inline std::vector<long> dominance_key(const Multipartition& mp) {
    const long n = mp.size();
    std::vector<long> key;
    key.reserve(static_cast<size_t>(mp.level() * n));
    long prefix = 0;
    for (const auto& comp : mp.components) {
        long running = prefix;
        for (long j = 1; j <= n; ++j) {
            running += comp.row(j);
            key.push_back(running);
        }
        prefix += comp.size();
    }
    return key;
}

// lam dominates mu (both of the same level and size).
inline bool dominates(const Multipartition& lam, const Multipartition& mu) {
    if (lam.level() != mu.level() || lam.size() != mu.size())
        throw SizeMismatch("dominates: operands must have equal level and size");
    const auto ka = dominance_key(lam);
    const auto kb = dominance_key(mu);
    for (size_t i = 0; i < ka.size(); ++i)
        if (ka[i] < kb[i]) return false;
    return true;
}

// Deterministic total order refining reverse dominance: most dominant first.
// Applied across sizes it orders by level, then size, then the key.
inline bool mpart_order_less(const Multipartition& a, const Multipartition& b) {
    if (a.level() != b.level()) return a.level() < b.level();
    if (a.size() != b.size()) return a.size() < b.size();
    return dominance_key(a) > dominance_key(b);
}

// (lam^(1))', ..., (lam^(m))'
inline Multipartition transpose(const Multipartition& lam) {
    Multipartition out;
    out.components.reserve(lam.components.size());
    for (const auto& comp : lam.components) out.components.push_back(comp.conjugate());
    return out;
}

// (lam^(m))', ..., (lam^(1))'
inline Multipartition flip_transpose(const Multipartition& lam) {
    Multipartition out = transpose(lam);
    std::reverse(out.components.begin(), out.components.end());
    return out;
}

namespace detail {

inline void partitions_rec(long n, long max_row, std::vector<long>& acc,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (long r = std::min(n, max_row); r >= 1; --r) {
        acc.push_back(r);
        partitions_rec(n - r, r, acc, out);
        acc.pop_back();
    }
}

inline std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    std::vector<long> acc;
    partitions_rec(n, n == 0 ? 1 : n, acc, out);
    return out;
}

} // namespace detail

// All multipartitions of size n with m components, most dominant first.
inline std::vector<Multipartition> enumerate_multipartitions(long m, long n) {
    if (m < 1 || n < 0) throw InternalError("enumerate_multipartitions: bad arguments");
    std::vector<Multipartition> out;
    std::vector<Partition> acc;
    auto rec = [&](auto&& self, long c, long remaining) -> void {
        if (c == m) {
            if (remaining == 0) out.push_back(Multipartition(acc));
            return;
        }
        const long lo = (c == m - 1) ? remaining : 0;
        for (long k = remaining; k >= lo; --k) {
            for (const auto& p : detail::partitions_of(k)) {
                acc.push_back(p);
                self(self, c + 1, remaining - k);
                acc.pop_back();
            }
        }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end(), mpart_order_less);
    return out;
}

inline bool is_addable(const Multipartition& lam, const NodeRef& x) {
    if (x.component < 1 || x.component > lam.level() || x.row < 1) return false;
    const Partition& comp = lam.component(x.component);
    return x.col == comp.row(x.row) + 1 &&
           (x.row == 1 || comp.row(x.row - 1) > comp.row(x.row));
}

inline bool is_removable(const Multipartition& lam, const NodeRef& x) {
    if (x.component < 1 || x.component > lam.level() || x.row < 1) return false;
    const Partition& comp = lam.component(x.component);
    return x.col >= 1 && x.col == comp.row(x.row) && comp.row(x.row) > comp.row(x.row + 1);
}

inline Multipartition add_node(const Multipartition& lam, const NodeRef& x) {
    if (!is_addable(lam, x)) throw InvalidNode("add_node: position is not addable");
    Multipartition out = lam;
    auto& rows = out.components[static_cast<size_t>(x.component - 1)].rows;
    if (x.row > static_cast<long>(rows.size()))
        rows.push_back(1);
    else
        ++rows[static_cast<size_t>(x.row - 1)];
    return out;
}

inline Multipartition remove_node(const Multipartition& lam, const NodeRef& x) {
    if (!is_removable(lam, x)) throw InvalidNode("remove_node: node is not removable");
    Multipartition out = lam;
    auto& rows = out.components[static_cast<size_t>(x.component - 1)].rows;
    if (--rows[static_cast<size_t>(x.row - 1)] == 0) rows.pop_back();
    return out;
}

// All addable positions in reading order: component by component, rows
// downward, including the fresh row below each component.
inline std::vector<NodeRef> addable_positions(const Multipartition& lam) {
    std::vector<NodeRef> out;
    for (long c = 1; c <= lam.level(); ++c) {
        const Partition& comp = lam.component(c);
        for (long a = 1; a <= comp.length() + 1; ++a) {
            NodeRef x{c, a, comp.row(a) + 1};
            if (is_addable(lam, x)) out.push_back(x);
        }
    }
    return out;
}

inline std::vector<NodeRef> removable_positions(const Multipartition& lam) {
    std::vector<NodeRef> out;
    for (long c = 1; c <= lam.level(); ++c) {
        const Partition& comp = lam.component(c);
        for (long a = 1; a <= comp.length(); ++a) {
            NodeRef x{c, a, comp.row(a)};
            if (is_removable(lam, x)) out.push_back(x);
        }
    }
    return out;
}

inline std::vector<NodeRef> addable_nodes(const ResidueParams& params,
                                          const Multipartition& lam, long i) {
    std::vector<NodeRef> out;
    const long target = params.reduce(i);
    for (const NodeRef& x : addable_positions(lam))
        if (residue(params, x) == target) out.push_back(x);
    return out;
}

inline std::vector<NodeRef> removable_nodes(const ResidueParams& params,
                                            const Multipartition& lam, long i) {
    std::vector<NodeRef> out;
    const long target = params.reduce(i);
    for (const NodeRef& x : removable_positions(lam))
        if (residue(params, x) == target) out.push_back(x);
    return out;
}

// Multiset of residues of all diagram nodes.
inline std::map<long, long> residue_content(const ResidueParams& params,
                                            const Multipartition& lam) {
    std::map<long, long> content;
    for (long c = 1; c <= lam.level(); ++c) {
        const Partition& comp = lam.component(c);
        for (long a = 1; a <= comp.length(); ++a)
            for (long b = 1; b <= comp.row(a); ++b)
                ++content[residue(params, NodeRef{c, a, b})];
    }
    return content;
}

// Text form: components separated by '|', rows comma-separated, empty
// component '-'.  Example: "2,1|-|1".
inline std::string to_text(const Multipartition& mp) {
    std::ostringstream out;
    for (long c = 1; c <= mp.level(); ++c) {
        if (c > 1) out << '|';
        const Partition& comp = mp.component(c);
        if (comp.empty()) {
            out << '-';
            continue;
        }
        for (long a = 1; a <= comp.length(); ++a) {
            if (a > 1) out << ',';
            out << comp.row(a);
        }
    }
    return out.str();
}

inline Multipartition multipartition_from_text(const std::string& text) {
    std::vector<Partition> components;
    std::string piece;
    std::istringstream stream(text);
    while (std::getline(stream, piece, '|')) {
        if (piece == "-" || piece.empty()) {
            components.emplace_back();
            continue;
        }
        std::vector<long> rows;
        std::istringstream rows_stream(piece);
        std::string cell;
        while (std::getline(rows_stream, cell, ','))
            rows.push_back(std::stol(cell));
        components.push_back(Partition(std::move(rows)));
    }
    if (components.empty()) components.emplace_back();
    return Multipartition(std::move(components));
}

} // namespace cfock
