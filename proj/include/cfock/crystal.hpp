#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cfock/partition.hpp"

namespace cfock {

// One letter of the addable/removable word: 'A' or 'R' plus the node it
// refers to.
struct ARLetter {
    char kind = 'A';
    NodeRef node;

    bool operator==(const ARLetter&) const = default;
};

struct ARWord {
    std::vector<ARLetter> letters;

    bool operator==(const ARWord&) const = default;

    std::string str() const {
        std::string s;
        s.reserve(letters.size());
        for (const auto& l : letters) s.push_back(l.kind);
        return s;
    }
};

// Addable and removable i-nodes in reading order: first row of the first
// component downward, then the next component, and so on.  Within one row a
// single residue never produces both letters, so merging by (component, row)
// is enough.
inline ARWord ar_word(const ResidueParams& params, const Multipartition& lam, long i) {
    ARWord word;
    for (const NodeRef& x : addable_nodes(params, lam, i))
        word.letters.push_back({'A', x});
    for (const NodeRef& x : removable_nodes(params, lam, i))
        word.letters.push_back({'R', x});
    std::sort(word.letters.begin(), word.letters.end(),
              [](const ARLetter& a, const ARLetter& b) {
                  return std::pair(a.node.component, a.node.row) <
                         std::pair(b.node.component, b.node.row);
              });
    return word;
}

// Delete adjacent RA pairs until none remain (adjacency after earlier
// deletions).  Equivalent to bracket matching with R as opener and A as
// closer; survivors keep their original nodes and form A...AR...R.
inline ARWord reduce_ar(const ARWord& word) {
    std::vector<size_t> open_rs;
    std::vector<bool> survives(word.letters.size(), true);
    for (size_t pos = 0; pos < word.letters.size(); ++pos) {
        if (word.letters[pos].kind == 'R') {
            open_rs.push_back(pos);
        } else if (!open_rs.empty()) {
            survives[open_rs.back()] = false;
            survives[pos] = false;
            open_rs.pop_back();
        }
    }
    ARWord out;
    for (size_t pos = 0; pos < word.letters.size(); ++pos)
        if (survives[pos]) out.letters.push_back(word.letters[pos]);
    return out;
}

// Surviving R's, i.e. the normal i-nodes.
inline std::vector<NodeRef> normal_nodes(const ResidueParams& params,
                                         const Multipartition& lam, long i) {
    std::vector<NodeRef> out;
    for (const ARLetter& l : reduce_ar(ar_word(params, lam, i)).letters)
        if (l.kind == 'R') out.push_back(l.node);
    return out;
}

// Leftmost surviving R.
inline std::optional<NodeRef> good_node(const ResidueParams& params,
                                        const Multipartition& lam, long i) {
    auto normals = normal_nodes(params, lam, i);
    if (normals.empty()) return std::nullopt;
    return normals.front();
}

inline long epsilon(const ResidueParams& params, const Multipartition& lam, long i) {
    long count = 0;
    for (const ARLetter& l : reduce_ar(ar_word(params, lam, i)).letters)
        if (l.kind == 'R') ++count;
    return count;
}

inline long phi(const ResidueParams& params, const Multipartition& lam, long i) {
    long count = 0;
    for (const ARLetter& l : reduce_ar(ar_word(params, lam, i)).letters)
        if (l.kind == 'A') ++count;
    return count;
}

// Remove the good i-node.
inline std::optional<Multipartition> e_tilde(const ResidueParams& params,
                                             const Multipartition& lam, long i) {
    auto good = good_node(params, lam, i);
    if (!good) return std::nullopt;
    return remove_node(lam, *good);
}

// Add at the rightmost surviving A.  This is the inverse of e_tilde: the
// added node becomes the good i-node of the result.
inline std::optional<Multipartition> f_tilde(const ResidueParams& params,
                                             const Multipartition& lam, long i) {
    const ARWord reduced = reduce_ar(ar_word(params, lam, i));
    std::optional<NodeRef> last_a;
    for (const ARLetter& l : reduced.letters)
        if (l.kind == 'A') last_a = l.node;
    if (!last_a) return std::nullopt;
    return add_node(lam, *last_a);
}

namespace detail {

// Residue classes that can carry a letter for lam.
inline std::set<long> removable_residues(const ResidueParams& params,
                                         const Multipartition& lam) {
    std::set<long> out;
    for (const NodeRef& x : removable_positions(lam)) out.insert(residue(params, x));
    return out;
}

inline std::set<long> addable_residues(const ResidueParams& params,
                                       const Multipartition& lam) {
    std::set<long> out;
    for (const NodeRef& x : addable_positions(lam)) out.insert(residue(params, x));
    return out;
}

} // namespace detail

// Memoized Kleshchev recursion: the empty multipartition is Kleshchev, and a
// nonempty one is Kleshchev iff removing some good node leaves a Kleshchev
// multipartition.  Not safe for concurrent use; create one per thread.
class KleshchevClassifier {
public:
    explicit KleshchevClassifier(ResidueParams params) : params_(std::move(params)) {}

    const ResidueParams& params() const { return params_; }

    bool is_kleshchev(const Multipartition& lam) {
        if (lam.level() != params_.level())
            throw SizeMismatch("is_kleshchev: level mismatch");
        if (lam.is_empty()) return true;
        auto memo = memo_.find(lam);
        if (memo != memo_.end()) return memo->second;
        bool result = false;
        for (long i : detail::removable_residues(params_, lam)) {
            auto below = e_tilde(params_, lam, i);
            if (below && is_kleshchev(*below)) {
                result = true;
                break;
            }
        }
        memo_.emplace(lam, result);
        return result;
    }

private:
    ResidueParams params_;
    std::map<Multipartition, bool> memo_;
};

inline bool is_kleshchev(const ResidueParams& params, const Multipartition& lam) {
    return KleshchevClassifier(params).is_kleshchev(lam);
}

// Breadth-first closure of the empty multipartition under all f_tilde,
// filtered to size n, most dominant first.
inline std::vector<Multipartition> enumerate_kleshchev(const ResidueParams& params, long n) {
    if (n < 0) throw InternalError("enumerate_kleshchev: negative size");
    std::set<Multipartition> level{Multipartition::empty(params.level())};
    for (long s = 0; s < n; ++s) {
        std::set<Multipartition> next;
        for (const Multipartition& lam : level)
            for (long i : detail::addable_residues(params, lam))
                if (auto up = f_tilde(params, lam, i)) next.insert(*up);
        level = std::move(next);
    }
    std::vector<Multipartition> out(level.begin(), level.end());
    std::sort(out.begin(), out.end(), mpart_order_less);
    return out;
}

struct LadderStep {
    long residue = 0;
    long power = 0;

    bool operator==(const LadderStep&) const = default;
};

// Good-node peeling: take the residue whose good node lies lowest in reading
// order, peel e_tilde^{epsilon_i} off, and recurse.  The returned steps are
// in application order from the empty multipartition, so replaying them with
// f_tilde (or with divided powers f_i^{(k)}) rebuilds lam.
//
// Peeling the bottom-most good node first matches the level-1 ladder order;
// picking an upper one can break the unitriangularity of the monomial
// family (the divided powers then reach below the label).
inline std::vector<LadderStep> ladder_sequence(const ResidueParams& params,
                                               const Multipartition& lam) {
    KleshchevClassifier classifier(params);
    if (!classifier.is_kleshchev(lam))
        throw NotKleshchev("ladder_sequence: multipartition is not Kleshchev");
    std::vector<LadderStep> steps;
    Multipartition current = lam;
    while (!current.is_empty()) {
        std::optional<long> pick;
        NodeRef lowest{};
        for (long i : detail::removable_residues(params, current)) {
            const auto good = good_node(params, current, i);
            if (!good) continue;
            if (!pick || std::pair(good->component, good->row) >
                             std::pair(lowest.component, lowest.row)) {
                pick = i;
                lowest = *good;
            }
        }
        if (!pick) throw NotKleshchev("ladder_sequence: no good node on a Kleshchev multipartition");
        const long k = epsilon(params, current, *pick);
        for (long t = 0; t < k; ++t) current = *e_tilde(params, current, *pick);
        steps.push_back({*pick, k});
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

struct CrystalEdge {
    Multipartition source;
    long residue = 0;
    Multipartition target;

    bool operator==(const CrystalEdge&) const = default;
};

// Vertices are the Kleshchev multipartitions of size <= max_size, edges are
// the f_tilde arrows labeled by residue.
struct CrystalGraph {
    std::vector<Multipartition> vertices; // by size, then most dominant first
    std::vector<CrystalEdge> edges;       // by source position, then residue
};

inline CrystalGraph crystal_graph(const ResidueParams& params, long max_size) {
    if (max_size < 0) throw InternalError("crystal_graph: negative size bound");
    CrystalGraph graph;
    for (long n = 0; n <= max_size; ++n) {
        const auto level = enumerate_kleshchev(params, n);
        graph.vertices.insert(graph.vertices.end(), level.begin(), level.end());
        if (n == max_size) break;
        for (const Multipartition& lam : level)
            for (long i : detail::addable_residues(params, lam))
                if (auto up = f_tilde(params, lam, i))
                    graph.edges.push_back({lam, i, *up});
    }
    return graph;
}

} // namespace cfock
