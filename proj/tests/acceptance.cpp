// Acceptance suite: runs every gate criterion at its stated scope and prints
// one pass/fail line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cfock/cfock.hpp"

using namespace cfock;

namespace {

Multipartition mp(const std::string& text) { return multipartition_from_text(text); }

LaurentPoly v(long e = 1) { return LaurentPoly::monomial(e); }

bool is_r_restricted(const Partition& p, long r) {
    for (long a = 1; a <= p.length(); ++a)
        if (p.row(a) - p.row(a + 1) >= r) return false;
    return true;
}

// The parameter sets of the canonical-basis criterion.
struct Instance {
    ResidueParams params;
    long max_n;
};

std::vector<Instance> canonical_instances() {
    return {
        {ResidueParams::finite(2, {0}), 8},
        {ResidueParams::finite(3, {0}), 8},
        {ResidueParams::finite(2, {0, 0}), 5},
        {ResidueParams::finite(2, {0, 1}), 5},
        {ResidueParams::finite(2, {0, 0, 0}), 4},
    };
}

// ---------------------------------------------------------------------------

bool criterion_ar_reduction(std::ostream& log) {
    ARWord word;
    const std::string letters = "RRAAAARRRAARAR";
    for (size_t pos = 0; pos < letters.size(); ++pos)
        word.letters.push_back({letters[pos], NodeRef{1, static_cast<long>(pos + 1), 1}});
    const ARWord reduced = reduce_ar(word);
    std::vector<long> positions;
    for (const auto& letter : reduced.letters) positions.push_back(letter.node.row);
    if (reduced.str() != "AARR" || positions != std::vector<long>{5, 6, 7, 14}) {
        log << "reduced to " << reduced.str() << " at unexpected positions";
        return false;
    }
    // good node = leftmost surviving R = original position 7
    if (reduced.letters[2].kind != 'R' || reduced.letters[2].node.row != 7) {
        log << "good node is not at position 7";
        return false;
    }
    return true;
}

bool criterion_level1_characterization(std::ostream& log) {
    for (long r : {2L, 3L, 4L}) {
        const ResidueParams params = ResidueParams::finite(r, {0});
        for (long n = 0; n <= 10; ++n) {
            std::vector<Multipartition> restricted;
            for (const auto& lam : enumerate_multipartitions(1, n))
                if (is_r_restricted(lam.component(1), r)) restricted.push_back(lam);
            if (enumerate_kleshchev(params, n) != restricted) {
                log << "mismatch with restricted partitions at r=" << r << ", n=" << n;
                return false;
            }
        }
    }
    const ResidueParams generic = ResidueParams::infinite({0});
    for (long n = 0; n <= 8; ++n) {
        if (enumerate_kleshchev(generic, n) != enumerate_multipartitions(1, n)) {
            log << "not every partition is Kleshchev at r=inf, n=" << n;
            return false;
        }
    }
    return true;
}

bool criterion_commutators(std::ostream& log) {
    std::vector<ResidueParams> sets;
    for (long r : {2L, 3L}) {
        sets.push_back(ResidueParams::finite(r, {0}));
        sets.push_back(ResidueParams::finite(r, {0, 0}));
        sets.push_back(ResidueParams::finite(r, {0, 1}));
    }
    for (const auto& params : sets) {
        const VerifyCheck check = verify_commutators(params, 5, 2);
        if (!check.passed) {
            log << check.detail;
            return false;
        }
    }
    return true;
}

bool criterion_tensor_consistency(std::ostream& log) {
    for (long r : {2L, 3L}) {
        for (const auto& gamma : {std::vector<long>{0, 0}, std::vector<long>{0, 1}}) {
            const ResidueParams params = ResidueParams::finite(r, gamma);
            const VerifyCheck check = verify_tensor_agreement(params, 4, 2);
            if (!check.passed) {
                log << check.detail;
                return false;
            }
        }
    }
    return true;
}

bool criterion_canonical_suite(std::ostream& log) {
    for (const Instance& instance : canonical_instances()) {
        for (long n = 0; n <= instance.max_n; ++n) {
            const ABasis basis = a_basis(instance.params, n);
            const CanonicalBasis cb = canonical_basis(instance.params, n);
            for (const auto& entry : cb.entries) {
                if (!(bar_expand(entry.vector, basis) == entry.vector)) {
                    log << "not bar-invariant at " << to_text(entry.label) << ", n=" << n;
                    return false;
                }
                if (!entry.vector.coeff(entry.label).is_one()) {
                    log << "diagonal is not 1 at " << to_text(entry.label);
                    return false;
                }
                for (const auto& [support, c] : entry.vector.terms()) {
                    if (support == entry.label) continue;
                    if (!c.in_v_span() || !dominates(support, entry.label)) {
                        log << "congruence/triangularity fails at " << to_text(entry.label);
                        return false;
                    }
                }
            }
            if (!order_independence_check(instance.params, n)) {
                log << "order independence fails at n=" << n;
                return false;
            }
        }
    }
    return true;
}

bool criterion_main_theorem(std::ostream& log) {
    for (const Instance& instance : canonical_instances()) {
        for (long n = 0; n <= instance.max_n; ++n) {
            const TheoremReport report = verify_main_theorem(instance.params, n);
            if (!report.passed()) {
                log << "extremality or label completeness fails at n=" << n;
                return false;
            }
        }
    }
    return true;
}

bool criterion_fixtures(std::ostream& log) {
    const ResidueParams r2_0 = ResidueParams::finite(2, {0});
    const CanonicalBasis cb = canonical_basis(r2_0, 2);
    FockVector expected(r2_0);
    expected.add_term(mp("1,1"), LaurentPoly(1));
    expected.add_term(mp("2"), v());
    if (cb.entries.size() != 1 || !(cb.entries[0].vector == expected)) {
        log << "G(1,1) fixture mismatch";
        return false;
    }

    const ResidueParams r2_00 = ResidueParams::finite(2, {0, 0});
    FockVector pair(r2_00);
    pair.add_term(mp("1|1"), LaurentPoly(1));
    if (!(divided_f(ActionConvention::gamma, FockVector::vacuum(r2_00), 0, 2) == pair)) {
        log << "divided square fixture mismatch";
        return false;
    }

    const ResidueParams generic = ResidueParams::infinite({0});
    for (long n = 0; n <= 4; ++n) {
        const DecompositionMatrix dm = decomposition_matrix(generic, n);
        if (dm.rows.size() != dm.cols.size()) {
            log << "semisimple matrix is not square at n=" << n;
            return false;
        }
        for (size_t r = 0; r < dm.rows.size(); ++r)
            for (size_t c = 0; c < dm.cols.size(); ++c) {
                const bool diagonal = r == c;
                if (dm.entry(r, c).is_one() != diagonal ||
                    (dm.entry(r, c).is_zero() == diagonal)) {
                    log << "semisimple matrix is not the identity at n=" << n;
                    return false;
                }
            }
    }
    return true;
}

bool criterion_matrix_contracts(std::ostream& log) {
    for (const Instance& instance : canonical_instances()) {
        for (long n = 0; n <= instance.max_n; ++n) {
            const DecompositionMatrix dm = decomposition_matrix(instance.params, n);
            for (size_t c = 0; c < dm.cols.size(); ++c) {
                const auto row = std::find(dm.rows.begin(), dm.rows.end(), dm.cols[c]);
                if (row == dm.rows.end() ||
                    !dm.entry(static_cast<size_t>(row - dm.rows.begin()), c).is_one()) {
                    log << "diagonal contract fails at n=" << n;
                    return false;
                }
            }
            for (size_t r = 0; r < dm.rows.size(); ++r)
                for (size_t c = 0; c < dm.cols.size(); ++c) {
                    if (dm.entry(r, c).is_zero()) continue;
                    if (!dominates(dm.rows[r], dm.cols[c])) {
                        log << "dominance contract fails at n=" << n;
                        return false;
                    }
                    if (dm.entry_at_one(r, c) <= 0) {
                        log << "nonnegativity contract fails at n=" << n;
                        return false;
                    }
                    if (!(residue_content(instance.params, dm.rows[r]) ==
                          residue_content(instance.params, dm.cols[c]))) {
                        log << "residue block contract fails at n=" << n;
                        return false;
                    }
                }
        }
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<bool(std::ostream&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"A/R cancellation worked example", criterion_ar_reduction},
        {"level-1 Kleshchev = restricted partitions", criterion_level1_characterization},
        {"commutator identity, both conventions", criterion_commutators},
        {"direct action = tensor route", criterion_tensor_consistency},
        {"canonical basis invariants + order independence", criterion_canonical_suite},
        {"labels are the unique minimal support terms", criterion_main_theorem},
        {"fixed values: G(1,1), divided square, semisimple identity", criterion_fixtures},
        {"decomposition matrix contracts", criterion_matrix_contracts},
    };

    int failures = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        std::ostringstream log;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[k].run(log);
        } catch (const Error& err) {
            log << "exception: " << err.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << (k + 1) << "/8: " << (ok ? "PASS" : "FAIL") << "  "
                  << criteria[k].name << "  (" << std::fixed << std::setprecision(2)
                  << seconds << "s)";
        if (!ok) {
            std::cout << "  -- " << log.str();
            ++failures;
        }
        std::cout << '\n';
    }
    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 8 criteria passed\n";
    return 0;
}
