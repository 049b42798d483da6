#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cfock/canonical.hpp"
#include "cfock/crystal.hpp"
#include "cfock/fock.hpp"

namespace cfock {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

// Runs fn(i) for i in [0, count) across the requested number of threads.
// Each index owns its output slot, so results are identical for any thread
// count.
template <typename Fn>
inline void parallel_for(size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const size_t workers = std::min<size_t>(static_cast<size_t>(threads), count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&fn, w, workers, count] {
            for (size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

inline std::vector<long> residue_window(const ResidueParams& params, long max_n) {
    std::vector<long> out;
    if (params.is_finite()) {
        for (long i = 0; i < params.modulus(); ++i) out.push_back(i);
        return out;
    }
    long lo = params.gamma().front();
    long hi = lo;
    for (long g : params.gamma()) {
        lo = std::min(lo, g);
        hi = std::max(hi, g);
    }
    for (long i = lo - max_n; i <= hi + max_n; ++i) out.push_back(i);
    return out;
}

// (v^N - v^{-N}) / (v - v^{-1}) as a Laurent polynomial.
inline LaurentPoly quantum_bracket(long n) {
    if (n >= 0) return quantum_int(n);
    return LaurentPoly() - quantum_int(-n);
}

inline std::vector<Multipartition> all_multipartitions_upto(long m, long max_n) {
    std::vector<Multipartition> out;
    for (long n = 0; n <= max_n; ++n) {
        auto level = enumerate_multipartitions(m, n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace detail

// Crystal operator axioms over the Kleshchev vertices of size <= max_n:
// e_tilde and f_tilde are mutually inverse where defined, the vertex set is
// closed under e_tilde, and epsilon/phi count the exact operator powers.
inline VerifyCheck verify_crystal_axioms(const ResidueParams& params, long max_n) {
    VerifyCheck check{"crystal-axioms", true, ""};
    std::ostringstream detail;
    long vertices = 0;
    KleshchevClassifier classifier(params);
    for (long n = 0; n <= max_n && check.passed; ++n) {
        for (const Multipartition& lam : enumerate_kleshchev(params, n)) {
            ++vertices;
            for (long i : detail::addable_residues(params, lam)) {
                auto up = f_tilde(params, lam, i);
                if (!up) continue;
                auto back = e_tilde(params, *up, i);
                if (!back || !(*back == lam)) {
                    check.passed = false;
                    detail << "e_tilde(f_tilde) != id at " << to_text(lam) << ", i=" << i;
                    break;
                }
                long steps = 0;
                Multipartition walk = lam;
                while (auto next = f_tilde(params, walk, i)) {
                    walk = *next;
                    ++steps;
                    if (walk.size() > n + phi(params, lam, i)) break;
                }
                if (steps != phi(params, lam, i)) {
                    check.passed = false;
                    detail << "phi count mismatch at " << to_text(lam) << ", i=" << i;
                    break;
                }
            }
            if (!check.passed) break;
            for (long i : detail::removable_residues(params, lam)) {
                auto down = e_tilde(params, lam, i);
                if (!down) continue;
                if (!classifier.is_kleshchev(*down)) {
                    check.passed = false;
                    detail << "e_tilde image " << to_text(*down) << " is not Kleshchev";
                    break;
                }
                auto back = f_tilde(params, *down, i);
                if (!back || !(*back == lam)) {
                    check.passed = false;
                    detail << "f_tilde(e_tilde) != id at " << to_text(lam) << ", i=" << i;
                    break;
                }
                long steps = 0;
                Multipartition walk = lam;
                while (auto next = e_tilde(params, walk, i)) {
                    walk = *next;
                    ++steps;
                }
                if (steps != epsilon(params, lam, i)) {
                    check.passed = false;
                    detail << "epsilon count mismatch at " << to_text(lam) << ", i=" << i;
                    break;
                }
            }
            if (!check.passed) break;
        }
    }
    if (check.passed)
        detail << vertices << " vertices checked";
    check.detail = detail.str();
    return check;
}

// e_i f_j - f_j e_i = delta_ij (v^{N_i} - v^{-N_i})/(v - v^{-1}) on every
// basis multipartition of size <= max_n, both conventions.
inline VerifyCheck verify_commutators(const ResidueParams& params, long max_n, int threads) {
    const auto basis_mps = detail::all_multipartitions_upto(params.level(), max_n);
    const auto residues = detail::residue_window(params, max_n + 1);
    std::vector<std::string> failures(basis_mps.size());
    detail::parallel_for(basis_mps.size(), threads, [&](size_t idx) {
        const Multipartition& lam = basis_mps[idx];
        const FockVector unit = FockVector::basis(params, lam);
        for (ActionConvention conv : {ActionConvention::gamma, ActionConvention::dual}) {
            for (long i : residues) {
                for (long j : residues) {
                    FockVector lhs = e_op(conv, f_op(conv, unit, j), i) -
                                     f_op(conv, e_op(conv, unit, i), j);
                    FockVector rhs(params);
                    if (params.reduce(i) == params.reduce(j)) {
                        rhs = unit;
                        rhs *= detail::quantum_bracket(h_weight(params, lam, i));
                    }
                    if (!(lhs == rhs)) {
                        std::ostringstream msg;
                        msg << "commutator fails at " << to_text(lam) << ", i=" << i
                            << ", j=" << j << ", conv="
                            << (conv == ActionConvention::gamma ? "gamma" : "dual");
                        failures[idx] = msg.str();
                        return;
                    }
                }
            }
        }
    });
    VerifyCheck check{"commutator-identity", true, ""};
    for (const auto& failure : failures)
        if (!failure.empty()) {
            check.passed = false;
            check.detail = failure;
            return check;
        }
    check.detail = std::to_string(basis_mps.size()) + " basis vectors checked";
    return check;
}

// Direct gamma-convention action against the tensor-product route.
inline VerifyCheck verify_tensor_agreement(const ResidueParams& params, long max_n,
                                           int threads) {
    const auto basis_mps = detail::all_multipartitions_upto(params.level(), max_n);
    const auto residues = detail::residue_window(params, max_n + 1);
    std::vector<std::string> failures(basis_mps.size());
    detail::parallel_for(basis_mps.size(), threads, [&](size_t idx) {
        const Multipartition& lam = basis_mps[idx];
        const FockVector unit = FockVector::basis(params, lam);
        for (long i : residues) {
            if (!(f_op(ActionConvention::gamma, unit, i) ==
                  tensor_action(params, unit, i, OpKind::f)) ||
                !(e_op(ActionConvention::gamma, unit, i) ==
                  tensor_action(params, unit, i, OpKind::e))) {
                failures[idx] = "tensor route disagrees at " + to_text(lam) +
                                ", i=" + std::to_string(i);
                return;
            }
        }
    });
    VerifyCheck check{"tensor-agreement", true, ""};
    for (const auto& failure : failures)
        if (!failure.empty()) {
            check.passed = false;
            check.detail = failure;
            return check;
        }
    check.detail = std::to_string(basis_mps.size()) + " basis vectors checked";
    return check;
}

// canonical_basis carries its own internal assertions (unitriangularity,
// congruence, bar-invariance); this check surfaces them plus the
// decomposition matrix contracts as a pass/fail result.
inline VerifyCheck verify_canonical_invariants(const ResidueParams& params, long max_n) {
    VerifyCheck check{"canonical-invariants", true, ""};
    long entries = 0;
    try {
        for (long n = 0; n <= max_n; ++n) {
            entries += static_cast<long>(canonical_basis(params, n).entries.size());
            decomposition_matrix(params, n);
        }
        check.detail = std::to_string(entries) + " canonical elements checked";
    } catch (const Error& err) {
        check.passed = false;
        check.detail = err.what();
    }
    return check;
}

inline VerifyCheck verify_theorem(const ResidueParams& params, long max_n) {
    VerifyCheck check{"main-theorem-extremality", true, ""};
    for (long n = 0; n <= max_n; ++n) {
        const TheoremReport report = verify_main_theorem(params, n);
        if (!report.passed()) {
            check.passed = false;
            std::ostringstream msg;
            msg << "extremality fails at n=" << n;
            for (const auto& element : report.elements)
                if (!element.passed()) msg << " label=" << to_text(element.label);
            if (!report.labels_complete) msg << " (label set mismatch)";
            check.detail = msg.str();
            return check;
        }
    }
    check.detail = "all labels extremal through n=" + std::to_string(max_n);
    return check;
}

inline VerifyCheck verify_order_independence(const ResidueParams& params, long max_n,
                                             unsigned long seed) {
    VerifyCheck check{"order-independence", true, ""};
    for (long n = 0; n <= max_n; ++n) {
        if (!order_independence_check(params, n, seed + static_cast<unsigned long>(n))) {
            check.passed = false;
            check.detail = "randomized elimination differs at n=" + std::to_string(n);
            return check;
        }
    }
    check.detail = "elimination order immaterial through n=" + std::to_string(max_n);
    return check;
}

// The aggregated suite behind the `verify` command.
inline VerifyReport run_verification(const ResidueParams& params, long max_n,
                                     unsigned long seed, int threads) {
    VerifyReport report;
    report.checks.push_back(verify_crystal_axioms(params, max_n));
    report.checks.push_back(verify_commutators(params, max_n, threads));
    report.checks.push_back(verify_tensor_agreement(params, max_n, threads));
    report.checks.push_back(verify_canonical_invariants(params, max_n));
    report.checks.push_back(verify_theorem(params, max_n));
    report.checks.push_back(verify_order_independence(params, max_n, seed));
    return report;
}

} // namespace cfock
