#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cfock/cfock.hpp"

namespace {

struct Options {
    std::string r_text = "2";
    std::string gamma_text = "0";
    long n = 0;
    std::string format = "text";
    bool at_one = false;
    unsigned long seed = 0x5eed;
    int threads = 1;
};

cfock::ResidueParams make_params(const Options& opts) {
    std::vector<long> gamma;
    std::istringstream stream(opts.gamma_text);
    std::string cell;
    while (std::getline(stream, cell, ',')) {
        try {
            gamma.push_back(std::stol(cell));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--gamma", "expected comma-separated integers");
        }
    }
    if (gamma.empty()) throw CLI::ValidationError("--gamma", "at least one entry required");
    if (opts.r_text == "inf") return cfock::ResidueParams::infinite(std::move(gamma));
    long r = 0;
    try {
        r = std::stol(opts.r_text);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--r", "expected an integer >= 2 or 'inf'");
    }
    if (r < 2) throw CLI::ValidationError("--r", "modulus must be >= 2 or 'inf'");
    return cfock::ResidueParams::finite(r, std::move(gamma));
}

int run_kleshchev(const Options& opts) {
    const auto params = make_params(opts);
    const auto mps = cfock::enumerate_kleshchev(params, opts.n);
    if (opts.format == "json") {
        cfock::json out = cfock::to_json(params);
        out["n"] = opts.n;
        out["multipartitions"] = cfock::json::array();
        for (const auto& mp : mps) out["multipartitions"].push_back(cfock::to_text(mp));
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& mp : mps) std::cout << cfock::to_text(mp) << '\n';
    }
    return 0;
}

int run_crystal(const Options& opts) {
    const auto params = make_params(opts);
    const auto graph = cfock::crystal_graph(params, opts.n);
    if (opts.format == "json")
        std::cout << cfock::to_json(graph).dump(2) << '\n';
    else
        std::cout << cfock::to_dot(graph);
    return 0;
}

int run_canonical(const Options& opts) {
    const auto params = make_params(opts);
    const auto cb = cfock::canonical_basis(params, opts.n);
    if (opts.format == "json") {
        std::cout << cfock::to_json(cb).dump(2) << '\n';
    } else {
        for (const auto& entry : cb.entries)
            std::cout << cfock::to_text(entry.label) << " = "
                      << cfock::to_display(entry.vector) << '\n';
    }
    return 0;
}

int run_decomp(const Options& opts) {
    const auto params = make_params(opts);
    const auto dm = cfock::decomposition_matrix(params, opts.n);
    if (opts.format == "json")
        std::cout << cfock::to_json(dm).dump(2) << '\n';
    else
        std::cout << cfock::to_csv(dm, opts.at_one);
    return 0;
}

int run_verify(const Options& opts) {
    const auto params = make_params(opts);
    const auto report = cfock::run_verification(params, opts.n, opts.seed, opts.threads);
    if (opts.format == "json") {
        cfock::json out = cfock::to_json(params);
        out["max_n"] = opts.n;
        out["checks"] = cfock::json::array();
        for (const auto& check : report.checks) {
            cfock::json c;
            c["name"] = check.name;
            c["passed"] = check.passed;
            c["detail"] = check.detail;
            out["checks"].push_back(std::move(c));
        }
        out["passed"] = report.passed();
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& check : report.checks)
            std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "  ("
                      << check.detail << ")\n";
        std::cout << (report.passed() ? "all checks passed" : "CHECKS FAILED") << '\n';
    }
    return report.passed() ? 0 : 1;
}

void add_shared(CLI::App* cmd, Options& opts) {
    cmd->add_option("--r", opts.r_text, "modulus: integer >= 2 or 'inf'")->required();
    cmd->add_option("--gamma", opts.gamma_text, "comma-separated charges")->required();
    cmd->add_option("--seed", opts.seed, "seed for randomized checks");
    cmd->add_option("--threads", opts.threads, "worker threads for sweeps");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fock-space combinatorics: Kleshchev multipartitions, crystal "
                 "graphs, canonical bases, graded decomposition matrices"};
    app.require_subcommand(1);

    Options opts;
    std::function<int(const Options&)> action;

    auto* kleshchev = app.add_subcommand("kleshchev", "list Kleshchev multipartitions of size n");
    add_shared(kleshchev, opts);
    kleshchev->add_option("--n", opts.n, "size")->required()->check(CLI::NonNegativeNumber);
    kleshchev->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));
    kleshchev->callback([&] { action = run_kleshchev; });

    auto* crystal = app.add_subcommand("crystal", "crystal graph up to a size bound");
    add_shared(crystal, opts);
    crystal->add_option("--max-size", opts.n, "largest vertex size")->required()->check(CLI::NonNegativeNumber);
    crystal->add_option("--format", opts.format)->check(CLI::IsMember({"text", "dot", "json"}));
    crystal->callback([&] {
        if (opts.format == "text") opts.format = "dot";
        action = run_crystal;
    });

    auto* canonical = app.add_subcommand("canonical", "canonical basis of the degree-n piece");
    add_shared(canonical, opts);
    canonical->add_option("--n", opts.n, "size")->required()->check(CLI::NonNegativeNumber);
    canonical->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));
    canonical->callback([&] { action = run_canonical; });

    auto* decomp = app.add_subcommand("decomp", "graded decomposition matrix");
    add_shared(decomp, opts);
    decomp->add_option("--n", opts.n, "size")->required()->check(CLI::NonNegativeNumber);
    decomp->add_option("--format", opts.format)->check(CLI::IsMember({"text", "csv", "json"}));
    decomp->add_flag("--at-one", opts.at_one, "emit the v=1 integer matrix instead");
    decomp->callback([&] {
        if (opts.format == "text") opts.format = "csv";
        action = run_decomp;
    });

    auto* verify = app.add_subcommand("verify", "run the full invariant and theorem suite");
    add_shared(verify, opts);
    verify->add_option("--max-n", opts.n, "largest size to check")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));
    verify->callback([&] { action = run_verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action(opts);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const cfock::CheckFailure& e) {
        std::cerr << "FAIL  " << e.what() << '\n';
        return 1;
    } catch (const cfock::Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
