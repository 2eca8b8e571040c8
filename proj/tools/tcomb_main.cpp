// tcomb: complexity bounds for term rewrite systems.
//
//   tcomb analyze FILE [--degree-max N] [--coeff-max N] [--timeout S]
//                      [--proof text|json|none] [--dot-dg FILE]
//   tcomb oracle FILE --size N --budget B
//   tcomb validate PROOF.json
//
// analyze prints WORST_CASE(?, O(n^D)) or MAYBE on the first line and exits
// with 0 or 1; any error exits with 2.

#include "tcomb/depgraph.hpp"
#include "tcomb/errors.hpp"
#include "tcomb/oracle.hpp"
#include "tcomb/problem_io.hpp"
#include "tcomb/processors.hpp"
#include "tcomb/proof_io.hpp"
#include "tcomb/strategy.hpp"
#include "tcomb/validate.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string headline(const tcomb::ProofTree& pt) {
    const auto& b = pt.conclusion().bound;
    if (!pt.closed() || !b.is_poly()) return "MAYBE";
    return "WORST_CASE(?, " + tcomb::to_string(b) + ")";
}

// The graph of the DP problem the analysis works on.
tcomb::Problem dp_view(const tcomb::Problem& p) {
    if (tcomb::is_dp_problem(p)) return p;
    if (auto r = tcomb::is_innermost(p) ? tcomb::proc_dt(p) : tcomb::proc_wdp(p)) return r->subproblems.front();
    throw std::runtime_error("no dependency pair problem for this input");
}

int analyze(const std::string& file, unsigned degree, unsigned coeff, double timeout, const std::string& proof,
            const std::string& dot) {
    const tcomb::Problem p = tcomb::parse_problem(read_file(file));
    if (!dot.empty()) {
        std::ofstream out(dot);
        if (!out) throw std::runtime_error("cannot write " + dot);
        out << tcomb::to_dot(tcomb::estimate_dg(dp_view(p)));
    }
    tcomb::StrategyOptions options;
    options.degree_cap = degree;
    options.coeff_max = coeff;
    if (timeout > 0)
        options.timeout = std::chrono::milliseconds(static_cast<long long>(timeout * 1000));
    const tcomb::ProofTree pt = tcomb::default_strategy(p, options);
    const std::string head = headline(pt);
    std::cout << head << "\n";
    if (proof == "text")
        std::cout << "\n" << tcomb::proof_to_text(pt);
    else if (proof == "json")
        std::cout << tcomb::proof_to_json(pt) << "\n";
    return head == "MAYBE" ? 1 : 0;
}

int oracle(const std::string& file, std::size_t size, std::size_t budget) {
    const tcomb::Problem p = tcomb::parse_problem(read_file(file));
    std::cout << "n\tcc\n";
    for (std::size_t n = 1; n <= size; ++n)
        std::cout << n << "\t" << tcomb::to_string(tcomb::cc_oracle(p, n, budget)) << "\n";
    return 0;
}

int validate(const std::string& file) {
    const auto result = tcomb::validate_proof(tcomb::parse_proof_json(read_file(file)));
    std::cout << (result ? "valid" : "invalid: " + result.diagnostic) << "\n";
    return result ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complexity bounds for term rewrite systems"};
    app.require_subcommand(1);

    std::string file, proof = "text", dot;
    unsigned degree = 3, coeff = 3;
    double timeout = 0;
    auto* an = app.add_subcommand("analyze", "search for a polynomial bound");
    an->add_option("file", file, "problem file")->required();
    an->add_option("--degree-max", degree, "largest interpretation degree")->capture_default_str();
    an->add_option("--coeff-max", coeff, "largest interpretation coefficient")->capture_default_str();
    an->add_option("--timeout", timeout, "seconds; 0 for none");
    an->add_option("--proof", proof, "proof output")->check(CLI::IsMember({"text", "json", "none"}))->capture_default_str();
    an->add_option("--dot-dg", dot, "write the dependency graph in DOT format");

    std::size_t size = 5, budget = 50;
    auto* orc = app.add_subcommand("oracle", "brute-force runtime complexity per start term size");
    orc->add_option("file", file, "problem file")->required();
    orc->add_option("--size", size, "largest start term size")->capture_default_str();
    orc->add_option("--budget", budget, "step budget per start term")->capture_default_str();

    std::string proof_file;
    auto* val = app.add_subcommand("validate", "re-check a JSON proof");
    val->add_option("proof", proof_file, "proof file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (an->parsed()) return analyze(file, degree, coeff, timeout, proof, dot);
        if (orc->parsed()) return oracle(file, size, budget);
        return validate(proof_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
