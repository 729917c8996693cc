// ctrl-iso: exact walk-matrix tooling for graph isomorphism on the command
// line. One JSON object per invocation on stdout; diagnostics on stderr.
// Exit codes: 0 decision, 1 error, 2 inconclusive.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ctrliso/cli.hpp"

namespace {

void emit(const ctrliso::cli::CommandOutcome& outcome, bool compact) {
    std::cout << outcome.doc.dump(compact ? -1 : 2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph isomorphism toolkit for controllable graphs"};
    app.require_subcommand(1);
    bool compact = false;
    app.add_flag("--json", compact, "compact single-line JSON output");

    std::string file_a, file_b;
    int bruteforce_max = 10;
    auto* iso = app.add_subcommand("iso", "decide isomorphism of two graphs");
    iso->add_option("A", file_a, "graph6 file (first line is used)")->required();
    iso->add_option("B", file_b, "graph6 file (first line is used)")->required();
    iso->add_option("--bruteforce-max", bruteforce_max,
                    "largest order handed to the brute-force fallback")
        ->check(CLI::Range(0, 10));

    std::string ctrl_file;
    auto* controllable = app.add_subcommand("controllable", "walk-matrix invertibility per input line");
    controllable->add_option("FILE", ctrl_file, "graph6 lines ('-' for stdin)")->required();

    std::string spec_file;
    bool with_complement = false, with_generalized = false;
    auto* spectrum = app.add_subcommand("spectrum", "characteristic polynomial coefficients");
    spectrum->add_option("FILE", spec_file, "graph6 lines ('-' for stdin)")->required();
    spectrum->add_flag("--complement", with_complement, "also emit the complement's polynomial");
    spectrum->add_flag("--generalized", with_generalized, "also emit coefficients of det(tI - J - A)");

    std::string ref_a, ref_b;
    bool witness = false;
    auto* refine = app.add_subcommand("refine", "color refinement comparison of two graphs");
    refine->add_option("A", ref_a, "graph6 file")->required();
    refine->add_option("B", ref_b, "graph6 file")->required();
    refine->add_flag("--witness", witness, "emit the doubly stochastic witness as exact fractions");

    long q = 0;
    int r = 0, degree_bound = 0;
    std::string c2_file;
    auto* c2 = app.add_subcommand("c2", "walk-counting sentences of two-variable counting logic");
    c2->require_subcommand(1);
    auto* c2_emit = c2->add_subcommand("emit", "print the sentence for (q, r)");
    auto* c2_check = c2->add_subcommand("check", "evaluate the sentence against each input graph");
    for (auto* sub : {c2_emit, c2_check}) {
        sub->add_option("--q", q, "exact total walk count asserted")->required();
        sub->add_option("--r", r, "walk length")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--degree-bound", degree_bound, "maximum degree the sentence supports")
            ->required()
            ->check(CLI::NonNegativeNumber);
    }
    c2_check->add_option("FILE", c2_file, "graph6 lines ('-' for stdin)")->required();

    int survey_n = 0, threads = 1;
    long samples = 0;
    std::uint64_t seed = 0;
    auto* survey = app.add_subcommand("survey", "controllability rate over seeded random graphs");
    survey->add_option("--n", survey_n, "graph order")->required()->check(CLI::Range(1, 62));
    survey->add_option("--samples", samples, "number of samples")->required();
    survey->add_option("--seed", seed, "base seed; sample i uses seed + i")->required();
    survey->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        ctrliso::cli::CommandOutcome outcome;
        if (*iso) {
            outcome = ctrliso::cli::run_iso(file_a, file_b, bruteforce_max);
        } else if (*controllable) {
            outcome = ctrliso::cli::run_controllable(ctrl_file);
        } else if (*spectrum) {
            outcome = ctrliso::cli::run_spectrum(spec_file, with_complement, with_generalized);
        } else if (*refine) {
            outcome = ctrliso::cli::run_refine(ref_a, ref_b, witness);
        } else if (*c2) {
            outcome = *c2_emit ? ctrliso::cli::run_c2_emit(q, r, degree_bound)
                               : ctrliso::cli::run_c2_check(q, r, degree_bound, c2_file);
        } else if (*survey) {
            outcome = ctrliso::cli::run_survey(survey_n, samples, seed, threads);
        } else {
            std::cerr << "ctrl-iso: no subcommand selected\n";
            return 1;
        }
        emit(outcome, compact);
        return outcome.exit_code;
    } catch (const ctrliso::cli::CliError& e) {
        std::cerr << "ctrl-iso: " << e.what() << "\n";
        return 1;
    } catch (const ctrliso::C2CapError& e) {
        std::cerr << "ctrl-iso: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ctrl-iso: internal error: " << e.what() << "\n";
        return 1;
    }
}
