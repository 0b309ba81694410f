// Copyright 2026 The pauliepr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pauliepr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "pauliepr/epr_suite.hpp"
#include "pauliepr/errors.hpp"
#include "pauliepr/expr.hpp"
#include "pauliepr/singlet.hpp"
#include "pauliepr/triples.hpp"

namespace pauliepr::cli {

namespace {

constexpr const char *kExpressionHelp =
    "Expressions: E<d><d> (digits 0..3) for two-site words, e<d> (1..3) for one-site generators, "
    "I, psi, i, integers and fractions a/b, + - * and parentheses. There is no division: write "
    "x/i as -i*x. Quote the expression, and put -- before it if it starts with '-'.";

struct VerifyOptions {
    std::string format = "json";
    std::string out_path;
    bool corrupt_table = false;
};

int command_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err) {
    const CompositionTable table = opt.corrupt_table ? corrupted_table() : CompositionTable::standard();
    VerificationReport report = run_full_report(build_singlet(table));
    std::string text = opt.format == "md" ? to_markdown(report) : to_json(report);

    if (opt.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(opt.out_path, std::ios::binary);
        file << text;
        file.close();
        if (!file) {
            err << "error: cannot write report to " << opt.out_path << "\n";
            return kExitError;
        }
    }
    if (!report.overall) {
        for (const auto &name : report.failing_checks()) {
            err << "failing check: " << name << "\n";
        }
        return kExitCheckFailed;
    }
    return kExitPass;
}

SingletState standard_state() {
    return build_singlet();
}

Element evaluate_input(const std::string &text, bool projector, const SingletState &s) {
    ElementExpr expr = parse_expr(text);
    SymbolicBindings b;
    b.psi = projector ? s.projector() : s.psi();
    return evaluate(expr, b);
}

std::string range_note(const Scalar &p) {
    if (p.is_real() && p.re() >= 0 && p.re() <= 1) {
        return "";
    }
    return " (outside [0, 1])";
}

int command_expect(const std::string &text, bool projector, std::ostream &out, std::ostream &err) {
    const SingletState s = standard_state();
    Element a = evaluate_input(text, projector, s);
    if (a.arity() != 2) {
        err << "ArityMismatch: expectation needs a two-site expression\n";
        return kExitError;
    }
    out << "expression: " << a << "\n";
    out << "mean: " << expectation(a, s) << "\n";
    try {
        OutcomeProbabilities born = outcome_probabilities(a, s);
        OutcomeProbabilities literal = literal_probabilities(a, s);
        out << "born: p(+1) = " << born.plus << ", p(-1) = " << born.minus << "\n";
        out << "literal: p(+1) = " << literal.plus << range_note(literal.plus) << ", p(-1) = " << literal.minus
            << range_note(literal.minus) << "\n";
    } catch (const NotAnInvolution &e) {
        err << "NotAnInvolution: " << e.what() << "\n";
        return kExitError;
    }
    return kExitPass;
}

int command_eval(const std::string &text, bool projector, std::ostream &out) {
    out << evaluate_input(text, projector, standard_state()) << "\n";
    return kExitPass;
}

std::string relation_text(const BasicTriple &t) {
    const auto &c = t.cyclic();
    return c[0].name() + "*" + c[1].name() + " = i*" + c[2].name();
}

int command_triples(bool diff_paper, std::ostream &out) {
    const auto found = enumerate_basic_triples();
    for (const auto &t : found) {
        out << t.name() << "  " << relation_text(t) << "\n";
    }
    if (!diff_paper) {
        return kExitPass;
    }
    const auto &listed = reference_basic_sets();
    TripleDiff diff = diff_triples(as_word_triples(found), listed);
    out << "\nfound but not listed (" << diff.found_not_listed.size() << "):\n";
    for (const auto &t : diff.found_not_listed) {
        out << "  " << triple_name(t) << "\n";
    }
    out << "listed but not found (" << diff.listed_not_found.size() << "):\n";
    for (const auto &t : diff.listed_not_found) {
        out << "  " << triple_name(t) << "\n";
    }
    const PauliWord e12 = PauliWord::from_indices({1, 2});
    IncidenceMap incidence = build_incidence(found);
    out << "E12 lies in " << incidence[e12].size() << " triples:";
    for (const auto &t : incidence[e12]) {
        out << " " << t.name();
    }
    out << "\nE12 listed positions:";
    for (int p : listed_positions(e12, listed)) {
        out << " " << p;
    }
    out << "\n";
    return kExitPass;
}

int command_peres(std::ostream &out) {
    auto sign = [](int v) { return v > 0 ? "+1" : "-1"; };
    auto yes = [](bool v) { return v ? "yes" : "no"; };
    out << "m01 m10 m02 m20 | opp_x opp_y product | all\n";
    for (const auto &m : all_classical_assignments()) {
        bool x = satisfies(m, {true, false, false});
        bool y = satisfies(m, {false, true, false});
        bool p = satisfies(m, {false, false, true});
        out << std::right << std::setw(3) << sign(m.e01) << std::setw(4) << sign(m.e10) << std::setw(4)
            << sign(m.e02) << std::setw(4) << sign(m.e20) << " | " << std::left << std::setw(6) << yes(x)
            << std::setw(6) << yes(y) << std::setw(8) << yes(p) << "| " << yes(x && y && p) << "\n";
    }
    out << "satisfying all constraints: " << classical_assignment_search().size() << "\n";
    out << "without the product constraint: " << classical_assignment_search({true, true, false}).size() << "\n";
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact Pauli-algebra checks of the two-particle singlet argument", "pauliepr"};
    app.require_subcommand(1);

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run every check and print the report");
    verify_cmd->add_option("--format", verify.format, "Report format")->check(CLI::IsMember({"json", "md"}));
    verify_cmd->add_option("--out", verify.out_path, "Write the report to this file instead of stdout");
    verify_cmd->add_flag("--corrupt-table", verify.corrupt_table, "Flip e1 e2 = i e3 (fault injection)")->group("");

    std::string expect_text;
    bool expect_projector = false;
    auto *expect_cmd = app.add_subcommand("expect", "Singlet mean and outcome probabilities");
    expect_cmd->footer(kExpressionHelp);
    expect_cmd->add_option("expr", expect_text, "Two-site expression")->required();
    expect_cmd->add_flag("--projector", expect_projector, "Bind psi to the projector -psi");

    bool diff_paper = false;
    auto *triples_cmd = app.add_subcommand("triples", "List every basic triple of two-site words");
    triples_cmd->add_flag("--diff-paper", diff_paper, "Compare against the 17 listed basic sets");

    auto *peres_cmd = app.add_subcommand("peres", "Search all 16 classical +-1 assignments");

    std::string eval_text;
    bool eval_projector = false;
    auto *eval_cmd = app.add_subcommand("eval", "Print the canonical element");
    eval_cmd->footer(kExpressionHelp);
    eval_cmd->add_option("expr", eval_text, "Expression")->required();
    eval_cmd->add_flag("--projector", eval_projector, "Bind psi to the projector -psi");

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitError;
    }

    try {
        if (verify_cmd->parsed()) {
            return command_verify(verify, out, err);
        }
        if (expect_cmd->parsed()) {
            return command_expect(expect_text, expect_projector, out, err);
        }
        if (triples_cmd->parsed()) {
            return command_triples(diff_paper, out);
        }
        if (peres_cmd->parsed()) {
            return command_peres(out);
        }
        if (eval_cmd->parsed()) {
            return command_eval(eval_text, eval_projector, out);
        }
    } catch (const ParseError &e) {
        err << e.what() << "\n";
        return kExitError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace pauliepr::cli
