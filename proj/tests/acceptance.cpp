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


// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance PATH_TO_PAULIEPR_BINARY

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "pauliepr/epr_suite.hpp"
#include "pauliepr/matrix_oracle.hpp"
#include "pauliepr/singlet.hpp"
#include "pauliepr/triples.hpp"

namespace pauliepr {
namespace {

using sym::E;

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

bool status_is(const std::vector<IdentityCheck> &checks, const std::string &name, CheckStatus status) {
    for (const auto &c : checks) {
        if (c.name == name) {
            return c.status == status && c.oracle_ok;
        }
    }
    return false;
}

void require_all(Outcome &o, const std::vector<IdentityCheck> &checks) {
    for (const auto &c : checks) {
        o.require(c.passed(), c.name + " (" + c.claim + ")");
    }
}

Outcome generator_laws() {
    Outcome o;
    for (int a = 1; a <= 3; a++) {
        for (int b = 1; b <= 3; b++) {
            LetterProduct p = compose_letters(letter_from_index(a), letter_from_index(b));
            MatrixRep sym = Scalar::from_phase(p.phase).to_complex() * MatrixRep(base_matrix(p.letter));
            MatrixRep lit = base_matrix(letter_from_index(a)) * base_matrix(letter_from_index(b));
            o.require(approx_equal(sym, lit), "e" + std::to_string(a) + "*e" + std::to_string(b));
        }
    }
    int products = 0;
    for (const auto &a : all_words(2)) {
        for (const auto &b : all_words(2)) {
            WordProduct p = mul_words(a, b);
            MatrixRep sym = Scalar::from_phase(p.phase).to_complex() * word_matrix(p.word);
            o.require(approx_equal(sym, word_matrix(a) * word_matrix(b)), a.name() + "*" + b.name());
            products++;
        }
    }
    o.require(products == 256, "expected 256 two-site products");
    return o;
}

Outcome singlet_construction(const SingletState &s) {
    Outcome o;
    require_all(o, verify_singlet_invariants(s));
    auto inv = verify_singlet_invariants(s);
    for (int k = 1; k <= 3; k++) {
        o.require(status_is(inv, "singlet.annihilated_" + std::to_string(k), CheckStatus::kVerified), "annihilated");
        o.require(status_is(inv, "singlet.eigenvalue_" + std::to_string(k), CheckStatus::kVerified), "eigenvalue");
    }
    o.require(status_is(inv, "singlet.order_213", CheckStatus::kVerified), "order 213");
    o.require(status_is(inv, "singlet.order_312", CheckStatus::kVerified), "order 312");
    o.require(s.mul(s.psi(), s.psi()) == -s.psi(), "psi^2 = -psi");

    MatrixRep projector = -oracle_singlet_psi();
    o.require(numerical_rank(projector) == 1, "-psi is rank 1");
    o.require(std::abs(projector.trace() - Complex(1)) <= kOracleTolerance, "tr(-psi) = 1");
    o.require(approx_equal(projector, element_matrix(s.projector())), "symbolic projector matches oracle");
    return o;
}

Outcome peres_constraints(const SingletState &s) {
    Outcome o;
    auto c = verify_singlet_constraints(s);
    require_all(o, c);
    for (int k = 1; k <= 3; k++) {
        std::string base = "constraint.opposite_" + std::to_string(k);
        o.require(status_is(c, base, CheckStatus::kVerified), base);
        o.require(status_is(c, base + ".strict", CheckStatus::kRefuted), base + ".strict");
    }
    IdentityCheck product = verify_product_constraint(s);
    IdentityCheck strict = refute_product_constraint_strict(s);
    o.require(product.passed() && product.status == CheckStatus::kVerified, product.name);
    o.require(strict.passed() && strict.status == CheckStatus::kRefuted && !strict.residual.is_zero(), strict.name);
    return o;
}

Outcome contradiction() {
    Outcome o;
    o.require(all_classical_assignments().size() == 16, "16 assignments");
    o.require(classical_assignment_search().empty(), "no assignment satisfies every constraint");
    o.require(classical_assignment_search({true, true, false}).size() == 4, "4 assignments without the product");
    require_all(o, classical_search_checks());
    return o;
}

Outcome identity_battery(const SingletState &s) {
    Outcome o;
    auto derived = verify_derived_identities(s);
    require_all(o, derived);
    o.require(status_is(derived, "derived.e12_e21", CheckStatus::kVerified), "E12 psi = -E21 psi");
    require_all(o, derivation_checks(s));

    FallacyReport trace = fallacy_trace(s);
    bool strict_refuted = false;
    bool sector_refuted = false;
    for (const auto &step : trace.steps) {
        o.require(step.check.passed(), step.check.name);
        if (step.role == StepRole::kConclusion && step.check.status == CheckStatus::kRefuted) {
            (step.check.kind == CheckKind::kStrict ? strict_refuted : sector_refuted) = true;
        }
    }
    o.require(strict_refuted, "E12 = E21 refuted strictly");
    o.require(sector_refuted, "E12 = E21 refuted mod psi");
    auto first = trace.first_invalid_step();
    o.require(first.has_value() && trace.steps[*first].role == StepRole::kStrictSubstitution &&
                  trace.steps[*first].check.status == CheckStatus::kRefuted,
              "invalid substitution flagged");
    return o;
}

Outcome resolution(const SingletState &s) {
    Outcome o;
    auto checks = verify_resolution(s);
    require_all(o, checks);
    int strict = 0, sector = 0;
    for (const auto &c : checks) {
        if (c.kind == CheckKind::kStrict) {
            strict++;
            o.require(c.status == CheckStatus::kVerified && c.oracle_ok, c.name);
        } else if (c.kind == CheckKind::kModPsi) {
            sector++;
            o.require(c.status == CheckStatus::kVerified, c.name);
        }
    }
    o.require(strict == 10 && sector == 3, "10 strict and 3 mod-psi resolution checks");
    return o;
}

// Independent count straight from matrices: pairwise anticommuting, product a multiple of +-i.
std::size_t brute_force_triple_count() {
    const auto words = nontrivial_words(2);
    std::vector<MatrixRep> m;
    for (const auto &w : words) {
        m.push_back(word_matrix(w));
    }
    auto anticommute = [](const MatrixRep &a, const MatrixRep &b) { return approx_zero(a * b + b * a); };
    const MatrixRep id = identity_matrix(2);
    const Complex I(0, 1);
    std::size_t count = 0;
    for (std::size_t a = 0; a < m.size(); a++) {
        for (std::size_t b = a + 1; b < m.size(); b++) {
            for (std::size_t c = b + 1; c < m.size(); c++) {
                if (!anticommute(m[a], m[b]) || !anticommute(m[b], m[c]) || !anticommute(m[a], m[c])) {
                    continue;
                }
                MatrixRep p = m[a] * m[b] * m[c];
                if (approx_equal(p, I * id) || approx_equal(p, -I * id)) {
                    count++;
                }
            }
        }
    }
    return count;
}

Outcome enumeration() {
    Outcome o;
    auto found = enumerate_basic_triples();
    std::size_t oracle_count = brute_force_triple_count();
    o.require(oracle_count == 20, "brute-force count is " + std::to_string(oracle_count));
    o.require(found.size() == oracle_count, "enumerated " + std::to_string(found.size()));
    TripleDiff diff = diff_triples(as_word_triples(found), reference_basic_sets());
    o.require(diff.listed_not_found.empty(), "every listed set found");
    IncidenceMap incidence = build_incidence(found);
    for (const auto &w : nontrivial_words(2)) {
        o.require(incidence[w].size() == 4, w.name() + " lies in 4 triples");
    }
    const PauliWord e12 = PauliWord::from_indices({1, 2});
    o.require(listed_positions(e12, reference_basic_sets()) == std::vector<int>{1, 7, 13, 16}, "E12 positions");
    require_all(o, triple_checks(CompositionTable::standard()));
    o.require(enumerate_basic_triples() == found, "deterministic enumeration");
    return o;
}

Outcome expectations(const SingletState &s) {
    Outcome o;
    int zeros = 0;
    for (const auto &w : nontrivial_words(2)) {
        Scalar mean = expectation(Element::word(w), s);
        if (w[0] == w[1]) {
            o.require(mean == Scalar(-1), "<" + w.name() + "> = -1");
        } else {
            o.require(mean == Scalar(0), "<" + w.name() + "> = 0");
            zeros++;
        }
    }
    o.require(zeros == 12, "12 words with mean 0");

    std::vector<Element> involutions;
    for (const auto &w : all_words(2)) {
        involutions.push_back(Element::word(w));
        involutions.push_back(-Element::word(w));
    }
    // Unit combinations of anticommuting words are involutions too.
    involutions.push_back(Scalar::fraction(3, 5) * E(1, 2) + Scalar::fraction(4, 5) * E(1, 3));
    involutions.push_back(Scalar::fraction(5, 13) * E(0, 1) - Scalar::fraction(12, 13) * E(0, 3));
    involutions.push_back(Scalar::fraction(3, 5) * E(1, 1) + Scalar::fraction(4, 5) * E(2, 1));
    for (const auto &a : involutions) {
        OutcomeProbabilities p = outcome_probabilities(a, s);
        o.require(p.plus + p.minus == Scalar(1), "probabilities of " + a.str() + " sum to 1");
        Scalar mean = expectation(a, s);
        o.require(p.plus - p.minus == mean, "probabilities of " + a.str() + " reproduce the mean");
    }
    return o;
}

struct Process {
    int code = -1;
    std::string output;
};

Process run_process(const std::string &command) {
    Process p;
    FILE *pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return p;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        p.output.append(buf.data(), n);
    }
    int status = pclose(pipe);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

Outcome cli_behaviour(const std::string &binary) {
    Outcome o;
    if (binary.empty()) {
        o.require(false, "no CLI path given");
        return o;
    }
    const std::string quoted = "'" + binary + "'";
    Process first = run_process(quoted + " verify --format json 2>/dev/null");
    Process second = run_process(quoted + " verify --format json 2>/dev/null");
    o.require(first.code == 0, "verify exit code " + std::to_string(first.code));
    o.require(!first.output.empty() && first.output == second.output, "byte-identical verify output");

    Process corrupt = run_process(quoted + " verify --format json --corrupt-table 2>/dev/null");
    o.require(corrupt.code == 1, "fault-injected verify exit code " + std::to_string(corrupt.code));

    for (const char *bad : {"'E01 +'", "'(E12'", "'E01 / i'"}) {
        Process p = run_process(quoted + " eval " + bad + " 2>&1");
        o.require(p.code != 0, std::string("nonzero exit for ") + bad);
        o.require(p.output.rfind("SyntaxError at offset ", 0) == 0, std::string("SyntaxError for ") + bad);
    }
    return o;
}

}  // namespace
}  // namespace pauliepr

int main(int argc, char **argv) {
    using namespace pauliepr;
    const std::string binary = argc > 1 ? argv[1] : "";
    const SingletState s = build_singlet();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"generator laws and all two-site products agree with the matrix oracle", generator_laws},
        {"singlet construction, eigen-relations, psi^2 = -psi, rank-1 projector", [&] { return singlet_construction(s); }},
        {"opposite-value and product constraints hold mod psi, fail strictly", [&] { return peres_constraints(s); }},
        {"no classical +-1 assignment; 4 without the product constraint", contradiction},
        {"singlet-sector identity battery and the fallacy trace", [&] { return identity_battery(s); }},
        {"permutation identities strict, sector consequences mod psi", [&] { return resolution(s); }},
        {"basic triple enumeration, listed sets, incidence", enumeration},
        {"singlet expectations and Born probabilities", [&] { return expectations(s); }},
        {"CLI determinism, fault injection and parse errors", [&] { return cli_behaviour(binary); }},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); k++) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first << "\n";
        for (const auto &note : o.notes) {
            std::cout << "        " << note << "\n";
        }
        failures += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
