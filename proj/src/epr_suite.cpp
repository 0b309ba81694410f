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

#include "pauliepr/epr_suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "pauliepr/matrix_oracle.hpp"

namespace pauliepr {

namespace {

const MatrixRep &oracle_psi() {
    static const MatrixRep psi = oracle_singlet_psi();
    return psi;
}

struct IdentitySpec {
    const char *name;
    const char *lhs;
    const char *rhs;
    CheckStatus expected = CheckStatus::kVerified;
};

// Sector relations among single and combined elements. The verified ones are also fed to the
// derivation search.
const std::vector<IdentitySpec> &derived_specs() {
    static const std::vector<IdentitySpec> specs{
        {"derived.e01_e10", "E01", "-E10"},
        {"derived.e01_e23", "E01", "-i*E23"},
        {"derived.e10_e23", "-E10", "-i*E23"},
        {"derived.e02_e20", "E02", "-E20"},
        {"derived.e02_e13", "E02", "i*E13"},
        {"derived.e03_e30", "E03", "-E30"},
        {"derived.e03_e21", "E03", "i*E21"},
        {"derived.e12_e21", "E12", "-E21"},
        {"derived.e23_e32", "E23", "-E32"},
        {"derived.e13_e31", "E13", "-E31"},
        {"derived.e01_e10_same_sign", "E01", "E10", CheckStatus::kRefuted},
        {"derived.e12_e21_same_sign", "E12", "E21", CheckStatus::kRefuted},
    };
    return specs;
}

std::string claim_text(std::string_view lhs, std::string_view rhs, CheckKind kind) {
    std::string out = std::string(lhs) + " = " + std::string(rhs);
    if (kind == CheckKind::kModPsi) {
        out += " (mod psi)";
    }
    return out;
}

IdentityCheck count_check(std::string name, std::string claim, CheckKind kind, CheckStatus expected,
                          std::size_t counterexamples, bool oracle_ok) {
    IdentityCheck c;
    c.name = std::move(name);
    c.claim = std::move(claim);
    c.kind = kind;
    c.expected = expected;
    c.status = counterexamples == 0 ? CheckStatus::kVerified : CheckStatus::kRefuted;
    c.residual_terms = counterexamples;
    c.oracle_ok = oracle_ok;
    return c;
}

// Basic triples found purely with matrices: anticommutation as AB + BA = 0 and the product of
// the three equal to +-i times the identity.
std::vector<WordTriple> oracle_basic_triples() {
    const auto words = nontrivial_words(2);
    std::vector<MatrixRep> m;
    for (const auto &w : words) {
        m.push_back(word_matrix(w));
    }
    const MatrixRep one = identity_matrix(2);
    const Complex i(0, 1);
    auto anti = [&](std::size_t a, std::size_t b) { return approx_zero(m[a] * m[b] + m[b] * m[a]); };
    std::vector<WordTriple> out;
    for (std::size_t a = 0; a < words.size(); a++) {
        for (std::size_t b = a + 1; b < words.size(); b++) {
            if (!anti(a, b)) {
                continue;
            }
            for (std::size_t c = b + 1; c < words.size(); c++) {
                if (!anti(a, c) || !anti(b, c)) {
                    continue;
                }
                MatrixRep p = m[a] * m[b] * m[c];
                if (approx_equal(p, i * one) || approx_equal(p, -i * one)) {
                    out.push_back(WordTriple{words[a], words[b], words[c]});
                }
            }
        }
    }
    return out;
}

std::size_t anticommuting_partners(const PauliWord &w) {
    std::size_t n = 0;
    for (const auto &v : nontrivial_words(w.size())) {
        if (commute_sign(w, v) == -1) {
            n++;
        }
    }
    return n;
}

// Words whose number of containing triples differs from (anticommuting partners) / 2.
std::size_t irregular_incidence(std::span<const WordTriple> triples) {
    std::map<PauliWord, std::size_t> count;
    for (const auto &t : triples) {
        for (const auto &w : t) {
            count[w]++;
        }
    }
    std::size_t bad = 0;
    for (const auto &w : nontrivial_words(2)) {
        if (count[w] * 2 != anticommuting_partners(w)) {
            bad++;
        }
    }
    return bad;
}

std::size_t e12_membership_residual(std::span<const WordTriple> triples) {
    const PauliWord e12 = PauliWord::from_indices({1, 2});
    const auto &listed = reference_basic_sets();
    std::size_t containing = 0;
    std::size_t unlisted = 0;
    for (const auto &t : triples) {
        if (std::find(t.begin(), t.end(), e12) == t.end()) {
            continue;
        }
        containing++;
        if (std::find(listed.begin(), listed.end(), t) == listed.end()) {
            unlisted++;
        }
    }
    std::size_t off = containing > 4 ? containing - 4 : 4 - containing;
    return off + unlisted;
}

std::string role_slug(StepRole role) {
    switch (role) {
        case StepRole::kPremise:
            return "premise";
        case StepRole::kSectorRelation:
            return "sector_relation";
        case StepRole::kSectorSubstitution:
            return "sector_substitution";
        case StepRole::kStrictSubstitution:
            return "strict_substitution";
        case StepRole::kDerived:
            return "derived";
        case StepRole::kConclusion:
            return "conclusion";
        case StepRole::kClash:
            return "clash";
    }
    return "step";
}

}  // namespace

CheckRecord IdentityCheck::record() const {
    return CheckRecord{name, claim, kind, expected, status, residual_terms, oracle_ok};
}

IdentityCheck check_identity(std::string name, std::string_view lhs_text, std::string_view rhs_text, CheckKind kind,
                             CheckStatus expected, const SingletState &s) {
    if (kind != CheckKind::kStrict && kind != CheckKind::kModPsi) {
        throw std::invalid_argument("check_identity handles strict and mod-psi checks only");
    }
    ElementExpr lhs = parse_expr(lhs_text);
    ElementExpr rhs = parse_expr(rhs_text);

    SymbolicBindings sb;
    sb.table = &s.table();
    sb.psi = s.psi();
    Element l = evaluate(lhs, sb);
    Element r = evaluate(rhs, sb);
    Element residual = kind == CheckKind::kModPsi ? residual_mod_psi(l, r, s) : l - r;

    MatrixBindings mb;
    mb.psi = oracle_psi();
    MatrixRep ml = evaluate_matrix(lhs, mb);
    MatrixRep mr = evaluate_matrix(rhs, mb);
    bool oracle_holds = kind == CheckKind::kModPsi ? approx_zero((ml - mr) * oracle_psi()) : approx_equal(ml, mr);

    IdentityCheck c;
    c.name = std::move(name);
    c.claim = claim_text(lhs_text, rhs_text, kind);
    c.kind = kind;
    c.expected = expected;
    c.status = residual.is_zero() ? CheckStatus::kVerified : CheckStatus::kRefuted;
    c.residual_terms = residual.term_count();
    c.residual = std::move(residual);
    c.oracle_ok = oracle_holds == (c.status == CheckStatus::kVerified);
    return c;
}

std::vector<IdentityCheck> verify_singlet_invariants(const SingletState &s) {
    const auto V = CheckStatus::kVerified;
    const auto strict = CheckKind::kStrict;
    const std::string p1 = "(1/2*(E11 - I))";
    const std::string p2 = "(1/2*(E22 - I))";
    const std::string p3 = "(1/2*(E33 - I))";
    std::vector<IdentityCheck> out;
    out.push_back(check_identity("singlet.expansion", "psi", "1/4*(E11 + E22 + E33 - I)", strict, V, s));
    out.push_back(check_identity("singlet.order_213", "psi", p2 + "*" + p1 + "*" + p3, strict, V, s));
    out.push_back(check_identity("singlet.order_312", "psi", p3 + "*" + p1 + "*" + p2, strict, V, s));
    out.push_back(check_identity("singlet.psi_squared", "psi*psi", "-psi", strict, V, s));
    out.push_back(check_identity("singlet.psi_idempotent", "psi*psi", "psi", strict, CheckStatus::kRefuted, s));
    out.push_back(check_identity("singlet.projector_idempotent", "(-psi)*(-psi)", "-psi", strict, V, s));
    for (int k = 1; k <= 3; k++) {
        std::string ekk = "E" + std::to_string(k) + std::to_string(k);
        std::string kk = std::to_string(k);
        out.push_back(check_identity("singlet.annihilated_" + kk, "(" + ekk + " + I)*psi", "0", strict, V, s));
        out.push_back(check_identity("singlet.eigenvalue_" + kk, ekk + "*psi", "-psi", strict, V, s));
    }
    return out;
}

std::vector<IdentityCheck> verify_singlet_constraints(const SingletState &s) {
    std::vector<IdentityCheck> out;
    for (int k = 1; k <= 3; k++) {
        std::string kk = std::to_string(k);
        std::string sum = "E0" + kk + " + E" + kk + "0";
        out.push_back(
            check_identity("constraint.opposite_" + kk, sum, "0", CheckKind::kModPsi, CheckStatus::kVerified, s));
        out.push_back(check_identity("constraint.opposite_" + kk + ".strict", sum, "0", CheckKind::kStrict,
                                     CheckStatus::kRefuted, s));
    }
    return out;
}

IdentityCheck verify_product_constraint(const SingletState &s) {
    return check_identity("constraint.product", "E01*E20 + E10*E02", "0", CheckKind::kModPsi, CheckStatus::kVerified,
                          s);
}

IdentityCheck refute_product_constraint_strict(const SingletState &s) {
    return check_identity("constraint.product.strict", "E01*E20 + E10*E02", "0", CheckKind::kStrict,
                          CheckStatus::kRefuted, s);
}

bool satisfies(const ClassicalAssignment &m, const ClassicalConstraints &c) {
    if (c.opposite_x && m.e01 != -m.e10) {
        return false;
    }
    if (c.opposite_y && m.e02 != -m.e20) {
        return false;
    }
    if (c.product && m.e01 * m.e20 != -(m.e10 * m.e02)) {
        return false;
    }
    return true;
}

std::vector<ClassicalAssignment> all_classical_assignments() {
    std::vector<ClassicalAssignment> out;
    for (int a : {1, -1}) {
        for (int b : {1, -1}) {
            for (int c : {1, -1}) {
                for (int d : {1, -1}) {
                    out.push_back({a, b, c, d});
                }
            }
        }
    }
    return out;
}

std::vector<ClassicalAssignment> classical_assignment_search(const ClassicalConstraints &c) {
    std::vector<ClassicalAssignment> out;
    for (const auto &m : all_classical_assignments()) {
        if (satisfies(m, c)) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<IdentityCheck> classical_search_checks() {
    struct Case {
        const char *name;
        const char *claim;
        ClassicalConstraints constraints;
        CheckStatus expected;
    };
    const std::vector<Case> cases{
        {"peres.no_classical_assignment",
         "no +-1 values satisfy m01 = -m10, m02 = -m20, m01*m20 = -m10*m02",
         {true, true, true},
         CheckStatus::kVerified},
        {"peres.drop_opposite_x", "no +-1 values satisfy m02 = -m20, m01*m20 = -m10*m02", {false, true, true},
         CheckStatus::kRefuted},
        {"peres.drop_opposite_y", "no +-1 values satisfy m01 = -m10, m01*m20 = -m10*m02", {true, false, true},
         CheckStatus::kRefuted},
        {"peres.drop_product", "no +-1 values satisfy m01 = -m10, m02 = -m20", {true, true, false},
         CheckStatus::kRefuted},
    };
    std::vector<IdentityCheck> out;
    for (const auto &c : cases) {
        out.push_back(count_check(c.name, c.claim, CheckKind::kSearch, c.expected,
                                  classical_assignment_search(c.constraints).size(), true));
    }
    return out;
}

std::vector<IdentityCheck> verify_derived_identities(const SingletState &s) {
    std::vector<IdentityCheck> out;
    for (const auto &spec : derived_specs()) {
        out.push_back(check_identity(spec.name, spec.lhs, spec.rhs, CheckKind::kModPsi, spec.expected, s));
    }
    return out;
}

std::vector<IdentityCheck> generator_checks(const SingletState &s) {
    std::vector<IdentityCheck> out;
    for (const auto &x : nontrivial_words(2)) {
        for (int k = 1; k <= 3; k++) {
            std::string kk = std::to_string(k);
            out.push_back(check_identity("generator." + x.name() + ".k" + kk,
                                         x.name() + "*(E" + kk + kk + " + I)*psi", "0", CheckKind::kStrict,
                                         CheckStatus::kVerified, s));
        }
    }
    return out;
}

std::optional<Derivation> derive_from_generators(const Element &lhs, const Element &rhs, const SingletState &s) {
    Element target = lhs - rhs;
    if (target.is_zero()) {
        return std::nullopt;
    }
    Element sector_residual = residual_mod_psi(lhs, rhs, s);
    for (const auto &x : all_words(2)) {
        for (int k = 1; k <= 3; k++) {
            Element generator = s.mul(Element::word(x), sym::E(k, k) + sym::one());
            Scalar factor;
            if (!proportional(target, generator, &factor)) {
                continue;
            }
            // The generator's own residual, scaled back, must be the identity's residual.
            Element generator_residual = s.mul(generator, s.psi());
            if (scale(Scalar(1) / factor, generator_residual) != sector_residual) {
                continue;
            }
            return Derivation{x, k, factor};
        }
    }
    return std::nullopt;
}

std::vector<IdentityCheck> derivation_checks(const SingletState &s) {
    SymbolicBindings sb;
    sb.table = &s.table();
    sb.psi = s.psi();
    std::vector<IdentityCheck> out;
    for (const auto &spec : derived_specs()) {
        if (spec.expected != CheckStatus::kVerified) {
            continue;
        }
        Element lhs = evaluate(parse_expr(spec.lhs), sb);
        Element rhs = evaluate(parse_expr(spec.rhs), sb);
        auto d = derive_from_generators(lhs, rhs, s);

        std::string name = "derivation." + std::string(spec.name).substr(std::string("derived.").size());
        std::string claim = claim_text(spec.lhs, spec.rhs, CheckKind::kModPsi) + " follows from one X*(Ekk + I)*psi = 0";
        bool oracle_ok = true;
        if (d) {
            std::string kk = std::to_string(d->k);
            claim = claim_text(spec.lhs, spec.rhs, CheckKind::kModPsi) + " follows from " + d->multiplier.name() +
                    "*(E" + kk + kk + " + I)*psi = 0";
            MatrixRep generator = word_matrix(d->multiplier) *
                                  (word_matrix(PauliWord::from_indices({d->k, d->k})) + identity_matrix(2));
            oracle_ok = approx_equal(generator, d->factor.to_complex() * (element_matrix(lhs) - element_matrix(rhs)));
        }
        out.push_back(count_check(std::move(name), std::move(claim), CheckKind::kDerivation, CheckStatus::kVerified,
                                  d ? 0 : 1, oracle_ok));
    }
    return out;
}

std::optional<std::size_t> FallacyReport::first_invalid_step() const {
    for (std::size_t k = 0; k < steps.size(); k++) {
        if (!steps[k].legitimate) {
            return k;
        }
    }
    return std::nullopt;
}

FallacyReport fallacy_trace(const SingletState &s) {
    struct StepSpec {
        const char *description;
        StepRole role;
        bool legitimate;
        const char *lhs;
        const char *rhs;
        CheckKind kind;
        CheckStatus expected;
    };
    const auto strict = CheckKind::kStrict;
    const auto sector = CheckKind::kModPsi;
    const auto V = CheckStatus::kVerified;
    const auto R = CheckStatus::kRefuted;
    const std::vector<StepSpec> specs{
        {"E12 as a product of single-particle elements", StepRole::kPremise, true, "E12", "E10*E02", strict, V},
        {"E21 as a product of single-particle elements", StepRole::kPremise, true, "E21", "E20*E01", strict, V},
        {"singlet anticorrelation along e1", StepRole::kSectorRelation, true, "E01", "-E10", sector, V},
        {"singlet anticorrelation along e2", StepRole::kSectorRelation, true, "E02", "-E20", sector, V},
        {"E02 -> -E20 where E02 stands directly before psi", StepRole::kSectorSubstitution, true, "E10*E02",
         "-E10*E20", sector, V},
        {"E10 -> -E01 used as a strict equality", StepRole::kStrictSubstitution, false, "E10", "-E01", strict, R},
        {"E02 -> -E20 used as a strict equality", StepRole::kStrictSubstitution, false, "E02", "-E20", strict, R},
        {"both substitutions applied inside E10*E02", StepRole::kDerived, true, "E10*E02", "E01*E20", strict, R},
        {"E01*E20 is E21", StepRole::kDerived, true, "E01*E20", "E21", strict, V},
        {"both substitutions applied inside E20*E01", StepRole::kDerived, true, "E20*E01", "E02*E10", strict, R},
        {"conclusion E12 = E21 in the full algebra", StepRole::kConclusion, true, "E12", "E21", strict, R},
        {"conclusion E12 = E21 on the singlet sector", StepRole::kConclusion, true, "E12", "E21", sector, R},
        {"what the singlet sector actually gives", StepRole::kClash, true, "E12", "-E21", sector, V},
    };
    FallacyReport report;
    for (std::size_t k = 0; k < specs.size(); k++) {
        const auto &sp = specs[k];
        std::string index = (k + 1 < 10 ? "0" : "") + std::to_string(k + 1);
        FallacyStep step;
        step.description = sp.description;
        step.role = sp.role;
        step.legitimate = sp.legitimate;
        step.check = check_identity("fallacy." + index + "_" + role_slug(sp.role), sp.lhs, sp.rhs, sp.kind, sp.expected, s);
        report.steps.push_back(std::move(step));
    }
    return report;
}

std::vector<IdentityCheck> verify_resolution(const SingletState &s) {
    const auto strict = CheckKind::kStrict;
    const auto sector = CheckKind::kModPsi;
    const auto V = CheckStatus::kVerified;
    // "x/i" is entered as "-i*x".
    std::vector<IdentityCheck> out;
    out.push_back(check_identity("resolution.e12_permuted", "E12", "-i*E13*E01", strict, V, s));
    out.push_back(check_identity("resolution.e21_permuted", "E21", "-i*E22*E03", strict, V, s));
    out.push_back(check_identity("resolution.e12_three_factors", "E12", "-i*E10*E03*E01", strict, V, s));
    out.push_back(check_identity("resolution.e12_grouped", "E12", "E10*(-i*E03*E01)", strict, V, s));
    out.push_back(check_identity("resolution.e21_three_factors", "E21", "-i*E20*E02*E03", strict, V, s));
    out.push_back(check_identity("resolution.e21_grouped", "E21", "E20*(-i*E02*E03)", strict, V, s));
    out.push_back(check_identity("resolution.e02_dependence", "E02", "-i*E03*E01", strict, V, s));
    out.push_back(check_identity("resolution.e01_dependence", "E01", "-i*E02*E03", strict, V, s));
    out.push_back(check_identity("resolution.e12_reordered", "E10*E03*E01", "E03*E10*E01", strict, V, s));
    out.push_back(check_identity("resolution.e21_reordered", "E20*E02*E03", "-E03*E02*E20", strict, V, s));
    out.push_back(check_identity("resolution.e12_sector", "E12", "-(-i*E03)", sector, V, s));
    out.push_back(check_identity("resolution.e21_sector", "E21", "-i*E03", sector, V, s));
    out.push_back(check_identity("resolution.e12_e21_sector", "E12", "-E21", sector, V, s));
    return out;
}

std::vector<IdentityCheck> triple_checks(const CompositionTable &table) {
    const auto found = enumerate_basic_triples(table);
    const auto found_words = as_word_triples(found);
    const auto oracle = oracle_basic_triples();
    const auto &listed = reference_basic_sets();
    const auto V = CheckStatus::kVerified;
    std::vector<IdentityCheck> out;

    std::size_t pairs = 0;
    const auto words = nontrivial_words(2);
    for (std::size_t a = 0; a < words.size(); a++) {
        for (std::size_t b = a + 1; b < words.size(); b++) {
            pairs += commute_sign(words[a], words[b]) == -1 ? 1 : 0;
        }
    }
    std::size_t expected_count = pairs / 3;
    std::size_t off = found.size() > expected_count ? found.size() - expected_count : expected_count - found.size();
    out.push_back(count_check("triples.count",
                              "basic triples = anticommuting pairs / 3 = " + std::to_string(expected_count),
                              CheckKind::kEnumeration, V, off, found_words == oracle));

    auto missing = diff_triples(found_words, listed).listed_not_found.size();
    auto oracle_missing = diff_triples(oracle, listed).listed_not_found.size();
    out.push_back(count_check("triples.listed_sets_found", "every listed basic set is a basic triple",
                              CheckKind::kEnumeration, V, missing, missing == oracle_missing));

    auto irregular = irregular_incidence(found_words);
    out.push_back(count_check("triples.uniform_incidence", "every nontrivial word lies in exactly 4 basic triples",
                              CheckKind::kEnumeration, V, irregular, irregular == irregular_incidence(oracle)));

    const PauliWord e12 = PauliWord::from_indices({1, 2});
    std::string positions;
    for (int p : listed_positions(e12, listed)) {
        positions += (positions.empty() ? "" : ", ") + std::to_string(p);
    }
    auto e12_residual = e12_membership_residual(found_words);
    out.push_back(count_check("triples.e12_memberships",
                              "E12 lies in exactly 4 basic triples, all listed (positions " + positions + ")",
                              CheckKind::kEnumeration, V, e12_residual, e12_residual == e12_membership_residual(oracle)));

    // A B = iC, B C = iA, C A = iB for the stored cyclic order, symbolically and with matrices.
    std::size_t symbolic_bad = 0;
    std::size_t oracle_bad = 0;
    const Complex i(0, 1);
    for (const auto &t : found) {
        const auto &c = t.cyclic();
        bool ok = true;
        bool mok = true;
        for (int r = 0; r < 3; r++) {
            const auto &a = c[r];
            const auto &b = c[(r + 1) % 3];
            const auto &d = c[(r + 2) % 3];
            ok = ok && mul(Element::word(a), Element::word(b), table) == Element::word(d, Scalar::i());
            mok = mok && approx_equal(word_matrix(a) * word_matrix(b), i * word_matrix(d));
        }
        symbolic_bad += ok ? 0 : 1;
        oracle_bad += mok ? 0 : 1;
    }
    out.push_back(count_check("triples.cyclic_relations", "each triple (A, B, C) has AB = iC, BC = iA, CA = iB",
                              CheckKind::kEnumeration, V, symbolic_bad, symbolic_bad == oracle_bad));
    return out;
}

TripleSummary summarize_triples(const CompositionTable &table) {
    const auto found = as_word_triples(enumerate_basic_triples(table));
    const auto diff = diff_triples(found, reference_basic_sets());
    TripleSummary out;
    out.count = found.size();
    for (const auto &t : diff.found_not_listed) {
        out.missing_from_paper.push_back(triple_name(t));
    }
    for (const auto &t : diff.listed_not_found) {
        out.extra_in_paper.push_back(triple_name(t));
    }
    return out;
}

VerificationReport run_full_report(const SingletState &s) {
    std::vector<IdentityCheck> all;
    auto append = [&](std::vector<IdentityCheck> more) {
        for (auto &c : more) {
            all.push_back(std::move(c));
        }
    };
    append(verify_singlet_invariants(s));
    append(verify_singlet_constraints(s));
    all.push_back(verify_product_constraint(s));
    all.push_back(refute_product_constraint_strict(s));
    append(classical_search_checks());
    append(verify_derived_identities(s));
    append(generator_checks(s));
    append(derivation_checks(s));
    for (auto &step : fallacy_trace(s).steps) {
        all.push_back(std::move(step.check));
    }
    append(verify_resolution(s));
    append(triple_checks(s.table()));

    VerificationReport report;
    for (const auto &c : all) {
        report.checks.push_back(c.record());
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckRecord &a, const CheckRecord &b) { return a.name < b.name; });
    report.triples = summarize_triples(s.table());
    report.overall = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckRecord &c) { return c.passed(); });
    return report;
}

CompositionTable corrupted_table() {
    return CompositionTable::standard().with_entry(SiteLetter::kE1, SiteLetter::kE2,
                                                   LetterProduct{Phase::minus_i(), SiteLetter::kE3});
}

}  // namespace pauliepr
