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

#include "pauliepr/report.hpp"

#include <sstream>

#include "json.hpp"

namespace pauliepr {

using Json = nlohmann::ordered_json;

std::string to_string(CheckKind kind) {
    switch (kind) {
        case CheckKind::kStrict:
            return "strict";
        case CheckKind::kModPsi:
            return "mod-psi";
        case CheckKind::kSearch:
            return "search";
        case CheckKind::kEnumeration:
            return "enumeration";
        case CheckKind::kDerivation:
            return "derivation";
    }
    return "unknown";
}

std::string to_string(CheckStatus status) {
    return status == CheckStatus::kVerified ? "verified" : "refuted";
}

CheckKind check_kind_from_string(std::string_view text) {
    for (auto k : {CheckKind::kStrict, CheckKind::kModPsi, CheckKind::kSearch, CheckKind::kEnumeration,
                   CheckKind::kDerivation}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw std::invalid_argument("unknown check kind '" + std::string(text) + "'");
}

CheckStatus check_status_from_string(std::string_view text) {
    if (text == "verified") {
        return CheckStatus::kVerified;
    }
    if (text == "refuted") {
        return CheckStatus::kRefuted;
    }
    throw std::invalid_argument("unknown check status '" + std::string(text) + "'");
}

std::vector<std::string> VerificationReport::failing_checks() const {
    std::vector<std::string> out;
    for (const auto &c : checks) {
        if (!c.passed()) {
            out.push_back(c.name);
        }
    }
    return out;
}

std::string to_json(const VerificationReport &report) {
    Json checks = Json::array();
    for (const auto &c : report.checks) {
        checks.push_back(Json{
            {"name", c.name},
            {"paper_ref", c.paper_ref},
            {"kind", to_string(c.kind)},
            {"expected", to_string(c.expected)},
            {"status", to_string(c.status)},
            {"residual_terms", c.residual_terms},
            {"oracle_ok", c.oracle_ok},
        });
    }
    Json doc{
        {"version", report.version},
        {"checks", std::move(checks)},
        {"triples",
         Json{
             {"count", report.triples.count},
             {"missing_from_paper", report.triples.missing_from_paper},
             {"extra_in_paper", report.triples.extra_in_paper},
         }},
        {"overall", report.overall ? "pass" : "fail"},
    };
    return doc.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
    try {
        Json doc = Json::parse(text);
        VerificationReport out;
        out.version = doc.at("version").get<std::string>();
        for (const auto &c : doc.at("checks")) {
            CheckRecord r;
            r.name = c.at("name").get<std::string>();
            r.paper_ref = c.at("paper_ref").get<std::string>();
            r.kind = check_kind_from_string(c.at("kind").get<std::string>());
            r.expected = check_status_from_string(c.at("expected").get<std::string>());
            r.status = check_status_from_string(c.at("status").get<std::string>());
            r.residual_terms = c.at("residual_terms").get<std::size_t>();
            r.oracle_ok = c.at("oracle_ok").get<bool>();
            out.checks.push_back(std::move(r));
        }
        const auto &t = doc.at("triples");
        out.triples.count = t.at("count").get<std::size_t>();
        out.triples.missing_from_paper = t.at("missing_from_paper").get<std::vector<std::string>>();
        out.triples.extra_in_paper = t.at("extra_in_paper").get<std::vector<std::string>>();
        std::string overall = doc.at("overall").get<std::string>();
        if (overall != "pass" && overall != "fail") {
            throw std::invalid_argument("overall must be \"pass\" or \"fail\"");
        }
        out.overall = overall == "pass";
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

namespace {

std::string escape_cell(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '|') {
            out += "\\|";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::string to_markdown(const VerificationReport &report) {
    std::ostringstream md;
    md << "# Verification report\n\n";
    md << "version: " << report.version << "\n\n";
    md << "| check | claim | kind | expected | status | residual | oracle | result |\n";
    md << "|---|---|---|---|---|---|---|---|\n";
    for (const auto &c : report.checks) {
        md << "| " << c.name << " | `" << escape_cell(c.paper_ref) << "` | " << to_string(c.kind) << " | "
           << to_string(c.expected) << " | " << to_string(c.status) << " | " << c.residual_terms << " | "
           << (c.oracle_ok ? "ok" : "MISMATCH") << " | " << (c.passed() ? "pass" : "FAIL") << " |\n";
    }
    md << "\n## Basic triples\n\n";
    md << "found: " << report.triples.count << "\n\n";
    md << "found but not listed (" << report.triples.missing_from_paper.size() << "):\n";
    for (const auto &t : report.triples.missing_from_paper) {
        md << "- " << t << "\n";
    }
    md << "\nlisted but not found (" << report.triples.extra_in_paper.size() << "):\n";
    for (const auto &t : report.triples.extra_in_paper) {
        md << "- " << t << "\n";
    }
    md << "\n**overall: " << (report.overall ? "pass" : "fail") << "**\n";
    return md.str();
}

}  // namespace pauliepr
