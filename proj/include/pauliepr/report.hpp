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

#ifndef PAULIEPR_REPORT_HPP
#define PAULIEPR_REPORT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pauliepr {

inline constexpr const char *kToolVersion = "1.0.0";

/// strict: lhs == rhs as elements. mod-psi: lhs psi == rhs psi. The other kinds are not
/// element identities; their residual is a count of counterexamples.
enum class CheckKind { kStrict, kModPsi, kSearch, kEnumeration, kDerivation };
enum class CheckStatus { kVerified, kRefuted };

std::string to_string(CheckKind kind);
std::string to_string(CheckStatus status);
/// Throws std::invalid_argument on unknown text.
CheckKind check_kind_from_string(std::string_view text);
CheckStatus check_status_from_string(std::string_view text);

/// The serialized face of one check.
struct CheckRecord {
    std::string name;
    /// The claim being checked, as text.
    std::string paper_ref;
    CheckKind kind = CheckKind::kStrict;
    CheckStatus expected = CheckStatus::kVerified;
    CheckStatus status = CheckStatus::kVerified;
    std::size_t residual_terms = 0;
    bool oracle_ok = true;

    bool passed() const { return status == expected && oracle_ok; }
    bool operator==(const CheckRecord &) const = default;
};

struct TripleSummary {
    std::size_t count = 0;
    /// Triples found by enumeration that the reference listing lacks.
    std::vector<std::string> missing_from_paper;
    /// Listed triples that enumeration did not find.
    std::vector<std::string> extra_in_paper;
    bool operator==(const TripleSummary &) const = default;
};

struct VerificationReport {
    std::string version = kToolVersion;
    std::vector<CheckRecord> checks;
    TripleSummary triples;
    bool overall = false;

    std::vector<std::string> failing_checks() const;
    bool operator==(const VerificationReport &) const = default;
};

/// Canonical JSON: fixed key order, checks in stored order, 2-space indent, trailing newline.
std::string to_json(const VerificationReport &report);
/// Throws std::invalid_argument on malformed input.
VerificationReport report_from_json(std::string_view text);
std::string to_markdown(const VerificationReport &report);

}  // namespace pauliepr

#endif
