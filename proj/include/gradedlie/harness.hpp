/* Copyright 2026 The gradedlie Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Reproducible verification runs of the lemma statements inside truncated
// graded quotients, with negative controls and randomized campaigns.

#ifndef GRADEDLIE_HARNESS_HPP
#define GRADEDLIE_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedlie/free_lie.hpp"
#include "gradedlie/quotient.hpp"

namespace gradedlie {

enum class LemmaId {
    Lemma1,          // [[x1,x2],[x3,x4],x_b] = 0 for b outside D~(a1..a4)
    Lemma2,          // [x_c, x_a, ..., x_a] = 0 with x_a = [x_b, x_{a-b}], o(a) > 3
    Lemma3,          // select-second condition implies metabelian
    SpanForm,        // ideal of [L,L] generated by U lies in the constrained span
    ComponentBound,  // predicted component set and the centralizer inequality
    Proposition,     // L^(3) inside J
};

enum class Verdict { Verified, Counterexample, HypothesisViolated, BudgetExceeded };

const char* lemma_name(LemmaId id);
LemmaId parse_lemma(std::string_view name);
const char* verdict_name(Verdict v);

/* Parameters of one check. The meaning of `indices` and `extra` depends on the lemma:
 *   Lemma1          indices = (a1, a2, a3, a4), extra = values of b (empty: every admissible b)
 *   Lemma2          indices = (a, b, c), multiplicity = number of x_a factors
 *   Lemma3          indices = generator degrees
 *   SpanForm,
 *   ComponentBound  indices = (d1, d2, d3, d4), extra = degrees of additional generators
 *   Proposition     indices = generator degrees */
struct CheckConfig {
    LemmaId lemma = LemmaId::Lemma3;
    long long modulus = 7;
    std::vector<long long> indices;
    std::vector<long long> extra;
    int cutoff = 6;
    int multiplicity = 7;
    double budget_seconds = 0;  // 0: unlimited
    bool control = false;       // run the deliberately weakened twin
};

struct CheckReport {
    LemmaId lemma = LemmaId::Lemma3;
    bool control = false;
    Verdict verdict = Verdict::Verified;
    std::string summary;
    std::vector<std::string> notes;
    // Counterexample: an element that is nonzero in `presentation`'s quotient.
    std::optional<LieElement> witness;
    std::optional<GradedPresentation> presentation;
    std::string witness_degree;
    std::map<std::string, long long> statistics;
    double seconds = 0;
};

/* Validates the lemma's hypotheses with index arithmetic only; no algebra is
 * built. Returns the reason for a violation. Throws InputError for malformed
 * configs (even modulus, wrong number of indices, ...). */
std::optional<std::string> hypothesis_violation(const CheckConfig& cfg);

// Free dimensions a check will touch, estimated from witt_dimension alone.
struct CheckPlan {
    std::vector<long long> generator_degrees;  // for Lemma 1: with the first admissible b
    std::string target;                        // fine degree of the asserted element, if there is one
    uint64_t target_free_dimension = 0;
    std::size_t fine_degrees = 0;              // fine degrees up to the cutoff
    uint64_t free_dimension_up_to_cutoff = 0;  // saturates at UINT64_MAX
};
// Requires a config without hypothesis violations.
CheckPlan plan_check(const CheckConfig& cfg);

CheckReport check_lemma1(const CheckConfig& cfg);
CheckReport check_lemma2(const CheckConfig& cfg);
CheckReport check_lemma3(const CheckConfig& cfg);
CheckReport check_span_form(const CheckConfig& cfg);
CheckReport check_component_bound(const CheckConfig& cfg);
CheckReport check_proposition(const CheckConfig& cfg);
// Dispatches on cfg.lemma.
CheckReport run_check(const CheckConfig& cfg);

// A random config satisfying the lemma's hypotheses, moduli odd in [5, max_modulus].
CheckConfig random_config(LemmaId lemma, uint64_t seed, long long max_modulus);

struct CampaignSummary {
    LemmaId lemma = LemmaId::Lemma3;
    int runs = 0;
    std::map<Verdict, int> verdicts;
    std::vector<CheckReport> failures;  // counterexamples and budget overruns
    double seconds = 0;
};

CampaignSummary fuzz_campaign(LemmaId lemma, int runs, uint64_t seed, long long max_modulus,
                              double budget_per_check = 0);

}  // namespace gradedlie

#endif  // GRADEDLIE_HARNESS_HPP
