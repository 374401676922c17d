#pragma once

#include <cstdint>
#include <string>

#include "pfilter/checks.hpp"
#include "pfilter/filter.hpp"

namespace pfilter {

/// Target class of a minimization run. As solution spaces, DF is contained
/// in SSO, which is contained in SMO, so minimum sizes are ordered
/// size(SMO) <= size(SSO) <= size(DF).
enum class TargetClass { DF, SSO, SMO };

std::string to_string(TargetClass t);

/// Minimality certificate: every candidate size up to exhausted_up_to was
/// searched exhaustively and admits no output simulator, so
/// size == exhausted_up_to + 1 is optimal. The transcript hash fingerprints
/// the sequence of verifier events that produced the result; nodes counts
/// search steps (for the unary minimizer: candidates tried).
struct Certificate {
    uint32_t exhausted_up_to = 0;
    std::string transcript_hash;
    uint64_t nodes = 0;
};

struct SynthesisResult {
    Filter minimizer;
    uint32_t size = 0;
    Certificate certificate;
};

/// Number of colors that are the entire output set of some in-language
/// string. Each such color needs a dedicated state in any output simulator,
/// for every target class. Requires f valid and pruned.
uint32_t color_lower_bound(const Filter& f);

/// Minimal tracing-deterministic output simulator of a tracing-deterministic
/// input, found by exact search over covers: sets of input states merged
/// into one minimizer state, closed under transitions, with a nonempty color
/// intersection per cover label. Every solution is re-verified with
/// check_output_simulation before it is returned. Throws
/// NotDeterministicError for nondeterministic inputs and
/// BudgetExhaustedError when limits trip.
SynthesisResult minimize_df_cover(const Filter& f, const RunLimits& limits = {});

/// Exact minimum over the target class by bounded synthesis: candidate
/// filters with k states are enumerated for k = color lower bound, k+1, ...
/// in a canonical order (state 0 initial, states introduced in first-use
/// order, one color per state), pruned by replaying witness strings from
/// failed verifications, and certified by check_output_simulation (with the
/// sso requirement for the SSO target). Nondeterministic inputs are
/// determinized up front. Throws BudgetExhaustedError when limits trip.
SynthesisResult minimize_bounded_synthesis(const Filter& f, TargetClass target,
                                           const RunLimits& limits = {});

/// Polynomial minimizer for tracing-deterministic unary-alphabet inputs:
/// enumerates the O(n^2) chain+cycle candidates (k chain states, m cycle
/// states), keeping the first feasible one under the order total size
/// ascending, then smaller cycle, then lexicographic colors. Throws
/// NotUnaryError / NotDeterministicError on precondition violations.
SynthesisResult minimize_unary_df(const Filter& f);

/// Minimum over any target class for unary deterministic inputs; equals the
/// DF minimum because nondeterminism cannot reduce size over a one-letter
/// alphabet.
SynthesisResult minimize_unary_any(const Filter& f, TargetClass target);

}  // namespace pfilter
