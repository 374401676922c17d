#pragma once

#include <atomic>
#include <optional>

#include "pfilter/filter.hpp"
#include "pfilter/tracing.hpp"

namespace pfilter {

/// Cooperative limits for the worklist searches. max_nodes == 0 means
/// unlimited; cancel may be polled from another thread.
struct RunLimits {
    uint64_t max_nodes = 0;
    const std::atomic<bool>* cancel = nullptr;

    bool tripped(uint64_t nodes) const {
        if (max_nodes != 0 && nodes >= max_nodes) return true;
        return cancel != nullptr && cancel->load(std::memory_order_relaxed);
    }
};

enum class Outcome { Holds, Fails, Exhausted };
enum class Reason { None, LanguageGap, OutputConflict, SSOViolation };

std::string to_string(Outcome o);
std::string to_string(Reason r);

/// Verdict of a decision procedure. A witness is present exactly when the
/// property fails; replaying it through the checked filters reproduces the
/// violation. `explored` counts worklist nodes (the fast paths assert their
/// polynomial bound against it).
struct SimVerdict {
    Outcome outcome = Outcome::Holds;
    Reason reason = Reason::None;
    std::optional<ObservationString> witness;
    uint64_t explored = 0;

    bool holds() const { return outcome == Outcome::Holds; }
};

/// String single-output membership: every in-language string reaches exactly
/// one color. Fails fast on a reachable multi-color state, otherwise vets the
/// self product for color-mismatched pairs. Witnesses are shortest, ties
/// broken lexicographically (as for all checkers below).
SimVerdict check_sso(const Filter& f, const RunLimits& limits = {});

/// L(f) subseteq L(g), via BFS over (state of f, co-reached subset of g).
SimVerdict check_language_inclusion(const Filter& f, const Filter& g,
                                    const RunLimits& limits = {});

/// For every s in L(f): outputs(g, s) subseteq outputs(f, s). BFS over pairs
/// of co-reached subsets; worst-case exponential, see the sso fast path.
SimVerdict check_output_compat_general(const Filter& f, const Filter& g,
                                       const RunLimits& limits = {});

/// Same verdict as the general check, in polynomial time, for string
/// single-output f: walks tensor_product(f, g) and compares each paired
/// state's colors. Explores at most |V(f)|*|V(g)| pairs. Throws
/// PreconditionError when f is not string single-output.
SimVerdict check_output_compat_sso_fast(const Filter& f, const Filter& g,
                                        const RunLimits& limits = {});

/// Full output-simulation check: does g output simulate f? Holds when
/// L(f) subseteq L(g), outputs are compatible, and (with require_sso) g is
/// string single-output. Output compatibility dispatches to the fast path
/// when f is string single-output. The reason field names the condition that
/// failed.
SimVerdict check_output_simulation(const Filter& f, const Filter& g, bool require_sso,
                                   const RunLimits& limits = {});

}  // namespace pfilter
