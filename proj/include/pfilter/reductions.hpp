#pragma once

#include <cstdint>
#include <utility>

#include "pfilter/filter.hpp"

namespace pfilter {

// Color constants used by the reduction constructors.
inline const Color kSharedColor = "c0";
inline const Color kUnionProductColor = "green";
inline const Color kUnionInputColor = "red";

/// An all-states-final NFA represented as a uniformly colored filter; its
/// accepting language is then exactly the interaction language.
struct AsfNfa {
    Filter filter;

    /// Wraps a valid filter whose states all share one color; throws Error
    /// otherwise.
    static AsfNfa from_filter(Filter f);
};

/// Instance generator for the universality reduction: returns (F, F') where
/// F is the one-state filter with a full-alphabet self-loop and F' is the
/// NFA recolored to the shared color. F' output simulates F exactly when the
/// NFA's language is all of Sigma*. Requires an alphabet of at least two
/// symbols (AlphabetTooSmallError otherwise).
std::pair<Filter, Filter> universality_instance(const AsfNfa& a);

/// Instance generator for the output-compatibility reduction: builds the
/// graph union of tensor_product(a, b) (green) with a (red) as F, and a
/// recolored all-green as F'. Output compatibility of (F, F') holds exactly
/// when L(a) subseteq L(b).
std::pair<Filter, Filter> outputcompat_instance(const Filter& a, const Filter& b);

/// Seeded random-filter generator for property tests. Identical configs
/// yield identical filters on every platform.
struct GeneratorConfig {
    uint64_t seed = 0;
    uint32_t state_count = 4;     // 1..26
    uint32_t alphabet_size = 2;   // 1..26
    uint32_t color_count = 2;     // 1..26
    double edge_density = 0.3;    // [0, 1]
    bool force_deterministic = false;
    bool force_sso = false;
    bool multi_initial = true;    // allow initial states beyond s0
};

/// Always returns a valid, pruned filter. force_deterministic yields a
/// tracing-deterministic filter; force_sso post-filters candidates with
/// check_sso (falling back to a deterministic vertex-single-output draw).
Filter random_filter(const GeneratorConfig& cfg);

}  // namespace pfilter
