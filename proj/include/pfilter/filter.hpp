#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pfilter/errors.hpp"

namespace pfilter {

using Symbol = std::string;
using Color = std::string;
using ColorSet = std::set<Color>;
using SymbolSet = std::set<Symbol>;
// State sets are canonical sorted sets of state identifiers.
using StateSet = std::set<std::string>;

struct State {
    std::string id;
    ColorSet colors;  // nonempty in a valid filter
};

struct Edge {
    std::string from;
    std::string to;
    SymbolSet symbols;
};

/// A filter: a finite transition system whose edges carry observation
/// symbols and whose states carry nonempty sets of output colors. Values
/// are immutable once built; every operation in this library is a pure
/// function returning fresh values, so shared filters are safe to use from
/// multiple threads.
struct Filter {
    std::vector<State> states;        // document order is preserved
    std::vector<std::string> initial;
    SymbolSet alphabet;
    std::vector<Edge> edges;          // at most one entry per (from, to)

    std::optional<uint32_t> index_of(std::string_view id) const;
    const State* find_state(std::string_view id) const;
    bool is_initial(std::string_view id) const;

    // Building helpers for fixtures and generators. add_edge merges symbols
    // into an existing (from, to) entry.
    Filter& add_state(std::string id, ColorSet colors);
    Filter& add_edge(const std::string& from, const std::string& to, const Symbol& symbol);

    /// Union of all per-state color sets (the output set is not stored
    /// separately).
    ColorSet color_universe() const;
};

struct Violation {
    enum class Kind {
        EmptyColorSet,
        EmptyToken,
        UnknownSymbol,
        UnknownState,
        UnknownInitial,
        DuplicateId,
    };
    Kind kind;
    std::string element;  // offending id / token
    std::string message;
};

std::string to_string(Violation::Kind kind);

struct ClassReport {
    bool tracing_deterministic = false;
    bool vertex_single_output = false;
    bool string_single_output = false;
    bool unary_alphabet = false;
};

/// Checks every structural invariant; an empty result means the filter is
/// well formed. Violations name the offending element instead of throwing.
std::vector<Violation> validate(const Filter& f);

/// Keeps exactly the states reachable from the initial set. Language and
/// per-string output sets are unchanged. Idempotent.
Filter prune_unreachable(const Filter& f);

/// Classifies a valid, pruned filter. string_single_output is decided by
/// checks::check_sso.
ClassReport classify(const Filter& f);

enum class SelectPolicy { LexMin, LexMax };

/// Replaces every state's color set by a singleton chosen by policy
/// (default: lexicographically least token). The result output simulates
/// the input.
Filter select_single_outputs(const Filter& f, SelectPolicy policy = SelectPolicy::LexMin);

/// Subset construction. Result states are the reachable nonempty subsets,
/// named by brace-wrapped member id lists in declaration order; the color
/// set of a subset state is the union over members. Language and per-string
/// output sets equal the input's. Throws EmptyInitialError when V0 is empty.
Filter determinize(const Filter& f);

/// Dense zero-based view of a valid filter: per-symbol successor lists and
/// index-set stepping. Built once per algorithm run.
class DenseFilter {
public:
    using IndexSet = std::set<uint32_t>;

    explicit DenseFilter(const Filter& f);

    uint32_t size() const { return static_cast<uint32_t>(colors_.size()); }
    const IndexSet& initial() const { return initial_; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    const ColorSet& colors(uint32_t state) const { return colors_[state]; }
    const std::string& id(uint32_t state) const { return ids_[state]; }
    const Filter& filter() const { return *filter_; }

    bool has_symbol(const Symbol& y) const;
    // Sorted successor indices; empty for unknown symbols.
    const std::vector<uint32_t>& successors(uint32_t state, const Symbol& y) const;
    IndexSet step(const IndexSet& from, const Symbol& y) const;
    ColorSet color_union(const IndexSet& states) const;

    StateSet ids_of(const IndexSet& states) const;
    IndexSet indices_of(const StateSet& ids) const;

private:
    const Filter* filter_;
    std::vector<std::string> ids_;
    std::vector<ColorSet> colors_;
    std::map<std::string, uint32_t, std::less<>> by_id_;
    std::vector<Symbol> symbols_;
    IndexSet initial_;
    // succ_[state][symbol index in symbols_] = sorted target list
    std::vector<std::vector<std::vector<uint32_t>>> succ_;
    std::optional<uint32_t> symbol_index(const Symbol& y) const;
};

}  // namespace pfilter
