#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "pfilter/filter.hpp"

namespace pfilter {

using ObservationString = std::vector<Symbol>;

/// Set of states reached by s from the initial set; empty means s crashes.
/// Throws UnknownSymbolError for symbols outside the alphabet.
StateSet trace(const Filter& f, const ObservationString& s);

/// Union of colors over trace(f, s). Throws CrashError when s is not in the
/// interaction language.
ColorSet outputs(const Filter& f, const ObservationString& s);

/// All strings of length <= max_len in the interaction language, in
/// length-then-lexicographic order. Throws LimitExceededError once more than
/// `limit` strings would be produced.
std::vector<ObservationString> enumerate_language(const Filter& f, uint32_t max_len,
                                                  uint64_t limit = 1'000'000);

/// Incremental marker-set tracer: markers hold every state reached by the
/// consumed prefix, so nondeterministic branching never needs rewinding.
/// A tracer is a value; step() returns the advanced tracer and leaves the
/// original untouched.
class Tracer {
public:
    explicit Tracer(const Filter& f);

    /// Advances by one observation and returns the new tracer plus the color
    /// union of the new markers. Throws CrashError when the stream leaves the
    /// language and UnknownSymbolError for foreign symbols.
    std::pair<Tracer, ColorSet> step(const Symbol& y) const;

    /// The unique current color. Throws AmbiguousOutputError when the marker
    /// colors are not a singleton (the filter is not string single-output
    /// along this prefix) and CrashError on an empty marker set.
    Color committed_color() const;

    StateSet markers() const;
    ColorSet colors() const;
    uint32_t consumed() const { return consumed_; }

private:
    Tracer(std::shared_ptr<const DenseFilter> dense, DenseFilter::IndexSet marks, uint32_t consumed);

    std::shared_ptr<const DenseFilter> dense_;
    DenseFilter::IndexSet marks_;
    uint32_t consumed_ = 0;
};

std::string to_string(const ObservationString& s);

}  // namespace pfilter
