#ifndef RAMSEY_GRAPH6_HH
#define RAMSEY_GRAPH6_HH

#include <ramsey/graph.hh>

#include <string>
#include <string_view>

namespace ramsey
{
    /// Standard graph6 text (no header, no trailing newline).
    auto graph6_encode(const Graph & g) -> std::string;

    /// Accepts an optional ">>graph6<<" prefix and one trailing newline.
    /// Throws Graph6ParseError carrying the offending byte offset.
    auto graph6_decode(std::string_view text) -> Graph;
}

#endif
