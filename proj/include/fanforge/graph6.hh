#ifndef FANFORGE_GUARD_GRAPH6_HH
#define FANFORGE_GUARD_GRAPH6_HH 1

#include <fanforge/graph.hh>

#include <string>
#include <string_view>

namespace fanforge
{
    // Decodes one graph6 line. A leading ">>graph6<<" header and trailing
    // whitespace are accepted. Throws ParseError.
    auto from_graph6(std::string_view text) -> SimpleGraph;

    auto to_graph6(const SimpleGraph & g) -> std::string;

    // True for lines that carry no graph: blank lines and a bare header.
    auto is_graph6_blank(std::string_view line) -> bool;
}

#endif
