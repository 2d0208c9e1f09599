#include <fanforge/errors.hh>
#include <fanforge/graph6.hh>

#include <utility>
#include <vector>

using namespace fanforge;

using std::pair;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    constexpr string_view header = ">>graph6<<";
    constexpr long max_order = 258047;

    auto strip(string_view text) -> string_view
    {
        if (text.starts_with(header))
            text.remove_prefix(header.size());
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
            text.remove_suffix(1);
        return text;
    }

    auto value_at(string_view text, std::size_t i) -> int
    {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 character out of range at position " + std::to_string(i));
        return c - 63;
    }
}

auto fanforge::is_graph6_blank(string_view line) -> bool
{
    return strip(line).empty();
}

auto fanforge::from_graph6(string_view text) -> SimpleGraph
{
    text = strip(text);
    if (text.empty())
        throw ParseError("empty graph6 string");

    long n;
    std::size_t pos;
    if (value_at(text, 0) != 63) {
        n = value_at(text, 0);
        pos = 1;
    }
    else {
        if (text.size() < 4)
            throw ParseError("truncated graph6 length prefix");
        if (value_at(text, 1) == 63)
            throw ParseError("graph6 orders above 258047 are not supported");
        n = 0;
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | value_at(text, i);
        if (n < 63)
            throw ParseError("non-canonical graph6 length prefix");
        pos = 4;
    }
    if (n > max_order)
        throw ParseError("graph6 order too large");

    long bits = n * (n - 1) / 2;
    long expected = (bits + 5) / 6;
    if (static_cast<long>(text.size() - pos) != expected)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " characters, expected " + std::to_string(expected));

    vector<pair<int, int>> edges;
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = value_at(text, pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    if (k % 6 != 0) {
        int chunk = value_at(text, pos + k / 6);
        if (chunk & ((1 << (6 - k % 6)) - 1))
            throw ParseError("graph6 padding bits are not zero");
    }
    for (auto i = pos; i < text.size(); ++i)
        value_at(text, i);

    return SimpleGraph(static_cast<int>(n), edges);
}

auto fanforge::to_graph6(const SimpleGraph & g) -> string
{
    string result;
    long n = g.order();
    if (n < 63)
        result += static_cast<char>(63 + n);
    else {
        result += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            result += static_cast<char>(63 + ((n >> shift) & 63));
    }

    int chunk = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                result += static_cast<char>(63 + chunk);
                chunk = used = 0;
            }
        }
    if (used > 0)
        result += static_cast<char>(63 + (chunk << (6 - used)));
    return result;
}
