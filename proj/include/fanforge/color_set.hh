#ifndef FANFORGE_GUARD_COLOR_SET_HH
#define FANFORGE_GUARD_COLOR_SET_HH 1

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace fanforge
{
    inline constexpr int max_colors = 63;

    // Subset of [1, 63] stored as a bitmask; bit c is color c.
    class ColorSet
    {
    private:
        std::uint64_t _bits = 0;

    public:
        constexpr ColorSet() = default;
        constexpr explicit ColorSet(std::uint64_t bits) : _bits(bits) {}

        static constexpr auto range(int lo, int hi) -> ColorSet
        {
            ColorSet result;
            for (int c = lo; c <= hi; ++c)
                result.insert(c);
            return result;
        }

        static auto of(std::initializer_list<int> colors) -> ColorSet
        {
            ColorSet result;
            for (int c : colors)
                result.insert(c);
            return result;
        }

        constexpr auto bits() const -> std::uint64_t { return _bits; }
        constexpr auto contains(int c) const -> bool { return (_bits >> c) & 1u; }
        constexpr auto insert(int c) -> void { _bits |= std::uint64_t{1} << c; }
        constexpr auto erase(int c) -> void { _bits &= ~(std::uint64_t{1} << c); }
        constexpr auto empty() const -> bool { return _bits == 0; }
        constexpr auto size() const -> int { return std::popcount(_bits); }

        // Lowest color in the set, or 0 when empty.
        constexpr auto first() const -> int { return _bits ? std::countr_zero(_bits) : 0; }

        // The unique element; callers check size() == 1 first.
        constexpr auto single() const -> int { return first(); }

        constexpr auto intersects(ColorSet other) const -> bool { return (_bits & other._bits) != 0; }
        constexpr auto subset_of(ColorSet other) const -> bool { return (_bits & ~other._bits) == 0; }

        constexpr auto operator&(ColorSet o) const -> ColorSet { return ColorSet{_bits & o._bits}; }
        constexpr auto operator|(ColorSet o) const -> ColorSet { return ColorSet{_bits | o._bits}; }
        constexpr auto operator-(ColorSet o) const -> ColorSet { return ColorSet{_bits & ~o._bits}; }
        constexpr auto operator|=(ColorSet o) -> ColorSet & { _bits |= o._bits; return *this; }
        constexpr auto operator&=(ColorSet o) -> ColorSet & { _bits &= o._bits; return *this; }
        constexpr auto operator==(const ColorSet &) const -> bool = default;

        auto to_vector() const -> std::vector<int>
        {
            std::vector<int> result;
            for (auto b = _bits; b; b &= b - 1)
                result.push_back(std::countr_zero(b));
            return result;
        }

        auto to_string() const -> std::string
        {
            std::string result = "{";
            bool first_one = true;
            for (int c : to_vector()) {
                if (! first_one)
                    result += ",";
                result += std::to_string(c);
                first_one = false;
            }
            return result + "}";
        }
    };
}

#endif
