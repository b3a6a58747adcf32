#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace evdec {

/// Largest frame the bitmask encoding supports.
inline constexpr std::size_t kMaxFrameSize = 24;

/// A subset of a finite frame, encoded as a bitmask over the frame's
/// declared element order (bit k set <=> element k belongs to the subset).
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

    static Subset of(std::initializer_list<std::size_t> elements);
    static Subset of(const std::vector<std::size_t>& elements);
    static constexpr Subset singleton(std::size_t k) { return Subset(std::uint32_t{1} << k); }
    /// The whole frame of the given size.
    static constexpr Subset full(std::size_t size) {
        return Subset(size >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << size) - 1);
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t k) const { return (bits_ >> k) & 1U; }
    constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
    /// True when every element index is below `frame_size`.
    constexpr bool fits(std::size_t frame_size) const { return is_subset_of(full(frame_size)); }
    constexpr Subset complement(std::size_t frame_size) const {
        return Subset(~bits_ & full(frame_size).bits_);
    }

    /// Element indices in increasing order.
    std::vector<std::size_t> elements() const;

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
    friend constexpr bool operator==(Subset a, Subset b) = default;
    friend constexpr auto operator<=>(Subset a, Subset b) = default;

private:
    std::uint32_t bits_ = 0;
};

}  // namespace evdec

template <>
struct std::hash<evdec::Subset> {
    std::size_t operator()(evdec::Subset s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};
