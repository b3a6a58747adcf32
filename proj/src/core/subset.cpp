#include "evdec/subset.hpp"

#include "evdec/error.hpp"

namespace evdec {

Subset Subset::of(std::initializer_list<std::size_t> elements) {
    return of(std::vector<std::size_t>(elements));
}

Subset Subset::of(const std::vector<std::size_t>& elements) {
    std::uint32_t bits = 0;
    for (std::size_t k : elements) {
        if (k >= kMaxFrameSize) throw SizeLimit("subset element index " + std::to_string(k) + " exceeds frame cap");
        bits |= std::uint32_t{1} << k;
    }
    return Subset(bits);
}

std::vector<std::size_t> Subset::elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

}  // namespace evdec
