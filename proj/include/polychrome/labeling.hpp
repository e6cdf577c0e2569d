#pragma once

#include "polychrome/torus.hpp"

#include <cstdint>
#include <vector>

namespace polychrome {

using Color = std::uint8_t;

/// Total colour assignment on a torus with colours in [0, k).
class Labeling {
public:
    Labeling(const Torus& domain, int k, Color fill = 0);
    Labeling(const Torus& domain, int k, std::vector<Color> data);

    const Torus& domain() const noexcept { return domain_; }
    int k() const noexcept { return k_; }

    Color operator[](Index v) const noexcept { return data_[static_cast<std::size_t>(v)]; }
    Color& operator[](Index v) noexcept { return data_[static_cast<std::size_t>(v)]; }

    Color at(const Vertex& x) const { return data_[static_cast<std::size_t>(domain_.index(x))]; }

    const std::vector<Color>& data() const noexcept { return data_; }
    std::vector<Color>& data() noexcept { return data_; }

    /// Throws unless every entry is below k.
    void check_range() const;

    bool operator==(const Labeling& other) const noexcept {
        return domain_ == other.domain_ && k_ == other.k_ && data_ == other.data_;
    }

private:
    Torus domain_;
    int k_;
    std::vector<Color> data_;
};

}  // namespace polychrome
