#include "polychrome/labeling.hpp"

#include "polychrome/error.hpp"

namespace polychrome {

Labeling::Labeling(const Torus& domain, int k, Color fill)
    : domain_(domain), k_(k), data_(static_cast<std::size_t>(domain.size()), fill) {
    require(k >= 1 && k <= 255, "colour count must be in [1, 255]");
    require(fill < k, "fill colour out of range");
}

Labeling::Labeling(const Torus& domain, int k, std::vector<Color> data)
    : domain_(domain), k_(k), data_(std::move(data)) {
    require(k >= 1 && k <= 255, "colour count must be in [1, 255]");
    require(static_cast<Index>(data_.size()) == domain.size(),
            "labeling has " + std::to_string(data_.size()) + " entries, torus " + domain.describe() + " has " +
                std::to_string(domain.size()));
    check_range();
}

void Labeling::check_range() const {
    for (std::size_t i = 0; i < data_.size(); ++i)
        require(data_[i] < k_, "colour " + std::to_string(data_[i]) + " at vertex " + std::to_string(i) +
                                   " is not below k=" + std::to_string(k_));
}

}  // namespace polychrome
