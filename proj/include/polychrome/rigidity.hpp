#pragma once

// Structure of 2^d-polychromatic colourings: per-direction proper 2-colourings
// extracted from them, orthogonal invariance of such tuples, the product
// construction back to 2^d colours, and an exhaustive d=2 census.

#include "polychrome/checks.hpp"
#include "polychrome/labeling.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace polychrome {

/// c'(x) = 1 iff `marker` appears on the face {eps : eps_axis = 0} . x.
/// Requires c to be 2^d-polychromatic; throws Error(precondition) naming a
/// witness cube otherwise.
Labeling extract_2_coloring(const Labeling& c, int axis, Color marker = 0);

/// extract_2_coloring for every axis.
std::vector<Labeling> extract_tuple(const Labeling& c, Color marker = 0);

/// inv[i][j]: tuple[i] is invariant under e_j (diagonal entries are false and
/// ignored).
struct InvarianceReport {
    int d = 0;
    std::vector<std::vector<bool>> inv;

    bool orthogonally_invariant(int i) const;
    /// Number of orthogonally invariant members, recomputed from the matrix.
    int n() const;
    std::vector<int> non_invariant() const;
};

/// Requires each tuple[i] to be a proper 2-colouring in direction i.
InvarianceReport invariance_report(const std::vector<Labeling>& tuple);

/// c(x) = sum_i tuple[i](x) << i. Requires a (d-1)-fold invariant tuple.
Labeling assemble(const std::vector<Labeling>& tuple);

/// Colours on the face {eps : eps_axis = 0} . x, as a bitmask.
std::uint64_t face_color_mask(const Labeling& c, int axis, Index x);

/// c(F_i . x) and c(F_i . (e_i x)) partition the colour set, for every x.
/// Returns the first offending vertex, if any.
std::optional<Index> complementation_violation(const Labeling& c, int axis);

/// Enumeration is limited to d = 2, sides in {4, 6}, k = 4.
void check_enumeration_size(const Torus& domain, int k);

/// Depth-first search over colours in index order, pruning whenever a vertex
/// repeats a colour already placed in a shared cube. `visit` returns false to
/// stop early. Returns the number of labelings visited.
std::uint64_t enumerate_polychromatic(const Torus& domain, int k, const std::function<bool(const Labeling&)>& visit);

/// True when colours first appear in the order 0, 1, 2, ... in index order;
/// exactly one labeling per colour-permutation class has this property.
bool is_color_canonical(const Labeling& c);

struct DichotomyReport {
    std::uint64_t total = 0;
    std::uint64_t e0_only = 0;  // invariant under 2e_0 but not 2e_1
    std::uint64_t e1_only = 0;
    std::uint64_t both = 0;
    std::uint64_t violations = 0;
    std::uint64_t canonical_total = 0;  // count up to colour permutation
    std::optional<Labeling> counterexample;

    bool ok() const noexcept { return violations == 0; }
};

/// Checks that every 4-polychromatic colouring of the torus is invariant under
/// 2e_0 or 2e_1.
DichotomyReport verify_dichotomy_d2(const Torus& domain);

}  // namespace polychrome
