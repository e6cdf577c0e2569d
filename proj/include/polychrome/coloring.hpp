#pragma once

// (2^d - 1)-polychromatic colourings built by induction over a toast.
//
// Every piece K gets a root r_K (its lexicographically least vertex) and the
// repetitive template x -> a(phi_K(x)) with phi_K(x) = (x - r_K) mod 2.
// Processing K after its internal pieces L_i:
//   exterior  E_K = K minus the R-balls of the L_i     -> K's template
//   gap       P_i = B_R(L_i) minus L_i, split into shells of width 2d;
//             shell t is coloured a_t o phi_K, where a_0 .. a_{2^{d+1}} is a
//             cube-path from L_i's template (read in K's chart) to a.
// Cells of L_i are never touched again.

#include "polychrome/cube_path.hpp"
#include "polychrome/labeling.hpp"
#include "polychrome/toast.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polychrome {

/// R = 2^{d+2} d.
int default_thickening(int d);
/// r = 2R + d = (2^{d+3} + 1) d.
int default_separation(int d);

/// Element of Z_2^d as a bitmask, bit i for axis i.
using Parity = std::uint32_t;

/// Lexicographically least vertex of K.
Index choose_root(const VertexSet& K);

/// (x - root) mod 2, coordinatewise.
Parity phi(const Torus& domain, Index root, Index x);
Parity phi(const VertexSet& K, Index x);

struct RepetitiveTemplate {
    CubeLabeling base;  // must be surjective
    Index root = 0;

    Color color(const Torus& domain, Index x) const { return base[phi(domain, root, x)]; }
};

/// Template colour of x for the piece K: base evaluated at phi_K(x).
Color template_color(const CubeLabeling& base, const VertexSet& K, Index x);

/// floor(distance / 2d) clamped to 2^{d+1}. Requires 1 <= distance <= R.
int shell_index(std::int64_t distance, int d, int R);
/// Same, with the distance measured from L.
int shell_index(const VertexSet& L, Index x, int R);

/// `base` re-expressed in a chart whose root sits at parity `shift`:
/// out(v) = base(v xor shift).
CubeLabeling translate(const CubeLabeling& base, Parity shift);

struct GapPlan {
    int child = 0;
    Index child_root = 0;
    /// phi_K(r_L): offset between the inner and outer charts.
    Parity chart_shift = 0;
    /// a_0 .. a_{2^{d+1}}; a_0 is L's template in K's chart, the last is the base.
    std::vector<CubeLabeling> stages;
};

struct PiecePlan {
    int id = 0;
    Index root = 0;
    std::vector<GapPlan> gaps;  // one per maximal internal piece, ascending id
};

struct ColoringPlan {
    Toast toast;
    CubeLabeling base;
    int R = 0;
    int shell_width = 0;
    std::vector<PiecePlan> pieces;  // aligned with toast.pieces()
    std::vector<int> order;         // innermost first

    const PiecePlan& piece(int id) const { return pieces[toast.position(id)]; }
    int last_stage() const { return 1 << (toast.domain().dim() + 1); }
    int colors() const { return base.color_count(); }
};

/// Checks the toast (unless told it is already validated), the base labeling
/// and the constants: R a positive multiple of 2d with R/(2d) >= 2^{d+1}, and
/// r >= 2R + d. Throws Error(sizing) on infeasible constants.
ColoringPlan make_plan(const Toast& toast, const CubeLabeling& base, std::optional<int> R = std::nullopt,
                       bool validate_toast = true);

Labeling build_coloring(const ColoringPlan& plan);
Labeling build_coloring(const Toast& toast, const CubeLabeling& base, std::optional<int> R = std::nullopt);

/// Regions of one piece, materialised for inspection.
VertexSet exterior(const ColoringPlan& plan, int id);
VertexSet gap(const ColoringPlan& plan, int id, int child);
VertexSet shell(const ColoringPlan& plan, int id, int child, int t);

struct PlanViolation {
    Index base = 0;   // cube base vertex
    int piece = 0;    // ambient piece
    std::string reason;
};

struct PlanReport {
    Index cubes_checked = 0;
    Index exterior_cubes = 0;
    Index gap_cubes = 0;
    Index inner_seam_cubes = 0;  // meet an internal piece and its shell 0
    Index outer_seam_cubes = 0;  // meet the last shell and the exterior
    Index violation_count = 0;
    std::vector<PlanViolation> violations;  // first few, ascending base

    bool ok() const noexcept { return violation_count == 0 && cubes_checked > 0; }
};

/// Exhaustive per-cube check of the construction: each cube is judged in the
/// smallest piece containing it. A cube meeting no gap must carry that piece's
/// template; otherwise it meets exactly one gap, its shells span at most
/// {t, t+1}, and it equals a_t o phi_K or a_{t+1} o phi_K (internal-piece cells
/// count as stage 0, exterior cells as the last stage). Every cube must also
/// see all 2^d - 1 colours.
PlanReport verify_plan_invariants(const ColoringPlan& plan, const Labeling& c);

}  // namespace polychrome
