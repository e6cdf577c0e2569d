#pragma once

// r-toasts on a torus: families of finite pieces that are pairwise either
// nested with an r-margin or more than r apart, and that cover the domain.

#include "polychrome/torus.hpp"
#include "polychrome/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace polychrome {

struct ToastPiece {
    int id = 0;
    std::optional<int> parent;
    /// Either an inclusive box or an explicit list of vertex indices.
    std::variant<Box, std::vector<Index>> shape;

    bool is_box() const noexcept { return std::holds_alternative<Box>(shape); }
    VertexSet cells(const Torus& domain) const;
};

class Toast {
public:
    /// Checks structure only (unique ids, parents exist, no parent cycles);
    /// geometric conditions are the job of validate().
    Toast(const Torus& domain, int r, std::vector<ToastPiece> pieces);

    const Torus& domain() const noexcept { return domain_; }
    int r() const noexcept { return r_; }
    const std::vector<ToastPiece>& pieces() const noexcept { return pieces_; }
    std::size_t size() const noexcept { return pieces_.size(); }

    bool has(int id) const noexcept;
    /// Position of piece `id` in pieces(); throws on unknown id.
    std::size_t position(int id) const;
    const ToastPiece& piece(int id) const { return pieces_[position(id)]; }
    const VertexSet& cells(int id) const { return cells_[position(id)]; }
    /// Declared children, ascending id.
    const std::vector<int>& children(int id) const { return children_[position(id)]; }
    std::vector<int> roots() const;
    /// Number of parent links above the piece.
    int depth(int id) const;

private:
    Torus domain_;
    int r_;
    std::vector<ToastPiece> pieces_;
    std::vector<VertexSet> cells_;
    std::vector<std::vector<int>> children_;
    std::vector<std::pair<int, std::size_t>> by_id_;  // sorted (id, position)
};

struct ToastViolation {
    enum class Kind { empty_piece, duplicate, pairwise, coverage, forest };
    Kind kind;
    std::vector<int> pieces;
    std::optional<Index> vertex;
    std::string message;
};

const char* to_string(ToastViolation::Kind kind) noexcept;

struct ToastReport {
    bool ok = true;
    std::vector<ToastViolation> violations;
    /// Uncovered vertices beyond the ones listed individually.
    Index uncovered = 0;
};

ToastReport validate(const Toast& t);

/// Linear extension of the nesting order, innermost first: pieces sorted by
/// height (leaves 0), ties by id.
std::vector<int> iteration_order(const Toast& t);

/// Children of K in the nesting forest.
std::vector<int> maximal_internal_pieces(const Toast& t, int id);

struct GenerationPolicy {
    std::int64_t leaf_min = 4;       ///< smallest leaf box side
    std::int64_t leaf_max = 32;      ///< largest leaf box side
    int max_children = 4;            ///< placements attempted under each parent
    int retry_cap = 200;             ///< random draws per placement before giving up on it
    int size_spread_percent = 50;    ///< share of the slack above the minimal side used by inner boxes
};

/// Minimal box side for a piece with `height` generations of boxes below it.
std::int64_t required_side(int height, int r, const GenerationPolicy& policy);

/// Whole-torus top piece (id 0) and `levels` generations of random boxes below
/// it. Every box keeps its r-ball inside its parent and stays more than r away
/// from its siblings; top-level boxes also keep their r-ball from wrapping onto
/// itself. Deterministic in `seed`.
Toast generate(const Torus& domain, int r, int levels, std::uint64_t seed, const GenerationPolicy& policy = {});

}  // namespace polychrome
