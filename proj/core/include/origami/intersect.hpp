#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "origami/affine.hpp"
#include "origami/curves.hpp"
#include "origami/origami.hpp"

namespace origami {

// Point of the n x n grid, coordinates reduced modulo n.
struct GridPoint {
    int a = 0;
    int b = 0;
    int n = 1;
    bool operator==(const GridPoint&) const = default;
};

GridPoint make_grid_point(int a, int b, int n);

// Quarter turn (a, b) -> (-b mod n, a).
GridPoint rotate90(const GridPoint& p);

struct MarkedQuadruple {
    GridPoint P, Q, R, S;

    std::array<GridPoint, 4> points() const { return {P, Q, R, S}; }
};

// The orbit {p, rot p, rot^2 p, rot^3 p}. Throws TwoTorsionInput when the
// four points are not distinct, i.e. when 2p = 0 (this includes the origin).
MarkedQuadruple marked_quadruple(const GridPoint& p);

enum class CaseKind { Case1, Case2, Case3, Case4, Case5 };

std::string case_kind_str(CaseKind c);

// Position of p relative to the symmetry lines of the quarter turn:
// diagonals -> Case3, axes through the origin -> Case4, half-grid lines ->
// Case5, the open triangles between a diagonal and a half-grid line ->
// Case1, the remaining open triangles -> Case2.
CaseKind classify_case(const GridPoint& p);

// Z/2 labels on the unit edges of the n x n torus. vlabel[x][y] sits on the
// vertical edge {x} x [y, y+1]; hlabel[x][y] on the horizontal edge
// [x, x+1] x {y}.
struct EdgeLabeling {
    int n = 0;
    std::vector<std::vector<std::uint8_t>> vlabel;
    std::vector<std::vector<std::uint8_t>> hlabel;
};

EdgeLabeling empty_labeling(int n);

// Vertices with an odd number of incident label-1 edges.
std::vector<GridPoint> branch_set(const EdgeLabeling& el);

// Double cover of the torus: crossing a label-1 edge switches the two
// leaves. Square (x, y, leaf) has index leaf*n^2 + y*n + x. Throws
// Disconnected when the two leaves do not connect.
Origami cover_from_labeling(const EdgeLabeling& el);

// Explicit label set for a point whose orbit meets the open triangle
// 0 < b < a < n/2. Throws WrongCase for any other position.
EdgeLabeling case1_labeling(const GridPoint& p);

// Lifts of the quarter turn about the origin: derivative-S automorphisms of
// the cover that induce (x, y) -> (n-1-y, x) on the base squares.
std::vector<AffineAuto> quarter_turn_lifts(const Origami& cover, int n);

// Degree-2 cover of the torus branched exactly over the orbit of p, singled
// out among the four holonomy classes by carrying a quarter-turn lift with
// four fixed points whose square also has four fixed points. Throws
// UniquenessViolated unless exactly one class passes.
Origami construct_D(const GridPoint& p);

struct IntersectionCertificate {
    int n = 0;
    GridPoint point;
    int torsion_order = 0;
    Complex lambda{};
    TheoremReport theorem;
    bool passed = false;
    Origami cover;
};

// End-to-end run: construct the cover, send p through the lattice bridge to
// the curve y^2 = x^3 - x, recover the family parameter from the torsion
// x-coordinate, and check every numeric claim at the point's order.
IntersectionCertificate pipeline(const GridPoint& p);

} // namespace origami
