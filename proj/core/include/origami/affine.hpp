#pragma once

#include <map>
#include <vector>

#include "origami/origami.hpp"

namespace origami {

// Linear part of an affine automorphism of a square-tiled surface whose
// derivative group is the cyclic group generated by the quarter turn S.
enum class Derivative { I, MinusI, S, SInv };

int derivative_exponent(Derivative d); // power of S: I=0, S=1, MinusI=2, SInv=3
Derivative derivative_from_exponent(int e);
Derivative compose(Derivative a, Derivative b);
Derivative inverse(Derivative d);

// Automorphism = square relabeling pi together with a derivative d,
// subject to (with c meaning conjugation x -> pi x pi^{-1}):
//   I:  c(h) = h,      c(v) = v
//  -I:  c(h) = h^{-1}, c(v) = v^{-1}
//   S:  c(h) = v,      c(v) = h^{-1}
// S^-1: c(h) = v^{-1}, c(v) = h
struct AffineAuto {
    Permutation pi;
    Derivative d = Derivative::I;
    bool operator==(const AffineAuto&) const = default;
};

bool is_valid(const Origami& o, const AffineAuto& a);

// All automorphisms with the given derivative, ordered by pi(0).
std::vector<AffineAuto> affine_autos(const Origami& o, Derivative d);
// All automorphisms, derivative classes in the order I, -I, S, S^-1.
std::vector<AffineAuto> affine_group(const Origami& o);
// Derivative-I automorphisms (deck transformations of the torus cover).
std::vector<AffineAuto> translations(const Origami& o);

AffineAuto identity_auto(const Origami& o);
AffineAuto compose(const AffineAuto& a, const AffineAuto& b); // a after b
AffineAuto inverse(const AffineAuto& a);
int element_order(const AffineAuto& a);

// Orders of the elements, keyed by order. Verifies the set is closed under
// composition first and throws NotClosed when it is not.
std::map<int, int> order_histogram(const std::vector<AffineAuto>& group);
std::vector<AffineAuto> center_of(const std::vector<AffineAuto>& group);

struct FixedPointReport {
    std::vector<int> square_centers;            // squares s with pi(s) = s
    std::vector<int> vertical_edge_midpoints;   // edge between s and h(s), keyed by s
    std::vector<int> horizontal_edge_midpoints; // edge between s and v(s), keyed by s
    std::vector<std::vector<int>> vertices;     // fixed vertices as rotation cycles

    int total() const {
        return static_cast<int>(square_centers.size() + vertical_edge_midpoints.size() +
                                horizontal_edge_midpoints.size() + vertices.size());
    }
};

// Fixed points of the automorphism on the surface. Fixed points sit on the
// half-integer lattice: square centers, edge midpoints (only for derivative
// -I, or everything for the identity), and vertices of the tiling.
FixedPointReport fixed_points(const Origami& o, const AffineAuto& a);

// Quotient by a group of translations acting freely on squares; squares of
// the quotient are the orbits. Throws NotSubgroup / NotFreeOnSquares.
Origami quotient_by_translations(const Origami& o, const std::vector<Permutation>& subgroup);
// Same, from automorphisms: every derivative must be I (throws NotSubgroup).
Origami quotient_by_translations(const Origami& o, const std::vector<AffineAuto>& subgroup);

// Genus of the quotient surface by an involution, via chi(X) = 2 chi(Y) - #fixed.
int quotient_genus_by_involution(const Origami& o, const AffineAuto& a);

} // namespace origami
