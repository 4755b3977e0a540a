#pragma once

#include <string>
#include <utility>
#include <vector>

#include "origami/permutation.hpp"

namespace origami {

// Square-tiled translation surface. Square s has right neighbor h(s)
// and top neighbor v(s); the pair must act transitively.
struct Origami {
    Permutation h;
    Permutation v;
    std::string name;

    int size() const { return h.size(); }
};

bool is_transitive(const Permutation& h, const Permutation& v);

// Validates sizes, bijectivity (via Permutation) and connectivity.
Origami make_origami(Permutation h, Permutation v, std::string name = "");

// 8 squares indexed by the unit quaternions in the order (1, i, -1, -i, j, -k, -j, k);
// right neighbor of g is g*i, top neighbor is g*j.
Origami quaternion_origami();

// n x n square torus; square (x, y) has index x + n*y.
Origami torus_grid(int n);

// Vertex rotation permutation R = v h v^{-1} h^{-1} (R(s) = v(h(v^{-1}(h^{-1}(s))))).
// Its cycles are the vertices of the tiling; a cycle of length L is a cone
// point of angle 2*pi*L, i.e. cone order L-1.
Permutation vertex_rotation(const Origami& o);
std::vector<std::vector<int>> vertex_cycles(const Origami& o);

struct SingularityProfile {
    std::vector<int> cone_orders; // one per vertex, sorted descending
    int vertex_count = 0;
};

SingularityProfile singularity_profile(const Origami& o);
int genus(const Origami& o);
// Nonzero cone orders only, sorted descending.
std::vector<int> stratum(const Origami& o);

struct Cylinder {
    int circumference = 0;
    int height = 0;
    bool operator==(const Cylinder&) const = default;
};

// Maximal horizontal cylinders, sorted by (circumference, height).
std::vector<Cylinder> horizontal_cylinders(const Origami& o);
// Cylinders of the quarter-turned surface (h, v) -> (v, h^{-1}).
std::vector<Cylinder> vertical_cylinders(const Origami& o);

// Lexicographically least relabeling of (h, v) over breadth-first
// renumberings started from every square.
std::pair<std::vector<int>, std::vector<int>> canonical_pair(const Origami& o);

// Same canonical representative, packaged as an origami (name preserved).
Origami canonical_form(const Origami& o);

// Isomorphic = equal up to a simultaneous relabeling of squares.
bool is_isomorphic(const Origami& a, const Origami& b);

// Relabel squares by pi: (h, v) -> (pi h pi^{-1}, pi v pi^{-1}).
Origami relabel(const Origami& o, const Permutation& pi);

} // namespace origami
