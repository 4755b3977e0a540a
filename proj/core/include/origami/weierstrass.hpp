#pragma once

#include "origami/elliptic.hpp"

namespace origami {

// Lattice invariant g2 of the Gaussian integer lattice Z + iZ (g3 = 0).
double g2_square_lattice();

// Weierstrass p-function and its derivative for the lattice Z + iZ,
// evaluated by summing over horizontal rows of lattice points.
Complex wp(const Complex& z, int m_terms = 20);
Complex wp_prime(const Complex& z, int m_terms = 20);

// Maps the rational lattice point (a + ib)/n to the curve y^2 = x^3 - x via
// the rescaled (wp, wp') pair. (0, 0) mod n maps to the point at infinity.
// Throws ConvergenceBudgetExceeded if the image misses the curve by more
// than tol.
EPoint weierstrass_bridge(int a, int b, int n, double tol = 1e-6);

} // namespace origami
