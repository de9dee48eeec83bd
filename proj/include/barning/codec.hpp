#pragma once

#include <barning/types.hpp>

#include <array>

namespace barning {

// One of the three generating matrices of the ternary tree of PPTs.
struct BarningMatrix {
    int label = 0;
    std::array<std::array<long, 3>, 3> entries{};

    long determinant() const;
    Triple apply(const Triple &t) const;
};

using MatrixSet = std::array<BarningMatrix, 3>;

// M1, M2, M3 with the canonical entries.
const MatrixSet &barning_matrices();

// Digit of a PPT: OE/EO for the two roots, otherwise 1, 2 or 3 according to
// a/b > 4/3, 3/4 < a/b < 4/3, a/b < 3/4.
Digit digit_of(const Triple &t);

// The parent map S(a,b,c) = (|2c-a-2b|, |2c-2a-b|, 3c-2a-2b).
// The two roots map to the closure triples (1,0,1) and (0,1,1).
Triple parent(const Triple &t);

// M_d * t.
Triple child(const Triple &t, Digit d, const MatrixSet &matrices = barning_matrices());

// Ternary expansion of a PPT: digits of the successive parents, then oe/eo.
Expansion encode(const Triple &t);

// Matrix product M_{d1}...M_{dn} applied to (3,4,5) or (4,3,5).
Triple decode(const Expansion &e, const MatrixSet &matrices = barning_matrices());

// The circle map T on rational points of the open quadrant.
QPoint circle_map(const QPoint &p);

} // namespace barning
