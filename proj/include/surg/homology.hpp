#ifndef SURG_HOMOLOGY_HPP
#define SURG_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "surg/bigint.hpp"
#include "surg/complex.hpp"

namespace surg {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Cellular boundary maps. d2 maps faces to edges (rows = edges, columns =
/// faces, entry = signed occurrence sum); d1 maps edges to vertices (rows =
/// vertices, columns = edges, head minus tail). d1 * d2 = 0.
struct ChainComplex {
    IntMatrix d1;
    IntMatrix d2;
    int vertices = 0, edges = 0, faces = 0;
};

ChainComplex chain_complex(const Complex& c);
bool boundary_squares_to_zero(const ChainComplex& cc);

/// Invariant factors d1 | d2 | ... of an integer matrix (nonzero diagonal of
/// the Smith normal form, each positive). Exact arithmetic, pivoting by
/// least absolute value.
std::vector<BigInt> smith_invariant_factors(IntMatrix m);

struct Coefficients {
    enum Kind { Integers, Rationals, ModP } kind = Integers;
    long long p = 0;

    static Coefficients integers() { return {Integers, 0}; }
    static Coefficients rationals() { return {Rationals, 0}; }
    static Coefficients mod(long long p) { return {ModP, p}; }
};

struct HomologyGroup {
    int rank = 0;
    std::vector<long long> torsion;  // elementary divisors > 1, increasing
};

struct HomologyResult {
    Coefficients coefficients;
    HomologyGroup h0, h1, h2;
    std::string text() const;  // "H0 = Z^1", "H1 = Z^1 (+) Z/3 (+) Z/3", ...
};

/// Homology in degrees 0..2 via Smith normal form of the boundary maps.
/// Torsion is reported only for integer coefficients; over Q or F_p the
/// groups are vector spaces and only ranks appear.
HomologyResult homology(const Complex& c, Coefficients coeff = Coefficients::integers());

}  // namespace surg

#endif
