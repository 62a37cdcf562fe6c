#pragma once

#include "bezout/transform.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace bezout {

struct SearchRect {
    double re_min = -1.0;
    double re_max = 1.0;
    double im_min = -1.0;
    double im_max = 1.0;
    /// Outward step used when the contour passes too close to a zero.
    double boundary_margin = 1e-3;

    /// Throws std::invalid_argument when the interior is empty.
    void validate() const;
    bool contains(std::complex<double> z) const {
        return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
    }
    /// Reflection across the real axis.
    SearchRect mirrored() const { return {re_min, re_max, -im_max, -im_min, boundary_margin}; }
};

struct LocatedZero {
    std::complex<double> z;
    int multiplicity = 1;
    double residual = 0.0; ///< |F(z)|
};

struct ZeroSet {
    std::vector<LocatedZero> zeros; ///< sorted by (Re z, Im z)
    SearchRect rect;                ///< contour actually used (after nudging)
    int total_count = 0;            ///< winding number of the top-level contour
    double residual_tol = 0.0;      ///< 1e-9 * max(1, sup over contour of |F|)
};

/// Winding number of F around `rect`. Nudges the rectangle outward up to five
/// times when the contour is too close to a zero. Throws BoundaryZero or
/// NonIntegerWinding when no certified count can be produced.
int count_zeros(const ClosedTransform& f, const SearchRect& rect);

/// All zeros inside `rect` by quadrisection and Newton polishing to
/// |dz| <= tol. Throws ClusterUnresolved when a cell below 100*tol still
/// holds more than one zero that is not a single multiple zero.
ZeroSet locate_zeros(const ClosedTransform& f, const SearchRect& rect, double tol = 1e-10);

struct CommonPair {
    std::size_t first;
    std::size_t second;
    double distance;
};

struct ZeroComparison {
    double min_distance; ///< +inf when either set is empty
    std::vector<CommonPair> common;
    double delta;
};

ZeroComparison compare_zero_sets(const ZeroSet& z1, const ZeroSet& z2, double delta);

struct StructureFlags {
    bool no_real_zeros = true;
    bool no_conjugate_pairs = true;
};

StructureFlags structure_checks(const ZeroSet& zeros, double axis_tol = 1e-7);

/// Positive zeros of J_{n+1/2} (equivalently of the spherical Bessel j_n)
/// up to x_max, to 1e-10. Requires n <= 20 and x_max <= 200.
std::vector<double> bessel_reference(unsigned n, double x_max);

/// Spherical Bessel j_n(x) from its closed sin/cos form.
double spherical_bessel(unsigned n, double x);

} // namespace bezout
