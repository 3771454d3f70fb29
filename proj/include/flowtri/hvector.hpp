#ifndef FLOWTRI_HVECTOR_HPP
#define FLOWTRI_HVECTOR_HPP

#include <string>
#include <vector>

#include "flowtri/bigint.hpp"

namespace flowtri {

// Coefficients h_0, h_1, ... of an h- or h*-polynomial.
using HStarVector = std::vector<BigInt>;

HStarVector trim_zeros(HStarVector h);

struct ShapeFlags {
  bool symmetric = false;
  bool unimodal = false;
  bool gorenstein = false;
};

// Symmetry is taken about the last nonzero index; Gorenstein is read off as
// symmetry of h*.
ShapeFlags check_symmetry_unimodality(const HStarVector& h);

// "1 + 7x + 7x^2 + x^3"
std::string polynomial_string(const HStarVector& h);

}  // namespace flowtri

#endif  // FLOWTRI_HVECTOR_HPP
