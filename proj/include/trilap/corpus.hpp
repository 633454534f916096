#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trilap/eigenbasis.hpp"
#include "trilap/geometry.hpp"

namespace trilap {

/// A named test function with its natural domain and expansion families.
struct CorpusFunction {
  std::string id;
  TriangleKind domain = TriangleKind::Isosceles45;
  std::vector<Family> families;
  bool boundary_compatible = false;  ///< vanishes on the Dirichlet boundary
  int band = 0;  ///< smallest band reproducing it exactly; 0 if none
  RealFn f;
};

/// The built-in corpus, in fixed order:
///   u13              EquiAntisym (1,3) on the hemiequilateral triangle
///   v02              EquiSym (0,2) on the hemiequilateral triangle
///   bump-square      x y (1 - x - y) on the 45-90-45 triangle
///   bump-equilateral y (1 - sqrt3 x - y)(1 + sqrt3 x - y), even in x
///   bump-odd         x * bump-equilateral, odd in x
///   one-square       1 on the 45-90-45 triangle (boundary-incompatible)
///   one-equilateral  1 on the equilateral triangle (boundary-incompatible)
const std::vector<CorpusFunction>& corpus();

/// nullptr if the id is unknown.
const CorpusFunction* find_corpus(std::string_view id);

}  // namespace trilap
