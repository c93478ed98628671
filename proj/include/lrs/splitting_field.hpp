#pragma once

#include "lrs/number_field.hpp"

#include <vector>

namespace lrs {

struct FieldRoot {
  Elem value;                // in the splitting field
  std::size_t factor_index;  // which input factor it is a root of
};

struct SplittingField {
  NumberField field = NumberField::rationals();
  int r1 = 1;  // real embeddings
  int r2 = 0;  // pairs of complex embeddings
  /// Every root of every input factor, grouped by factor in input order and,
  /// within a factor, ordered by the value under the identity embedding.
  std::vector<FieldRoot> roots;

  int degree() const { return field.degree(); }
};

constexpr int kDefaultDegreeCap = 64;

/// Splitting field of a list of distinct monic irreducible integer polynomials,
/// built by adjoining one root at a time with primitive elements theta + k*gamma.
/// Throws CapacityError once the degree would exceed `degree_cap`.
SplittingField splitting_field(const std::vector<RationalPoly>& factors, int degree_cap = kDefaultDegreeCap);

}  // namespace lrs
