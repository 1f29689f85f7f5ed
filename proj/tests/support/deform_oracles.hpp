#pragma once
// Brute-force oracles for deformations. Brackets over the base are recomputed
// here from the multiplication table; no cochain spaces are used.

#include <array>
#include <optional>
#include <vector>

#include "lieforge/artin.hpp"
#include "lieforge/graded_lie.hpp"

namespace lieforge::testing {

// Constants in the layout of LieDeformation: constants[a*n+b][k*r+j].
using Constants = std::vector<Vec>;

bool jacobi_holds(const ArtinLocalAlgebra& a, const GradedLieAlgebra& lbar, const Constants& c);

// (a, b, k) with a < b and deg k = deg a + deg b: the free coordinates of an
// alternating grade-0 bilinear map.
std::vector<std::array<std::size_t, 3>> grade0_slots(const GradedLieAlgebra& lbar);

// Does some lift of the constants over ext.base() to ext.total() satisfy
// Jacobi? nullopt when l^(kernel rank * slots) exceeds the limit.
std::optional<bool> extension_exists_bruteforce(const GradedLieAlgebra& lbar, const Constants& c,
                                                const AlgExtension& ext, std::size_t limit);

// Every deformation of lbar over A (all lifts of lbar's constants), by
// enumeration; nullopt when l^(slots * dim m) exceeds the limit.
std::optional<std::vector<Constants>> all_deformations_bruteforce(const GradedLieAlgebra& lbar,
                                                                  const ArtinLocalAlgebra& a, std::size_t limit);

// Is there a graded A-linear g = id mod m with g[x,y]_1 = [gx,gy]_2? The
// gauge group is enumerated; nullopt when it exceeds the limit.
std::optional<bool> equivalent_bruteforce(const GradedLieAlgebra& lbar, const ArtinLocalAlgebra& a,
                                          const Constants& first, const Constants& second, std::size_t limit);

// Check that g = id + sum_j nu[j] e_j (nu[j] as dim x dim matrices, row a =
// image of basis a) carries the first bracket to the second.
bool gauge_maps(const GradedLieAlgebra& lbar, const ArtinLocalAlgebra& a, const Constants& first,
                const Constants& second, const std::vector<Mat>& nu);

}  // namespace lieforge::testing
