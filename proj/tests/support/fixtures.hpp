#pragma once
// Small constructions shared by the unit tests and the acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "lieforge/artin.hpp"
#include "lieforge/deformation.hpp"
#include "lieforge/rep_deform.hpp"

namespace lieforge::testing {

ArtinPtr trunc(std::uint32_t l, std::size_t n, const std::string& var = "t");
// F_l[t]/t^(n+1) -> F_l[t]/t^n
AlgExtension truncation_extension(std::uint32_t l, std::size_t n);
// D1 -> A sending t_s to images[s].
ArtinMorphism artin_morphism_from_images(const ArtinPtr& d1, const ArtinPtr& a, const std::vector<Vec>& images);
// Graded morphism from the images of every basis element of g.
GradedMorphism graded_morphism_from_images(const LiePtr& g, const LiePtr& t, const std::vector<Vec>& images);
std::vector<Vec> rho_images(const GradedRep& rep);

std::size_t power(std::size_t l, std::size_t e);
// Odometer over F_l^n; false after the last vector.
bool next_vector(Vec& v, Scalar l);

// Ab(2,1), Heis and random algebras of truncation 3.
std::vector<LiePtr> small_suite(std::uint32_t l, std::size_t random_count, std::uint64_t seed, std::size_t max_dim = 4);
// Gauge cochains as dim x dim matrices (row a = image of basis a).
std::vector<Mat> gauge_matrices(const LiePtr& lbar, const std::vector<Vec>& gauge);
// Random rho out of a truncated free Lie algebra on at most three generators.
RepPtr random_free_rep(std::mt19937_64& rng, std::uint32_t l);

}  // namespace lieforge::testing
