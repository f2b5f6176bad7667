#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rephom/quillen_model.hpp"
#include "rephom/sullivan_model.hpp"

namespace rephom::model {

// Models attached to one space spec.  Infinite Quillen models (kz:d with d
// even) are truncated; `quillen_validity` is then the largest homological
// degree in which the truncation still computes the true homology.
struct SpaceModels {
  std::string spec;
  std::string description;
  std::optional<QuillenModel> quillen;
  std::optional<int> quillen_validity;
  std::optional<SullivanModel> sullivan;
};

// Supported specs:
//   sphere:n   (n >= 2)            n-sphere
//   cp:r       (r >= 1)            complex projective r-space
//   hp:r       (r >= 1)            quaternionic projective r-space
//   op2                            octonionic projective plane
//   kz:d       (d >= 2)            integral Eilenberg-MacLane space K(Z,d)
//   kzxs:d:p   (d even, p odd)     product K(Z,d) x S^p (Sullivan model only)
// `degree_cap` bounds truncations of infinite Quillen models.
SpaceModels catalog(const std::string& spec, int degree_cap);

// dim of reduced rational homology in degrees 0..max_degree.
std::vector<int> reduced_homology_dims(const std::string& spec,
                                       int max_degree);

// Family names with one-line descriptions, for listings.
std::vector<std::pair<std::string, std::string>> catalog_families();

// Concrete representative instances used by property suites.
std::vector<std::string> catalog_samples();

}  // namespace rephom::model
