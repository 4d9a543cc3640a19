// Copyright 2026 The kdensity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The conjugacy class association scheme of a group.
//
// Class sums K_i multiply as K_i K_j = sum_k a_ijk K_k. Writing B_i for the
// matrix (B_i)_{jk} = a_ijk, every central character gives a common right
// eigenvector (w_0 = 1, w_1, ..., w_d) with B_i w = w_i w, where
// w_i = |C_i| chi(c_i) / chi(1). Those w_i are exactly the eigenvalues of the
// class matrices A_i on the chi-isotypic block, which has dimension chi(1)^2,
// so no character table is needed to get Cayley graph spectra.

#ifndef KDENSITY_SCHEME_HPP_
#define KDENSITY_SCHEME_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "kdensity/perm.hpp"
#include "kdensity/rational.hpp"

namespace kdensity {

struct CollapsedAlgebra {
  std::size_t num_classes = 0;
  std::vector<std::size_t> sizes;
  std::vector<std::int64_t> constants;  // a_ijk at (i * d + j) * d + k

  std::int64_t a(std::size_t i, std::size_t j, std::size_t k) const {
    return constants[(i * num_classes + j) * num_classes + k];
  }
};

CollapsedAlgebra class_constants(const Group& g, const ClassPartition& p);

// B_0 = I, sum_k a_ijk |C_k| = |C_i||C_j| and pairwise commutation. Returns
// an empty string when all hold, otherwise the first failure.
std::string check_algebra(const CollapsedAlgebra& ca);

struct EigenRow {
  std::vector<std::complex<double>> omega;  // per class, omega[0] = 1
  std::vector<std::optional<Rational>> exact;
  std::size_t multiplicity = 0;
};

struct EigenTable {
  std::size_t group_order = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> inverse_class_map;
  // Rational classes (power-closed blocks of class indices).
  std::vector<std::vector<std::size_t>> blocks;
  // Row 0 is the trivial row (omega_i = |C_i|).
  std::vector<EigenRow> rows;

  std::size_t num_classes() const { return class_sizes.size(); }
};

inline constexpr std::uint64_t kEigenSeed = 0x6b64656e73697479ull;  // "kdensity"

// Simultaneous diagonalization through a random real combination of the
// B_i. Throws std::runtime_error when multiplicities fail the integrality
// check. Entries within 1e-9 (relative to the class size) of an integer are
// snapped; central characters are algebraic integers so rational entries are
// integers.
EigenTable eigenrows(const CollapsedAlgebra& ca, const ClassPartition& p,
                     std::vector<std::vector<std::size_t>> blocks,
                     std::uint64_t seed = kEigenSeed);

struct SchemeData {
  ClassPartition classes;
  CollapsedAlgebra algebra;
  EigenTable table;
};

SchemeData build_scheme(const Group& g);

struct ClassSelection {
  std::vector<std::size_t> classes;  // sorted, never contains 0
};

// Throws std::invalid_argument unless the selection is closed under inverses.
void check_inverse_closed(const EigenTable& et, const ClassSelection& t);

ClassSelection complement(const EigenTable& et, const ClassSelection& t);
std::size_t selection_size(const EigenTable& et, const ClassSelection& t);

struct SpectrumEntry {
  double value = 0;
  std::optional<Rational> exact;
  std::size_t multiplicity = 0;
};

// Eigenvalue sum_{i in T} omega_i of every row; imaginary parts above 1e-9
// relative are an error.
std::vector<double> row_values(const EigenTable& et, const ClassSelection& t);

// Distinct eigenvalues of sum_{i in T} A_i with multiplicities, largest first.
std::vector<SpectrumEntry> union_spectrum(const EigenTable& et, const ClassSelection& t);

nlohmann::json to_json(const EigenTable& et);
nlohmann::json to_json(const std::vector<SpectrumEntry>& spectrum);

}  // namespace kdensity

#endif  // KDENSITY_SCHEME_HPP_
