// Copyright 2026 The rykick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RYKICK_WAVEFORM_OPTIMIZER_HPP
#define RYKICK_WAVEFORM_OPTIMIZER_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

#include "rykick/phase_dynamics.hpp"
#include "rykick/waveform.hpp"

namespace rykick {

enum class Method { kSlices, kFourier };
enum class Boundary { kNone, kZeroEndpoints, kAntisymmetric };

const char* to_string(Method m);
const char* to_string(Boundary b);
Method parse_method(const std::string& s);
Boundary parse_boundary(const std::string& s);

/// Linear closure conditions beta_k^(sigma)(t_g) = 0 in the waveform
/// coefficients, plus boundary rows. Columns are slice fields (slices) or
/// A^s_1..A^s_nf followed by A^c_1..A^c_nf (Fourier).
struct ClosureSystem {
  Method method = Method::kSlices;
  Boundary boundary = Boundary::kNone;
  double gate_time = 0.0;
  int n_closure_rows = 0;
  Eigen::MatrixXd matrix;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  /// Same constraints as `matrix`. For each mode index the rows of the
  /// different internal states, whose frequencies nearly coincide, are
  /// replaced by divided differences in frequency of int phi_j e^{-i nu t};
  /// the span is unchanged but the rows are far better conditioned.
  /// null_space works on this matrix.
  Eigen::MatrixXd conditioned;

  int n_columns() const { return static_cast<int>(matrix.cols()); }
};

ClosureSystem build_closure_system_slices(const GateModel& model, double gate_time, int n_slices,
                                          Boundary boundary = Boundary::kZeroEndpoints);

ClosureSystem build_closure_system_fourier(const GateModel& model, double gate_time, int n_terms,
                                           Boundary boundary = Boundary::kZeroEndpoints);

/// Orthonormal (Euclidean) basis of the numerical null space, one vector per
/// column, from singular values below tolerance * sigma_max of the
/// row-normalized matrix. Throws kEmptyNullSpace.
struct NullSpaceBasis {
  Eigen::MatrixXd vectors;
  int dimension() const { return static_cast<int>(vectors.cols()); }
};

NullSpaceBasis null_space(const ClosureSystem& system, double tolerance = 1e-10);

/// Waveform inner product (1/t_g) int f g dt in coefficient space.
Eigen::MatrixXd waveform_gram(const ClosureSystem& system);

/// Re-expresses the basis so it is orthonormal in the waveform inner product.
/// Directions whose waveform norm is below tolerance (relative, squared) are
/// dropped; the sine/cosine set on [0, t_g] is overcomplete, so these are
/// near-duplicates whose large coefficients only amplify round-off.
NullSpaceBasis metric_orthonormalize(const NullSpaceBasis& basis, const ClosureSystem& system,
                                     double tolerance = 1e-7);

/// Symmetric bilinear form Q with delta_phi = x^T Q x for column coefficients x.
Eigen::MatrixXd phase_kernel(const GateModel& model, const ClosureSystem& system);

struct PhaseQuadraticForm {
  Eigen::MatrixXd matrix;  ///< P = B^T Q B, symmetrized
};

PhaseQuadraticForm phase_matrix(const NullSpaceBasis& basis, const GateModel& model,
                                const ClosureSystem& system);

struct OptimalWaveform {
  Method method = Method::kSlices;
  Eigen::VectorXd basis_coefficients;   ///< unit-norm c_opt
  Eigen::VectorXd column_coefficients;  ///< scaled physical coefficients B c_opt s
  Waveform waveform = Waveform::slices(1.0, {0.0});
  double top_eigenvalue = 0.0;     ///< delta_phi of the unit-norm waveform
  double second_eigenvalue = 0.0;  ///< next eigenvalue by magnitude (0 if none)
  double scale = 0.0;              ///< sqrt(pi / |lambda_1|)
  bool negative_phase = false;     ///< waveform implements delta_phi = -pi
  bool degenerate = false;         ///< |lambda_1| - |lambda_2| below tolerance
  int null_dimension = 0;
};

OptimalWaveform optimize(const PhaseQuadraticForm& form, const NullSpaceBasis& basis,
                         const ClosureSystem& system, double degeneracy_tolerance = 1e-9);

/// Multiplies the physical amplitude by `factor`.
void rescale(OptimalWaveform& w, double factor);

struct OptimizerOptions {
  Method method = Method::kSlices;
  int n_slices = 128;
  int n_terms = 32;
  Boundary boundary = Boundary::kZeroEndpoints;
  double svd_tolerance = 1e-10;
  double metric_tolerance = 1e-7;  ///< relative Gram floor; bounds coefficient growth
  double degeneracy_tolerance = 1e-9;
  SimulationOptions simulation;
};

struct SynthesisResult {
  OptimalWaveform optimal;
  GateReport report;
};

/// build -> null_space -> phase_matrix -> optimize -> gate_conditions.
SynthesisResult synthesize(const GateModel& model, double gate_time,
                           const OptimizerOptions& options = {});

ClosureSystem build_closure_system(const GateModel& model, double gate_time,
                                   const OptimizerOptions& options);

}  // namespace rykick

#endif  // RYKICK_WAVEFORM_OPTIMIZER_HPP
