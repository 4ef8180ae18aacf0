#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bruhatkit::flagdyn {

using Assignment = std::vector<std::vector<int>>;

struct FlagType {
  int n = 0;
  std::vector<int> blocks;  // composition of n

  std::vector<int> partial_sums() const;  // excludes the final n
  int steps() const { return static_cast<int>(blocks.size()); }
  int dim() const;  // sum over j < j' of b_j * b_j'
};

// A flag stored as an orthonormal frame; the flag is the chain of column
// spans at the partial sums of the blocks.
struct FlagPoint {
  Eigen::MatrixXd frame;  // n x n orthogonal
  FlagType type;
};

struct SplitFlow {
  Eigen::VectorXd h_diag;  // nonincreasing, trace zero
  std::vector<int> eigen_mults;

  static SplitFlow from_multiplicities(const std::vector<int>& mults);
  std::vector<int> partial_sums() const;  // cumulative multiplicities, full list
};

struct IwasawaFactors {
  Eigen::MatrixXd k, a, n;
};

// g = K A N with K orthogonal, A positive diagonal, N unit upper triangular.
IwasawaFactors iwasawa(const Eigen::MatrixXd& g);

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& m);  // QR with positive diag(R)
FlagPoint make_flag(const Eigen::MatrixXd& invertible_frame, FlagType type);
FlagPoint random_flag(const FlagType& type, std::mt19937_64& rng);

double chordal_distance(const FlagPoint& a, const FlagPoint& b);

FlagPoint flow(const SplitFlow& h, double t, const FlagPoint& b);

Assignment block_assignment_of(const SplitFlow& h, const FlagPoint& b);

struct NumericalComponent {
  int id = 0;
  Assignment assignment;
  std::vector<FlagPoint> samples;
  int est_dim = 0;
  double sv_gap = 0.0;  // ratio kept/discarded singular value; inf when clean
};

std::vector<Assignment> contingency_tables(const std::vector<int>& rows,
                                           const std::vector<int>& cols);

std::vector<NumericalComponent> enumerate_fixed_components(const SplitFlow& h,
                                                           const FlagType& type,
                                                           std::uint64_t seed = 1,
                                                           int samples_per_component = 4);

struct DimEstimate {
  int dim = 0;
  double gap = 0.0;
};
DimEstimate estimate_component_dim(const SplitFlow& h, const NumericalComponent& c);

// Count of expanding eigenvalues of the time-one linearized flow at a
// fixed point, via finite differences in a graph chart.
int unstable_rank(const SplitFlow& h, const FlagPoint& fixed_sample);

struct LimitResult {
  FlagPoint limit;
  int steps = 0;
  bool converged = false;
  int component = -1;  // index into a component list, when one is supplied
  std::vector<double> curve;  // successive chordal step sizes, when recorded
};

LimitResult limit_point(const SplitFlow& h, const FlagPoint& b, int direction,
                        const std::vector<NumericalComponent>* components = nullptr,
                        int k_max = 500, double tol = 1e-9, bool record_curve = false);

struct VerifyReport {
  int n = 0;
  std::vector<int> mults;
  FlagType type;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<NumericalComponent> components;
  std::vector<int> predicted_dims;  // aligned with components; -1 = no prediction
  double min_pairwise_distance = 0.0;
  std::vector<std::string> violations;
};

// Disjointness and invariance checks for the fixed components; optional
// predicted (assignment, dim) pairs and an expected component count are
// reconciled into the report.
VerifyReport verify_corollary(const SplitFlow& h, const FlagType& type, int trials,
                              std::uint64_t seed,
                              const std::vector<std::pair<Assignment, int>>* predicted = nullptr,
                              int expected_count = -1);

}  // namespace bruhatkit::flagdyn
