#pragma once

#include <span>
#include <string>
#include <vector>

#include "nrange/numkit.hpp"
#include "nrange/planegeom.hpp"

namespace nrange::normcomp {

/// A certified normal compression built from a partition of the spectrum:
/// block J_i carries convex weights t_{ij} representing c_i, and the frame
/// column w_i places sqrt(t_{ij}) at the eigenvector slots of J_i.
struct PartitionWitness {
  std::vector<std::vector<int>> partition;      // 0-based index blocks
  std::vector<std::vector<double>> weights;     // per block, aligned with partition
  numkit::Frame frame;
  std::vector<cplx> compression_diag;           // the certified c_i
  double residual_fro = 0.0;                    // ||F* diag(z) F - diag(c)||_F
};

/// Build the partition compression for targets c_i in conv{z_j : j in J_i}.
/// Membership is checked per block (point / segment / 2D hull as the block
/// size dictates); failures report the violating block and its distance.
/// Weights are the minimum-norm nonnegative barycentric representation, so
/// blocks larger than three resolve deterministically.
PartitionWitness construct_partition_compression(std::span<const cplx> z,
                                                 const std::vector<std::vector<int>>& partition,
                                                 std::span<const cplx> targets);

/// a_j <= b_j <= a_{N-k+j} for all j, with 1e-12 slack on the comparisons.
bool interlacing_check(std::span<const double> a, std::span<const double> b);

/// Rank-(N-1) Hermitian witness for strictly interlacing data: returns the
/// frame orthogonal to the unit vector v with
///   |v_j|^2 = prod_i (b_i - a_j) / prod_{i != j} (a_i - a_j),
/// and verifies that the compression's spectrum reproduces b within 1e-8.
numkit::Frame construct_interlacing_compression(std::span<const double> a,
                                                std::span<const double> b);

/// True iff all points are collinear (total-least-squares residual <= 1e-9)
/// and, projected to the common line, sort as z,c,z,c,...,z. The two lists
/// must share no element (pairwise distance > 1e-10).
bool fanpall_collinear_alternating(std::span<const cplx> z, std::span<const cplx> c);

struct NecessityReport {
  bool ok = true;
  std::vector<int> violating_subset;  // first J with conv{c} disjoint from conv{z_J}
};

/// conv{c_1..c_k} meets conv{z_j : j in J} for every |J| = N-k+1. N <= 20.
NecessityReport necessary_condition_check(std::span<const cplx> c, std::span<const cplx> z);

struct Rank2Witness {
  numkit::Frame frame;       // columns (u, w): diag(a, b) = F* diag(z) F
  double residual_fro = 0.0;
  std::string route;         // "partition" or "wedge"
};

/// Rank-2 witness for a, b in the rank-2 numerical range of diag(z), where the
/// z_j are distinct, extreme in their hull and counterclockwise. Even N and
/// odd N >= 7 go through an alternating partition; N = 5 walks the wedge
/// decomposition, locating b on a segment from an eigenvalue to the matching
/// boundary curve.
Rank2Witness construct_rank2_witness(std::span<const cplx> z, cplx a, cplx b);

}  // namespace nrange::normcomp
