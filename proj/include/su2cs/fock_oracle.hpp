#pragma once

#include <utility>
#include <vector>

#include "su2cs/coherent.hpp"
#include "su2cs/coupled_osc.hpp"
#include "su2cs/operator_matrix.hpp"

namespace su2cs {

/// Two-mode occupation basis truncated by total quantum number
/// N = n_a + n_b <= n_max. States are grouped by N ascending, n_a ascending
/// inside a block, so block N maps onto the j = N/2 irrep with
/// mu = (n_a - n_b)/2 ascending.
class FockSpace {
 public:
  /// Throws DomainError for n_max < 0.
  explicit FockSpace(int n_max);

  int n_max() const noexcept { return n_max_; }
  std::size_t dim() const noexcept { return states_.size(); }
  const std::vector<std::pair<int, int>>& states() const noexcept { return states_; }

  std::size_t index_of(int n_a, int n_b) const;
  std::pair<int, int> state_at(std::size_t index) const;
  std::size_t block_offset(int total) const;
  std::size_t block_size(int total) const;
  int total_of(std::size_t index) const { return states_.at(index).first + states_.at(index).second; }

 private:
  int n_max_;
  std::vector<std::pair<int, int>> states_;
};

FockSpace build_space(int n_max);

/// Amplitudes over the full truncated basis of `space`.
struct FockState {
  int n_max;
  std::vector<cplx> amplitudes;
};

/// a, a^dag, b, b^dag on the truncated space. Creation operators drop the
/// component that would leave the space (only the top block is affected).
struct LadderOperators {
  OperatorMatrix a, a_dag, b, b_dag;
};
LadderOperators ladder_operators(const FockSpace& space);

/// H assembled from products of ladder matrices. Every product used
/// (a^dag a, b^dag b, a^dag b, b^dag a) is exact under total-N truncation.
/// The number operators a^dag a, b^dag b are the occupation diagonals
/// (sqrt(n) sqrt(n) taken as n) here and in the operators below.
OperatorMatrix build_hamiltonian(const OscillatorSpec& spec, const FockSpace& space);

struct JordanSchwinger {
  OperatorMatrix plus;    ///< a^dag b
  OperatorMatrix minus;   ///< b^dag a
  OperatorMatrix zero;    ///< (a^dag a - b^dag b) / 2
  OperatorMatrix number;  ///< a^dag a + b^dag b
};
JordanSchwinger jordan_schwinger(const FockSpace& space);

/// Isotropic-case transformed generators written in the two modes:
///   I+ = (a^dag b - b^dag a - a^dag a + b^dag b) / 2
///   I- = (b^dag a - a^dag b - a^dag a + b^dag b) / 2
///   I0 = (a^dag b + b^dag a) / 2
Su2Triple transformed_js_isotropic(const FockSpace& space);

/// Restriction of an operator on the full space to the block of total N.
OperatorMatrix extract_block(const OperatorMatrix& m, const FockSpace& space, int total);

/// Eigenvalues of the N block of H, ascending.
std::vector<double> block_spectrum(const OscillatorSpec& spec, int total, const FockSpace& space);

/// exp(-i H t) psi, one matrix exponential per block. Requires ||psi|| = 1
/// within 1e-10 (ContractError otherwise).
FockState propagate(const OscillatorSpec& spec, const FockSpace& space, const FockState& psi, double t);

/// Places an irrep state into block N = 2j.
FockState embed(const FockSpace& space, const StateVector& state);

/// True when every matrix element between different-N states is exactly 0.
bool is_block_diagonal(const OperatorMatrix& m, const FockSpace& space);

}  // namespace su2cs
