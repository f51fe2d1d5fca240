#include "su2cs/fock_oracle.hpp"

#include <cmath>
#include <string>

#include "su2cs/errors.hpp"
#include "su2cs/numerics.hpp"

namespace su2cs {

FockSpace::FockSpace(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw DomainError("FockSpace: n_max must be >= 0, got " + std::to_string(n_max));
  states_.reserve(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(n_max + 2) / 2);
  for (int total = 0; total <= n_max; ++total)
    for (int n_a = 0; n_a <= total; ++n_a) states_.emplace_back(n_a, total - n_a);
}

std::size_t FockSpace::block_offset(int total) const {
  if (total < 0 || total > n_max_) throw DomainError("FockSpace: block N out of range");
  return static_cast<std::size_t>(total) * static_cast<std::size_t>(total + 1) / 2;
}

std::size_t FockSpace::block_size(int total) const {
  if (total < 0 || total > n_max_) throw DomainError("FockSpace: block N out of range");
  return static_cast<std::size_t>(total) + 1;
}

std::size_t FockSpace::index_of(int n_a, int n_b) const {
  if (n_a < 0 || n_b < 0 || n_a + n_b > n_max_) throw DomainError("FockSpace: occupation outside truncated space");
  return block_offset(n_a + n_b) + static_cast<std::size_t>(n_a);
}

std::pair<int, int> FockSpace::state_at(std::size_t index) const {
  if (index >= states_.size()) throw DomainError("FockSpace: index out of range");
  return states_[index];
}

FockSpace build_space(int n_max) { return FockSpace(n_max); }

LadderOperators ladder_operators(const FockSpace& space) {
  const std::size_t n = space.dim();
  LadderOperators ops{OperatorMatrix(n), OperatorMatrix(n), OperatorMatrix(n), OperatorMatrix(n)};
  for (std::size_t col = 0; col < n; ++col) {
    const auto [n_a, n_b] = space.state_at(col);
    if (n_a > 0) ops.a(space.index_of(n_a - 1, n_b), col) = std::sqrt(static_cast<double>(n_a));
    if (n_b > 0) ops.b(space.index_of(n_a, n_b - 1), col) = std::sqrt(static_cast<double>(n_b));
    if (n_a + n_b < space.n_max()) {
      ops.a_dag(space.index_of(n_a + 1, n_b), col) = std::sqrt(static_cast<double>(n_a + 1));
      ops.b_dag(space.index_of(n_a, n_b + 1), col) = std::sqrt(static_cast<double>(n_b + 1));
    }
  }
  return ops;
}

namespace {

// a^dag a and b^dag b: the product sqrt(n) sqrt(n) taken exactly as n.
struct Occupations {
  OperatorMatrix na, nb;
};

Occupations occupations(const FockSpace& space) {
  std::vector<double> na, nb;
  na.reserve(space.dim());
  nb.reserve(space.dim());
  for (const auto& [a, b] : space.states()) {
    na.push_back(a);
    nb.push_back(b);
  }
  return {OperatorMatrix::diagonal(std::span<const double>(na)), OperatorMatrix::diagonal(std::span<const double>(nb))};
}

}  // namespace

OperatorMatrix build_hamiltonian(const OscillatorSpec& spec, const FockSpace& space) {
  require_valid(spec);
  const LadderOperators l = ladder_operators(space);
  const Occupations occ = occupations(space);
  OperatorMatrix h = spec.omega1 * occ.na;
  h += spec.omega2 * occ.nb;
  h += spec.lambda * (l.a_dag * l.b + l.b_dag * l.a);
  return h;
}

JordanSchwinger jordan_schwinger(const FockSpace& space) {
  const LadderOperators l = ladder_operators(space);
  const Occupations occ = occupations(space);
  return {l.a_dag * l.b, l.b_dag * l.a, 0.5 * (occ.na - occ.nb), occ.na + occ.nb};
}

Su2Triple transformed_js_isotropic(const FockSpace& space) {
  const LadderOperators l = ladder_operators(space);
  const OperatorMatrix ab = l.a_dag * l.b;
  const OperatorMatrix ba = l.b_dag * l.a;
  const Occupations occ = occupations(space);
  return {0.5 * (ab - ba - occ.na + occ.nb), 0.5 * (ba - ab - occ.na + occ.nb), 0.5 * (ab + ba)};
}

OperatorMatrix extract_block(const OperatorMatrix& m, const FockSpace& space, int total) {
  if (m.dim() != space.dim()) throw ContractError("extract_block: operator/space dimension mismatch");
  const std::size_t off = space.block_offset(total);
  const std::size_t size = space.block_size(total);
  OperatorMatrix out(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = m(off + r, off + c);
  return out;
}

std::vector<double> block_spectrum(const OscillatorSpec& spec, int total, const FockSpace& space) {
  if (total < 0 || total > space.n_max()) throw DomainError("block_spectrum: N outside 0..n_max");
  return hermitian_eigenvalues(extract_block(build_hamiltonian(spec, space), space, total));
}

FockState propagate(const OscillatorSpec& spec, const FockSpace& space, const FockState& psi, double t) {
  if (psi.n_max != space.n_max() || psi.amplitudes.size() != space.dim())
    throw ContractError("propagate: state does not belong to this space");
  if (std::abs(norm2(psi.amplitudes) - 1.0) > 1e-10) throw ContractError("propagate: state is not normalized");
  if (!std::isfinite(t)) throw DomainError("propagate: t must be finite");

  const OperatorMatrix h = build_hamiltonian(spec, space);
  FockState out{psi.n_max, std::vector<cplx>(psi.amplitudes.size())};
  for (int total = 0; total <= space.n_max(); ++total) {
    const std::size_t off = space.block_offset(total);
    const std::size_t size = space.block_size(total);
    const std::span<const cplx> in(psi.amplitudes.data() + off, size);
    bool empty = true;
    for (const auto& v : in) empty = empty && v == cplx{0.0, 0.0};
    if (empty) continue;
    const OperatorMatrix u = matrix_exp(cplx{0.0, -t} * extract_block(h, space, total));
    const auto block = apply(u, in);
    std::copy(block.begin(), block.end(), out.amplitudes.begin() + static_cast<std::ptrdiff_t>(off));
  }
  return out;
}

FockState embed(const FockSpace& space, const StateVector& state) {
  const int total = state.j.twice();
  if (total > space.n_max()) throw DomainError("embed: block N = 2j exceeds n_max");
  FockState out{space.n_max(), std::vector<cplx>(space.dim())};
  const std::size_t off = space.block_offset(total);
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) out.amplitudes[off + i] = state.amplitudes[i];
  return out;
}

bool is_block_diagonal(const OperatorMatrix& m, const FockSpace& space) {
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (space.total_of(r) != space.total_of(c) && m(r, c) != cplx{0.0, 0.0}) return false;
  return true;
}

}  // namespace su2cs
