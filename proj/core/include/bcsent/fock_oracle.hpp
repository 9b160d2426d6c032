#pragma once

// Exact BCS states on a handful of pair modes, stored densely in the
// pair-occupation basis. Basis index bit i (little-endian) set means mode i
// holds a Cooper pair b†_i = c†_{i↑} c†_{−i↓}. Pair operators on distinct
// modes commute, so no fermionic sign bookkeeping arises in this basis.

#include <cstddef>
#include <span>
#include <vector>

namespace bcsent {

class PairModeState {
 public:
  static constexpr int default_mode_cap = 16;

  /// Wraps raw real coefficients. Length must be 2^M with 1 <= M <= cap and
  /// the norm must be 1 within 1e-10; throws InvalidArgument / CapacityError.
  explicit PairModeState(std::vector<double> amplitudes, int mode_cap = default_mode_cap);

  int num_modes() const noexcept { return num_modes_; }
  std::span<const double> amplitudes() const noexcept { return amplitudes_; }
  double amplitude(std::size_t pattern) const { return amplitudes_.at(pattern); }

 private:
  int num_modes_ = 0;
  std::vector<double> amplitudes_;
};

/// ∏_i (u_i + v_i b†_i)|0⟩: the coefficient of pattern S is ∏_{i∈S} v_i ∏_{i∉S} u_i.
/// Requires equal lengths M >= 1 and u_i² + v_i² = 1 within 1e-10.
PairModeState build_bcs_state(std::span<const double> u, std::span<const double> v,
                              int mode_cap = PairModeState::default_mode_cap);

/// Time-reversed partner of the θ = 0 BCS state: the θ = π state, i.e.
/// build_bcs_state(u, −v).
PairModeState time_reverse(std::span<const double> u, std::span<const double> v,
                           int mode_cap = PairModeState::default_mode_cap);

/// Multiplies the coefficient of each pattern by (−1)^{pairs}; on product
/// states this is the v → −v map, and it applies to arbitrary pair states.
PairModeState parity_flip(const PairModeState& state);

/// Wootters' spin flip σ_y^{⊗M}|ψ*⟩ for a real state with each mode read as
/// a qubit, with the global phase i^M dropped: coefficient of the
/// complement of S becomes (−1)^{|S|} c_S.
PairModeState spin_flip(const PairModeState& state);

/// Real inner product Σ_S a_S b_S. Throws InvalidArgument on mode-count mismatch.
double overlap(const PairModeState& a, const PairModeState& b);

}  // namespace bcsent
