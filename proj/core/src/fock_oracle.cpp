#include "bcsent/fock_oracle.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "bcsent/errors.hpp"

namespace bcsent {

namespace {

constexpr double kNormTol = 1e-10;

void check_modes(std::span<const double> u, std::span<const double> v, int cap) {
  if (u.size() != v.size()) throw InvalidArgument("u and v must have equal length");
  if (u.empty()) throw InvalidArgument("at least one mode is required");
  if (u.size() > static_cast<std::size_t>(cap))
    throw CapacityError(std::to_string(u.size()) + " modes exceed the cap of " + std::to_string(cap));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!std::isfinite(u[i]) || !std::isfinite(v[i]))
      throw InvalidArgument("mode " + std::to_string(i) + ": non-finite amplitude");
    if (std::abs(u[i] * u[i] + v[i] * v[i] - 1.0) > kNormTol)
      throw InvalidArgument("mode " + std::to_string(i) + ": u^2 + v^2 != 1");
  }
}

std::vector<double> expand_product(std::span<const double> u, std::span<const double> v, double sign) {
  std::vector<double> amps(std::size_t{1} << u.size());
  amps[0] = 1.0;
  for (std::size_t mode = 0; mode < u.size(); ++mode) {
    const std::size_t filled = std::size_t{1} << mode;
    for (std::size_t s = 0; s < filled; ++s) {
      amps[s | filled] = amps[s] * sign * v[mode];
      amps[s] *= u[mode];
    }
  }
  return amps;
}

}  // namespace

PairModeState::PairModeState(std::vector<double> amplitudes, int mode_cap)
    : amplitudes_(std::move(amplitudes)) {
  const std::size_t n = amplitudes_.size();
  if (n < 2 || !std::has_single_bit(n))
    throw InvalidArgument("state length must be 2^M with M >= 1");
  num_modes_ = std::countr_zero(n);
  if (num_modes_ > mode_cap)
    throw CapacityError(std::to_string(num_modes_) + " modes exceed the cap of " + std::to_string(mode_cap));
  double norm = 0.0;
  for (double a : amplitudes_) norm += a * a;
  if (std::abs(norm - 1.0) > kNormTol) throw InvalidArgument("state is not normalized");
}

PairModeState build_bcs_state(std::span<const double> u, std::span<const double> v, int mode_cap) {
  check_modes(u, v, mode_cap);
  return PairModeState(expand_product(u, v, 1.0), mode_cap);
}

PairModeState time_reverse(std::span<const double> u, std::span<const double> v, int mode_cap) {
  check_modes(u, v, mode_cap);
  return PairModeState(expand_product(u, v, -1.0), mode_cap);
}

PairModeState parity_flip(const PairModeState& state) {
  std::vector<double> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t s = 0; s < amps.size(); ++s)
    if (std::popcount(s) % 2 == 1) amps[s] = -amps[s];
  return PairModeState(std::move(amps), state.num_modes());
}

PairModeState spin_flip(const PairModeState& state) {
  const auto src = state.amplitudes();
  const std::size_t mask = src.size() - 1;
  std::vector<double> amps(src.size());
  for (std::size_t s = 0; s < src.size(); ++s)
    amps[~s & mask] = std::popcount(s) % 2 == 1 ? -src[s] : src[s];
  return PairModeState(std::move(amps), state.num_modes());
}

double overlap(const PairModeState& a, const PairModeState& b) {
  if (a.num_modes() != b.num_modes()) throw InvalidArgument("overlap: mode counts differ");
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  double sum = 0.0;
  for (std::size_t s = 0; s < x.size(); ++s) sum += x[s] * y[s];
  return sum;
}

}  // namespace bcsent
