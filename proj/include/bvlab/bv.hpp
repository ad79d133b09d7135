#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bvlab/bloch.hpp"
#include "bvlab/disorder.hpp"
#include "bvlab/errors.hpp"

namespace bvlab {

// The hidden n-bit string the oracle encodes, n >= 1.
class SecretString {
 public:
  explicit SecretString(std::vector<std::uint8_t> bits);
  static SecretString from_string(std::string_view text);  // e.g. "0110"
  static SecretString zeros(int n);

  int size() const { return static_cast<int>(bits_.size()); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  // Zero-based positions where the string has 0 (B_s) and 1 (complement).
  std::vector<int> zero_positions() const;
  std::vector<int> one_positions() const;

  std::string to_string() const;

 private:
  std::vector<std::uint8_t> bits_;
};

// One frozen draw of all 2n noisy Hadamard gates: the angles of the gates
// applied before (pre) and after (post) the oracle, one pair per qubit.
struct NoiseRealization {
  std::vector<BlochAngles> pre;
  std::vector<BlochAngles> post;
};

// All gates ideal: every angle pair is (pi/2, 0).
NoiseRealization noiseless_realization(int n);

// Probability of measuring exactly s after one query, closed product form:
// a |X|^2 factor per zero bit and a |Y|^2 factor per one bit, with
//   X = cos(t/2) cos(t'/2) + e^{i p} sin(t/2) sin(t'/2)
//   Y = e^{i p'} (cos(t/2) sin(t'/2) + e^{i p} sin(t/2) cos(t'/2)).
// Throws LengthMismatchError when the realization does not span s.
double success_probability(const SecretString& s, const NoiseRealization& r);

enum class StatevectorMode {
  PerQubit,   // per-qubit 2-vectors; the circuit has no entangling gate
  FullTensor  // materializes all 2^n amplitudes (debug, n <= 12)
};

// Independent oracle: evolves |0...0> through the pre-gates, the diagonal
// (-1)^{s_k} phase oracle, and the post-gates via explicit 2x2 matrix
// algebra, then returns |<s|psi>|^2. Caps n at 20.
double statevector_success_probability(
    const SecretString& s, const NoiseRealization& r,
    StatevectorMode mode = StatevectorMode::PerQubit);

// One-query classical baseline (1 - m) / 2^(n-1), where m is the mean
// no-flip probability of the disorder.
double classical_success(const ClassicalDisorder& model, int n);

}  // namespace bvlab
