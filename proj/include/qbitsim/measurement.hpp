// Copyright 2026 The qbitsim Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qbitsim/gates.hpp"
#include "qbitsim/random.hpp"
#include "qbitsim/state.hpp"

namespace qbitsim {

/// Outcomes whose probability falls at or below this are treated as impossible
/// when forcing a measurement result.
inline constexpr double kPostselectionFloor = 1e-15;

/// Outcome value -> probability over `width` measured bits. Outcomes with
/// probability exactly zero are omitted.
struct ProbabilityTable {
  unsigned width = 0;
  std::map<std::uint64_t, double> probabilities;

  double at(std::uint64_t outcome) const;
  double total() const;
};

struct MeasurementOutcome {
  /// Measured bits; measured_qbits[0] is the most significant.
  std::uint64_t value = 0;
  std::vector<unsigned> measured_qbits;
  /// State of the whole register after the measurement.
  StateVector residual_state;
};

/// Born distribution p_x = |a_x|^2 over all Qbits. Throws NormError.
ProbabilityTable distribution(const StateVector& s);

/// Distribution of the listed Qbits with the rest marginalized;
/// qbits[0] is the most significant outcome bit. An empty list gives {0: 1}.
ProbabilityTable partial_distribution(const StateVector& s, std::span<const unsigned> qbits);

/// Measures every Qbit: draws x from the Born distribution (one uniform draw,
/// cumulative walk in index order) and collapses to |x>_n.
MeasurementOutcome measure_all(StateVector s, RandomSource& rng);

/// Measures the listed Qbits. The residual fixes them to the drawn bits and
/// rescales the surviving amplitudes by p_x^{-1/2}.
MeasurementOutcome measure_subset(StateVector s, std::span<const unsigned> qbits,
                                  RandomSource& rng);

/// Deterministic post-measurement state for outcome x of the listed Qbits.
/// Throws PostselectionError when p_x <= kPostselectionFloor. When every Qbit
/// is listed the result is exactly basis_state(x).
StateVector force_outcome(const StateVector& s, std::span<const unsigned> qbits, std::uint64_t x);

/// Applies u to the whole register (Qbit n-1 is u's most significant index
/// bit), then measures every Qbit.
MeasurementOutcome measure_in_basis(StateVector s, const UnitaryMatrix& u, RandomSource& rng);

/// Per-Qbit basis change: per_qbit[q] is applied to Qbit q, then every Qbit is
/// measured. Throws ShapeError unless per_qbit.size() == n.
MeasurementOutcome measure_in_basis(StateVector s, std::span<const Gate1> per_qbit,
                                    RandomSource& rng);

/// Measure statement inside an executable program.
struct Measure {
  std::vector<unsigned> qbits;
  bool operator==(const Measure&) const = default;
};

using Instruction = std::variant<GateApplication, Measure>;

/// Fully validated, executable circuit.
struct Program {
  unsigned n_qbits = 1;
  std::uint64_t init = 0;
  std::vector<Instruction> instructions;
};

/// Throws RangeError / ShapeError for bad indices, repeated measured Qbits or
/// an init value that does not fit.
void check_program(const Program& p);

/// Outcome label -> count. A label is the bit string of each measure
/// statement (highest-weight bit first), concatenated in program order.
struct Histogram {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
};

/// Runs the program `shots` times. Shot k draws from
/// RandomSource::for_shot(seed, k), so the result does not depend on
/// `workers` (0 = OpenMP default thread count).
Histogram run_shots(const Program& p, std::uint64_t shots, std::uint64_t seed, int workers = 0);

/// Exact label -> probability when every measure statement comes after the
/// last gate; std::nullopt when a measurement is followed by a gate.
std::optional<std::map<std::string, double>> exact_distribution(const Program& p);

}  // namespace qbitsim
