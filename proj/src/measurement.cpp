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

#include "qbitsim/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

#include <omp.h>

#include "qbitsim/errors.hpp"

namespace qbitsim {
namespace {

void check_qbit_list(unsigned n, std::span<const unsigned> qbits) {
  std::uint64_t seen = 0;
  for (unsigned q : qbits) {
    if (q >= n) {
      throw RangeError("measured Qbit " + std::to_string(q) + " out of range for " +
                       std::to_string(n) + " Qbits");
    }
    if ((seen >> q) & 1U) throw ShapeError("Qbit " + std::to_string(q) + " measured twice");
    seen |= std::uint64_t{1} << q;
  }
}

/// Outcome bits of basis index x; qbits[0] lands in the most significant bit.
std::uint64_t gather_bits(std::uint64_t x, std::span<const unsigned> qbits) {
  std::uint64_t v = 0;
  for (unsigned q : qbits) v = (v << 1) | ((x >> q) & 1U);
  return v;
}

std::uint64_t scatter_bits(std::uint64_t value, std::span<const unsigned> qbits) {
  const std::size_t k = qbits.size();
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if ((value >> (k - 1 - i)) & 1U) x |= std::uint64_t{1} << qbits[i];
  }
  return x;
}

std::vector<double> outcome_probabilities(const StateVector& s, std::span<const unsigned> qbits) {
  std::vector<double> probs(std::size_t{1} << qbits.size(), 0.0);
  for (std::size_t x = 0; x < s.dim(); ++x) probs[gather_bits(x, qbits)] += std::norm(s[x]);
  return probs;
}

/// One uniform draw, cumulative walk in ascending outcome order. Rounding can
/// leave the draw above the final cumulative sum; the last outcome with
/// non-zero probability is returned then.
template <class ProbAt>
std::uint64_t sample_index(std::size_t count, ProbAt prob_at, RandomSource& rng) {
  const double u = rng.uniform();
  double cumulative = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::size_t x = 0; x < count; ++x) {
    const double p = prob_at(x);
    if (p <= 0.0) continue;
    cumulative += p;
    last_nonzero = x;
    if (u < cumulative) return x;
  }
  return last_nonzero;
}

/// Post-measurement state for outcome `value` of probability p > 0.
StateVector collapse(const StateVector& s, std::span<const unsigned> qbits, std::uint64_t value,
                     double p) {
  if (qbits.size() == s.n_qbits()) {
    return basis_state({scatter_bits(value, qbits), s.n_qbits()});
  }
  std::vector<Complex> amps(s.dim(), Complex{0.0});
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t x = 0; x < s.dim(); ++x) {
    if (gather_bits(x, qbits) == value) amps[x] = s[x] * scale;
  }
  return StateVector::from_amplitudes(s.n_qbits(), amps);
}

StateVector collapse_in_place(StateVector s, std::span<const unsigned> qbits,
                              std::uint64_t value, double p) {
  if (qbits.size() == s.n_qbits()) {
    auto amps = s.amplitudes();
    std::fill(amps.begin(), amps.end(), Complex{0.0});
    amps[scatter_bits(value, qbits)] = 1.0;
    return s;
  }
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t x = 0; x < s.dim(); ++x) {
    s[x] = gather_bits(x, qbits) == value ? s[x] * scale : Complex{0.0};
  }
  return s;
}

ProbabilityTable to_table(unsigned width, const std::vector<double>& probs) {
  ProbabilityTable t;
  t.width = width;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    if (probs[x] > 0.0) t.probabilities.emplace(x, probs[x]);
  }
  return t;
}

std::vector<unsigned> all_qbits_msb_first(unsigned n) {
  std::vector<unsigned> qbits(n);
  for (unsigned i = 0; i < n; ++i) qbits[i] = n - 1 - i;
  return qbits;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

double ProbabilityTable::at(std::uint64_t outcome) const {
  const auto it = probabilities.find(outcome);
  return it == probabilities.end() ? 0.0 : it->second;
}

double ProbabilityTable::total() const {
  double sum = 0.0;
  for (const auto& [x, p] : probabilities) sum += p;
  return sum;
}

ProbabilityTable distribution(const StateVector& s) {
  require_normalized(s, "distribution");
  ProbabilityTable t;
  t.width = s.n_qbits();
  for (std::size_t x = 0; x < s.dim(); ++x) {
    const double p = std::norm(s[x]);
    if (p > 0.0) t.probabilities.emplace(x, p);
  }
  return t;
}

ProbabilityTable partial_distribution(const StateVector& s, std::span<const unsigned> qbits) {
  check_qbit_list(s.n_qbits(), qbits);
  require_normalized(s, "partial_distribution");
  if (qbits.empty()) return ProbabilityTable{0, {{0, 1.0}}};
  return to_table(static_cast<unsigned>(qbits.size()), outcome_probabilities(s, qbits));
}

MeasurementOutcome measure_all(StateVector s, RandomSource& rng) {
  require_normalized(s, "measure_all");
  const std::uint64_t x =
      sample_index(s.dim(), [&](std::size_t i) { return std::norm(s[i]); }, rng);
  auto qbits = all_qbits_msb_first(s.n_qbits());
  auto amps = s.amplitudes();
  std::fill(amps.begin(), amps.end(), Complex{0.0});
  amps[x] = 1.0;
  return {x, std::move(qbits), std::move(s)};
}

MeasurementOutcome measure_subset(StateVector s, std::span<const unsigned> qbits,
                                  RandomSource& rng) {
  check_qbit_list(s.n_qbits(), qbits);
  require_normalized(s, "measure_subset");
  const auto probs = outcome_probabilities(s, qbits);
  const std::uint64_t x =
      sample_index(probs.size(), [&](std::size_t i) { return probs[i]; }, rng);
  StateVector residual = collapse_in_place(std::move(s), qbits, x, probs[x]);
  return {x, std::vector<unsigned>(qbits.begin(), qbits.end()), std::move(residual)};
}

StateVector force_outcome(const StateVector& s, std::span<const unsigned> qbits, std::uint64_t x) {
  check_qbit_list(s.n_qbits(), qbits);
  require_normalized(s, "force_outcome");
  if (x >= (std::uint64_t{1} << qbits.size())) {
    throw RangeError("outcome " + std::to_string(x) + " does not fit in " +
                     std::to_string(qbits.size()) + " measured bits");
  }
  double p = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (gather_bits(i, qbits) == x) p += std::norm(s[i]);
  }
  if (p <= kPostselectionFloor) {
    throw PostselectionError("outcome " + std::to_string(x) + " has probability " +
                             std::to_string(p));
  }
  return collapse(s, qbits, x, p);
}

MeasurementOutcome measure_in_basis(StateVector s, const UnitaryMatrix& u, RandomSource& rng) {
  const auto qbits = all_qbits_msb_first(s.n_qbits());
  apply_unitary_dense(s, u, qbits);
  return measure_all(std::move(s), rng);
}

MeasurementOutcome measure_in_basis(StateVector s, std::span<const Gate1> per_qbit,
                                    RandomSource& rng) {
  if (per_qbit.size() != s.n_qbits()) {
    throw ShapeError("per-Qbit basis change needs " + std::to_string(s.n_qbits()) +
                     " gates, got " + std::to_string(per_qbit.size()));
  }
  for (unsigned q = 0; q < s.n_qbits(); ++q) apply_1q(s, per_qbit[q], q);
  return measure_all(std::move(s), rng);
}

void check_program(const Program& p) {
  if (p.n_qbits < 1 || p.n_qbits > kMaxQbits) {
    throw RangeError("program Qbit count " + std::to_string(p.n_qbits) + " outside [1, " +
                     std::to_string(kMaxQbits) + "]");
  }
  if (p.init >= (std::uint64_t{1} << p.n_qbits)) {
    throw RangeError("init value " + std::to_string(p.init) + " does not fit in " +
                     std::to_string(p.n_qbits) + " Qbits");
  }
  for (const Instruction& ins : p.instructions) {
    std::visit(overloaded{
                   [&](const GateApplication& g) { check_application(g, p.n_qbits); },
                   [&](const Measure& m) { check_qbit_list(p.n_qbits, m.qbits); },
               },
               ins);
  }
}

Histogram run_shots(const Program& p, std::uint64_t shots, std::uint64_t seed, int workers) {
  check_program(p);
  Histogram hist;
  hist.seed = seed;
  hist.shots = shots;
  if (shots == 0) return hist;

  // Everything before the first measurement is deterministic: simulate once.
  const auto first_measure = std::find_if(p.instructions.begin(), p.instructions.end(),
                                          [](const Instruction& i) {
                                            return std::holds_alternative<Measure>(i);
                                          });
  StateVector prefix = basis_state({p.init, p.n_qbits});
  for (auto it = p.instructions.begin(); it != first_measure; ++it) {
    apply(prefix, std::get<GateApplication>(*it));
  }
  if (first_measure == p.instructions.end()) {
    hist.counts[""] = shots;
    return hist;
  }
  const std::span<const Instruction> tail(first_measure, p.instructions.end());

  // A single trailing measurement samples from one precomputed table; this
  // consumes the same draw as measure_subset and so gives identical results.
  std::vector<double> final_probs;
  const bool single_final_measure = tail.size() == 1;
  if (single_final_measure) {
    final_probs = outcome_probabilities(prefix, std::get<Measure>(tail.front()).qbits);
  }

  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::exception_ptr failure;
#pragma omp parallel num_threads(threads)
  {
    std::map<std::string, std::uint64_t> local;
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(shots); ++k) {
      try {
        RandomSource rng = RandomSource::for_shot(seed, static_cast<std::uint64_t>(k));
        std::string label;
        if (single_final_measure) {
          const auto& m = std::get<Measure>(tail.front());
          const std::uint64_t x = sample_index(
              final_probs.size(), [&](std::size_t i) { return final_probs[i]; }, rng);
          label = to_bitstring(x, static_cast<unsigned>(m.qbits.size()));
        } else {
          StateVector state = prefix;
          for (const Instruction& ins : tail) {
            if (const auto* g = std::get_if<GateApplication>(&ins)) {
              apply(state, *g);
              continue;
            }
            const auto& m = std::get<Measure>(ins);
            MeasurementOutcome out = measure_subset(std::move(state), m.qbits, rng);
            label += to_bitstring(out.value, static_cast<unsigned>(m.qbits.size()));
            state = std::move(out.residual_state);
          }
        }
        ++local[label];
      } catch (...) {
#pragma omp critical(qbitsim_run_shots_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(qbitsim_run_shots_merge)
    for (const auto& [label, count] : local) hist.counts[label] += count;
  }
  if (failure) std::rethrow_exception(failure);
  return hist;
}

std::optional<std::map<std::string, double>> exact_distribution(const Program& p) {
  check_program(p);
  StateVector s = basis_state({p.init, p.n_qbits});
  std::vector<const Measure*> measures;
  for (const Instruction& ins : p.instructions) {
    if (const auto* g = std::get_if<GateApplication>(&ins)) {
      if (!measures.empty()) return std::nullopt;
      apply(s, *g);
    } else {
      measures.push_back(&std::get<Measure>(ins));
    }
  }
  // Union of measured Qbits in first-appearance order.
  std::vector<unsigned> measured;
  for (const Measure* m : measures) {
    for (unsigned q : m->qbits) {
      if (std::find(measured.begin(), measured.end(), q) == measured.end()) measured.push_back(q);
    }
  }
  const ProbabilityTable table = partial_distribution(s, measured);
  std::map<std::string, double> out;
  const auto width = measured.size();
  for (const auto& [value, prob] : table.probabilities) {
    std::string label;
    for (const Measure* m : measures) {
      for (unsigned q : m->qbits) {
        const auto pos = static_cast<std::size_t>(
            std::find(measured.begin(), measured.end(), q) - measured.begin());
        label += ((value >> (width - 1 - pos)) & 1U) ? '1' : '0';
      }
    }
    out[label] += prob;
  }
  return out;
}

}  // namespace qbitsim
