#pragma once

#include <map>
#include <vector>

#include "lpforge/measure.hpp"

namespace lpforge {

// Per-atom, per-input class label. An atom ω carries, for input i, either
// sign ⊗ (x_i(ω) = 0) or a grid class k with
//   (k/(nN))·φ(ω) < |x_i(ω)| <= ((k+1)/(nN))·φ(ω),  k ∈ {0,...,nN-1},
// split by the sign of x_i(ω). Boundary values land in the lower class.
struct Label {
  enum class Sign { zero, plus, minus };
  int k = 0;
  Sign sign = Sign::zero;

  // ⊗ -> 0, (k,+) -> 1+2k, (k,-) -> 2+2k; used for ordering cells
  int encode() const {
    switch (sign) {
      case Sign::zero: return 0;
      case Sign::plus: return 1 + 2 * k;
      case Sign::minus: return 2 + 2 * k;
    }
    return 0;
  }

  bool operator==(const Label& o) const { return encode() == o.encode(); }
};

// A cell B_l: the atoms whose full label vector equals `key`.
struct Cell {
  std::vector<Label> key;            // one label per input index
  std::vector<std::size_t> atoms;    // indices into the space's atom list
};

template <class S>
struct LabeledPartition {
  SpacePtr space;
  int n = 0;                          // number of inputs
  int N = 0;                          // grid refinement parameter
  SimpleFunction<S> phi;              // Σ_j |x_j|
  std::vector<std::vector<Label>> labels;  // [atom][input]

  // Nonempty cells in deterministic (label-lexicographic) order,
  // including the all-⊗ cell when present.
  std::vector<Cell> cells() const {
    std::map<std::vector<int>, Cell> grouped;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      std::vector<int> code;
      code.reserve(labels[a].size());
      for (const Label& l : labels[a]) code.push_back(l.encode());
      auto [it, fresh] = grouped.try_emplace(std::move(code));
      if (fresh) it->second.key = labels[a];
      it->second.atoms.push_back(a);
    }
    std::vector<Cell> out;
    out.reserve(grouped.size());
    for (auto& [code, cell] : grouped) out.push_back(std::move(cell));
    return out;
  }
};

inline bool sgn_positive(double v) { return v > 0.0; }
inline bool sgn_positive(const Rat& v) { return sgn(v) > 0; }

// Assigns every (atom, input) pair its unique label. φ(ω) = 0 forces ⊗ for
// every input at ω.
template <class S>
LabeledPartition<S> partition_labels(const std::vector<SimpleFunction<S>>& xs,
                                     int N) {
  if (xs.empty()) throw ParameterError("partition_labels: empty input list");
  if (N < 1) throw ParameterError("partition_labels: N must be >= 1");
  for (const auto& x : xs) {
    x.validate();
    require_same_space(xs.front(), x, "partition_labels");
  }

  const int n = static_cast<int>(xs.size());
  const int grid = n * N;
  const SpacePtr space = xs.front().space;
  const std::size_t atom_count = space->size();

  SimpleFunction<S> phi = zero_function<S>(space);
  for (const auto& x : xs)
    for (std::size_t a = 0; a < atom_count; ++a)
      phi.values[a] += abs_scalar(x.values[a]);

  LabeledPartition<S> part{space, n, N, std::move(phi), {}};
  part.labels.assign(atom_count, std::vector<Label>(xs.size()));

  for (std::size_t a = 0; a < atom_count; ++a) {
    const S& ph = part.phi.values[a];
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const S& v = xs[i].values[a];
      Label& lab = part.labels[a][i];
      if (v == scalar_from_int<S>(0)) {
        lab = Label{0, Label::Sign::zero};
        continue;
      }
      const S mag = abs_scalar(v);
      const S t = mag * scalar_from_int<S>(grid);  // compare t with k·φ
      int k = grid - 1;
      for (int c = 0; c < grid; ++c) {
        if (t <= scalar_from_int<S>(c + 1) * ph) {
          k = c;
          break;
        }
      }
      lab.k = k;
      lab.sign = sgn_positive(v) ? Label::Sign::plus : Label::Sign::minus;
    }
  }
  return part;
}

}  // namespace lpforge
