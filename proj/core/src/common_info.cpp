// Copyright 2026 The oneshot Authors. All rights reserved.
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

#include "oneshot/common_info.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oneshot/smooth_entropy.hpp"
#include "oneshot/util.hpp"

namespace oneshot {
namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct Atom {
  std::size_t x, y;
  double mass;
};

std::vector<Atom> support_atoms(const JointDistribution& j) {
  std::vector<Atom> atoms;
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) {
      if (j.at(x, y) > kZeroAtom) atoms.push_back({x, y, j.at(x, y)});
    }
  }
  return atoms;
}

// Component id per atom for the alive subset; returns the component count.
std::size_t components(const std::vector<Atom>& atoms, const std::vector<bool>& alive,
                       std::size_t nx, std::size_t ny, std::vector<int>* comp_of_atom) {
  UnionFind uf(nx + ny);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (alive[i]) uf.merge(atoms[i].x, nx + atoms[i].y);
  }
  std::vector<int> id(nx + ny, -1);
  int next = 0;
  if (comp_of_atom) comp_of_atom->assign(atoms.size(), -1);
  std::size_t count = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!alive[i]) continue;
    std::size_t root = uf.find(atoms[i].x);
    if (id[root] < 0) {
      id[root] = next++;
      ++count;
    }
    if (comp_of_atom) (*comp_of_atom)[i] = id[root];
  }
  return count;
}

// Moves the deleted atom's mass onto the surviving atoms of the same row,
// proportionally; falls back to all survivors when the row died with it.
void redistribute(std::vector<Atom>& atoms, std::vector<double>& mass,
                  const std::vector<bool>& alive, std::size_t deleted) {
  double moved = mass[deleted];
  double row_total = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (alive[i] && atoms[i].x == atoms[deleted].x) row_total += mass[i];
  }
  if (row_total > kZeroAtom) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (alive[i] && atoms[i].x == atoms[deleted].x) {
        mass[i] += moved * mass[i] / row_total;
      }
    }
  } else {
    double total = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (alive[i]) total += mass[i];
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (alive[i]) mass[i] += moved * mass[i] / total;
    }
  }
  mass[deleted] = 0.0;
}

std::vector<double> block_masses(const std::vector<Atom>& atoms,
                                 const std::vector<double>& mass,
                                 const std::vector<bool>& alive,
                                 const std::vector<int>& comp_of_atom, std::size_t k) {
  std::vector<double> nu(k, 0.0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (alive[i]) nu[comp_of_atom[i]] += mass[i];
  }
  return nu;
}

double flattened_min_entropy(const std::vector<double>& nu, double residual) {
  double cap = cap_level(nu, std::vector<double>(nu.size(), 1.0), residual);
  double target = std::max(1.0 / static_cast<double>(nu.size()), cap);
  double worst = 0.0;
  for (double v : nu) worst = std::max(worst, std::min(v, target));
  // Receivers never rise above the cap, so the flattened maximum is the
  // capped maximum.
  return -std::log2(worst);
}

// Deletion whose removal raises the component count the most; candidates are
// compared by (mass, -count gain, index).
struct Candidate {
  std::size_t atom = 0;
  double mass = 0.0;
  std::size_t gain = 0;
  bool valid = false;
};

Candidate best_deletion(const std::vector<Atom>& atoms, const std::vector<double>& mass,
                        std::vector<bool>& alive, std::size_t nx, std::size_t ny,
                        std::size_t current_components, double budget_left) {
  Candidate best;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!alive[i] || mass[i] > budget_left + kMassSlack) continue;
    alive[i] = false;
    std::size_t k = components(atoms, alive, nx, ny, nullptr);
    alive[i] = true;
    if (k <= current_components) continue;
    std::size_t gain = k - current_components;
    bool better = !best.valid || mass[i] < best.mass - kZeroAtom ||
                  (std::abs(mass[i] - best.mass) <= kZeroAtom && gain > best.gain);
    if (better) best = {i, mass[i], gain, true};
  }
  return best;
}

}  // namespace

CommonPartition gacs_korner(const JointDistribution& j) {
  std::vector<Atom> atoms = support_atoms(j);
  std::vector<bool> alive(atoms.size(), true);
  std::vector<int> comp;
  std::size_t k = components(atoms, alive, j.nx(), j.ny(), &comp);

  CommonPartition cp;
  cp.x_labels = j.x_labels;
  cp.y_labels = j.y_labels;
  cp.blocks.resize(k);
  cp.block_mass.assign(k, 0.0);
  cp.block_of_x.assign(j.nx(), -1);
  cp.block_of_y.assign(j.ny(), -1);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    int b = comp[i];
    cp.blocks[b].emplace_back(atoms[i].x, atoms[i].y);
    cp.block_mass[b] += atoms[i].mass;
    cp.block_of_x[atoms[i].x] = b;
    cp.block_of_y[atoms[i].y] = b;
  }
  return cp;
}

double common_entropy(const CommonPartition& cp) {
  double h = 0.0;
  for (double m : cp.block_mass) {
    if (m > kZeroAtom) h -= m * std::log2(m);
  }
  return h;
}

double common_min_entropy(const CommonPartition& cp) {
  double worst = 0.0;
  for (double m : cp.block_mass) worst = std::max(worst, m);
  return -std::log2(worst);
}

CminResult c_min_lower(const JointDistribution& j, Epsilon eps) {
  std::vector<Atom> atoms = support_atoms(j);
  const std::size_t nx = j.nx(), ny = j.ny();

  // Walk the greedy deletion sequence, scoring every prefix (deleting
  // nothing included); longer prefixes of the same sequence are what a
  // bigger budget buys, so the best-prefix value is monotone in eps.
  std::vector<bool> alive(atoms.size(), true);
  std::vector<double> mass(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) mass[i] = atoms[i].mass;
  std::vector<std::size_t> deletion_seq;
  double spent = 0.0;

  std::vector<int> comp;
  std::size_t k = components(atoms, alive, nx, ny, &comp);
  double best_value = flattened_min_entropy(
      block_masses(atoms, mass, alive, comp, k), eps.value());
  std::size_t best_prefix = 0;

  // A zero budget allows no perturbation at all, so the value must coincide
  // with the unsmoothed common-part min-entropy bit for bit.
  while (eps.value() > 0.0) {
    Candidate cand =
        best_deletion(atoms, mass, alive, nx, ny, k, eps.value() - spent);
    if (!cand.valid) break;
    spent += mass[cand.atom];
    alive[cand.atom] = false;
    redistribute(atoms, mass, alive, cand.atom);
    deletion_seq.push_back(cand.atom);
    k = components(atoms, alive, nx, ny, &comp);
    double value = flattened_min_entropy(
        block_masses(atoms, mass, alive, comp, k), eps.value() - spent);
    if (value > best_value + 1e-15) {
      best_value = value;
      best_prefix = deletion_seq.size();
    }
  }

  // Replay the winning prefix and materialize the witness joint.
  alive.assign(atoms.size(), true);
  for (std::size_t i = 0; i < atoms.size(); ++i) mass[i] = atoms[i].mass;
  spent = 0.0;
  for (std::size_t d = 0; d < best_prefix; ++d) {
    std::size_t a = deletion_seq[d];
    spent += mass[a];
    alive[a] = false;
    redistribute(atoms, mass, alive, a);
  }
  k = components(atoms, alive, nx, ny, &comp);
  std::vector<double> nu = block_masses(atoms, mass, alive, comp, k);
  double residual = std::max(0.0, eps.value() - spent);
  double cap = cap_level(nu, std::vector<double>(nu.size(), 1.0), residual);
  double target = std::max(1.0 / static_cast<double>(k), cap);

  double excess = 0.0, capacity = 0.0;
  for (double v : nu) {
    excess += std::max(v - target, 0.0);
    capacity += std::max(target - v, 0.0);
  }
  std::vector<double> scale(k, 1.0);
  for (std::size_t b = 0; b < k; ++b) {
    if (nu[b] > target) {
      scale[b] = target / nu[b];
    } else if (capacity > kZeroAtom && excess > 0.0) {
      double raised = nu[b] + excess * (target - nu[b]) / capacity;
      scale[b] = nu[b] > kZeroAtom ? raised / nu[b] : 1.0;
    }
  }

  CminResult res;
  res.perturbed_joint.x_labels = j.x_labels;
  res.perturbed_joint.y_labels = j.y_labels;
  res.perturbed_joint.values.assign(nx * ny, 0.0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (alive[i]) {
      res.perturbed_joint.at(atoms[i].x, atoms[i].y) = mass[i] * scale[comp[i]];
    }
  }
  double tv = 0.0;
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      tv += std::max(j.at(x, y) - res.perturbed_joint.at(x, y), 0.0);
    }
  }
  res.perturbation_mass = tv;
  res.lower_bits = common_min_entropy(gacs_korner(res.perturbed_joint));
  return res;
}

double c_min_upper(const JointDistribution& j, Epsilon eps, Epsilon eps1, Epsilon eps2) {
  if (eps1.value() <= 0.0) {
    throw_error(ErrorKind::kInvalidEpsilonBudget, "eps1 must be positive");
  }
  double level = eps1.value() + eps2.value() + 2.0 * eps.value();
  if (level >= 1.0) {
    throw_error(ErrorKind::kInvalidEpsilonBudget,
                "eps1 + eps2 + 2*eps must be below 1, got " + std::to_string(level));
  }
  double hx = smooth_h_max(marginal_x(j), eps2).value_bits;
  double hxy = smooth_h_max_cond(j, Epsilon(level)).value_bits;
  return hx - hxy + std::log2(1.0 / eps1.value());
}

ExtBounds c_ext_bounds(const JointDistribution& j, Epsilon eps, Epsilon eps_prime) {
  if (eps_prime.value() > eps.value()) {
    throw_error(ErrorKind::kInvalidEpsilonBudget, "eps_prime must not exceed eps");
  }
  ExtBounds out;
  double gap = eps.value() - eps_prime.value();
  if (gap > 0.0) {
    double lower =
        c_min_lower(j, eps_prime).lower_bits - 2.0 * std::log2(1.0 / gap);
    out.lower_bits = std::max(0.0, lower);
  } else {
    out.lower_bits = 0.0;  // the extraction penalty is unbounded at gap 0
  }
  static const double kEps1Grid[] = {0.05, 0.125, 0.25, 0.4, 0.49};
  static const double kEps2Grid[] = {0.0, 0.05, 0.125, 0.25};
  for (double e1 : kEps1Grid) {
    for (double e2 : kEps2Grid) {
      if (e1 + e2 + 2.0 * eps.value() >= 1.0) continue;
      double u = c_min_upper(j, eps, Epsilon(e1), Epsilon(e2));
      if (!out.upper_bits || u < *out.upper_bits) out.upper_bits = u;
    }
  }
  if (!out.upper_bits) {
    // No admissible split (eps too large); fall back to the component-count
    // cap, which bounds the common-part min-entropy at any budget.
    out.upper_bits = std::log2(static_cast<double>(std::min(j.nx(), j.ny())));
  }
  return out;
}

}  // namespace oneshot
