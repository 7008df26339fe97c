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

#include "oneshot/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "oneshot/io.hpp"
#include "oneshot/util.hpp"

namespace oneshot::oracle {
namespace {

struct Deadline {
  std::chrono::steady_clock::time_point end;
  explicit Deadline(double seconds)
      : end(std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds))) {}
  void check() const {
    if (std::chrono::steady_clock::now() > end) {
      throw_error(ErrorKind::kBudgetExceeded, "oracle time limit exhausted");
    }
  }
};

struct Atom {
  std::size_t x, y;
  double mass;
};

std::vector<Atom> support_atoms(const JointDistribution& j, const OracleBudget& b) {
  std::vector<Atom> atoms;
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) {
      if (j.at(x, y) > kZeroAtom) atoms.push_back({x, y, j.at(x, y)});
    }
  }
  if (atoms.size() > b.max_support_atoms) {
    throw_error(ErrorKind::kBudgetExceeded,
                "support has " + std::to_string(atoms.size()) + " atoms, budget " +
                    std::to_string(b.max_support_atoms));
  }
  return atoms;
}

std::vector<double> support_masses(const ProbVector& p, const OracleBudget& b) {
  std::vector<double> atoms;
  for (double m : p.mass) {
    if (m > kZeroAtom) atoms.push_back(m);
  }
  if (atoms.size() > b.max_support_atoms) {
    throw_error(ErrorKind::kBudgetExceeded, "support exceeds the atom budget");
  }
  return atoms;
}

// Smallest feasible cap over all active sets: the set of atoms strictly
// above the cap determines it linearly, so scanning the 2^n subsets is an
// exact (if brutal) solve.
double event_min_cap(const std::vector<double>& values, const std::vector<double>& weights,
                     double eps) {
  const std::size_t n = values.size();
  double vmax = *std::max_element(values.begin(), values.end());
  double best = vmax;
  for (std::uint32_t setmask = 1; setmask < (1u << n); ++setmask) {
    double a = 0.0, w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (setmask & (1u << i)) {
        a += weights[i] * values[i];
        w += weights[i];
      }
    }
    double c = (a - eps) / w;
    if (c < 0.0 || c >= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (setmask & (1u << i)) {
        ok = values[i] >= c - 1e-13;
      } else {
        ok = values[i] <= c + 1e-13;
      }
    }
    if (ok) best = c;
  }
  return best;
}

double mask_mass(const std::vector<Atom>& atoms, std::uint32_t mask) {
  double m = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (mask & (1u << i)) m += atoms[i].mass;
  }
  return m;
}

// Component count and block masses of the atoms outside the deleted mask.
std::size_t components_of_mask(const std::vector<Atom>& atoms, std::uint32_t deleted,
                               std::size_t nx, std::size_t ny, std::vector<double>* nu) {
  std::vector<std::size_t> parent(nx + ny);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (deleted & (1u << i)) continue;
    parent[find(atoms[i].x)] = find(nx + atoms[i].y);
  }
  std::vector<int> id(nx + ny, -1);
  int next = 0;
  if (nu) nu->clear();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (deleted & (1u << i)) continue;
    std::size_t root = find(atoms[i].x);
    if (id[root] < 0) {
      id[root] = next++;
      if (nu) nu->push_back(0.0);
    }
    if (nu) (*nu)[id[root]] += atoms[i].mass;
  }
  return static_cast<std::size_t>(next);
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  double tv = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
  return 0.5 * tv;
}

}  // namespace

double exact_one_shot_capacity(const Channel& w, Epsilon eps, const OracleBudget& b) {
  const std::size_t nx = w.nx(), ny = w.ny();
  if (nx > 3 * b.max_codebook) {
    throw_error(ErrorKind::kBudgetExceeded, "input alphabet exceeds the codebook budget");
  }
  if (ny > b.max_outputs) {
    throw_error(ErrorKind::kBudgetExceeded, "output alphabet exceeds the output budget");
  }
  Deadline deadline(b.time_limit_seconds);

  std::size_t m_cap = std::min(nx, b.max_codebook);
  for (std::size_t m = m_cap; m >= 2; --m) {
    // All decoders for all size-m codebooks.
    double decoders = std::pow(static_cast<double>(m), static_cast<double>(ny));
    double combos = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      combos *= static_cast<double>(nx - i) / static_cast<double>(i + 1);
    }
    if (combos * decoders > static_cast<double>(b.max_decoder_candidates)) {
      throw_error(ErrorKind::kBudgetExceeded, "decoder enumeration exceeds the budget");
    }

    std::vector<std::size_t> codebook(m);
    std::vector<bool> pick(nx, false);
    std::fill(pick.begin(), pick.begin() + m, true);
    bool found = false;
    do {
      deadline.check();
      std::size_t k = 0;
      for (std::size_t x = 0; x < nx; ++x) {
        if (pick[x]) codebook[k++] = x;
      }
      std::vector<std::size_t> dec(ny, 0);
      while (true) {
        double worst = 0.0;
        for (std::size_t i = 0; i < m && worst <= eps.value() + kMassSlack; ++i) {
          double correct = 0.0;
          for (std::size_t y = 0; y < ny; ++y) {
            if (dec[y] == i) correct += w.at(codebook[i], y);
          }
          worst = std::max(worst, 1.0 - correct);
        }
        if (worst <= eps.value() + kMassSlack) {
          found = true;
          break;
        }
        std::size_t pos = 0;
        while (pos < ny && dec[pos] + 1 == m) dec[pos++] = 0;
        if (pos == ny) break;
        ++dec[pos];
      }
      if (found) break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (found) return std::log2(static_cast<double>(m));
  }
  return 0.0;  // a single message always goes through error-free
}

double exact_smooth_entropy(const ProbVector& p, Epsilon eps, EntropyKind which,
                            Formulation f, const OracleBudget& b) {
  std::vector<double> atoms = support_masses(p, b);
  const std::size_t n = atoms.size();
  if (which == EntropyKind::kMax) {
    // Smallest surviving support over all deletion subsets within budget.
    // Renormalizing the survivors never changes a support count, so the
    // event and coupling answers coincide.
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      double removed = 0.0;
      std::size_t kept = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          removed += atoms[i];
          --kept;
        }
      }
      if (kept >= 1 && removed <= eps.value() + kMassSlack) best = std::min(best, kept);
    }
    return std::log2(static_cast<double>(best));
  }
  double cap = event_min_cap(atoms, std::vector<double>(n, 1.0), eps.value());
  if (f == Formulation::kCoupling) {
    // A normalized perturbation must park the removed mass somewhere on the
    // alphabet without exceeding the cap, which floors the cap at uniform.
    cap = std::max(cap, 1.0 / static_cast<double>(p.size()));
  }
  return -std::log2(cap);
}

double exact_smooth_entropy(const JointDistribution& j, Epsilon eps, EntropyKind which,
                            Formulation f, const OracleBudget& b) {
  std::vector<Atom> atoms = support_atoms(j, b);
  const std::size_t n = atoms.size();
  std::vector<double> p_y(j.ny(), 0.0);
  for (const Atom& a : atoms) p_y[a.y] += a.mass;

  if (f == Formulation::kEvent) {
    if (which == EntropyKind::kMin) {
      std::vector<double> values(n), weights(n);
      for (std::size_t i = 0; i < n; ++i) {
        values[i] = atoms[i].mass / p_y[atoms[i].y];
        weights[i] = p_y[atoms[i].y];
      }
      return -std::log2(event_min_cap(values, weights, eps.value()));
    }
    // Worst retained column support, minimized over deletion subsets.
    std::size_t best = j.nx() + 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (mask_mass(atoms, mask) > eps.value() + kMassSlack) continue;
      std::vector<std::size_t> col(j.ny(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) ++col[atoms[i].y];
      }
      std::size_t worst = 0;
      for (std::size_t c : col) worst = std::max(worst, c);
      best = std::min(best, worst);
    }
    return std::log2(static_cast<double>(best));
  }

  // Coupling formulation on joints: certified one-sided bound by greedy
  // search over renormalized perturbations on the same alphabet.
  const double grid = 1.0 / 1024.0;
  std::vector<double> q(j.values);
  auto objective = [&](const std::vector<double>& v) {
    std::vector<double> py(j.ny(), 0.0);
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) py[y] += v[x * j.ny() + y];
    }
    if (which == EntropyKind::kMin) {
      double worst = 0.0;
      for (std::size_t x = 0; x < j.nx(); ++x) {
        for (std::size_t y = 0; y < j.ny(); ++y) {
          if (py[y] > kZeroAtom && v[x * j.ny() + y] > kZeroAtom) {
            worst = std::max(worst, v[x * j.ny() + y] / py[y]);
          }
        }
      }
      return worst;  // smaller is better
    }
    std::vector<std::size_t> col(j.ny(), 0);
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        if (v[x * j.ny() + y] > kZeroAtom) ++col[y];
      }
    }
    std::size_t worst = 0;
    for (std::size_t c : col) worst = std::max(worst, c);
    return static_cast<double>(worst);  // smaller is better
  };
  auto budget_used = [&](const std::vector<double>& v) {
    double used = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) used += std::max(j.values[i] - v[i], 0.0);
    return used;
  };
  Deadline deadline(b.time_limit_seconds);
  bool improved = true;
  while (improved) {
    improved = false;
    deadline.check();
    double cur = objective(q);
    std::vector<double> best_q;
    double best_obj = cur;
    for (std::size_t from = 0; from < q.size(); ++from) {
      if (q[from] < grid) continue;
      for (std::size_t to = 0; to < q.size(); ++to) {
        if (to == from) continue;
        std::vector<double> cand = q;
        // Move a whole atom if it fits in one step, else one grid quantum.
        double step = (which == EntropyKind::kMax && q[from] > grid) ? q[from] : grid;
        cand[from] -= step;
        if (cand[from] < kZeroAtom) cand[from] = 0.0;
        cand[to] += step;
        if (budget_used(cand) > eps.value() + kMassSlack) continue;
        double o = objective(cand);
        if (o < best_obj - 1e-12) {
          best_obj = o;
          best_q = std::move(cand);
        }
      }
    }
    if (!best_q.empty()) {
      q = std::move(best_q);
      improved = true;
    }
  }
  double obj = objective(q);
  if (which == EntropyKind::kMin) return -std::log2(obj);
  return std::log2(obj);
}

double exact_c_min(const JointDistribution& j, Epsilon eps, const OracleBudget& b) {
  std::vector<Atom> atoms = support_atoms(j, b);
  const std::size_t n = atoms.size();
  double best = 0.0;
  std::vector<double> nu;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double cost = mask_mass(atoms, mask);
    if (cost > eps.value() + kMassSlack) continue;
    std::size_t k = components_of_mask(atoms, mask, j.nx(), j.ny(), &nu);
    if (k == 0) continue;
    double residual = std::max(0.0, eps.value() - cost);
    // The deleted mass must land back on the surviving blocks (additions are
    // free under one-sided variation), so the achievable minimum of the
    // largest block is exactly the reduction cap, floored at uniform.
    double cap = cap_level(nu, std::vector<double>(nu.size(), 1.0), residual);
    double target = std::max(1.0 / static_cast<double>(k), cap);
    best = std::max(best, -std::log2(target));
  }
  return best;
}

double exact_c_ext(const JointDistribution& j, Epsilon eps, const OracleBudget& b) {
  const std::size_t nx = j.nx(), ny = j.ny();
  if (nx > 4 || ny > 4) {
    throw_error(ErrorKind::kBudgetExceeded, "extraction oracle needs alphabets of size <= 4");
  }
  Deadline deadline(b.time_limit_seconds);
  std::size_t best = 0;
  for (std::size_t ell = 1;; ++ell) {
    const std::size_t range = 1u << ell;
    // No function pair can beat this deficiency, and it only grows with ell.
    double floor_tv =
        1.0 - static_cast<double>(std::min(nx, ny)) / static_cast<double>(range);
    if (floor_tv > eps.value() + kMassSlack) break;
    double pairs = std::pow(static_cast<double>(range), static_cast<double>(nx + ny));
    if (pairs > static_cast<double>(b.max_decoder_candidates)) {
      throw_error(ErrorKind::kBudgetExceeded, "function-pair enumeration exceeds the budget");
    }
    const double ideal = 1.0 / static_cast<double>(range);
    bool accepted = false;
    std::vector<std::size_t> f(nx, 0);
    std::vector<double> law(range * range);
    while (!accepted) {
      deadline.check();
      std::vector<std::size_t> g(ny, 0);
      while (true) {
        std::fill(law.begin(), law.end(), 0.0);
        for (std::size_t x = 0; x < nx; ++x) {
          for (std::size_t y = 0; y < ny; ++y) {
            law[f[x] * range + g[y]] += j.at(x, y);
          }
        }
        double tv = 0.0;
        for (std::size_t a = 0; a < range; ++a) {
          for (std::size_t bb = 0; bb < range; ++bb) {
            double want = a == bb ? ideal : 0.0;
            tv += std::abs(law[a * range + bb] - want);
          }
        }
        if (0.5 * tv <= eps.value() + kMassSlack) {
          accepted = true;
          break;
        }
        std::size_t pos = 0;
        while (pos < ny && g[pos] + 1 == range) g[pos++] = 0;
        if (pos == ny) break;
        ++g[pos];
      }
      if (accepted) break;
      std::size_t pos = 0;
      while (pos < nx && f[pos] + 1 == range) f[pos++] = 0;
      if (pos == nx) break;
      ++f[pos];
    }
    if (!accepted) break;
    best = ell;
  }
  return static_cast<double>(best);
}

std::vector<std::pair<double, SubProbVector>> uniform_decomposition(const ProbVector& p) {
  double level = *std::max_element(p.mass.begin(), p.mass.end());
  // Layer-cake peeling of the coverage profile p/level: one component per
  // distinct coverage value, weighted by the gap to the next one.
  std::vector<double> coverage;
  for (double m : p.mass) {
    if (m > kZeroAtom) coverage.push_back(m / level);
  }
  std::sort(coverage.begin(), coverage.end(), std::greater<>());
  coverage.erase(std::unique(coverage.begin(), coverage.end()), coverage.end());

  std::vector<std::pair<double, SubProbVector>> parts;
  for (std::size_t t = 0; t < coverage.size(); ++t) {
    double next = t + 1 < coverage.size() ? coverage[t + 1] : 0.0;
    double weight = coverage[t] - next;
    SubProbVector comp;
    comp.labels = p.labels;
    comp.mass.assign(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.mass[i] > kZeroAtom && p.mass[i] / level >= coverage[t] - 1e-13) {
        comp.mass[i] = level;
      }
    }
    parts.emplace_back(weight, std::move(comp));
  }
  return parts;
}

std::vector<std::string> probe_formulation_gap(const std::vector<ProbVector>& dists,
                                               const std::vector<Epsilon>& epsilons) {
  std::vector<std::string> findings;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    for (Epsilon eps : epsilons) {
      double ev = exact_smooth_entropy(dists[i], eps, EntropyKind::kMin, Formulation::kEvent);
      double cp = exact_smooth_entropy(dists[i], eps, EntropyKind::kMin, Formulation::kCoupling);
      if (std::abs(ev - cp) > kValueTol) {
        findings.push_back("distribution #" + std::to_string(i) + " eps=" +
                           format_double(eps.value()) + ": event min-entropy " +
                           format_double(ev) + " vs coupling " + format_double(cp));
      }
    }
  }
  return findings;
}

std::vector<std::string> probe_alphabet_extension(const JointDistribution& j, Epsilon eps,
                                                  const OracleBudget& b) {
  std::vector<std::string> findings;
  double base = exact_c_min(j, eps, b);
  // One spare symbol per side: reachable only by moving mass onto fresh
  // cells, probed here with single-cell injections of the whole budget.
  if (eps.value() <= 0.0) return findings;
  JointDistribution ext;
  ext.x_labels = j.x_labels;
  ext.x_labels.push_back("x+");
  ext.y_labels = j.y_labels;
  ext.y_labels.push_back("y+");
  ext.values.assign(ext.x_labels.size() * ext.y_labels.size(), 0.0);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) ext.at(x, y) = j.at(x, y);
  }
  // Shift budget mass onto the fresh diagonal cell, taken proportionally
  // from everything else, then ask the deletion oracle about the result.
  double delta = eps.value() / 2.0;
  JointDistribution probe = ext;
  for (double& v : probe.values) v *= 1.0 - delta;
  probe.at(j.nx(), j.ny()) = delta;
  OracleBudget wide = b;
  wide.max_support_atoms = b.max_support_atoms + 1;
  double extended = exact_c_min(probe, Epsilon(eps.value() - delta), wide);
  if (extended > base + kValueTol) {
    findings.push_back("alphabet extension raises the smoothed common-part min-entropy from " +
                       format_double(base) + " to " + format_double(extended));
  }
  return findings;
}

}  // namespace oneshot::oracle
