//
// Project MolDebate - Copyright 2026 MolDebate Developers
// SPDX-License-Identifier: Apache-2.0
//

#include "moldebate/molecule.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace moldebate {

int Molecule::add_atom(Atom atom) {
  atom.index = static_cast<int>(atoms_.size());
  atoms_.push_back(std::move(atom));
  return atoms_.back().index;
}

int Molecule::add_bond(int a, int b, BondOrder order) {
  Bond bond;
  bond.a = a;
  bond.b = b;
  bond.order = order;
  bond.index = static_cast<int>(bonds_.size());
  bonds_.push_back(bond);
  return bonds_.back().index;
}

int Molecule::num_heavy_atoms() const {
  int n = 0;
  for (const auto& a : atoms_)
    if (a.atomic_num != 1) ++n;
  return n;
}

int Molecule::bond_between(int a, int b) const {
  for (const auto& nb : adjacency_[a])
    if (nb.atom == b) return nb.bond;
  return -1;
}

int Molecule::sigma_valence(int atom) const {
  return degree(atom);
}

double Molecule::bond_order_sum(int atom) const {
  double sum = 0;
  for (const auto& nb : adjacency_[atom]) {
    switch (bonds_[nb.bond].order) {
      case BondOrder::kSingle: sum += 1; break;
      case BondOrder::kDouble: sum += 2; break;
      case BondOrder::kTriple: sum += 3; break;
      case BondOrder::kAromatic: sum += 1.5; break;
    }
  }
  return sum;
}

int Molecule::smallest_ring_size(int atom) const {
  int best = 0;
  for (const auto& ring : rings_) {
    if (std::find(ring.begin(), ring.end(), atom) == ring.end()) continue;
    int size = static_cast<int>(ring.size());
    if (best == 0 || size < best) best = size;
  }
  return best;
}

void Molecule::finalize() {
  adjacency_.assign(atoms_.size(), {});
  for (const auto& bond : bonds_) {
    adjacency_[bond.a].push_back({bond.b, bond.index});
    adjacency_[bond.b].push_back({bond.a, bond.index});
  }

  component_.assign(atoms_.size(), -1);
  num_components_ = 0;
  for (int start = 0; start < num_atoms(); ++start) {
    if (component_[start] >= 0) continue;
    int id = num_components_++;
    std::deque<int> queue{start};
    component_[start] = id;
    while (!queue.empty()) {
      int at = queue.front();
      queue.pop_front();
      for (const auto& nb : adjacency_[at]) {
        if (component_[nb.atom] < 0) {
          component_[nb.atom] = id;
          queue.push_back(nb.atom);
        }
      }
    }
  }

  perceive_rings();
}

namespace {

// Shortest cycle through a given bond: BFS from one endpoint to the other
// with the bond itself removed.  Returns the ordered atom cycle or empty.
std::vector<int> shortest_cycle_through(
    const Molecule& mol, const Bond& bond) {
  const int n = mol.num_atoms();
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  parent[bond.a] = -1;
  queue.push_back(bond.a);
  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    if (at == bond.b) break;
    for (const auto& nb : mol.neighbors(at)) {
      if (nb.bond == bond.index) continue;
      if (parent[nb.atom] != -2) continue;
      parent[nb.atom] = at;
      queue.push_back(nb.atom);
    }
  }
  if (parent[bond.b] == -2) return {};
  std::vector<int> path;
  for (int at = bond.b; at != -1; at = parent[at]) path.push_back(at);
  return path;  // cycle: b ... a, closed by the removed bond
}

// Rotate/reflect a cycle into a normal form: smallest member first, then
// the smaller of its two ring neighbors second.
std::vector<int> normalize_cycle(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back())
    std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace

void Molecule::perceive_rings() {
  rings_.clear();
  atom_ring_flags_.assign(atoms_.size(), false);
  for (auto& bond : bonds_) bond.ring = false;

  // Greedy SSSR: walk bonds in index order, and for each bond not yet
  // covered by a chosen ring take the shortest cycle through it.
  std::vector<bool> covered(bonds_.size(), false);
  for (const auto& bond : bonds_) {
    if (covered[bond.index]) continue;
    auto cycle = shortest_cycle_through(*this, bond);
    if (cycle.empty()) continue;
    cycle = normalize_cycle(std::move(cycle));
    for (size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i];
      int b = cycle[(i + 1) % cycle.size()];
      int bi = bond_between(a, b);
      covered[bi] = true;
      bonds_[bi].ring = true;
      atom_ring_flags_[a] = true;
    }
    rings_.push_back(std::move(cycle));
  }

  std::sort(rings_.begin(), rings_.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x < y;
            });
}

}  // namespace moldebate
