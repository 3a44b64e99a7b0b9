//
// Project MolDebate - Copyright 2026 MolDebate Developers
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "moldebate/errors.hpp"
#include "moldebate/molecule.hpp"
#include "moldebate/periodic.hpp"
#include "moldebate/smiles.hpp"

namespace moldebate {

namespace {

int order_int(BondOrder order) { return static_cast<int>(order); }

// ---------------------------------------------------------------------
// Canonical ranking: iterative refinement over the initial invariants,
// with lexicographic exploration of residual ties.
// ---------------------------------------------------------------------

std::vector<int> dense_ranks(const std::vector<std::vector<long>>& keys) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> ranks(n, 0);
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && keys[idx[i]] != keys[idx[i - 1]]) ++rank;
    ranks[idx[i]] = rank;
  }
  return ranks;
}

std::vector<int> initial_ranks(const Molecule& mol) {
  const int n = mol.num_atoms();
  std::vector<std::vector<long>> keys(n);
  for (int i = 0; i < n; ++i) {
    const Atom& a = mol.atom(i);
    keys[i] = {a.atomic_num,
               a.aromatic ? 1 : 0,
               a.isotope,
               a.formal_charge + 16,
               mol.degree(i),
               a.total_h(),
               mol.in_ring(i) ? 1 : 0};
  }
  return dense_ranks(keys);
}

std::vector<int> refine_ranks(const Molecule& mol, std::vector<int> ranks) {
  const int n = mol.num_atoms();
  int classes = 0;
  for (int r : ranks) classes = std::max(classes, r + 1);
  while (true) {
    std::vector<std::vector<long>> keys(n);
    for (int i = 0; i < n; ++i) {
      std::vector<long> nb_keys;
      for (const auto& nb : mol.neighbors(i))
        nb_keys.push_back(order_int(mol.bond(nb.bond).order) * 100000L +
                          ranks[nb.atom]);
      std::sort(nb_keys.begin(), nb_keys.end());
      keys[i].push_back(ranks[i]);
      keys[i].insert(keys[i].end(), nb_keys.begin(), nb_keys.end());
    }
    auto next = dense_ranks(keys);
    int next_classes = 0;
    for (int r : next) next_classes = std::max(next_classes, r + 1);
    if (next_classes == classes) return next;
    classes = next_classes;
    ranks = std::move(next);
  }
}

bool is_discrete(const std::vector<int>& ranks) {
  std::vector<bool> seen(ranks.size(), false);
  for (int r : ranks) {
    if (seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

struct Explorer {
  explicit Explorer(const Molecule& m) : mol(m) {}

  const Molecule& mol;
  long renders = 0;
  std::string best;

  void explore(std::vector<int> ranks) {
    ranks = refine_ranks(mol, std::move(ranks));
    if (is_discrete(ranks)) {
      if (++renders > 20000)
        throw Error("canonicalization exceeded the symmetry budget");
      std::string candidate = detail::write_smiles_ranked(mol, ranks);
      if (best.empty() || candidate < best) best = std::move(candidate);
      return;
    }
    // First tied class by rank; individualize each member in turn.
    int cell_rank = -1;
    for (int r = 0;; ++r) {
      int count = 0;
      for (int v : ranks) count += (v == r);
      if (count > 1) {
        cell_rank = r;
        break;
      }
    }
    for (int i = 0; i < mol.num_atoms(); ++i) {
      if (ranks[i] != cell_rank) continue;
      std::vector<int> next(ranks);
      for (int j = 0; j < mol.num_atoms(); ++j)
        if (next[j] >= cell_rank) next[j] += 1;
      next[i] = cell_rank;
      explore(std::move(next));
    }
  }
};

}  // namespace

namespace detail {

std::vector<int> canonical_ranks(const Molecule& mol) {
  return refine_ranks(mol, initial_ranks(mol));
}

}  // namespace detail

// ---------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------

namespace {

struct Writer {
  const Molecule& mol;
  const std::vector<int>& ranks;

  std::vector<int> parent;       // tree parent atom (-1 for roots)
  std::vector<int> parent_bond;  // bond to parent (-1 for roots)
  std::vector<int> visit_pos;    // order in which atoms are emitted
  std::vector<std::vector<int>> children;   // tree children, emission order
  std::vector<std::vector<int>> ring_bonds; // per atom: ring bond ids
  std::vector<int> bond_from;    // endpoint emitted first
  std::vector<int> bond_dir;     // solved direction (0 none, +1 '/', -1 '\')
  std::vector<int> ring_digit;   // per bond: assigned closure digit
  std::vector<bool> is_tree_bond;

  explicit Writer(const Molecule& m, const std::vector<int>& r)
      : mol(m), ranks(r) {}

  std::string run() {
    build_traversal();
    solve_directions();
    std::vector<std::string> parts;
    std::vector<bool> emitted(mol.num_atoms(), false);
    // Roots in rank order, one per component.
    std::vector<int> atoms_by_rank(mol.num_atoms());
    for (int i = 0; i < mol.num_atoms(); ++i) atoms_by_rank[ranks[i]] = i;
    std::vector<bool> component_done(mol.num_components(), false);
    for (int r = 0; r < mol.num_atoms(); ++r) {
      int atom = atoms_by_rank[r];
      int comp = mol.component_of(atom);
      if (component_done[comp]) continue;
      component_done[comp] = true;
      std::string out;
      emit(atom, out);
      parts.push_back(std::move(out));
    }
    std::sort(parts.begin(), parts.end());
    std::string joined;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) joined += '.';
      joined += parts[i];
    }
    return joined;
  }

  int clock_ = 0;

  void build_traversal() {
    const int n = mol.num_atoms();
    parent.assign(n, -1);
    parent_bond.assign(n, -1);
    visit_pos.assign(n, -1);
    children.assign(n, {});
    ring_bonds.assign(n, {});
    bond_from.assign(mol.num_bonds(), -1);
    bond_dir.assign(mol.num_bonds(), 0);
    ring_digit.assign(mol.num_bonds(), -1);
    is_tree_bond.assign(mol.num_bonds(), false);

    std::vector<int> atoms_by_rank(n);
    for (int i = 0; i < n; ++i) atoms_by_rank[ranks[i]] = i;
    for (int r = 0; r < n; ++r) {
      int root = atoms_by_rank[r];
      if (visit_pos[root] < 0) dfs(root, -1, -1);
    }
  }

  void dfs(int at, int par, int pbond) {
    visit_pos[at] = clock_++;
    parent[at] = par;
    parent_bond[at] = pbond;
    std::vector<std::pair<int, int>> nbs;  // (rank, neighbor)
    for (const auto& nb : mol.neighbors(at))
      nbs.push_back({ranks[nb.atom], nb.atom});
    std::sort(nbs.begin(), nbs.end());
    for (const auto& [nr, nb_atom] : nbs) {
      (void)nr;
      int bi = mol.bond_between(at, nb_atom);
      if (bi == pbond) continue;
      if (visit_pos[nb_atom] >= 0) {
        if (!is_tree_bond[bi] && bond_from[bi] == -1) {
          // Back edge: the closure digit opens at the earlier atom.
          bond_from[bi] = nb_atom;
          ring_bonds[nb_atom].push_back(bi);
          ring_bonds[at].push_back(bi);
        }
        continue;
      }
      is_tree_bond[bi] = true;
      bond_from[bi] = at;
      children[at].push_back(nb_atom);
      dfs(nb_atom, at, bi);
    }
  }

  // Flat DFS emission would mis-order; emit recursively from the tree.
  void emit(int root, std::string& out) {
    assign_ring_digits(root);
    emit_atom(root, out);
  }

  // Ring closure digits in emission order with reuse after closing.
  void assign_ring_digits(int root) {
    std::vector<bool> digit_used(100, false);
    std::vector<int> order;
    collect_emission_order(root, order);
    for (int at : order) {
      for (int bi : ring_bonds[at]) {
        if (ring_digit[bi] < 0) {
          int digit = 1;
          while (digit < 100 && digit_used[digit]) ++digit;
          if (digit >= 100) throw Error("ring closure digits exhausted");
          digit_used[digit] = true;
          ring_digit[bi] = digit;
        } else {
          digit_used[ring_digit[bi]] = false;  // closed, digit reusable
        }
      }
    }
  }

  void collect_emission_order(int at, std::vector<int>& order) const {
    order.push_back(at);
    for (int child : children[at]) collect_emission_order(child, order);
  }

  void emit_atom(int at, std::string& out) {
    out += atom_token(at);
    // Ring closures attach directly after the atom: the bond that opened
    // earlier closes here; new ones open.
    for (int bi : ring_bonds[at]) {
      const Bond& bond = mol.bond(bi);
      if (bond_from[bi] == at) {
        out += bond_symbol(bi, at);
      } else if (bond_dir[bi] != 0) {
        // Closing side of a directional ring bond: flip perspective.
        out += bond_dir_symbol(bi, at);
      }
      int digit = ring_digit[bi];
      if (digit >= 10) {
        out += '%';
        out += std::to_string(digit);
      } else {
        out += static_cast<char>('0' + digit);
      }
    }
    const auto& kids = children[at];
    for (size_t k = 0; k < kids.size(); ++k) {
      int child = kids[k];
      bool last = (k + 1 == kids.size());
      if (!last) out += '(';
      out += bond_symbol(parent_bond[child], at);
      emit_atom(child, out);
      if (!last) out += ')';
    }
  }

  std::string bond_dir_symbol(int bi, int from_atom) const {
    // bond_dir is stored relative to bond_from; flip for the other side.
    int d = bond_dir[bi];
    if (bond_from[bi] != from_atom) d = -d;
    return d > 0 ? "/" : "\\";
  }

  std::string bond_symbol(int bi, int from_atom) const {
    const Bond& bond = mol.bond(bi);
    switch (bond.order) {
      case BondOrder::kDouble: return "=";
      case BondOrder::kTriple: return "#";
      case BondOrder::kAromatic: return "";
      case BondOrder::kSingle:
        if (bond_dir[bi] != 0) return bond_dir_symbol(bi, from_atom);
        if (mol.atom(bond.a).aromatic && mol.atom(bond.b).aromatic)
          return "-";
        return "";
    }
    return "";
  }

  // ---- atom tokens ----------------------------------------------------
  int integer_bond_sum(int at) const {
    int sum = 0;
    for (const auto& nb : mol.neighbors(at)) {
      switch (mol.bond(nb.bond).order) {
        case BondOrder::kSingle: sum += 1; break;
        case BondOrder::kDouble: sum += 2; break;
        case BondOrder::kTriple: sum += 3; break;
        case BondOrder::kAromatic: sum += 1; break;
      }
    }
    return sum;
  }

  // Hydrogen count a reader would derive for a bare (bracket-free) token.
  int derived_h(int at) const {
    const Atom& a = mol.atom(at);
    int sum = integer_bond_sum(at);
    if (!a.aromatic) {
      auto target =
          periodic::smallest_valence_at_least(a.atomic_num, 0, sum);
      return target ? *target - sum : -1;
    }
    switch (a.atomic_num) {
      case 6: {
        int rem = 4 - sum;
        return rem <= 0 ? 0 : rem - 1;
      }
      case 5: return std::max(0, 3 - sum);
      default: return 0;
    }
  }

  std::string atom_token(int at) const {
    const Atom& a = mol.atom(at);
    bool organic = periodic::in_organic_subset(a.atomic_num);
    bool bracket = !organic || a.isotope != 0 || a.formal_charge != 0 ||
                   a.chirality != Chirality::kNone ||
                   derived_h(at) != a.total_h();
    std::string sym = periodic::symbol(a.atomic_num);
    if (a.aromatic)
      for (auto& ch : sym) ch = static_cast<char>(std::tolower(ch));
    if (!bracket) return sym;

    std::string out = "[";
    if (a.isotope != 0) out += std::to_string(a.isotope);
    out += sym;
    if (a.chirality != Chirality::kNone)
      out += output_chirality(at) == Chirality::kCcw ? "@" : "@@";
    int h = a.total_h();
    if (h > 0) {
      out += 'H';
      if (h > 1) out += std::to_string(h);
    }
    if (a.formal_charge != 0) {
      out += a.formal_charge > 0 ? '+' : '-';
      int mag = std::abs(a.formal_charge);
      if (mag > 1) out += std::to_string(mag);
    }
    out += ']';
    return out;
  }

  // Neighbor order as the output writes it: parent, then the in-bracket
  // hydrogen, then ring closures in digit order, then children.
  std::vector<int> output_order(int at) const {
    std::vector<int> order;
    if (parent[at] >= 0) order.push_back(parent[at]);
    if (mol.atom(at).total_h() == 1) order.push_back(Atom::kImplicitSlot);
    for (int bi : ring_bonds[at]) order.push_back(mol.bond(bi).other(at));
    for (int child : children[at]) order.push_back(child);
    return order;
  }

  Chirality output_chirality(int at) const {
    const Atom& a = mol.atom(at);
    std::vector<int> out_order = output_order(at);
    if (out_order.size() != 4 || a.stereo_order.size() != 4)
      return a.chirality;
    // Parity of the permutation mapping the stored order onto the output
    // order; an odd permutation flips the sense.
    std::array<int, 4> perm{};
    for (int i = 0; i < 4; ++i) {
      auto it = std::find(out_order.begin(), out_order.end(),
                          a.stereo_order[i]);
      if (it == out_order.end()) return a.chirality;
      perm[i] = static_cast<int>(it - out_order.begin());
    }
    int swaps = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++swaps;
    bool flip = swaps % 2 != 0;
    if (!flip) return a.chirality;
    return a.chirality == Chirality::kCcw ? Chirality::kCw : Chirality::kCcw;
  }

  // ---- double-bond direction solving ----------------------------------
  void solve_directions() {
    // Variables: single bonds flanking stereo double bonds.  Constraints
    // link variables across each stereo bond and between the two
    // substituent bonds at one end.
    std::vector<char> marked(mol.num_bonds(), 0);
    for (const auto& bond : mol.bonds()) {
      if (bond.config == CisTrans::kNone) continue;
      for (int end : {bond.a, bond.b})
        for (const auto& nb : mol.neighbors(end)) {
          const Bond& single = mol.bond(nb.bond);
          if (single.order == BondOrder::kSingle) marked[nb.bond] = 1;
        }
    }
    // adjacency over variables: (other_bond, parity) with parity=1 when
    // the two directions must be equal, -1 when opposite.
    std::vector<std::vector<std::pair<int, int>>> constraints(
        mol.num_bonds());
    auto orient = [&](int single_bi, int end) {
      // +1 when the written orientation starts at the substituent.
      const Bond& single = mol.bond(single_bi);
      int substituent = single.other(end);
      return bond_from[single_bi] == substituent ? 1 : -1;
    };
    for (const auto& bond : mol.bonds()) {
      if (bond.config == CisTrans::kNone) continue;
      std::vector<std::pair<int, int>> side_a, side_b;  // (bond, same as ref)
      for (const auto& nb : mol.neighbors(bond.a)) {
        if (mol.bond(nb.bond).order != BondOrder::kSingle) continue;
        side_a.push_back({nb.bond, nb.atom == bond.ref_a ? 1 : -1});
      }
      for (const auto& nb : mol.neighbors(bond.b)) {
        if (mol.bond(nb.bond).order != BondOrder::kSingle) continue;
        side_b.push_back({nb.bond, nb.atom == bond.ref_b ? 1 : -1});
      }
      int cfg = bond.config == CisTrans::kSameSide ? 1 : -1;
      // Cross constraints between the two ends.
      for (const auto& [b1, r1] : side_a)
        for (const auto& [b2, r2] : side_b) {
          int rhs = cfg * r1 * r2 * orient(b1, bond.a) * orient(b2, bond.b);
          constraints[b1].push_back({b2, rhs});
          constraints[b2].push_back({b1, rhs});
        }
      // Same-end constraints: the two substituents sit on opposite sides.
      auto same_end = [&](const std::vector<std::pair<int, int>>& side,
                          int end) {
        if (side.size() == 2) {
          int rhs = -orient(side[0].first, end) * orient(side[1].first, end);
          constraints[side[0].first].push_back({side[1].first, rhs});
          constraints[side[1].first].push_back({side[0].first, rhs});
        }
      };
      same_end(side_a, bond.a);
      same_end(side_b, bond.b);
    }
    // BFS-assign.
    for (int bi = 0; bi < mol.num_bonds(); ++bi) {
      if (!marked[bi] || bond_dir[bi] != 0) continue;
      bond_dir[bi] = 1;
      std::deque<int> queue{bi};
      while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const auto& [other, parity] : constraints[cur]) {
          int want = bond_dir[cur] * parity;
          if (bond_dir[other] == 0) {
            bond_dir[other] = want;
            queue.push_back(other);
          } else if (bond_dir[other] != want) {
            throw Error("inconsistent double-bond directions");
          }
        }
      }
    }
  }
};

}  // namespace

namespace detail {

std::string write_smiles_ranked(const Molecule& mol,
                                const std::vector<int>& ranks) {
  Writer writer(mol, ranks);
  return writer.run();
}

}  // namespace detail

std::string canonical_smiles(const Molecule& mol) {
  if (mol.num_atoms() == 0) return "";
  Explorer explorer{mol};
  explorer.explore(initial_ranks(mol));
  return explorer.best;
}

std::string write_random_smiles(const Molecule& mol, std::uint64_t seed) {
  const int n = mol.num_atoms();
  std::vector<int> ranks(n);
  for (int i = 0; i < n; ++i) ranks[i] = i;
  // splitmix64-driven Fisher-Yates: stable across platforms.
  std::uint64_t state = seed;
  auto next_rand = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(next_rand() % static_cast<std::uint64_t>(i + 1));
    std::swap(ranks[i], ranks[j]);
  }
  return detail::write_smiles_ranked(mol, ranks);
}

}  // namespace moldebate
