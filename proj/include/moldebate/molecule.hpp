//
// Project MolDebate - Copyright 2026 MolDebate Developers
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moldebate {

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

/// Tetrahedral chirality as written: @ lists the remaining neighbors
/// counterclockwise when viewed from the first neighbor, @@ clockwise.
enum class Chirality : std::uint8_t { kNone, kCcw, kCw };

/// Relative configuration of the two reference neighbors across a double
/// bond.
enum class CisTrans : std::uint8_t { kNone, kSameSide, kOppositeSide };

struct Atom {
  int atomic_num = 6;
  int formal_charge = 0;
  int isotope = 0;     // 0 = unspecified
  int explicit_h = 0;  // hydrogens written in the input (bracket count or
                       // collapsed explicit [H] atoms)
  int implicit_h = 0;  // derived from the valence model
  bool aromatic = false;
  Chirality chirality = Chirality::kNone;
  // Neighbor atom indices in written order for chiral atoms; kImplicitSlot
  // marks the position of the implicit (in-bracket) hydrogen.
  std::vector<int> stereo_order;
  int index = 0;

  static constexpr int kImplicitSlot = -1;

  int total_h() const { return explicit_h + implicit_h; }
  int degree_slots() const {
    return static_cast<int>(stereo_order.size());
  }
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::kSingle;
  // Double-bond geometry: ref_a is a neighbor of a, ref_b a neighbor of b,
  // and config relates their sides of the double bond.
  CisTrans config = CisTrans::kNone;
  int ref_a = -1;
  int ref_b = -1;
  bool ring = false;
  int index = 0;

  int other(int atom) const { return atom == a ? b : a; }
  bool joins(int x, int y) const {
    return (a == x && b == y) || (a == y && b == x);
  }
};

/// An attributed molecular graph: atoms, bonds, perceived rings (smallest
/// set of smallest rings) and connected components.
class Molecule {
public:
  struct Neighbor {
    int atom;
    int bond;
  };

  Molecule() = default;

  int add_atom(Atom atom);
  int add_bond(int a, int b, BondOrder order);

  /// Recomputes adjacency, rings, ring flags and component ids.  Must be
  /// called after the graph is mutated.
  void finalize();

  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }
  int num_heavy_atoms() const;

  const Atom& atom(int i) const { return atoms_[i]; }
  Atom& atom(int i) { return atoms_[i]; }
  const Bond& bond(int i) const { return bonds_[i]; }
  Bond& bond(int i) { return bonds_[i]; }

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Bond>& bonds() const { return bonds_; }
  std::vector<Atom>& atoms_mutable() { return atoms_; }
  std::vector<Bond>& bonds_mutable() { return bonds_; }

  const std::vector<Neighbor>& neighbors(int atom) const {
    return adjacency_[atom];
  }
  int degree(int atom) const {
    return static_cast<int>(adjacency_[atom].size());
  }

  /// Bond between two atoms, or -1.
  int bond_between(int a, int b) const;

  /// Smallest set of smallest rings, each a cyclic atom-index list,
  /// ordered by (size, lexicographic member order).
  const std::vector<std::vector<int>>& rings() const { return rings_; }
  bool in_ring(int atom) const { return atom_ring_flags_[atom]; }

  /// Size of the smallest ring containing the atom (0 when acyclic).
  int smallest_ring_size(int atom) const;

  int num_components() const { return num_components_; }
  int component_of(int atom) const { return component_[atom]; }

  /// Sum of bond orders at an atom, counting aromatic bonds as 1 plus a
  /// half electron handled separately by the reader; here aromatic = 1.
  int sigma_valence(int atom) const;
  /// Sum of integer bond orders with aromatic counted as 1.5, rounded
  /// down after summation; used for descriptor work.
  double bond_order_sum(int atom) const;

  const std::string& source_text() const { return source_; }
  void set_source_text(std::string text) { source_ = std::move(text); }

private:
  void perceive_rings();

  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::vector<int>> rings_;
  std::vector<bool> atom_ring_flags_;
  std::vector<int> component_;
  int num_components_ = 0;
  std::string source_;
};

}  // namespace moldebate
