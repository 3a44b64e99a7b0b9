//
// Project MolDebate - Copyright 2026 MolDebate Developers
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "moldebate/molecule.hpp"

namespace moldebate {

/// Parses a SMILES string into a molecular graph with rings perceived,
/// aromaticity resolved and implicit hydrogens assigned.
///
/// Supported: the organic subset plus bracket atoms of any tabulated
/// element, charges, isotopes, explicit H counts, ring closures (including
/// %nn), branches, dot-separated components, tetrahedral @/@@ and
/// directional /\ bonds.  Rejected with SmilesSyntaxError: wildcards (*),
/// atom classes (:n), extended chirality (@TB/@SP/@OH/@AL) and quadruple
/// bonds ($).
///
/// Throws SmilesSyntaxError, ValenceError or AromaticityError.
Molecule parse_smiles(std::string_view text);

struct ParseOutcome {
  std::optional<Molecule> mol;
  std::string error;  // empty on success

  explicit operator bool() const { return mol.has_value(); }
};

/// Non-throwing variant of parse_smiles.
ParseOutcome try_parse_smiles(std::string_view text) noexcept;

/// Canonical SMILES: byte-identical for every atom-order permutation of
/// the same molecule; tetrahedral and cis/trans markers are recomputed
/// relative to the canonical neighbor order.
std::string canonical_smiles(const Molecule& mol);

/// Writes the molecule starting from a seeded random atom with random
/// branch ordering.  Exercises the same emission path as the canonical
/// writer; used to generate alternative writings of a molecule.
std::string write_random_smiles(const Molecule& mol, std::uint64_t seed);

/// True iff both strings parse and share a canonical form.
bool same_molecule(std::string_view a, std::string_view b) noexcept;

namespace detail {

/// Canonical atom ranks (0-based, discrete) for a molecule.  Exposed for
/// tests; ordinary callers use canonical_smiles.
std::vector<int> canonical_ranks(const Molecule& mol);

/// Renders a SMILES string for the given complete atom ranking.
std::string write_smiles_ranked(const Molecule& mol,
                                const std::vector<int>& ranks);

}  // namespace detail

}  // namespace moldebate
