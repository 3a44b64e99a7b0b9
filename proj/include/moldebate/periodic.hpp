//
// Project MolDebate - Copyright 2026 MolDebate Developers
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace moldebate {

/// Static element facts: symbols, average atomic weights, and the admissible
/// valence sets used by the SMILES reader.
namespace periodic {

constexpr int kMaxAtomicNum = 118;

/// Atomic number for an element symbol (case sensitive, e.g. "Cl"),
/// or 0 when the symbol is unknown.
int atomic_number(std::string_view symbol);

/// Element symbol for an atomic number ("?" when out of range).
const std::string& symbol(int atomic_num);

/// Average (abundance-weighted) atomic weight in g/mol.
double average_weight(int atomic_num);

/// Mass of a specific isotope when tabulated, otherwise the mass number
/// itself as a double.
double isotope_weight(int atomic_num, int mass_number);

/// True for the elements that may be written bare (outside brackets):
/// B, C, N, O, P, S, F, Cl, Br, I.
bool in_organic_subset(int atomic_num);

/// True for elements that may carry the aromatic (lowercase) flag.
bool aromatic_capable(int atomic_num);

/// Admissible total valences for a neutral atom of the element, in
/// increasing order.  Empty when the element has no valence model, in
/// which case the reader accepts whatever the bracket atom declares.
const std::vector<int>& neutral_valences(int atomic_num);

/// Admissible valences adjusted for a formal charge.  Group 14 elements
/// and boron follow the usual toolkit conventions (C+ and C- are both
/// trivalent, B- is tetravalent); for the other modeled elements the
/// charge shifts each admissible valence by its sign.
std::vector<int> valences(int atomic_num, int formal_charge);

/// Smallest admissible valence that is >= occupied, or nullopt when the
/// occupied valence exceeds every admissible value.
std::optional<int> smallest_valence_at_least(int atomic_num, int formal_charge,
                                             int occupied);

/// Largest admissible valence (0 when the element is not modeled).
int max_valence(int atomic_num, int formal_charge);

}  // namespace periodic

}  // namespace moldebate
