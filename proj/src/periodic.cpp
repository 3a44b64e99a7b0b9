//
// Project MolDebate - Copyright 2026 MolDebate Developers
// SPDX-License-Identifier: Apache-2.0
//

#include "moldebate/periodic.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace moldebate::periodic {

namespace {

struct ElementRow {
  int num;
  const char* symbol;
  double weight;
};

// IUPAC 2021 standard atomic weights (conventional values for the
// interval-valued elements).
constexpr ElementRow kElements[] = {
    {1, "H", 1.008},       {2, "He", 4.002602},   {3, "Li", 6.94},
    {4, "Be", 9.0121831},  {5, "B", 10.81},       {6, "C", 12.011},
    {7, "N", 14.007},      {8, "O", 15.999},      {9, "F", 18.998403},
    {10, "Ne", 20.1797},   {11, "Na", 22.989769}, {12, "Mg", 24.305},
    {13, "Al", 26.981538}, {14, "Si", 28.085},    {15, "P", 30.973762},
    {16, "S", 32.06},      {17, "Cl", 35.45},     {18, "Ar", 39.948},
    {19, "K", 39.0983},    {20, "Ca", 40.078},    {21, "Sc", 44.955908},
    {22, "Ti", 47.867},    {23, "V", 50.9415},    {24, "Cr", 51.9961},
    {25, "Mn", 54.938044}, {26, "Fe", 55.845},    {27, "Co", 58.933194},
    {28, "Ni", 58.6934},   {29, "Cu", 63.546},    {30, "Zn", 65.38},
    {31, "Ga", 69.723},    {32, "Ge", 72.63},     {33, "As", 74.921595},
    {34, "Se", 78.971},    {35, "Br", 79.904},    {36, "Kr", 83.798},
    {37, "Rb", 85.4678},   {38, "Sr", 87.62},     {39, "Y", 88.90584},
    {40, "Zr", 91.224},    {41, "Nb", 92.90637},  {42, "Mo", 95.95},
    {43, "Tc", 98.0},      {44, "Ru", 101.07},    {45, "Rh", 102.9055},
    {46, "Pd", 106.42},    {47, "Ag", 107.8682},  {48, "Cd", 112.414},
    {49, "In", 114.818},   {50, "Sn", 118.71},    {51, "Sb", 121.76},
    {52, "Te", 127.6},     {53, "I", 126.90447},  {54, "Xe", 131.293},
    {55, "Cs", 132.90545}, {56, "Ba", 137.327},   {57, "La", 138.90547},
    {58, "Ce", 140.116},   {59, "Pr", 140.90766}, {60, "Nd", 144.242},
    {62, "Sm", 150.36},    {63, "Eu", 151.964},   {64, "Gd", 157.25},
    {65, "Tb", 158.92535}, {66, "Dy", 162.5},     {67, "Ho", 164.93033},
    {68, "Er", 167.259},   {69, "Tm", 168.93422}, {70, "Yb", 173.045},
    {71, "Lu", 174.9668},  {72, "Hf", 178.49},    {73, "Ta", 180.94788},
    {74, "W", 183.84},     {75, "Re", 186.207},   {76, "Os", 190.23},
    {77, "Ir", 192.217},   {78, "Pt", 195.084},   {79, "Au", 196.966569},
    {80, "Hg", 200.592},   {81, "Tl", 204.38},    {82, "Pb", 207.2},
    {83, "Bi", 208.9804},  {84, "Po", 209.0},     {85, "At", 210.0},
    {86, "Rn", 222.0},     {87, "Fr", 223.0},     {88, "Ra", 226.0},
    {90, "Th", 232.0377},  {92, "U", 238.02891},
};

// Exact masses for the isotopes that actually show up in SMILES corpora.
struct IsotopeRow {
  int num;
  int mass_number;
  double weight;
};

constexpr IsotopeRow kIsotopes[] = {
    {1, 1, 1.007825},   {1, 2, 2.014102},   {1, 3, 3.016049},
    {6, 12, 12.0},      {6, 13, 13.003355}, {6, 14, 14.003242},
    {7, 14, 14.003074}, {7, 15, 15.000109}, {8, 16, 15.994915},
    {8, 17, 16.999132}, {8, 18, 17.999160}, {9, 18, 18.000938},
    {9, 19, 18.998403}, {15, 31, 30.973762}, {15, 32, 31.973908},
    {16, 32, 31.972071}, {16, 34, 33.967867}, {16, 35, 34.969032},
    {17, 35, 34.968853}, {17, 37, 36.965903}, {35, 79, 78.918338},
    {35, 81, 80.916290}, {53, 125, 124.904630}, {53, 127, 126.904473},
    {53, 131, 130.906126},
};

const std::unordered_map<std::string, int>& symbol_map() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<std::string, int>();
    for (const auto& row : kElements) (*m)[row.symbol] = row.num;
    return m;
  }();
  return *map;
}

const std::array<std::string, kMaxAtomicNum + 1>& symbol_table() {
  static const auto* table = [] {
    auto* t = new std::array<std::string, kMaxAtomicNum + 1>();
    t->fill("?");
    for (const auto& row : kElements) (*t)[row.num] = row.symbol;
    return t;
  }();
  return *table;
}

}  // namespace

int atomic_number(std::string_view symbol) {
  auto it = symbol_map().find(std::string(symbol));
  return it == symbol_map().end() ? 0 : it->second;
}

const std::string& symbol(int atomic_num) {
  static const std::string unknown = "?";
  if (atomic_num < 1 || atomic_num > kMaxAtomicNum) return unknown;
  return symbol_table()[atomic_num];
}

double average_weight(int atomic_num) {
  for (const auto& row : kElements)
    if (row.num == atomic_num) return row.weight;
  return 0.0;
}

double isotope_weight(int atomic_num, int mass_number) {
  for (const auto& row : kIsotopes)
    if (row.num == atomic_num && row.mass_number == mass_number)
      return row.weight;
  return static_cast<double>(mass_number);
}

bool in_organic_subset(int atomic_num) {
  switch (atomic_num) {
    case 5: case 6: case 7: case 8: case 9:
    case 15: case 16: case 17: case 35: case 53:
      return true;
    default:
      return false;
  }
}

bool aromatic_capable(int atomic_num) {
  switch (atomic_num) {
    case 5: case 6: case 7: case 8: case 15: case 16:
      return true;
    default:
      return false;
  }
}

const std::vector<int>& neutral_valences(int atomic_num) {
  static const std::vector<int> none;
  static const std::vector<int> v1{1};
  static const std::vector<int> v2{2};
  static const std::vector<int> v3{3};
  static const std::vector<int> v4{4};
  static const std::vector<int> v35{3, 5};
  static const std::vector<int> v246{2, 4, 6};
  switch (atomic_num) {
    case 1: return v1;          // H
    case 5: return v3;          // B
    case 6: return v4;          // C
    case 7: return v3;          // N
    case 8: return v2;          // O
    case 9: case 17: case 35: case 53: return v1;  // halogens
    case 14: return v4;         // Si
    case 15: return v35;        // P
    case 16: return v246;       // S
    default: return none;
  }
}

std::vector<int> valences(int atomic_num, int formal_charge) {
  const auto& base = neutral_valences(atomic_num);
  if (base.empty()) return {};
  if (formal_charge == 0) return base;
  // Carbon, silicon and boron do not gain bonding capacity from charge of
  // either sign; anionic boron picks up the extra bond instead.
  if (atomic_num == 6 || atomic_num == 14)
    return {std::max(1, base.back() - std::abs(formal_charge))};
  if (atomic_num == 5) return {std::max(0, base.back() - formal_charge)};
  std::vector<int> shifted;
  shifted.reserve(base.size());
  for (int v : base) {
    int adj = v + formal_charge;
    if (adj >= 0) shifted.push_back(adj);
  }
  if (shifted.empty()) shifted.push_back(0);
  return shifted;
}

std::optional<int> smallest_valence_at_least(int atomic_num, int formal_charge,
                                             int occupied) {
  auto vals = valences(atomic_num, formal_charge);
  for (int v : vals)
    if (v >= occupied) return v;
  return std::nullopt;
}

int max_valence(int atomic_num, int formal_charge) {
  auto vals = valences(atomic_num, formal_charge);
  return vals.empty() ? 0 : vals.back();
}

}  // namespace moldebate::periodic
