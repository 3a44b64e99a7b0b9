//
// Project MolDebate - Copyright 2026 MolDebate Developers
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "moldebate/errors.hpp"
#include "moldebate/molecule.hpp"
#include "moldebate/periodic.hpp"
#include "moldebate/smiles.hpp"

namespace moldebate {

namespace {

bool is_bond_char(char c) {
  return c == '-' || c == '=' || c == '#' || c == ':' || c == '/' ||
         c == '\\';
}

BondOrder order_of(char c) {
  switch (c) {
    case '=': return BondOrder::kDouble;
    case '#': return BondOrder::kTriple;
    case ':': return BondOrder::kAromatic;
    default: return BondOrder::kSingle;  // '-', '/', '\'
  }
}

struct PendingRing {
  int atom = -1;
  char bond_char = 0;  // 0 = unspecified
  int slot = -1;       // position reserved in atom's stereo_order
  size_t pos = 0;      // source position, for diagnostics
};

class SmilesReader {
public:
  explicit SmilesReader(std::string_view text) : text_(text) {}

  Molecule read() {
    if (text_.empty()) throw SmilesSyntaxError("empty SMILES");
    parse_body();
    finish_structure();
    collapse_explicit_h();
    mol_.finalize();
    resolve_default_bonds();
    check_aromatic_placement();
    assign_hydrogens();
    kekulize_check();
    check_aliphatic_valences();
    perceive_kekule_aromaticity();
    finalize_tetrahedral();
    finalize_cis_trans();
    mol_.set_source_text(std::string(text_));
    return std::move(mol_);
  }

private:
  // ---- lexing helpers -------------------------------------------------
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SmilesSyntaxError(what + " at position " + std::to_string(pos_));
  }

  int read_digits(int max_digits) {
    int value = 0;
    int used = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())) &&
           used < max_digits) {
      value = value * 10 + (take() - '0');
      ++used;
    }
    return used == 0 ? -1 : value;
  }

  // ---- main walk ------------------------------------------------------
  void parse_body() {
    while (!eof()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c)))
        fail("whitespace inside SMILES");
      if (c == '*') fail("wildcard atoms are not supported");
      if (c == '$' || c == '~') fail(std::string("unsupported bond '") + c + "'");
      if (is_bond_char(c)) {
        if (pending_bond_ != 0) fail("two consecutive bond symbols");
        if (prev_atom_ < 0) fail("bond symbol without preceding atom");
        pending_bond_ = take();
        continue;
      }
      if (c == '(') {
        if (prev_atom_ < 0) fail("branch before any atom");
        if (pending_bond_ != 0) fail("bond symbol before '('");
        take();
        if (peek() == ')') fail("empty branch");
        branch_stack_.push_back(prev_atom_);
        continue;
      }
      if (c == ')') {
        if (branch_stack_.empty()) fail("unmatched ')'");
        if (pending_bond_ != 0) fail("dangling bond before ')'");
        take();
        prev_atom_ = branch_stack_.back();
        branch_stack_.pop_back();
        continue;
      }
      if (c == '.') {
        if (!branch_stack_.empty()) fail("'.' inside a branch");
        if (pending_bond_ != 0) fail("bond symbol before '.'");
        if (prev_atom_ < 0) fail("leading '.'");
        take();
        if (eof()) fail("trailing '.'");
        if (peek() == '.') fail("repeated '.'");
        prev_atom_ = -1;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        if (prev_atom_ < 0) fail("ring closure before any atom");
        parse_ring_closure();
        continue;
      }
      parse_atom();
    }
    if (pending_bond_ != 0) fail("dangling bond at end of input");
    if (!branch_stack_.empty()) fail("unclosed '('");
  }

  void parse_ring_closure() {
    char bond_char = pending_bond_;
    pending_bond_ = 0;
    int number;
    if (peek() == '%') {
      take();
      number = read_digits(2);
      if (number < 10) fail("'%' ring closure needs two digits");
    } else {
      number = take() - '0';
    }
    auto it = open_rings_.find(number);
    if (it == open_rings_.end()) {
      PendingRing ring;
      ring.atom = prev_atom_;
      ring.bond_char = bond_char;
      ring.pos = pos_;
      // Reserve the neighbor slot now; patched when the ring closes.
      auto& order = mol_.atom(prev_atom_).stereo_order;
      ring.slot = static_cast<int>(order.size());
      order.push_back(-1000 - number);
      open_rings_.emplace(number, ring);
      return;
    }
    PendingRing ring = it->second;
    open_rings_.erase(it);
    if (ring.atom == prev_atom_) fail("ring closure to the same atom");
    if (has_unperceived_bond(ring.atom, prev_atom_))
      fail("duplicate bond from ring closure");

    char open_c = ring.bond_char;
    char close_c = bond_char;
    char effective = 0;
    bool directional_pair =
        (open_c == '/' || open_c == '\\') && (close_c == '/' || close_c == '\\');
    if (open_c != 0 && close_c != 0) {
      if (directional_pair) {
        // The two marks describe the same bond from opposite ends and must
        // be written with opposite slashes.
        if (open_c == close_c) fail("conflicting ring closure directions");
        effective = open_c;
      } else if (open_c != close_c) {
        fail("ring closure bond order mismatch");
      } else {
        effective = open_c;
      }
    } else {
      effective = open_c != 0 ? open_c : close_c;
      if (close_c == '/' || close_c == '\\') {
        // Normalize to the opening atom's perspective.
        effective = close_c == '/' ? '\\' : '/';
      }
    }

    int bond = make_bond(ring.atom, prev_atom_, effective,
                         /*from=*/ring.atom);
    // Patch the reserved slot on the opening atom and append on the closer.
    mol_.atom(ring.atom).stereo_order[ring.slot] = prev_atom_;
    mol_.atom(prev_atom_).stereo_order.push_back(ring.atom);
    (void)bond;
  }

  bool has_unperceived_bond(int a, int b) const {
    for (const auto& bond : mol_.bonds())
      if (bond.joins(a, b)) return true;
    return false;
  }

  int make_bond(int a, int b, char bond_char, int from) {
    BondOrder order;
    bool implicit_default = false;
    if (bond_char == 0) {
      // Unmarked bond: aromatic when both ends were written aromatic,
      // resolved to single later if it turns out not to lie in a ring.
      if (lowercase_[a] && lowercase_[b]) {
        order = BondOrder::kAromatic;
        implicit_default = true;
      } else {
        order = BondOrder::kSingle;
      }
    } else {
      order = order_of(bond_char);
    }
    int bond = mol_.add_bond(a, b, order);
    bond_from_.push_back(from);
    bond_dir_.push_back(bond_char == '/' ? 1 : bond_char == '\\' ? -1 : 0);
    bond_implicit_.push_back(implicit_default);
    return bond;
  }

  // ---- atoms ----------------------------------------------------------
  void parse_atom() {
    char c = peek();
    int atom;
    if (c == '[') {
      atom = parse_bracket_atom();
    } else {
      atom = parse_bare_atom();
    }
    if (prev_atom_ >= 0) {
      char bond_char = pending_bond_;
      pending_bond_ = 0;
      make_bond(prev_atom_, atom, bond_char, prev_atom_);
      mol_.atom(prev_atom_).stereo_order.push_back(atom);
      mol_.atom(atom).stereo_order.push_back(prev_atom_);
    } else if (pending_bond_ != 0) {
      fail("bond without a preceding atom");
    }
    // The in-bracket hydrogen occupies the slot right after the incoming
    // bond (or the first slot on a head atom).
    if (pending_h_slot_) {
      mol_.atom(atom).stereo_order.push_back(Atom::kImplicitSlot);
      pending_h_slot_ = false;
    }
    prev_atom_ = atom;
  }

  int parse_bare_atom() {
    size_t start = pos_;
    char c = take();
    int atomic_num = 0;
    bool aromatic = false;
    switch (c) {
      case 'C':
        if (peek() == 'l') { take(); atomic_num = 17; }
        else atomic_num = 6;
        break;
      case 'B':
        if (peek() == 'r') { take(); atomic_num = 35; }
        else atomic_num = 5;
        break;
      case 'N': atomic_num = 7; break;
      case 'O': atomic_num = 8; break;
      case 'P': atomic_num = 15; break;
      case 'S': atomic_num = 16; break;
      case 'F': atomic_num = 9; break;
      case 'I': atomic_num = 53; break;
      case 'b': atomic_num = 5; aromatic = true; break;
      case 'c': atomic_num = 6; aromatic = true; break;
      case 'n': atomic_num = 7; aromatic = true; break;
      case 'o': atomic_num = 8; aromatic = true; break;
      case 'p': atomic_num = 15; aromatic = true; break;
      case 's': atomic_num = 16; aromatic = true; break;
      default:
        pos_ = start;
        fail(std::string("unknown symbol '") + c + "'");
    }
    Atom a;
    a.atomic_num = atomic_num;
    a.aromatic = aromatic;
    a.implicit_h = -1;  // derived later
    int idx = mol_.add_atom(std::move(a));
    lowercase_.push_back(aromatic);
    bracket_.push_back(false);
    return idx;
  }

  int parse_bracket_atom() {
    take();  // '['
    if (peek() == ']') fail("empty bracket atom");

    int isotope = 0;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      isotope = read_digits(3);
    }

    // Element symbol, aromatic lowercase allowed for b/c/n/o/p/s.
    bool aromatic = false;
    int atomic_num = 0;
    char c = peek();
    if (c == '*') fail("wildcard atoms are not supported");
    if (std::islower(static_cast<unsigned char>(c))) {
      take();
      if ((c == 's' && peek() == 'e') || (c == 'a' && peek() == 's'))
        fail("unsupported aromatic element");
      switch (c) {
        case 'b': atomic_num = 5; break;
        case 'c': atomic_num = 6; break;
        case 'n': atomic_num = 7; break;
        case 'o': atomic_num = 8; break;
        case 'p': atomic_num = 15; break;
        case 's': atomic_num = 16; break;
        default: fail(std::string("unknown element '") + c + "'");
      }
      aromatic = true;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      take();
      std::string sym(1, c);
      if (!eof() && std::islower(static_cast<unsigned char>(peek()))) {
        std::string two = sym + peek();
        if (periodic::atomic_number(two) != 0) {
          take();
          sym = two;
        }
      }
      atomic_num = periodic::atomic_number(sym);
      if (atomic_num == 0) fail("unknown element '" + sym + "'");
    } else {
      fail("expected element symbol in bracket");
    }

    Chirality chirality = Chirality::kNone;
    if (peek() == '@') {
      take();
      if (peek() == '@') {
        take();
        if (peek() == '@') fail("malformed chirality");
        chirality = Chirality::kCw;
      } else {
        char c1 = peek();
        char c2 = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
        if ((c1 == 'T' && (c2 == 'H' || c2 == 'B')) ||
            (c1 == 'S' && c2 == 'P') || (c1 == 'O' && c2 == 'H') ||
            (c1 == 'A' && c2 == 'L'))
          fail("extended chirality is not supported");
        chirality = Chirality::kCcw;
      }
    }

    int hcount = 0;
    if (peek() == 'H') {
      take();
      int digits = read_digits(2);
      hcount = digits < 0 ? 1 : digits;
    }

    int charge = 0;
    if (peek() == '+' || peek() == '-') {
      char sign = take();
      int digits = read_digits(2);
      if (digits >= 0) {
        charge = digits;
      } else {
        charge = 1;
        while (peek() == sign) {
          take();
          ++charge;
        }
      }
      if (sign == '-') charge = -charge;
    }

    if (peek() == ':') fail("atom classes are not supported");
    if (peek() != ']') fail("expected ']'");
    take();

    if (aromatic && !periodic::aromatic_capable(atomic_num))
      fail("element cannot be aromatic");
    if (atomic_num == 1 && hcount > 0)
      throw ValenceError("hydrogen cannot carry hydrogens");

    Atom a;
    a.atomic_num = atomic_num;
    a.aromatic = aromatic;
    a.isotope = isotope;
    a.formal_charge = charge;
    a.explicit_h = hcount;
    a.implicit_h = 0;
    a.chirality = chirality;
    int idx = mol_.add_atom(std::move(a));
    lowercase_.push_back(aromatic);
    bracket_.push_back(true);
    if (hcount == 1 && chirality != Chirality::kNone) pending_h_slot_ = true;
    return idx;
  }

  // ---- post-structure checks & derivations -----------------------------
  void finish_structure() {
    if (mol_.num_atoms() == 0) throw SmilesSyntaxError("no atoms in SMILES");
    if (!open_rings_.empty()) {
      auto first = open_rings_.begin();
      throw SmilesSyntaxError("unclosed ring bond " +
                              std::to_string(first->first));
    }
  }

  // Fold plain explicit [H] atoms into their heavy neighbor.
  void collapse_explicit_h() {
    const int n = mol_.num_atoms();
    std::vector<int> bond_count(n, 0);
    std::vector<int> only_bond(n, -1);
    for (const auto& bond : mol_.bonds()) {
      ++bond_count[bond.a];
      ++bond_count[bond.b];
      only_bond[bond.a] = bond.index;
      only_bond[bond.b] = bond.index;
    }
    std::vector<bool> drop_atom(n, false);
    std::vector<bool> drop_bond(mol_.num_bonds(), false);
    for (int i = 0; i < n; ++i) {
      const Atom& a = mol_.atom(i);
      if (a.atomic_num != 1 || a.isotope != 0 || a.formal_charge != 0 ||
          a.explicit_h != 0 || a.chirality != Chirality::kNone)
        continue;
      if (bond_count[i] != 1) continue;
      const Bond& bond = mol_.bond(only_bond[i]);
      if (bond.order != BondOrder::kSingle) continue;
      if (bond_dir_[bond.index] != 0) continue;  // keep stereo reference H
      int partner = bond.other(i);
      if (mol_.atom(partner).atomic_num == 1) continue;
      drop_atom[i] = true;
      drop_bond[bond.index] = true;
      auto& partner_atom = mol_.atom(partner);
      partner_atom.explicit_h += 1;
      for (auto& slot : partner_atom.stereo_order)
        if (slot == i) slot = Atom::kImplicitSlot;
    }

    if (std::none_of(drop_atom.begin(), drop_atom.end(),
                     [](bool b) { return b; }))
      return;

    std::vector<int> remap(n, -1);
    Molecule next;
    for (int i = 0; i < n; ++i) {
      if (drop_atom[i]) continue;
      Atom a = mol_.atom(i);
      remap[i] = next.add_atom(std::move(a));
    }
    std::vector<int> new_from, new_dir;
    std::vector<bool> new_implicit;
    for (const auto& bond : mol_.bonds()) {
      if (drop_bond[bond.index]) continue;
      next.add_bond(remap[bond.a], remap[bond.b], bond.order);
      new_from.push_back(remap[bond_from_[bond.index]]);
      new_dir.push_back(bond_dir_[bond.index]);
      new_implicit.push_back(bond_implicit_[bond.index]);
    }
    for (int i = 0; i < next.num_atoms(); ++i) {
      for (auto& slot : next.atom(i).stereo_order)
        if (slot >= 0) slot = remap[slot];
    }
    std::vector<bool> new_lower, new_bracket;
    for (int i = 0; i < n; ++i) {
      if (drop_atom[i]) continue;
      new_lower.push_back(lowercase_[i]);
      new_bracket.push_back(bracket_[i]);
    }
    mol_ = std::move(next);
    bond_from_ = std::move(new_from);
    bond_dir_ = std::move(new_dir);
    bond_implicit_ = std::move(new_implicit);
    lowercase_ = std::move(new_lower);
    bracket_ = std::move(new_bracket);
  }

  // Unmarked bonds between two aromatic atoms default to aromatic inside
  // rings and to single elsewhere (e.g. the biphenyl linker).
  void resolve_default_bonds() {
    for (auto& bond : mol_.bonds_mutable()) {
      if (!bond_implicit_[bond.index]) continue;
      if (!bond.ring) bond.order = BondOrder::kSingle;
    }
  }

  void check_aromatic_placement() {
    for (const auto& atom : mol_.atoms()) {
      if (!atom.aromatic) continue;
      if (!mol_.in_ring(atom.index))
        throw AromaticityError("aromatic atom " +
                               std::to_string(atom.index) + " not in a ring");
      int aromatic_bonds = 0;
      for (const auto& nb : mol_.neighbors(atom.index))
        if (mol_.bond(nb.bond).order == BondOrder::kAromatic)
          ++aromatic_bonds;
      if (aromatic_bonds < 1)
        throw AromaticityError(
            "aromatic atom " + std::to_string(atom.index) +
            " is not part of an aromatic ring");
    }
    for (const auto& bond : mol_.bonds()) {
      if (bond.order != BondOrder::kAromatic) continue;
      if (!mol_.atom(bond.a).aromatic || !mol_.atom(bond.b).aromatic)
        throw AromaticityError("aromatic bond between non-aromatic atoms");
    }
  }

  int integer_bond_sum(int atom) const {
    int sum = 0;
    for (const auto& nb : mol_.neighbors(atom)) {
      switch (mol_.bond(nb.bond).order) {
        case BondOrder::kSingle: sum += 1; break;
        case BondOrder::kDouble: sum += 2; break;
        case BondOrder::kTriple: sum += 3; break;
        case BondOrder::kAromatic: sum += 1; break;
      }
    }
    return sum;
  }

  // Implicit hydrogens and the per-atom pi deficit used for kekulization.
  void assign_hydrogens() {
    pi_deficit_.assign(mol_.num_atoms(), 0);
    for (auto& atom : mol_.atoms_mutable()) {
      const int i = atom.index;
      const int sum = integer_bond_sum(i);
      if (!atom.aromatic) {
        if (bracket_[i]) {
          atom.implicit_h = 0;
        } else {
          auto target = periodic::smallest_valence_at_least(
              atom.atomic_num, atom.formal_charge, sum);
          if (!target)
            throw ValenceError(valence_message(atom, sum));
          atom.implicit_h = *target - sum;
        }
        continue;
      }
      // Aromatic atoms.
      if (bracket_[i]) {
        int occupied = sum + atom.explicit_h;
        auto target = periodic::smallest_valence_at_least(
            atom.atomic_num, atom.formal_charge, occupied);
        if (!target) throw ValenceError(valence_message(atom, occupied));
        int rem = *target - occupied;
        if (rem > 1)
          throw AromaticityError("aromatic atom " + std::to_string(i) +
                                 " has unresolved valence");
        pi_deficit_[i] = rem;
        atom.implicit_h = 0;
        continue;
      }
      switch (atom.atomic_num) {
        case 6: {  // c always carries one pi bond
          int rem = 4 - sum;
          if (rem < 0) throw ValenceError(valence_message(atom, sum));
          if (rem == 0) {
            atom.implicit_h = 0;
            pi_deficit_[i] = 0;
          } else {
            atom.implicit_h = rem - 1;
            pi_deficit_[i] = 1;
          }
          break;
        }
        case 5: {  // b: empty p orbital, no pi needed
          int rem = 3 - sum;
          if (rem < 0) throw ValenceError(valence_message(atom, sum));
          atom.implicit_h = rem;
          pi_deficit_[i] = 0;
          break;
        }
        case 7:
        case 15: {  // n/p: pyridine-like when divalent, pyrrole-like needs [nH]
          int rem = 3 - sum;
          if (rem < 0) throw ValenceError(valence_message(atom, sum));
          if (rem > 1)
            throw AromaticityError("aromatic atom " + std::to_string(i) +
                                   " has unresolved valence");
          atom.implicit_h = 0;
          pi_deficit_[i] = rem;
          break;
        }
        case 8:
        case 16: {  // o/s contribute a lone pair
          auto target = periodic::smallest_valence_at_least(
              atom.atomic_num, atom.formal_charge, sum);
          if (!target) throw ValenceError(valence_message(atom, sum));
          int rem = *target - sum;
          if (rem > 1)
            throw AromaticityError("aromatic atom " + std::to_string(i) +
                                   " has unresolved valence");
          atom.implicit_h = 0;
          pi_deficit_[i] = rem;
          break;
        }
        default:
          throw AromaticityError("element cannot be aromatic");
      }
    }
  }

  std::string valence_message(const Atom& atom, int occupied) const {
    return "valence " + std::to_string(occupied) + " of " +
           periodic::symbol(atom.atomic_num) +
           (atom.formal_charge ? (atom.formal_charge > 0 ? "+" : "-") : "") +
           " exceeds the admissible maximum";
  }

  // A consistent pi assignment must exist: perfect matching over the
  // aromatic bonds restricted to atoms that still need one double bond.
  void kekulize_check() {
    const int n = mol_.num_atoms();
    std::vector<std::vector<int>> cand(n);
    int needed = 0;
    for (const auto& bond : mol_.bonds()) {
      if (bond.order != BondOrder::kAromatic) continue;
      if (pi_deficit_[bond.a] == 1 && pi_deficit_[bond.b] == 1) {
        cand[bond.a].push_back(bond.b);
        cand[bond.b].push_back(bond.a);
      }
    }
    for (int i = 0; i < n; ++i)
      if (pi_deficit_[i] == 1) ++needed;
    if (needed == 0) return;
    std::vector<int> matched(n, -1);
    long steps = 0;
    if (!match_from(0, cand, matched, steps))
      throw AromaticityError(
          "aromatic flags are inconsistent with any pi assignment");
  }

  bool match_from(int start, const std::vector<std::vector<int>>& cand,
                  std::vector<int>& matched, long& steps) {
    if (++steps > 2000000)
      throw AromaticityError("aromatic assignment too complex");
    int i = start;
    const int n = mol_.num_atoms();
    while (i < n && !(pi_deficit_[i] == 1 && matched[i] < 0)) ++i;
    if (i >= n) return true;
    for (int nb : cand[i]) {
      if (matched[nb] >= 0) continue;
      matched[i] = nb;
      matched[nb] = i;
      if (match_from(i + 1, cand, matched, steps)) return true;
      matched[i] = -1;
      matched[nb] = -1;
    }
    return false;
  }

  void check_aliphatic_valences() {
    for (const auto& atom : mol_.atoms()) {
      if (atom.aromatic) continue;
      int occupied = integer_bond_sum(atom.index) + atom.total_h();
      int max = periodic::max_valence(atom.atomic_num, atom.formal_charge);
      if (max == 0) continue;  // element without a valence model
      if (occupied > max) throw ValenceError(valence_message(atom, occupied));
    }
  }

  // Per-ring Hueckel 4n+2 over sp2 members, applied to rings written in
  // Kekule form.  Evaluated for all rings first, then applied.
  void perceive_kekule_aromaticity() {
    std::vector<const std::vector<int>*> winners;
    for (const auto& ring : mol_.rings()) {
      bool all_aromatic = true;
      for (int at : ring)
        if (!mol_.atom(at).aromatic) all_aromatic = false;
      if (all_aromatic) continue;
      int electrons = 0;
      if (!ring_pi_electrons(ring, electrons)) continue;
      if (electrons % 4 == 2) winners.push_back(&ring);
    }
    for (const auto* ring : winners) {
      for (size_t i = 0; i < ring->size(); ++i) {
        int a = (*ring)[i];
        int b = (*ring)[(i + 1) % ring->size()];
        mol_.atom(a).aromatic = true;
        int bi = mol_.bond_between(a, b);
        mol_.bond(bi).order = BondOrder::kAromatic;
      }
    }
  }

  bool ring_pi_electrons(const std::vector<int>& ring, int& electrons) const {
    electrons = 0;
    for (int at : ring) {
      const Atom& atom = mol_.atom(at);
      int doubles = 0;
      bool double_to_ring_atom = false;
      for (const auto& nb : mol_.neighbors(at)) {
        const Bond& bond = mol_.bond(nb.bond);
        if (bond.order == BondOrder::kTriple) return false;
        if (bond.order == BondOrder::kDouble) {
          ++doubles;
          if (mol_.in_ring(nb.atom)) double_to_ring_atom = true;
        }
      }
      if (atom.aromatic) {  // trusted member of a fused aromatic ring
        if (atom.atomic_num == 8 || atom.atomic_num == 16)
          electrons += 2;
        else if ((atom.atomic_num == 7 || atom.atomic_num == 15) &&
                 doubles == 0 && (atom.total_h() > 0 || mol_.degree(at) == 3))
          electrons += 2;
        else
          electrons += 1;
        continue;
      }
      if (doubles >= 2) continue;  // cumulated/sulfonyl centers add nothing
      if (doubles == 1) {
        electrons += double_to_ring_atom ? 1 : 0;
        continue;
      }
      // Saturated members: only lone-pair donors keep the ring conjugated.
      switch (atom.atomic_num) {
        case 6:
          if (atom.formal_charge == -1) electrons += 2;
          else if (atom.formal_charge == 1) electrons += 0;
          else return false;
          break;
        case 7:
        case 15:
          if (atom.formal_charge == 1) return false;
          if (mol_.degree(at) + atom.total_h() > 3) return false;
          electrons += 2;
          break;
        case 8:
        case 16:
          if (mol_.degree(at) > 2) return false;
          electrons += 2;
          break;
        case 5:
          if (atom.formal_charge != 0) return false;
          electrons += 0;
          break;
        default:
          return false;
      }
    }
    return true;
  }

  void finalize_tetrahedral() {
    for (auto& atom : mol_.atoms_mutable()) {
      if (atom.chirality == Chirality::kNone) continue;
      auto& order = atom.stereo_order;
      int h_slots = static_cast<int>(
          std::count(order.begin(), order.end(), Atom::kImplicitSlot));
      bool ok = order.size() == 4 && h_slots <= 1 &&
                atom.total_h() == h_slots;
      if (ok) {
        std::vector<int> sorted(order);
        std::sort(sorted.begin(), sorted.end());
        ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      }
      if (!ok) {
        atom.chirality = Chirality::kNone;
      }
    }
    // Atoms that never carried a tag do not need their written order.
    for (auto& atom : mol_.atoms_mutable())
      if (atom.chirality == Chirality::kNone) atom.stereo_order.clear();
  }

  // Side of a marked single bond relative to the double-bond end `end`:
  // +1 and -1 distinguish the two sides of the double-bond axis.
  int side_sign(const Bond& single, int end) const {
    int dir = bond_dir_[single.index];
    int from = bond_from_[single.index];
    int substituent = single.other(end);
    return from == substituent ? dir : -dir;
  }

  void finalize_cis_trans() {
    for (auto& bond : mol_.bonds_mutable()) {
      if (bond.order != BondOrder::kDouble) continue;
      int best_ref[2] = {-1, -1};
      int best_sign[2] = {0, 0};
      const int ends[2] = {bond.a, bond.b};
      bool conflict = false;
      for (int side = 0; side < 2; ++side) {
        int first_sign = 0;
        for (const auto& nb : mol_.neighbors(ends[side])) {
          const Bond& single = mol_.bond(nb.bond);
          if (single.index == bond.index) continue;
          if (single.order != BondOrder::kSingle) continue;
          if (bond_dir_[single.index] == 0) continue;
          int sign = side_sign(single, ends[side]);
          if (first_sign == 0)
            first_sign = sign;
          else if (sign == first_sign)
            conflict = true;
          if (best_ref[side] < 0 || nb.atom < best_ref[side]) {
            best_ref[side] = nb.atom;
            best_sign[side] = sign;
          }
        }
      }
      if (conflict)
        throw SmilesSyntaxError("conflicting bond directions");
      if (best_ref[0] < 0 || best_ref[1] < 0) continue;
      if (bond.ring) continue;  // ring double-bond geometry is dropped
      bond.ref_a = best_ref[0];
      bond.ref_b = best_ref[1];
      bond.config = best_sign[0] == best_sign[1] ? CisTrans::kSameSide
                                                 : CisTrans::kOppositeSide;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  Molecule mol_;
  std::vector<bool> lowercase_;
  std::vector<bool> bracket_;
  std::vector<int> bond_from_;
  std::vector<int> bond_dir_;
  std::vector<bool> bond_implicit_;
  std::vector<int> pi_deficit_;
  std::map<int, PendingRing> open_rings_;
  std::vector<int> branch_stack_;
  int prev_atom_ = -1;
  char pending_bond_ = 0;
  bool pending_h_slot_ = false;
};

}  // namespace

Molecule parse_smiles(std::string_view text) {
  SmilesReader reader(text);
  return reader.read();
}

ParseOutcome try_parse_smiles(std::string_view text) noexcept {
  ParseOutcome out;
  try {
    out.mol = parse_smiles(text);
  } catch (const Error& e) {
    out.error = e.what();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

bool same_molecule(std::string_view a, std::string_view b) noexcept {
  try {
    Molecule ma = parse_smiles(a);
    Molecule mb = parse_smiles(b);
    return canonical_smiles(ma) == canonical_smiles(mb);
  } catch (...) {
    return false;
  }
}

}  // namespace moldebate
