#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fano/groebner.hpp"

namespace fano {

/// Rational normal scroll of type (d_0 >= d_1 >= ... >= d_k): the two-row
/// matrix whose 2x2 minors cut out the scroll, plus one free ambient
/// variable per zero entry of the type.
struct ScrollDescription {
  std::vector<int> type;
  Ring ring;
  // matrix columns as (top variable, bottom variable) ring indices
  std::vector<std::pair<int, int>> columns;
  // rolled_to[v] = ring index of the variable replacing v in a roll, or -1
  std::vector<int> rolled_to;

  int ambient_dim() const { return ring->nvars() - 1; }
};

/// Canonical variable names; pass explicit names to match a chosen ring.
ScrollDescription make_scroll(const std::vector<int>& type,
                              const std::vector<std::string>& names = {});

/// The 2x2 minors of the scroll matrix.
Ideal scroll_ideal(const ScrollDescription& s);

/// True when every monomial admits k consecutive rolls (existentially).
bool rollable(const ScrollDescription& s, const Polynomial& f, int k = 1);

/// Roll factors once: in each monomial the latest eligible top-row variable
/// is advanced one step along its block. The choice is canonical; any other
/// valid choice differs by an element of the minor ideal. `lookahead` makes
/// the per-monomial choice keep that many further rolls possible.
Polynomial roll(const ScrollDescription& s, const Polynomial& f, int lookahead = 0);

/// f_0 together with its m successive rolls.
std::vector<Polynomial> roll_chain(const ScrollDescription& s, const Polynomial& f0,
                                   int m);

/// Scroll minors together with f_0 and its m successive rolls.
Ideal rolling_divisor_ideal(const ScrollDescription& s, const Polynomial& f0, int m);

struct NamedIdeal {
  Ideal ideal;
  ScrollDescription scroll;  // ring empty if not a scroll construction
  bool on_scroll = false;
  std::vector<Polynomial> divisor_cubics;  // the rolled chain, when present
};

/// Registry of the named varieties: explicit toric cases (275510, 147467,
/// 524375, 5953, Xbp), scroll constructions with general coefficients
/// (V10p, V12_2_6, T3, T9, T25, T7s), the Segre/cube cases (V12_2_9,
/// V12_3), and the Stanley-Reisner cones (SR_T4..SR_T10, SR_T8p).
/// Seeded "general" choices are validated by cheap invariants and resampled
/// on failure, a bounded number of times.
NamedIdeal construct_named(const std::string& name, std::uint64_t seed = 0,
                           const GBOptions& opt = {});

std::vector<std::string> registry_names();

/// Global-section count of the normal sheaf of an anticanonically embedded
/// Fano threefold: g^2 + 3g + 22 - b2 + b3/2, with g the genus.
Int h0N_formula(long g, long b2, long b3);

}  // namespace fano
