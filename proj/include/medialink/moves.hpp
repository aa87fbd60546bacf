#pragma once

// Diagram rewriting: trivial-crossing insertion, the alternating-writhes
// construction, and Reidemeister moves for invariance fuzzing.
//
// Moves act on the combinatorial data only. Every move below is a Tietze
// transformation of the crossing relations (R1 kinks identify two arcs, R2
// bigons identify the outer pieces, R3 is right self-distributivity), so all
// presentation-derived invariants are preserved even when the site has no
// planar witness.

#include <cstdint>
#include <string>
#include <vector>

#include "medialink/diagram.hpp"

namespace medialink {

enum class MoveKind { R1Plus, R1Minus, R1Inverse, R2, R2Inverse, R3 };

const char* to_string(MoveKind kind);

struct MoveSpec {
  MoveKind kind = MoveKind::R1Plus;
  /// R1±: {arc}. R2: {over arc, under arc}.
  std::vector<std::string> arcs;
  /// R1inv: {kink}. R2inv: {first, second} along the under strand.
  /// R3: {over-middle crossing, over-bottom crossing, middle-bottom crossing}.
  std::vector<std::string> crossings;
  /// Writhe of the first new crossing for R2.
  int writhe = 1;
  /// R1±: the strand passes over the kink before passing under it.
  bool over_first = true;

  std::string describe() const;
};

/// Splits `arc` at a new kink of writhe w placed just before the arc's end
/// (over-first). A crossing-free arc becomes a one-crossing circle.
LinkDiagram insert_trivial_crossing(const LinkDiagram& d, const std::string& arc, int w);

/// Gives every crossing-free component a +1 kink, then inserts a kink of
/// writhe -w into every arc whose two underpass incidences share writhe w.
LinkDiagram make_alternating(const LinkDiagram& d);

/// Applies one move; usage error naming the site when the pattern does not
/// match.
LinkDiagram reidemeister_move(const LinkDiagram& d, const MoveSpec& m);

/// All legal sites for one kind, in deterministic order.
std::vector<MoveSpec> legal_moves(const LinkDiagram& d, MoveKind kind);

struct FuzzResult {
  LinkDiagram diagram;
  std::vector<MoveSpec> applied;
};

/// Applies `count` random legal moves chosen by a seeded generator; the same
/// seed replays the same sequence.
FuzzResult random_moves(const LinkDiagram& d, int count, std::uint64_t seed);

}  // namespace medialink
