#pragma once

// Finite quandles as Cayley tables, affine targets Z_n with x ▷ y = ux + (1-u)y,
// colorings of diagrams by affine targets, the orbit count of the medial
// quandle of a link, and the displacement module.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "medialink/alexander.hpp"
#include "medialink/diagram.hpp"
#include "medialink/modulealg.hpp"

namespace medialink {

struct CayleyQuandle {
  /// table[x][y] = x ▷ y
  std::vector<std::vector<int>> table;

  std::size_t size() const { return table.size(); }
  int op(int x, int y) const { return table[x][y]; }
};

struct AffineQuandleSpec {
  std::uint64_t n = 1;
  std::uint64_t u = 1;
};

CayleyQuandle affine_quandle(const AffineQuandleSpec& spec);
void require_affine_spec(const AffineQuandleSpec& spec);

/// Empty iff idempotent, columns are permutations, and right distributive.
std::vector<std::string> check_quandle_axioms(const CayleyQuandle& q);
bool check_medial(const CayleyQuandle& q);

/// Dis(Q) as a list of permutations, identity first, in discovery order.
std::vector<std::vector<int>> displacement_group(const CayleyQuandle& q);
std::size_t dis_group_order(const CayleyQuandle& q);
/// Only the identity displacement has a fixed point.
bool check_semiregular(const CayleyQuandle& q);

/// Conjugation quandle x ▷ y = y x y^{-1} on a permutation group given by
/// its elements.
CayleyQuandle conjugation_quandle(const std::vector<std::vector<int>>& group);

nlohmann::json to_json(const CayleyQuandle& q);
CayleyQuandle quandle_from_json(const nlohmann::json& j);

/// Number of colorings a_3 = u·a_2 + (1-u)·a_1 mod n, by diagonalizing the
/// coefficient matrix over Z with entries kept reduced mod n.
Integer count_colorings(const LinkDiagram& d, const AffineQuandleSpec& spec);
/// Enumerates all n^{#arcs} assignments; cap exceeded beyond `limit`.
Integer count_colorings_brute(const LinkDiagram& d, const AffineQuandleSpec& spec,
                              std::uint64_t limit = 1000000);

/// Orbit count via identifying the two under-arcs at every crossing; an
/// internal error if it disagrees with d.mu.
int orbit_count(const LinkDiagram& d);

/// Generators d(a) for every arc; one column per crossing with (1-t) at a_1,
/// t at a_2 and -1 at a_3, and a final column setting d(base) = 0.
Presentation displacement_presentation(const LinkDiagram& d, const std::string& base);

/// Rational invariant factors of (1-t)·M_0: factors of M_0 divisible by t-1
/// lose that factor, free summands stay free.
RatSmithResult displacement_rational_factors(const Presentation& reduced, const std::string& base);

}  // namespace medialink
