#pragma once

// Alexander presentations built from diagrams, their one-variable reduction
// (every t_i -> t), the integer specialization at t = -1, and the
// difference submodule M_0.
//
// Matrices are stored generator-major: matrix[row][column], one row per
// generator (arc) and one column per relation (crossing).

#include <string>
#include <vector>

#include "json.hpp"
#include "medialink/diagram.hpp"
#include "medialink/laurent.hpp"

namespace medialink {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Image of a generator in Λ ⊕ Z_ε^{μ-1}: the Λ summand is spanned by
/// (t_1 - 1)⊗1, the torsion summands by (t_i - t_1)⊗1 for i = 2..μ.
struct CrowellCoord {
  IntLaurent free{1};
  std::vector<Integer> tors;

  friend bool operator==(const CrowellCoord&, const CrowellCoord&) = default;
};

/// Canonical coordinate of an arc on component i.
CrowellCoord arc_coord(int component, int mu);

enum class Level { Multivariate, Reduced };

struct Presentation {
  Level level = Level::Multivariate;
  int mu = 1;
  std::size_t varcount = 1;
  std::vector<std::string> generators;
  std::vector<int> components;  // per generator; 0 for difference generators
  std::vector<std::string> relations;
  Matrix<IntLaurent> matrix;
  /// Multivariate level: t_{κ(a)} - 1 per generator.
  std::vector<IntLaurent> crowell;
  /// Reduced level: coordinates per generator.
  std::vector<CrowellCoord> coords;

  std::size_t rows() const { return generators.size(); }
  std::size_t cols() const { return relations.size(); }
  IntLaurent zero() const { return IntLaurent(varcount); }
};

Presentation build_presentation(const LinkDiagram& d);

/// Every relation column is killed by the Crowell data.
bool check_crowell_compat(const Presentation& p);

Presentation reduce_tau(const Presentation& p);

/// Integer coordinates at ν: free part in Z, torsion residues mod 2.
struct NuCoord {
  Integer free;
  std::vector<int> tors;
};

struct NuPresentation {
  int mu = 1;
  std::vector<std::string> generators;
  Matrix<Integer> matrix;
  std::vector<NuCoord> coords;
};

/// Evaluates every entry at t_i = -1. Accepts either level.
NuPresentation specialize_nu(const Presentation& p);

/// Presentation of the submodule generated by differences a - base, on
/// generators "d(a)" for a != base. Reduced level only.
Presentation m0_presentation(const Presentation& p, const std::string& base);

/// Removes a generator and a relation whenever some entry is a unit ±t^m,
/// after clearing that generator's row by column operations. Retained
/// generators keep their names and Crowell data, so the presented module and
/// every Fitting ideal are unchanged. Zero columns are dropped.
Presentation simplify(const Presentation& p);

nlohmann::json to_json(const Presentation& p);

}  // namespace medialink
