#pragma once

// Normal forms and the invariants read off from them: integer Smith form with
// transforms, rational invariant factors over Q[t^{±1}], elementary ideals
// and Alexander polynomials, evaluation fingerprints of multivariate ideals,
// and the ν fingerprint with its torsion-image set.
//
// Elementary ideals: with g generators, E_k is generated by the
// (g-k)x(g-k) minors of the relation matrix. E_k is the unit ideal when
// g-k <= 0 and the zero ideal when g-k exceeds the number of relations.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "medialink/alexander.hpp"
#include "medialink/laurent.hpp"

namespace medialink {

struct SmithResult {
  Matrix<Integer> D;
  Matrix<Integer> U;     // rows x rows
  Matrix<Integer> V;     // cols x cols
  Matrix<Integer> Uinv;  // inverse of U
  /// The min(rows, cols) diagonal entries, nonnegative, each dividing the next
  /// (zeros last).
  std::vector<Integer> diag;
};

/// U·A·V = D. `cols` is needed for matrices with no rows. Pivot: smallest
/// nonzero absolute value, ties row-major. Transforms are skipped (left
/// empty) when track is false.
SmithResult smith_integer(const Matrix<Integer>& A, std::size_t cols, bool track = true);
SmithResult smith_integer(const Matrix<Integer>& A, bool track = true);

struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // entries > 1, divisibility order

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of A viewed as a map Z^cols -> Z^gens.
AbelianGroup abelian_invariants(const Matrix<Integer>& A, std::size_t gens);

struct RatSmithResult {
  std::size_t rank = 0;
  /// Monic, lowest exponent 0, non-units; f_1 | f_2 | ...
  std::vector<RatLaurent> factors;

  friend bool operator==(const RatSmithResult&, const RatSmithResult&) = default;
};

RatSmithResult smith_rational_univariate(const Matrix<RatLaurent>& A, std::size_t gens);
/// Rational invariant factors of a one-variable presentation.
RatSmithResult rational_invariants(const Presentation& p);

struct MinorCaps {
  std::size_t max_rows = 14;
  std::size_t max_minor = 10;
};

/// All (g-k)-minors, row subsets then column subsets in lexicographic order.
std::vector<IntLaurent> elementary_ideal_generators(const Presentation& p, int k,
                                                    const MinorCaps& caps = {});

/// normalize_unit(gcd of the (g-k)-minors); one-variable presentations.
IntLaurent alexander_poly(const Presentation& p, int k, const MinorCaps& caps = {});

struct DeltaList {
  /// Δ_0, Δ_1, ... up to (excluding) the first Δ_k equal to 1.
  std::vector<IntLaurent> values;
  /// "ok" or "cap-exceeded at k=..."
  std::string status = "ok";

  friend bool operator==(const DeltaList&, const DeltaList&) = default;
};

DeltaList alexander_polys(const Presentation& p, const MinorCaps& caps = {});

/// Tuples over {1, 3, 5, -3} of length mu, first coordinate slowest, at most
/// `cap` of them.
std::vector<std::vector<int>> evaluation_points(int mu, std::size_t cap = 256);

/// Drops the prime factors 3 and 5, which are units once the point
/// coordinates are inverted.
Integer strip_point_primes(Integer v);

struct IdealFingerprint {
  int k = 0;
  std::vector<std::vector<int>> points;
  std::vector<Integer> values;

  friend bool operator==(const IdealFingerprint&, const IdealFingerprint&) = default;
};

/// gcd over the generators of |value| at every schedule point.
IdealFingerprint ideal_evaluation_fingerprint(const std::vector<IntLaurent>& gens, int mu,
                                              int k = 0, std::size_t cap = 256);

/// Same values for E_k of p, computed without minors: the matrix evaluated
/// at each point is made integral by column scaling and the product of the
/// first g-k Smith diagonal entries is taken.
IdealFingerprint ideal_fingerprint_of(const Presentation& p, int k, std::size_t cap = 256);

struct NuFingerprint {
  int mu = 1;
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  /// ν images of torsion elements in Z_2^{mu-1}.
  std::set<std::vector<int>> torsion_image;
  /// "enumerated", or "span" when the torsion subgroup exceeded the cap and
  /// the image was computed as the F_2 span of generator images.
  std::string status = "enumerated";

  friend bool operator==(const NuFingerprint& a, const NuFingerprint& b) {
    return a.mu == b.mu && a.rank == b.rank && a.torsion == b.torsion &&
           a.torsion_image == b.torsion_image;
  }
};

NuFingerprint nu_fingerprint(const Matrix<Integer>& A, const std::vector<NuCoord>& coords,
                             int mu, std::size_t cap = 1024);
NuFingerprint nu_fingerprint(const NuPresentation& p, std::size_t cap = 1024);

std::string render_bits(const std::vector<int>& v);

nlohmann::json to_json(const RatSmithResult& r);
nlohmann::json to_json(const DeltaList& d);
nlohmann::json to_json(const IdealFingerprint& f);
nlohmann::json to_json(const NuFingerprint& f);

}  // namespace medialink
