#pragma once

#include <string>
#include <vector>

#include "hyperchar/series.hpp"
#include "hyperchar/tpoly.hpp"

namespace hyperchar {

/// Generating series of hypertrees on labelled vertices, graded by x^n/n!
/// (n = number of vertices), t^{rank} (rank = edges - 1) and one u_k per
/// edge of size k.  ha_p / ha_a / ha_pa are the vertex-, edge- and
/// flag-pointed variants; y is the rooted edge-neighborhood series used by
/// the defining fixpoint.  ha satisfies the dissymmetry relation
/// ha + ha_pa = ha_p + ha_a, and ha_p = x d/dx ha.
struct HypertreeSeriesBundle {
  Series ha, ha_p, ha_a, ha_pa, y;
};

HypertreeSeriesBundle solve_hypertree_system(int order);

/// Same shape for cyclic hypertrees (a cyclic order on the edges around each
/// vertex).  weighted keeps the u_k edge-size variables; the simplified
/// system sets every u_k = 1.
struct CyclicSeriesBundle {
  Series hac, hac_p, hac_a, hac_pa, yc;
  bool weighted = false;
};

CyclicSeriesBundle solve_cyclic_system(int order, bool weighted);

/// Rank generating polynomial of cyclic hypertrees on n vertices:
/// tau(n) = n! [x^n] hac with u = 1, a polynomial in t of degree n-2.
TPoly tau(const CyclicSeriesBundle& simplified, int n);
TPoly tau(int n);

/// Characteristic polynomial chi_n(s) of the hypertree poset on n vertices,
/// coefficients stored in ascending powers of s (degree n-2).
struct CharPoly {
  int n = 0;
  std::vector<Rational> coeffs;

  Rational eval(const Rational& v) const;
  std::string str() const;           // descending powers, e.g. "s^2 - 12*s + 20"
  MultiPoly to_multipoly() const;    // polynomial in s
  bool operator==(const CharPoly&) const = default;
};

enum class ChiMethod { ViaTau, Triangular };

/// ViaTau reads chi_n off tau via chi_n(s) = (-s)^{n-2} tau(-1/s);
/// Triangular solves the weighted counting identity sum_T chi_T = s^{n-2}
/// degree by degree, where chi_T is the product of chi_{|edge|} over the
/// edges of T.
CharPoly chi(int n, ChiMethod method);
/// Runs both methods and cross-checks them.
CharPoly chi_checked(int n);

/// -chi_n(1): the Moebius number of the bounded hypertree poset on n vertices,
/// equal to (-1)^{n-1} (n-1)^{n-2}.
Rational mobius_hat(int n);

/// Verification of the closed functional equations satisfied by the
/// simplified cyclic series: with A := d/dB hac(B) and z := B + t*hac_pa(B),
///   A = -(1/t) ln(B/z)  and  B = z - t z (exp(z) - 1)
/// hold to the requested order, and at t = -1 both A and z reduce to the
/// tree series W(B) = sum n^{n-1} (-1)^{n-1} B^n/n!.
struct Theorem1Report {
  int order = 0;
  bool system_ok = false;
  int system_bad_degree = -1;
  bool lambert_ok = false;
  int lambert_bad_degree = -1;
  bool pass() const { return system_ok && lambert_ok; }
};

Theorem1Report verify_functional_equation(int order);

}  // namespace hyperchar
