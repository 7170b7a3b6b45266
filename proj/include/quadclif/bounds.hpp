#pragma once

// Clifford-type section bounds for sheaves on the quadric.
//
// The basic quantities, for rank r >= 1 and rational slope mu >= -1:
//
//   alpha(mu)   = floor(mu) + 1
//   beta(r,mu)  = r * alpha * (2*mu - alpha + 2)
//
// beta(r, mu_max(E)) bounds h0(E) for torsion-free E.  The theta chain
// refines it for globally generated unbalanced sheaves:
//
//   theta_l = beta(r, mu'') + (l+1)*(r+a),   mu'' = mu - (l+1)/2,
//
// with c1 = (a,b) oriented a <= b; the usable bound at twist index j is
// min(theta_{j-1}, theta_j).  Two further refinements replace the slope cap
// by the best slope representable with bounded denominator: over the image
// of evaluation (stratified) and over a rank r-1 subsheaf when the sheaf is
// not generically globally generated.  beta(r,.) is integer-valued exactly
// when 2*r*mu is integral; the refinements can leave that lattice, so they
// evaluate the rational beta and report its floor.

#include "quadclif/chern.hpp"

#include <map>
#include <optional>
#include <string>

namespace quadclif {

Int alpha(const Rational& mu);

// Demands 2*r*mu integral (and therefore returns an exact integer).
Int beta(Int r, const Rational& mu);

// Relaxed variant, defined for every rational mu >= -1.
Rational beta_rational(Int r, const Rational& mu);

enum class BoundKind { general, unbalanced, stratified, non_gg };

const char* to_string(BoundKind kind);

struct BoundReport {
  BoundKind kind;
  Int bound = 0;
  std::map<std::string, Rational> aux;  // named intermediates: alpha, mu'', branches, ...
};

BoundReport general_bound(Int r, const Rational& mu_max);

// theta_ell for c1 = (a,b), 0 <= a <= b, 0 <= ell <= floor((b-a)/r).
Int theta(Int r, Int a, Int b, Int ell);

// True exactly on the tuples where theta_ell < theta_{ell-1} can fail:
// ell = floor((b-a)/r), or ell = floor((b-a)/r) - 1 with
// floor(mu''_{ell-1}) = floor(mu''_ell).  Requires ell >= 1.
bool theta_exception(Int r, Int a, Int b, Int ell);

// The sharp form takes the maximal destabilizing slope; the two-argument
// branch values are evaluated at mu'' = mu_max - (j+1)/2.  For semistable
// sheaves mu_max is the slope, which is what the short overload assumes.
BoundReport unbalanced_bound(Int r, Int a, Int b, Int j, const Rational& mu_max);
BoundReport unbalanced_bound(Int r, Int a, Int b, Int j);

// Largest rational <= mu_cap expressible with denominator in {2,4,...,2s},
// clamped below at floor_bound (0 or -1).
Rational best_representable_slope(const Rational& mu_cap, Int s, Int floor_bound);

// s = rank of the image of the evaluation map; requires mu_max >= 0.
BoundReport stratified_bound(Int s, const Rational& mu_max);

// For sheaves that are not generically globally generated; requires r >= 2.
BoundReport non_gg_bound(Int r, const Rational& mu_max);

enum class BnDecision { empty, all_of_moduli, indeterminate };

const char* to_string(BnDecision d);

// Status of the Brill-Noether locus B^k inside the moduli space of
// semistable sheaves with the given character.
BnDecision bn_locus_decision(const ChernCharacter& ch, Int k);

// beta(rank, slope) - h0; negative values witness a bound violation.
Int deficiency(const ChernCharacter& ch, Int h0);

// Character of the cokernel of O(k-1,l)^m (+) O(k,l-1)^n -> O(k,l)^{r+m+n}.
ChernCharacter steiner_character(Int k, Int l, Int r, Int m, Int n);

struct MaximalStructure {
  Int r = 0;  // rank
  Int k = 0;  // balanced twist degree, alpha - 1
  Int m = 0;  // c1 = r*(k,k) + (m,n), m + n < 2r
  Int n = 0;
  // Long resolution 0 -> O(-1,-1)^e0 -> O(-1,0)^e1a (+) O(0,-1)^e1b
  //                   -> O^e2 -> E -> 0.
  Int e0 = 0, e1a = 0, e1b = 0, e2 = 0;
};

// For slope >= 0: the resolution data iff the character is maximal, that is
// chi = beta(r, slope) and c1 - r*(k,k) lands in the admissible square.
std::optional<MaximalStructure> maximal_structure_check(const ChernCharacter& ch);

// Exact h0 of a generic twisted Steiner-like sheaf, k >= 0, l >= k,
// m + n < 2r; for l > k additionally 0 <= n - m < r.
Int twisted_steiner_h0_formula(Int k, Int l, Int r, Int m, Int n);

}  // namespace quadclif
