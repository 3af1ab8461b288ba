#pragma once

/**
 * @file char2ex.hpp
 * @brief The supersingular curve y^2 + y = x^3 over F_4 and its automorphisms
 *        fixing the point at infinity O.
 *
 * Automorphisms are g_{u,r,t}(x, y) = (u^2 x + r, y + u^2 r^2 x + t) with
 * u in F_4^*, t^2 + t + r^3 = 0.  Composition is (g o g')(P) = g(g'(P)).
 * On the basis v1, v2 of the first de Rham cohomology the stated action is
 * g v1 = u^2 v1, g v2 = u^2 t v1 + u v2.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hodgesplit/gf.hpp"
#include "hodgesplit/laurent.hpp"
#include "hodgesplit/linalg.hpp"
#include "hodgesplit/modrep.hpp"
#include "json.hpp"

namespace hodgesplit::char2ex {

using gf::FieldElement;
using laurent::LaurentSeries;
using linalg::Matrix;

struct AutTriple {
  FieldElement u;
  FieldElement r;
  FieldElement t;

  /// u != 0 and t^2 + t + r^3 = 0.
  bool valid() const;
  std::string to_string() const;
  bool operator==(const AutTriple&) const = default;
};

/// Builds a triple from F_4 element indices; throws PreconditionError if it is not an automorphism.
AutTriple make_triple(std::uint64_t u, std::uint64_t r, std::uint64_t t);
AutTriple identity();

/// All 24 automorphisms, ordered by the indices of (u, r, t).
std::vector<AutTriple> enumerate_group();

/// g o h.  Throws InconsistencyError if the result is not an automorphism.
AutTriple compose(const AutTriple& g, const AutTriple& h);
AutTriple inverse(const AutTriple& g);
std::size_t element_order(const AutTriple& g);

/// Multiplication table of enumerate_group() under compose.
modrep::FiniteGroup group_table();

/// [[u^2, u^2 t], [0, u]].
Matrix rep(const AutTriple& g);

struct HomomorphismCheck {
  std::size_t pairs = 0;
  /// Pairs with rep(g o h) != rep(g) rep(h).
  std::size_t failures = 0;
  /// Pairs with rep(g o h) != rep(h) rep(g).
  std::size_t anti_failures = 0;
  std::optional<std::pair<AutTriple, AutTriple>> first_failure;
  /// rep(g) = 1 only for the identity.
  bool injective = false;

  bool holds() const { return pairs > 0 && failures == 0; }
};

HomomorphismCheck check_rep_homomorphism();
bool rep_is_homomorphism();

struct IndecomposabilityCertificate {
  bool v1_line_stable = false;
  /// Elements for which (1 - u) alpha = u t has no solution alpha in any extension field.
  std::vector<AutTriple> inconsistent_witnesses;
  bool witness_1_0_1 = false;
  /// (1, 1, zeta) for both zeta in F_4 \ F_2.
  bool witness_1_1_zeta = false;
  /// The system restricted to the u = 1 subgroup is already inconsistent.
  bool sylow_inconsistent = false;
  /// G-stable lines in F_4^2, by enumeration of all five.
  std::size_t stable_lines = 0;
  bool indecomposable = false;
};

IndecomposabilityCertificate indecomposability_certificate();

struct Expansion {
  LaurentSeries x;
  LaurentSeries y;
  /// Absolute precision to which y^2 + y = x^3 was confirmed.
  long checked_to = 0;
};

/// x and y in the uniformiser s = x / y at O, with w = sum_k s^{3 * 2^k} known to s^prec.
/// Throws PreconditionError if prec < 16, InconsistencyError if the curve equation fails.
Expansion expand_at_infinity(long prec);

/// ord_O(g(s) - s), or nullopt if the difference vanishes to the working precision.
/// Throws PreconditionError for the identity.
std::optional<long> ramification_order(const AutTriple& g, long prec);

/// ord_O(x^{-2}) on the same expansion: the value predicted for the involution (1, 0, 1).
long involution_closed_form(long prec);

struct FiltrationStep {
  long i = 0;
  std::size_t size = 0;
};

struct FiltrationReport {
  std::size_t group_order = 0;
  bool closed = false;
  bool associative = false;
  bool inverses = false;
  std::string sylow2_structure;
  std::size_t sylow_involutions = 0;
  std::size_t sylow_order_four = 0;
  /// Number of non-identity elements with each ramification order.
  std::size_t order1 = 0;
  std::size_t order2 = 0;
  std::size_t order4 = 0;
  std::size_t other_orders = 0;
  long involution_order = 0;
  long involution_closed_form = 0;
  bool class_constant = false;
  std::vector<FiltrationStep> filtration;
  bool second_group_trivial = false;
  HomomorphismCheck homomorphism;
  IndecomposabilityCertificate indecomposability;
  std::vector<std::string> discrepancies;
};

/// Lower ramification groups G_i = {g : ord(g(s) - s) >= i + 1} for i = 0, 1, ...
/// until the group is trivial, with the structural checks above.
FiltrationReport filtration_report(long prec);

nlohmann::json to_json(const FiltrationReport& rep);

}  // namespace hodgesplit::char2ex
