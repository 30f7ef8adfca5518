#pragma once

#include <string>
#include <vector>

#include "scg/omega.hpp"
#include "scg/report.hpp"

namespace scg {

enum class CoeffRoute { RecursionA, RecursionB, Series };

std::string to_string(CoeffRoute r);
CoeffRoute route_from_string(const std::string& s);

/// Scasimir coefficients x_0..x_n and their rescaled companions y_0..y_n,
/// related by y_k = (2k+2)! (2n-2k)! / (2^k k! (2n+1)!) x_k.
struct CoeffTable {
  int n = 0;
  CoeffRoute route = CoeffRoute::Series;
  std::vector<Rational> x;
  std::vector<Rational> y;

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

Rational y_from_x(int n, int k, const Rational& x);
Rational x_from_y(int n, int k, const Rational& y);

/// Sum over the C(n,k) ways of deleting k conjugate pairs from
/// [1 1bar 2 2bar ... n nbar]; k = 0 is the full bracket, k = n the unit.
OmegaElement a_poly(int n, int k);

CoeffTable coeffs_recursion_a(int n);
CoeffTable coeffs_recursion_b(int n);
/// x_k = 2^-k k! C(2n,2k) (2k)! [u^{2k}] (u / sinh u)^{2n+1}
CoeffTable coeffs_series(int n);
CoeffTable coeffs(int n, CoeffRoute route);

/// sum_k x_k A_{2n-2k}, coefficients from the series route (cached).
OmegaElement scasimir(int n);
/// Scasimir assembled from an explicit table.
OmegaElement scasimir(const CoeffTable& table);

/// Standard-order PBW form of the Scasimir.
Element scasimir_pbw(OmegaSpace& space);

/// sum_{k=0}^n 2^{k-n} (n!/k!) x_k.
Rational sum_rule(int n);

/// Normal form of Sc * Sc in standard order.
Element scasimir_square(OmegaSpace& space);

/// Anticommutation with every odd generator and commutation with every even
/// one, after normal ordering. Checks are split across worker threads.
Report verify_ghost(int n);

/// Sc^2 commutes (plain commutator) with every generator and is even.
Report verify_square_central(int n);

/// The three routes agree exactly and satisfy x_0 = 1, y_0 = 2/(2n+1).
Report verify_routes(int max_n);

/// sum_rule(n) = 0 for 1 <= n <= max_n.
Report verify_sum_rule(int max_n);

}  // namespace scg
