#pragma once

#include <map>
#include <vector>

#include "scg/element.hpp"
#include "scg/linalg.hpp"
#include "scg/omega.hpp"
#include "scg/report.hpp"

namespace scg {

/// Finite-dimensional representation: a matrix per generator plus the parity
/// of each basis vector.
struct Representation {
  int n = 0;
  std::size_t dim = 0;
  std::vector<int> parity;
  std::map<Generator, Matrix> images;

  const Matrix& image(Generator g) const;
};

/// The (2n+1)-dimensional representation on e_0 (even), e_1..e_2n (odd),
/// solved from the ansatz s_a e_0 = e_a, s_a e_b = t_ab e_0 with the t_ab
/// fixed by the linear constraints of the odd/even relation applied to e_0.
/// Throws Error if the solved matrices violate any relation.
Representation fundamental_rep(int n);

/// One-dimensional even representation with every generator acting as 0.
Representation trivial_rep(int n);

Matrix evaluate(const Element& x, const Representation& rep);
/// Evaluates brackets through their antisymmetrized definition, never
/// touching the rewrite engine.
Matrix evaluate(const OmegaElement& w, const Representation& rep);

/// Every defining relation holds exactly for every generator pair.
Report check_relations(const Representation& rep);

/// In the fundamental representation the Scasimir anticommutes with the odd
/// images, commutes with the even ones, and scaled by its eigenvalue on e_0
/// is an involution acting as +1 on the even sector and -1 on the odd one.
Report verify_rep_ghost(int n);

}  // namespace scg
