#pragma once

#include <cstdint>

#include "scg/element.hpp"
#include "scg/pbw.hpp"
#include "scg/report.hpp"

namespace scg {

/// Standard adjoint action: [g, x] for even g, graded bracket [g, x}_+- for
/// odd g, extended linearly over the parity components of x. Unreduced.
Element adjoint(Generator g, const Element& x);

/// Nonstandard action g |> x:
///   s_ab |> x = [s_ab, x]
///   s_a  |> x = {s_a, x}   for even x
///   s_a  |> x = [s_a, x]   for odd x
/// extended linearly over the even/odd parts of x. Unreduced.
Element triangle(Generator g, const Element& x);

/// Same action with the result normal-ordered by `engine`.
Element triangle(PbwEngine& engine, Generator g, const Element& x);

/// The generator combination equal to [g, h} in osp(1|2n), acting by |>.
Element triangle_bracket(PbwEngine& engine, Generator g, Generator h, const Element& x);

/// Checks both module identities for odd pairs, odd/even pairs and the
/// sp(2n) identity on every even pair, over `samples` seeded random elements.
Report verify_module_axioms(int n, int samples, std::uint64_t seed);

/// Same identities over every normal monomial of length <= max_length.
Report verify_module_axioms_exhaustive(int n, std::size_t max_length);

}  // namespace scg
