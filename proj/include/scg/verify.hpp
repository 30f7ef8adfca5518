#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scg/report.hpp"

namespace scg {

struct VerifyOptions {
  int n = 2;
  std::uint64_t seed = 1;
  int samples = 0;  // 0 picks each check's default
  bool extended = false;
};

/// Every triangle action g |> b is a scalar combination of brackets, and the
/// even-generator actions agree with the closed sp(2n) form.
Report verify_stability(int n);

/// n+1 highest weight vectors with weights (1^j 0^{n-j}), leading brackets
/// [1 .. j  j+1 j+1bar .. n nbar], lower brackets obtained by deleting
/// conjugate pairs, and submodules of dimension C(2n+1, j) summing to 4^n.
Report verify_decomposition(int n);

/// Dimension identity of the osp(1|2) filtration for d = 0..max_d.
Report verify_filtration(int max_d);

/// Memoized normal ordering equals the naive rewriting oracle on random
/// words, and evaluate(normal_order(x)) = evaluate(x) in the fundamental
/// representation on random elements.
Report verify_pbw_oracle(int n, int samples, std::uint64_t seed);

/// Names accepted by run_verify, in the order `all` runs them.
const std::vector<std::string>& verify_names();

/// Runs a named check (or every check for "all"). Throws Error for an
/// unknown name.
std::vector<Report> run_verify(const std::string& name, const VerifyOptions& options);

}  // namespace scg
