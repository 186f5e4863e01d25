#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "yf/rational.hpp"

namespace yf {

// A matrix of bivariate rational expressions, given by exact evaluation.
// Returns nullopt when (u, v) hits a pole of some entry.
using BivariateEval =
    std::function<std::optional<std::vector<Rational>>(const Rational& u, const Rational& v)>;

struct DegreeBound {
  int du = 0;
  int dv = 0;
};

struct CertifyStats {
  int points = 0;
  int poles_skipped = 0;
};

// True iff lhs == rhs as rational functions, assuming the cleared numerator
// of lhs - rhs has bidegree within `bound`. Throws GridExhausted.
bool certify_bivariate_identity(const BivariateEval& lhs, const BivariateEval& rhs, DegreeBound bound,
                                CertifyStats* stats = nullptr);

}  // namespace yf
