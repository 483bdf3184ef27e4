#pragma once

#include <vector>

#include "homdend/error.hpp"

namespace homdend {

/// Labels are 1-based: C_n = {[1], ..., [n]}.
struct Label {
  int value = 1;
  int arity = 1;
};

/// Element of K[C_n] with 0/1 coefficients, kept sorted.
struct FormalLabelSum {
  int arity = 1;
  std::vector<int> labels;  // strictly increasing, each in [1, arity]

  static FormalLabelSum single(int value, int arity);
  static FormalLabelSum full(int arity);  // [1] + [2] + ... + [n]
};

/// Rerouting of the outer label: C_{m+n-1} -> C_m, where the inner slot i of
/// an m-ary composition carries an n-ary factor.
Label r0(int m, int i, int n, int r);

/// Rerouting of the inner label: C_{m+n-1} -> K[C_n].
FormalLabelSum ri(int m, int i, int n, int r);

}  // namespace homdend
