#include "homdend/combinat.hpp"

#include <string>

namespace homdend {

namespace {

void check_args(int m, int i, int n, int r) {
  if (m < 1 || n < 1) fail(ErrorKind::OutOfRange, "arities must be >= 1");
  if (i < 1 || i > m) {
    fail(ErrorKind::OutOfRange, "slot " + std::to_string(i) + " outside [1, " + std::to_string(m) + "]");
  }
  if (r < 1 || r > m + n - 1) {
    fail(ErrorKind::OutOfRange,
         "label [" + std::to_string(r) + "] outside C_" + std::to_string(m + n - 1));
  }
}

}  // namespace

FormalLabelSum FormalLabelSum::single(int value, int arity) {
  FormalLabelSum s;
  s.arity = arity;
  s.labels = {value};
  return s;
}

FormalLabelSum FormalLabelSum::full(int arity) {
  FormalLabelSum s;
  s.arity = arity;
  s.labels.reserve(arity);
  for (int v = 1; v <= arity; ++v) s.labels.push_back(v);
  return s;
}

Label r0(int m, int i, int n, int r) {
  check_args(m, i, n, r);
  if (r <= i - 1) return Label{r, m};
  if (r <= i + n - 1) return Label{i, m};
  return Label{r - n + 1, m};
}

FormalLabelSum ri(int m, int i, int n, int r) {
  check_args(m, i, n, r);
  if (r >= i && r <= i + n - 1) return FormalLabelSum::single(r - (i - 1), n);
  return FormalLabelSum::full(n);
}

}  // namespace homdend
