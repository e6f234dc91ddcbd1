#include "sympchern/binomial.hpp"

namespace sympchern {

Int binom_std(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Int r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r is always an integer after this step
  }
  return r;
}

Int binom(long long a, long long b) {
  if (a <= 0) return 0;
  return binom_std(a, b);
}

}  // namespace sympchern
