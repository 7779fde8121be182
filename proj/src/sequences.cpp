#include "ehrk/sequences.hpp"

namespace ehrk {

Int fib_sequence(Int n) {
  if (n < 0) throw Error(Errc::InvalidParameters, "sequence index must be nonnegative");
  Int prev = 1, cur = 2;
  if (n == 0) return prev;
  for (Int i = 1; i < n; ++i) {
    Int next = checked_sub(checked_mul(3, cur), prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

Int beatty_floor(Int i) {
  if (i < 0) throw Error(Errc::InvalidParameters, "beatty index must be nonnegative");
  return (i + isqrt(checked_mul(5, checked_mul(i, i)))) / 2;
}

}  // namespace ehrk
