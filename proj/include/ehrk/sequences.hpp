#pragma once

#include "ehrk/arith.hpp"

namespace ehrk {

/// a_0 = 1, a_1 = 2, a_n = 3 a_{n-1} - a_{n-2}: every other Fibonacci number.
Int fib_sequence(Int n);

/// floor(i * (1 + sqrt 5) / 2) for i >= 0, exactly.
Int beatty_floor(Int i);

}  // namespace ehrk
