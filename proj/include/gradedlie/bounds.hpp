/* Copyright 2026 The gradedlie Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Explicit constants of the derived-length bound, kept symbolic.

#ifndef GRADEDLIE_BOUNDS_HPP
#define GRADEDLIE_BOUNDS_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gradedlie {

/* coefficient * base^exponent, never expanded unless asked to. */
struct SymbolicPower {
    uint64_t coefficient = 1;
    uint64_t base = 1;
    uint64_t exponent = 0;

    // Decimal digit count from logarithms; cheap for any exponent.
    uint64_t decimal_digits() const;
    // Full arbitrary-precision value. Expensive for large exponents.
    mpz_class evaluate() const;
    // Exact digit count via evaluate().
    uint64_t exact_decimal_digits() const;
    SymbolicPower squared() const;
    std::string str() const;  // "3*5^9375000"
};

struct BoundConstants {
    uint64_t dtilde_max = 0;   // upper bound on the size of any D~(d1,d2,d3,d4)
    uint64_t u_max = 0;        // longest initial segment of order>3 factors
    SymbolicPower e_bound;     // nontrivial components of one ideal T
    uint64_t f1 = 0;           // derived-length bound for the centralizer quotient (an input)
    uint64_t final_length = 0; // max{3, f1 + 1} + 1
};

// f1 >= 1 is the derived length supplied for the few-components quotient.
BoundConstants bound_constants(uint64_t f1);

}  // namespace gradedlie

#endif  // GRADEDLIE_BOUNDS_HPP
