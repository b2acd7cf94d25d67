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

#include "gradedlie/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "gradedlie/errors.hpp"

namespace gradedlie {

uint64_t SymbolicPower::decimal_digits() const {
    if (coefficient == 0) return 1;
    // log10(coefficient * base^exponent) with the large term split into integer
    // and fractional parts to keep precision near 1e-9 even for huge exponents.
    const long double lb = std::log10(static_cast<long double>(base));
    const long double scaled = lb * static_cast<long double>(exponent);
    const long double whole = std::floor(scaled);
    const long double frac = scaled - whole + std::log10(static_cast<long double>(coefficient));
    return static_cast<uint64_t>(whole) + static_cast<uint64_t>(std::floor(frac)) + 1;
}

mpz_class SymbolicPower::evaluate() const {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    out *= static_cast<unsigned long>(coefficient);
    return out;
}

uint64_t SymbolicPower::exact_decimal_digits() const {
    mpz_class v = evaluate();
    if (v == 0) return 1;
    uint64_t guess = mpz_sizeinbase(v.get_mpz_t(), 10);  // exact or one too large
    mpz_class threshold;
    mpz_ui_pow_ui(threshold.get_mpz_t(), 10, guess - 1);
    return v < threshold ? guess - 1 : guess;
}

SymbolicPower SymbolicPower::squared() const {
    return SymbolicPower{coefficient * coefficient, base, exponent * 2};
}

std::string SymbolicPower::str() const {
    return std::to_string(coefficient) + "*" + std::to_string(base) + "^" + std::to_string(exponent);
}

BoundConstants bound_constants(uint64_t f1) {
    if (f1 < 1) throw InputError("f1 must be a positive integer");
    BoundConstants c;
    c.dtilde_max = 625;             // 5^4 coefficient choices over four indices
    c.u_max = 6 * c.dtilde_max * c.dtilde_max;
    c.e_bound = SymbolicPower{3, 5, 4 * c.u_max};  // 3 * (5^4)^u
    c.f1 = f1;
    c.final_length = std::max<uint64_t>(3, f1 + 1) + 1;
    return c;
}

}  // namespace gradedlie
