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
// Exact rational numbers with a 64-bit fast path and GMP fallback.

#ifndef GRADEDLIE_RATIONAL_HPP
#define GRADEDLIE_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gradedlie {

/* A rational number in lowest terms with positive denominator.
 *
 * Values whose numerator and denominator both fit in int64 are stored inline;
 * anything larger is promoted to an mpq_class and demoted again as soon as
 * an operation brings it back into range. Coefficients arising from Lie
 * brackets are overwhelmingly small integers, so the inline path carries
 * almost all of the work.
 */
class Rational {
public:
    Rational() noexcept = default;
    Rational(long long value) noexcept : num_(value) {  // NOLINT(google-explicit-constructor)
        if (value == INT64_MIN) set_big(mpq_class(static_cast<signed long>(value)));
    }
    Rational(long long numerator, long long denominator);
    explicit Rational(const mpq_class& value) { set_big(mpq_class(value)); }

    Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
        if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    // Parses "p", "-p", or "p/q".
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept;
    int sign() const noexcept;
    bool is_small() const noexcept { return !big_; }

    std::string numerator_string() const;
    std::string denominator_string() const;
    std::string str() const;
    mpq_class to_mpq() const;
    double to_double() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    // this -= factor * rhs, the elimination kernel.
    void sub_mul(const Rational& factor, const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    int64_t num_ = 0;
    int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;

    void set_i128(__int128 numerator, __int128 denominator);
    void set_big(mpq_class&& value);
};

}  // namespace gradedlie

#endif  // GRADEDLIE_RATIONAL_HPP
