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
// Exact arithmetic in cyclotomic fields Q(w), w a primitive n-th root of unity.

#ifndef GRADEDLIE_CYCLOTOMIC_HPP
#define GRADEDLIE_CYCLOTOMIC_HPP

#include <memory>
#include <string>
#include <vector>

#include "gradedlie/rational.hpp"

namespace gradedlie {

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long long> cyclotomic_polynomial(int n);

class CyclotomicField;
using FieldPtr = std::shared_ptr<const CyclotomicField>;

/* An element of Q(w) as a polynomial in w of degree < deg Phi_n. */
class CyclotomicNumber {
public:
    CyclotomicNumber() = default;  // zero of an unspecified field; adopts the field of its partner
    CyclotomicNumber(FieldPtr field, std::vector<Rational> coefficients);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

    CyclotomicNumber inverse() const;
    std::string str() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator/=(const CyclotomicNumber& rhs) { return *this *= rhs.inverse(); }
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a.coeffs_ == b.coeffs_; }

private:
    FieldPtr field_;
    std::vector<Rational> coeffs_;  // trailing zeros trimmed
    void trim();
    const CyclotomicField& adopt(const CyclotomicNumber& rhs);
};

class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
public:
    static FieldPtr create(int n);

    int order() const noexcept { return n_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    const std::vector<Rational>& modulus_polynomial() const noexcept { return modulus_; }

    CyclotomicNumber zero() const;
    CyclotomicNumber one() const;
    CyclotomicNumber rational(const Rational& q) const;
    // w^k for any integer k.
    CyclotomicNumber omega_power(long long k) const;
    CyclotomicNumber from_polynomial(std::vector<Rational> poly) const;

    // Reduces an arbitrary polynomial modulo Phi_n in place.
    void reduce(std::vector<Rational>& poly) const;

private:
    explicit CyclotomicField(int n);
    int n_;
    std::vector<Rational> modulus_;  // monic Phi_n
};

}  // namespace gradedlie

#endif  // GRADEDLIE_CYCLOTOMIC_HPP
