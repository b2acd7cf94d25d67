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

#include "gradedlie/cyclotomic.hpp"

#include <sstream>

#include "gradedlie/errors.hpp"

namespace gradedlie {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// Polynomial division; returns quotient, leaves the remainder in `num`.
Poly divide(Poly& num, const Poly& den) {
    trim(num);
    if (den.empty()) throw InternalInconsistency("polynomial division by zero");
    if (num.size() < den.size()) return {};
    Poly q(num.size() - den.size() + 1);
    const Rational lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational c = num[k + den.size() - 1] / lead;
        q[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j].sub_mul(c, den[j]);
    }
    trim(num);
    trim(q);
    return q;
}

Poly subtract(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

Poly cyclotomic_rational(int n) {
    // t^n - 1 divided by Phi_d for every proper divisor d.
    Poly p(static_cast<std::size_t>(n) + 1);
    p[0] = Rational(-1);
    p[static_cast<std::size_t>(n)] = Rational(1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly num = p;
        p = divide(num, cyclotomic_rational(d));
        if (!num.empty()) throw InternalInconsistency("cyclotomic division left a remainder");
    }
    return p;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
    if (n < 1) throw InputError("cyclotomic polynomial needs n >= 1");
    if (n > 100000) throw InputError("cyclotomic polynomial order too large");
    std::vector<long long> out;
    for (const auto& c : cyclotomic_rational(n)) {
        if (!c.is_integer() || !c.is_small()) throw InternalInconsistency("non-integral cyclotomic coefficient");
        out.push_back(std::stoll(c.numerator_string()));
    }
    return out;
}

CyclotomicField::CyclotomicField(int n) : n_(n) {
    for (long long c : cyclotomic_polynomial(n)) modulus_.emplace_back(c);
}

FieldPtr CyclotomicField::create(int n) {
    if (n < 1) throw InputError("cyclotomic field needs n >= 1");
    return FieldPtr(new CyclotomicField(n));
}

void CyclotomicField::reduce(std::vector<Rational>& poly) const {
    trim(poly);
    if (poly.size() >= modulus_.size()) divide(poly, modulus_);
}

CyclotomicNumber CyclotomicField::zero() const { return CyclotomicNumber(shared_from_this(), {}); }
CyclotomicNumber CyclotomicField::one() const { return rational(Rational(1)); }
CyclotomicNumber CyclotomicField::rational(const Rational& q) const {
    return CyclotomicNumber(shared_from_this(), {q});
}

CyclotomicNumber CyclotomicField::omega_power(long long k) const {
    long long e = k % n_;
    if (e < 0) e += n_;
    Poly p(static_cast<std::size_t>(e) + 1);
    p[static_cast<std::size_t>(e)] = Rational(1);
    return CyclotomicNumber(shared_from_this(), std::move(p));
}

CyclotomicNumber CyclotomicField::from_polynomial(std::vector<Rational> poly) const {
    return CyclotomicNumber(shared_from_this(), std::move(poly));
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<Rational> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
    if (!field_) throw InputError("cyclotomic number needs a field");
    field_->reduce(coeffs_);
}

void CyclotomicNumber::trim() { gradedlie::trim(coeffs_); }

const CyclotomicField& CyclotomicNumber::adopt(const CyclotomicNumber& rhs) {
    if (!field_) field_ = rhs.field_;
    if (rhs.field_ && rhs.field_ != field_ && rhs.field_->order() != field_->order()) {
        throw InputError("cyclotomic numbers from different fields");
    }
    return *field_;  // callers ensure at least one side carries a field
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    if (rhs.is_zero()) return *this;
    adopt(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) { return *this += -rhs; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
    if (is_zero() || rhs.is_zero()) {
        if (!field_) field_ = rhs.field_;
        coeffs_.clear();
        return *this;
    }
    const CyclotomicField& f = adopt(rhs);
    coeffs_ = multiply(coeffs_, rhs.coeffs_);
    f.reduce(coeffs_);
    return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw InputError("inverse of zero in a cyclotomic field");
    if (!field_) throw InputError("cyclotomic arithmetic without a field");
    // Extended Euclid: s * a + t * Phi = g, with g a nonzero constant since Phi is irreducible.
    Poly r0 = field_->modulus_polynomial(), r1 = coeffs_;
    Poly s0, s1 = {Rational(1)};
    while (r1.size() > 1) {
        Poly rem = r0;
        Poly q = divide(rem, r1);
        Poly s2 = subtract(s0, multiply(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw InternalInconsistency("element shares a factor with the cyclotomic polynomial");
    Rational inv = Rational(1) / r1[0];
    for (auto& c : s1) c *= inv;
    return CyclotomicNumber(field_, std::move(s1));
}

std::string CyclotomicNumber::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        if (i == 0) {
            os << a;
        } else {
            if (!a.is_one()) os << a << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace gradedlie
