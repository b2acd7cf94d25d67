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

#include "gradedlie/rational.hpp"

#include <stdexcept>

#include "gradedlie/errors.hpp"

namespace gradedlie {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMaxSmall = static_cast<i128>(INT64_MAX);
constexpr i128 kMinSmall = -static_cast<i128>(INT64_MAX);

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    // Word-size Euclid once both fit.
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) {
            uint64_t x = static_cast<uint64_t>(a), y = static_cast<uint64_t>(b);
            while (y != 0) {
                uint64_t t = x % y;
                x = y;
                y = t;
            }
            return x;
        }
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 u = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && z != mpz_class(static_cast<signed long>(INT64_MIN));
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw InputError("Rational: zero denominator");
    set_i128(numerator, denominator);
}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_) {
        big_ = std::make_unique<mpq_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw InputError("Rational: empty string");
    if (s.front() == '+') s.erase(s.begin());
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InputError("Rational: cannot parse '" + std::string(text) + "'");
    if (q.get_den() == 0) throw InputError("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
}

void Rational::set_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (n <= kMaxSmall && n >= kMinSmall && d <= kMaxSmall) {
        num_ = static_cast<int64_t>(n);
        den_ = static_cast<int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    set_big(std::move(q));
}

void Rational::set_big(mpq_class&& value) {
    if (fits_small(value.get_num()) && fits_small(value.get_den())) {
        num_ = value.get_num().get_si();
        den_ = value.get_den().get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    if (big_) {
        *big_ = std::move(value);
    } else {
        big_ = std::make_unique<mpq_class>(std::move(value));
    }
}

bool Rational::is_integer() const noexcept {
    if (!big_) return den_ == 1;
    return big_->get_den() == 1;
}

int Rational::sign() const noexcept {
    if (!big_) return (num_ > 0) - (num_ < 0);
    return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<signed long>(num_)), mpz_class(static_cast<signed long>(den_)));
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::numerator_string() const {
    if (big_) return big_->get_num().get_str();
    return std::to_string(num_);
}

std::string Rational::denominator_string() const {
    if (big_) return big_->get_den().get_str();
    return std::to_string(den_);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.set_big(mpq_class(-*big_));
    } else {
        r.num_ = -num_;  // |num_| <= INT64_MAX, so this cannot overflow
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            int64_t out;
            if (!__builtin_add_overflow(num_, rhs.num_, &out) && out != INT64_MIN) {
                num_ = out;
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
        i128 d = static_cast<i128>(den_) * rhs.den_;
        set_i128(n, d);
        return *this;
    }
    set_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            int64_t out;
            if (!__builtin_sub_overflow(num_, rhs.num_, &out) && out != INT64_MIN) {
                num_ = out;
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_;
        i128 d = static_cast<i128>(den_) * rhs.den_;
        set_i128(n, d);
        return *this;
    }
    set_big(to_mpq() - rhs.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            int64_t out;
            if (!__builtin_mul_overflow(num_, rhs.num_, &out) && out != INT64_MIN) {
                num_ = out;
                return *this;
            }
        }
        set_i128(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
        return *this;
    }
    set_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw InputError("Rational: division by zero");
    if (!big_ && !rhs.big_) {
        set_i128(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
        return *this;
    }
    set_big(to_mpq() / rhs.to_mpq());
    return *this;
}

void Rational::sub_mul(const Rational& factor, const Rational& rhs) {
    if (!big_ && !factor.big_ && !rhs.big_ && den_ == 1 && factor.den_ == 1 && rhs.den_ == 1) {
        int64_t prod, out;
        if (!__builtin_mul_overflow(factor.num_, rhs.num_, &prod) &&
            !__builtin_sub_overflow(num_, prod, &out) && out != INT64_MIN) {
            num_ = out;
            return;
        }
    }
    *this -= factor * rhs;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical storage: a big value is never in small range
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

}  // namespace gradedlie
