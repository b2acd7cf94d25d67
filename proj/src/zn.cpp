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

#include "gradedlie/zn.hpp"

#include <numeric>
#include <sstream>

#include "gradedlie/errors.hpp"

namespace gradedlie::zn {

namespace {

constexpr std::size_t kMaxEnumerationLength = 24;

int reduce(long long value, long long modulus) {
    long long r = value % modulus;
    if (r < 0) r += modulus;
    return static_cast<int>(r);
}

}  // namespace

void require_odd_modulus(long long n) {
    if (n < 3 || n % 2 == 0) {
        throw InputError("modulus must be an odd integer >= 3 (2 does not divide n), got " + std::to_string(n));
    }
    if (n > (1LL << 30)) throw InputError("modulus too large: " + std::to_string(n));
}

Residue::Residue(long long value, long long modulus) {
    require_odd_modulus(modulus);
    modulus_ = static_cast<int>(modulus);
    value_ = reduce(value, modulus);
}

Residue Residue::operator+(const Residue& rhs) const {
    if (rhs.modulus_ != modulus_) throw InputError("residue moduli differ");
    int v = value_ + rhs.value_;
    if (v >= modulus_) v -= modulus_;
    return Residue(v, modulus_, nullptr);
}

Residue Residue::operator-(const Residue& rhs) const { return *this + (-rhs); }

Residue Residue::operator-() const { return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_, nullptr); }

Residue Residue::operator*(long long k) const {
    return Residue(reduce(static_cast<long long>(value_) * reduce(k, modulus_), modulus_), modulus_, nullptr);
}

IndexSequence::IndexSequence(long long modulus, const std::vector<long long>& values) {
    require_odd_modulus(modulus);
    modulus_ = static_cast<int>(modulus);
    if (values.empty()) throw InputError("index sequence must be nonempty");
    entries_.reserve(values.size());
    for (long long v : values) entries_.emplace_back(v, modulus);
}

IndexSequence::IndexSequence(std::vector<Residue> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InputError("index sequence must be nonempty");
    modulus_ = entries_.front().modulus();
    for (const auto& r : entries_) {
        if (r.modulus() != modulus_) throw InputError("index sequence entries must share one modulus");
    }
}

std::vector<int> IndexSequence::values() const {
    std::vector<int> out;
    out.reserve(entries_.size());
    for (const auto& r : entries_) out.push_back(r.value());
    return out;
}

bool IndexSequence::all_nonzero() const {
    for (const auto& r : entries_) {
        if (r.is_zero()) return false;
    }
    return true;
}

IndexSequence IndexSequence::appended(const Residue& r) const {
    std::vector<Residue> e = entries_;
    e.push_back(r);
    return IndexSequence(std::move(e));
}

std::string IndexSequence::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i].value();
    os << ") mod " << modulus_;
    return os.str();
}

int residue_order(const Residue& a) { return a.modulus() / std::gcd(a.modulus(), a.value()); }

bool minus_one_dependent(std::span<const int> values, int modulus) {
    const std::size_t k = values.size();
    if (k == 0) throw InputError("(-1)-dependence is undefined for an empty sequence");
    if (k > kMaxEnumerationLength) throw InputError("sequence too long for exhaustive enumeration");
    // Subset sums in Gray-code order: each step toggles one entry.
    std::vector<int> reduced(k);
    for (std::size_t i = 0; i < k; ++i) reduced[i] = reduce(values[i], modulus);
    int sum = 0;
    const uint32_t total = 1u << k;
    uint32_t prev_gray = 0;
    for (uint32_t step = 1; step < total; ++step) {
        uint32_t gray = step ^ (step >> 1);
        uint32_t changed = gray ^ prev_gray;
        int bit = __builtin_ctz(changed);
        if (gray & changed) {
            sum += reduced[bit];
            if (sum >= modulus) sum -= modulus;
        } else {
            sum -= reduced[bit];
            if (sum < 0) sum += modulus;
        }
        prev_gray = gray;
        if (sum == 0) return true;
    }
    return false;
}

bool is_minus_one_dependent(const IndexSequence& seq) {
    auto v = seq.values();
    return minus_one_dependent(v, seq.modulus());
}

ResidueSet dependency_set(const IndexSequence& seq) {
    if (is_minus_one_dependent(seq)) {
        throw InputError("dependency set is defined only for (-1)-independent sequences; " + seq.str() +
                         " is (-1)-dependent");
    }
    // For an independent prefix, appending j creates a vanishing 0/1 combination
    // exactly when j is the negative of a subset sum (including the empty sum).
    const int n = seq.modulus();
    std::vector<char> reach(n, 0);
    reach[0] = 1;
    for (const auto& r : seq.entries()) {
        std::vector<char> next = reach;
        for (int s = 0; s < n; ++s) {
            if (reach[s]) next[(s + r.value()) % n] = 1;
        }
        reach.swap(next);
    }
    ResidueSet out;
    for (int s = 0; s < n; ++s) {
        if (reach[s]) out.insert(-Residue(s, n));
    }
    return out;
}

ResidueSet dtilde_set(const IndexSequence& seq) {
    const int n = seq.modulus();
    std::vector<char> reach(n, 0);
    reach[0] = 1;
    for (const auto& r : seq.entries()) {
        std::vector<char> next(n, 0);
        for (int s = 0; s < n; ++s) {
            if (!reach[s]) continue;
            for (int u = -2; u <= 2; ++u) next[reduce(s + static_cast<long long>(u) * r.value(), n)] = 1;
        }
        reach.swap(next);
    }
    ResidueSet out;
    for (int s = 0; s < n; ++s) {
        if (reach[s]) out.insert(Residue(s, n));
    }
    return out;
}

}  // namespace gradedlie::zn
