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

#include "gradedlie/sparse.hpp"

#include <algorithm>

#include "gradedlie/errors.hpp"

namespace gradedlie {

Rational coefficient_at(const SparseVector& v, uint32_t index) {
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& e, uint32_t i) { return e.first < i; });
    if (it != v.end() && it->first == index) return it->second;
    return Rational();
}

void scale_in_place(SparseVector& v, const Rational& factor) {
    if (factor.is_zero()) {
        v.clear();
        return;
    }
    if (factor.is_one()) return;
    for (auto& e : v) e.second *= factor;
}

void subtract_scaled(SparseVector& target, const Rational& factor, const SparseVector& v) {
    if (factor.is_zero() || v.empty()) return;
    SparseVector out;
    out.reserve(target.size() + v.size());
    auto a = target.begin();
    auto b = v.begin();
    while (a != target.end() || b != v.end()) {
        if (b == v.end() || (a != target.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == target.end() || b->first < a->first) {
            out.emplace_back(b->first, -(factor * b->second));
            ++b;
        } else {
            a->second.sub_mul(factor, b->second);
            if (!a->second.is_zero()) out.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    target.swap(out);
}

SparseVector unit_vector(uint32_t index) { return SparseVector{{index, Rational(1)}}; }

void Accumulator::resize(std::size_t dim) {
    if (values_.size() < dim) {
        values_.resize(dim);
        marked_.resize(dim, 0);
    }
}

void Accumulator::add(uint32_t index, const Rational& value) {
    if (!marked_[index]) {
        marked_[index] = 1;
        touched_.push_back(index);
        values_[index] = value;
    } else {
        values_[index] += value;
    }
}

void Accumulator::add_product(uint32_t index, const Rational& a, const Rational& b) {
    if (!marked_[index]) {
        marked_[index] = 1;
        touched_.push_back(index);
        values_[index] = a * b;
    } else {
        values_[index].sub_mul(-a, b);
    }
}

void Accumulator::add_scaled(const SparseVector& v, const Rational& factor) {
    for (const auto& [i, c] : v) add_product(i, factor, c);
}

SparseVector Accumulator::take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVector out;
    out.reserve(touched_.size());
    for (uint32_t i : touched_) {
        marked_[i] = 0;
        if (!values_[i].is_zero()) out.emplace_back(i, std::move(values_[i]));
        values_[i] = Rational();
    }
    touched_.clear();
    return out;
}

RowSpace::RowSpace(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

void RowSpace::make_full() {
    full_ = true;
    rows_.clear();
    rows_.shrink_to_fit();
}

bool RowSpace::is_pivot(uint32_t column) const { return full_ || pivot_row_[column] >= 0; }

void RowSpace::reduce(SparseVector& v) const {
    if (full_) {
        v.clear();
        return;
    }
    if (rows_.empty()) return;
    bool any = false;
    for (const auto& e : v) {
        if (pivot_row_[e.first] >= 0) {
            any = true;
            break;
        }
    }
    if (!any) return;
    // Rows are zero on every pivot but their own, so a single pass suffices.
    thread_local Accumulator acc;
    acc.resize(dim_);
    for (auto& [i, c] : v) {
        int32_t r = pivot_row_[i];
        if (r < 0) {
            acc.add(i, c);
            continue;
        }
        const SparseVector& row = rows_[static_cast<std::size_t>(r)];
        Rational neg = -c;
        for (std::size_t k = 1; k < row.size(); ++k) acc.add_product(row[k].first, neg, row[k].second);
    }
    v = acc.take();
}

bool RowSpace::contains(SparseVector v) const {
    reduce(v);
    return v.empty();
}

bool RowSpace::insert(SparseVector v) {
    if (full_) return false;
    reduce(v);
    if (v.empty()) return false;
    const uint32_t pivot = v.front().first;
    if (!v.front().second.is_one()) {
        Rational inv = Rational(1) / v.front().second;
        scale_in_place(v, inv);
    }
    for (auto& row : rows_) {
        Rational c = coefficient_at(row, pivot);
        if (!c.is_zero()) subtract_scaled(row, c, v);
    }
    pivot_row_[pivot] = static_cast<int32_t>(rows_.size());
    rows_.push_back(std::move(v));
    if (rows_.size() == dim_) make_full();
    return true;
}

std::vector<uint32_t> RowSpace::free_columns() const {
    std::vector<uint32_t> out;
    if (full_) return out;
    for (uint32_t c = 0; c < dim_; ++c) {
        if (pivot_row_[c] < 0) out.push_back(c);
    }
    return out;
}

std::vector<uint32_t> RowSpace::pivot_columns() const {
    std::vector<uint32_t> out;
    for (uint32_t c = 0; c < dim_; ++c) {
        if (is_pivot(c)) out.push_back(c);
    }
    return out;
}

std::vector<SparseVector> RowSpace::basis() const {
    std::vector<SparseVector> out;
    if (full_) {
        out.reserve(dim_);
        for (uint32_t c = 0; c < dim_; ++c) out.push_back(unit_vector(c));
        return out;
    }
    for (uint32_t c = 0; c < dim_; ++c) {
        if (pivot_row_[c] >= 0) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
    }
    return out;
}

std::size_t RowSpace::stored_entries() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

}  // namespace gradedlie
