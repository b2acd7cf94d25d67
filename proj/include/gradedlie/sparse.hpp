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
// Sparse exact vectors and an incrementally maintained reduced row echelon form.

#ifndef GRADEDLIE_SPARSE_HPP
#define GRADEDLIE_SPARSE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gradedlie/rational.hpp"

namespace gradedlie {

// Entries sorted by strictly increasing index, no stored zeros.
using SparseVector = std::vector<std::pair<uint32_t, Rational>>;

Rational coefficient_at(const SparseVector& v, uint32_t index);
void scale_in_place(SparseVector& v, const Rational& factor);
// target -= factor * v
void subtract_scaled(SparseVector& target, const Rational& factor, const SparseVector& v);
SparseVector unit_vector(uint32_t index);

/* Dense scratch buffer that remembers which slots were touched, so gathering
 * the result back into sparse form costs O(touched) rather than O(dim). */
class Accumulator {
public:
    explicit Accumulator(std::size_t dim = 0) { resize(dim); }
    void resize(std::size_t dim);
    void add(uint32_t index, const Rational& value);
    void add_product(uint32_t index, const Rational& a, const Rational& b);
    void add_scaled(const SparseVector& v, const Rational& factor);
    SparseVector take();

private:
    std::vector<Rational> values_;
    std::vector<char> marked_;
    std::vector<uint32_t> touched_;
};

/* A subspace of Q^dim kept in reduced row echelon form.
 *
 * The pivot of every row is its smallest column, pivots carry coefficient 1
 * and every other row is zero at each pivot column. Pivots are the leading
 * columns of the subspace, so the stored form depends only on the subspace
 * and never on insertion order. */
class RowSpace {
public:
    explicit RowSpace(std::size_t dim = 0);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return full_ ? dim_ : rows_.size(); }
    bool full() const noexcept { return rank() == dim_; }
    bool empty() const noexcept { return rank() == 0; }

    void make_full();
    // Replaces v by its normal form: the unique representative supported on
    // non-pivot columns.
    void reduce(SparseVector& v) const;
    bool contains(SparseVector v) const;
    // Returns true when the rank grew.
    bool insert(SparseVector v);

    bool is_pivot(uint32_t column) const;
    std::vector<uint32_t> free_columns() const;
    std::vector<uint32_t> pivot_columns() const;
    // Rows in increasing pivot order (unit vectors when full).
    std::vector<SparseVector> basis() const;
    std::size_t stored_entries() const;

private:
    std::size_t dim_;
    bool full_ = false;
    std::vector<SparseVector> rows_;
    std::vector<int32_t> pivot_row_;
};

}  // namespace gradedlie

#endif  // GRADEDLIE_SPARSE_HPP
