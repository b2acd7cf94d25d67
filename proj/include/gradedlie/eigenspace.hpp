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
// Structure-constant Lie algebras over cyclotomic fields, their automorphisms
// and the eigenspace gradings those automorphisms induce.

#ifndef GRADEDLIE_EIGENSPACE_HPP
#define GRADEDLIE_EIGENSPACE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gradedlie/cyclotomic.hpp"

namespace gradedlie {

using CycVector = std::vector<CyclotomicNumber>;

/* Square matrix acting on column vectors: column j is the image of e_j. */
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(FieldPtr field, std::size_t dim);
    static CycMatrix identity(FieldPtr field, std::size_t dim);
    static CycMatrix diagonal(FieldPtr field, const CycVector& entries);

    std::size_t dim() const noexcept { return dim_; }
    const FieldPtr& field() const noexcept { return field_; }
    CyclotomicNumber& at(std::size_t row, std::size_t col) { return data_.at(row * dim_ + col); }
    const CyclotomicNumber& at(std::size_t row, std::size_t col) const { return data_.at(row * dim_ + col); }

    CycVector apply(const CycVector& v) const;
    CycMatrix operator*(const CycMatrix& rhs) const;
    CycMatrix operator-(const CycMatrix& rhs) const;
    CycMatrix power(unsigned long long k) const;
    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t dim_ = 0;
    std::vector<CyclotomicNumber> data_;
};

// Basis of the null space of m (columns of the solution space).
std::vector<CycVector> null_space(const CycMatrix& m);
// Rank of a list of vectors.
std::size_t vector_rank(const std::vector<CycVector>& vectors, const FieldPtr& field);

struct StructureConstant {
    std::size_t i = 0, j = 0, k = 0;
    CyclotomicNumber value;  // [e_i, e_j] has coefficient value at e_k
};

/* A finite-dimensional Lie algebra given by structure constants. The entry
 * for (j, i) is implied by antisymmetry. Antisymmetry and the Jacobi identity
 * are checked on construction; invalid input is rejected. */
class SCAlgebra {
public:
    SCAlgebra(FieldPtr field, std::vector<std::string> labels, const std::vector<StructureConstant>& entries);

    std::size_t dim() const noexcept { return labels_.size(); }
    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    // Coordinates of [e_i, e_j].
    const CycVector& basis_bracket(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
    CycVector bracket(const CycVector& x, const CycVector& y) const;
    CycVector unit(std::size_t i) const;
    CycVector zero_vector() const;

private:
    FieldPtr field_;
    std::vector<std::string> labels_;
    std::vector<CycVector> table_;
};

struct AutomorphismPair {
    CycMatrix phi;
    std::optional<CycMatrix> h;
    int order = 1;
};

struct CheckItem {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct CheckList {
    std::vector<CheckItem> items;
    bool passed() const;
    const CheckItem* find(const std::string& name) const;
};

// Bracket preservation of phi and h, minimal order of phi, h^2 = I and h phi h^-1 = phi^-1.
CheckList verify_automorphism_pair(const SCAlgebra& alg, const AutomorphismPair& aut);

// Witness (i, j) where m[e_i, e_j] != [m e_i, m e_j], if any.
std::optional<std::pair<std::size_t, std::size_t>> bracket_violation(const SCAlgebra& alg, const CycMatrix& m);

struct Grading {
    int order = 1;
    std::vector<std::vector<CycVector>> components;  // basis of L_i for i = 0..order-1
    std::size_t dimension(int i) const;
};

/* Eigenspaces of phi for the eigenvalues w^i. Throws InputError if phi is not
 * a bracket-preserving map of order dividing n, InternalInconsistency if the
 * eigenspaces do not exhaust the algebra or the grading law fails. When h is
 * present it must map L_i into L_{-i}. */
Grading eigenspace_decomposition(const SCAlgebra& alg, const AutomorphismPair& aut);

// Kernel of (map - I); checked to be closed under the bracket.
std::vector<CycVector> fixed_subalgebra(const SCAlgebra& alg, const CycMatrix& map);

// C_L(F) = 0 and [[C, C], [C, C]] = 0 for C = C_L(H).
CheckList verify_hypotheses(const SCAlgebra& alg, const AutomorphismPair& aut);

struct SelectiveViolation {
    std::array<int, 4> degrees{};
    std::array<std::size_t, 4> positions{};  // basis positions inside each component
    CycVector value;
};

// [[x1, x2], [x3, x4]] = 0 for basis elements of components whose degree
// sequence is (-1)-independent; returns the first violation.
std::optional<SelectiveViolation> verify_selective_condition(const SCAlgebra& alg, const Grading& grading);

}  // namespace gradedlie

#endif  // GRADEDLIE_EIGENSPACE_HPP
