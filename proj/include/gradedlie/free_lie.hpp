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
// Free Lie algebra over Q on Z/nZ-graded generators, in the Lyndon basis.

#ifndef GRADEDLIE_FREE_LIE_HPP
#define GRADEDLIE_FREE_LIE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gradedlie/rational.hpp"
#include "gradedlie/sparse.hpp"

namespace gradedlie {

struct Generator {
    std::string name;
    long long degree = 0;
};

/* Generators sorted by name; the position in that order is the letter used
 * in Lyndon words, so letter order is name order. */
class GeneratorSet {
public:
    GeneratorSet() = default;
    GeneratorSet(long long modulus, std::vector<Generator> generators);

    int modulus() const noexcept { return modulus_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool empty() const noexcept { return generators_.empty(); }
    const Generator& operator[](std::size_t i) const { return generators_[i]; }
    const std::vector<Generator>& all() const noexcept { return generators_; }
    // Degree reduced to [0, modulus).
    int degree(std::size_t i) const { return degrees_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

private:
    int modulus_ = 1;
    std::vector<Generator> generators_;
    std::vector<int> degrees_;
};

/* Multidegree: how many times each generator occurs. */
class FineDegree {
public:
    FineDegree() = default;
    explicit FineDegree(std::vector<uint8_t> counts);
    static FineDegree unit(std::size_t generators, std::size_t index);
    static FineDegree zero(std::size_t generators) { return FineDegree(std::vector<uint8_t>(generators, 0)); }

    std::size_t size() const noexcept { return counts_.size(); }
    uint8_t operator[](std::size_t i) const { return counts_[i]; }
    const std::vector<uint8_t>& counts() const noexcept { return counts_; }
    int length() const noexcept { return length_; }
    int zn_degree(const GeneratorSet& gens) const;
    // Componentwise <=.
    bool fits_in(const FineDegree& other) const;

    FineDegree operator+(const FineDegree& rhs) const;
    // Requires rhs.fits_in(*this).
    FineDegree operator-(const FineDegree& rhs) const;

    std::string str(const GeneratorSet& gens) const;
    std::string key() const { return std::string(counts_.begin(), counts_.end()); }

    friend bool operator==(const FineDegree& a, const FineDegree& b) { return a.counts_ == b.counts_; }
    // Ordered by length, then lexicographically by counts.
    friend std::strong_ordering operator<=>(const FineDegree& a, const FineDegree& b);

private:
    std::vector<uint8_t> counts_;
    int length_ = 0;
};

/* A Lyndon word over generator letters, standing for its standard bracketing. */
class HallMonomial {
public:
    explicit HallMonomial(std::string letters);
    static HallMonomial generator(std::size_t letter);

    const std::string& word() const noexcept { return word_; }
    std::size_t length() const noexcept { return word_.size(); }
    bool is_generator() const noexcept { return word_.size() == 1; }
    // Standard factorization: right() is the longest proper Lyndon suffix.
    HallMonomial left() const;
    HallMonomial right() const;
    FineDegree fine_degree(std::size_t generators) const;
    std::string str(const GeneratorSet& gens) const;

    friend bool operator==(const HallMonomial&, const HallMonomial&) = default;
    // (length, lexicographic)
    friend std::strong_ordering operator<=>(const HallMonomial& a, const HallMonomial& b);

private:
    struct Unchecked {};
    HallMonomial(std::string letters, Unchecked) : word_(std::move(letters)) {}
    std::string word_;
    friend class FreeLieAlgebra;
};

bool is_lyndon_word(std::string_view w);
// Split position of the standard factorization of a Lyndon word of length >= 2.
std::size_t standard_factor_split(std::string_view w);

/* A finite Q-linear combination of Hall monomials; zero coefficients are never stored. */
class LieElement {
public:
    using Terms = std::map<HallMonomial, Rational>;

    LieElement() = default;
    explicit LieElement(const HallMonomial& m, Rational c = Rational(1));

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(const HallMonomial& m) const;
    void add_term(const HallMonomial& m, const Rational& c);

    // Common fine degree of all terms, or nullopt when empty or mixed.
    std::optional<FineDegree> fine_degree(std::size_t generators) const;
    bool is_fine_homogeneous(std::size_t generators) const { return fine_degree(generators).has_value(); }
    // Terms grouped by fine degree.
    std::map<FineDegree, LieElement> split_by_fine_degree(std::size_t generators) const;

    LieElement& operator+=(const LieElement& rhs);
    LieElement& operator-=(const LieElement& rhs);
    LieElement& operator*=(const Rational& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(LieElement a, const Rational& c) { return a *= c; }
    LieElement operator-() const { return LieElement(*this) *= Rational(-1); }
    friend bool operator==(const LieElement&, const LieElement&) = default;

    std::string str(const GeneratorSet& gens) const;

private:
    Terms terms_;
};

/* An unevaluated bracketing of Lie elements. */
class BracketExpr {
public:
    static BracketExpr leaf(LieElement value);
    static BracketExpr bracket(BracketExpr left, BracketExpr right);

    bool is_leaf() const noexcept { return node_->leaf.has_value(); }
    const LieElement& value() const { return *node_->leaf; }
    const BracketExpr& left() const { return *node_->left; }
    const BracketExpr& right() const { return *node_->right; }

private:
    struct Node {
        std::optional<LieElement> leaf;
        std::unique_ptr<BracketExpr> left;
        std::unique_ptr<BracketExpr> right;
    };
    std::shared_ptr<const Node> node_;
};

/* The free Lie algebra on a generating set.
 *
 * Computation is organised per fine degree: the Lyndon basis of a fine degree
 * is enumerated on first use and elements of that degree can be handled as
 * coordinate vectors over it. Brackets of basis elements are computed by the
 * classical Lyndon rewriting
 *     [P(u), P(v)] = [[P(u'), P(v)], P(u'')] + [P(u'), [P(u''), P(v)]]
 * for u = u'u'' (standard factorization) with u'' < v, and are memoized.
 *
 * Thread-safe: all caches are guarded by one mutex. */
class FreeLieAlgebra {
public:
    explicit FreeLieAlgebra(GeneratorSet gens);
    FreeLieAlgebra(const FreeLieAlgebra&) = delete;
    FreeLieAlgebra& operator=(const FreeLieAlgebra&) = delete;

    const GeneratorSet& generators() const noexcept { return gens_; }
    std::size_t rank() const noexcept { return gens_.size(); }

    LieElement generator(std::string_view name) const;
    LieElement generator(std::size_t index) const;
    FineDegree unit(std::size_t index) const { return FineDegree::unit(gens_.size(), index); }

    std::vector<HallMonomial> hall_basis(const FineDegree& target);
    std::size_t dimension(const FineDegree& target);
    HallMonomial basis_element(const FineDegree& target, std::size_t position);

    LieElement bracket(const LieElement& x, const LieElement& y);
    LieElement normalize(const BracketExpr& expr);
    LieElement left_normalized(std::span<const LieElement> elems);

    // Coordinates over hall_basis(target). Throws if x has terms of another degree.
    SparseVector coordinates(const LieElement& x, const FineDegree& target);
    LieElement element(const FineDegree& target, const SparseVector& coords);
    // Bracket of coordinate vectors; the result is over hall_basis(a_deg + b_deg).
    SparseVector bracket(const FineDegree& a_deg, const SparseVector& a, const FineDegree& b_deg,
                         const SparseVector& b);

    std::size_t cached_brackets() const;

private:
    using WordId = uint32_t;
    using Terms = std::vector<std::pair<WordId, Rational>>;

    struct Basis {
        std::vector<WordId> words;
    };

    GeneratorSet gens_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, WordId> ids_;
    std::vector<std::string> words_;
    std::vector<int32_t> position_;
    std::vector<int32_t> split_;
    std::map<FineDegree, Basis> bases_;
    std::unordered_map<uint64_t, Terms> memo_;

    WordId intern(const std::string& w);
    const Basis& basis_locked(const FineDegree& target);
    const Terms& bracket_words(WordId u, WordId v);
    Terms bracket_terms(const Terms& a, const Terms& b);
    FineDegree degree_of(const std::string& w) const;
    LieElement to_element(const Terms& t) const;
    Terms to_terms(const LieElement& x);
};

// Dimension of a fine-degree component of the free Lie algebra by the
// necklace formula (1/N) sum_{d | gcd} mu(d) (N/d)! / prod (c_i/d)!.
uint64_t witt_dimension(const FineDegree& target);

}  // namespace gradedlie

#endif  // GRADEDLIE_FREE_LIE_HPP
