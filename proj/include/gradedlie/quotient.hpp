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
// Truncated graded quotients of free Lie algebras and computations inside them.

#ifndef GRADEDLIE_QUOTIENT_HPP
#define GRADEDLIE_QUOTIENT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/budget.hpp"
#include "gradedlie/free_lie.hpp"
#include "gradedlie/sparse.hpp"

namespace gradedlie {

enum class RelatorKind {
    ZeroComponentKill,    // every monomial of zn-degree 0
    SelectiveMetabelian,  // [[y1,y2],[y3,y4]] with (d1,d2,d3,d4) (-1)-independent
    SelectSecond,         // [[y1,y2],[y3,x]] with (d1,d2,d3) (-1)-independent, x arbitrary
    ExplicitList,         // user-supplied fine-homogeneous elements
};

const char* relator_kind_name(RelatorKind kind);
RelatorKind parse_relator_kind(std::string_view name);

struct RelatorFamily {
    RelatorKind kind = RelatorKind::ExplicitList;
    std::vector<LieElement> elements;  // ExplicitList only

    static RelatorFamily zero_component_kill() { return {RelatorKind::ZeroComponentKill, {}}; }
    static RelatorFamily selective_metabelian() { return {RelatorKind::SelectiveMetabelian, {}}; }
    static RelatorFamily select_second() { return {RelatorKind::SelectSecond, {}}; }
    static RelatorFamily explicit_list(std::vector<LieElement> elems) {
        return {RelatorKind::ExplicitList, std::move(elems)};
    }
};

/* Modulus, generators, relator families and a length cutoff. Monomials longer
 * than the cutoff are treated as zero. Validated on construction. */
class GradedPresentation {
public:
    GradedPresentation(long long modulus, std::vector<Generator> generators, std::vector<RelatorFamily> families,
                       int cutoff);

    int modulus() const noexcept { return gens_.modulus(); }
    const GeneratorSet& generators() const noexcept { return gens_; }
    const std::vector<RelatorFamily>& families() const noexcept { return families_; }
    int cutoff() const noexcept { return cutoff_; }
    bool has(RelatorKind kind) const;
    GradedPresentation with_cutoff(int cutoff) const;
    GradedPresentation with_families(std::vector<RelatorFamily> families) const;

private:
    GeneratorSet gens_;
    std::vector<RelatorFamily> families_;
    int cutoff_;
};

struct QuotientComponent {
    FineDegree key;
    std::vector<HallMonomial> free_basis;
    RowSpace relations;                 // the ideal slice, in coordinates over free_basis
    std::vector<uint32_t> quotient_basis;  // free columns: coordinates of representatives
    std::size_t quotient_dimension() const { return quotient_basis.size(); }
};

enum class Ambient { Whole, Derived };  // ideal of L, or of M = [L, L]

/* A homogeneous subspace of the quotient, one row space per nonzero fine
 * degree; rows are in normal form (supported on quotient_basis columns). */
struct IdealSnapshot {
    Ambient ambient = Ambient::Whole;
    std::string description;
    std::map<FineDegree, RowSpace> components;

    std::size_t dimension(const FineDegree& key) const;
    std::size_t total_dimension() const;
    bool is_zero() const { return components.empty(); }
    // Total dimension per zn-degree.
    std::map<int, std::size_t> zn_census(const GeneratorSet& gens) const;
};

struct DerivedLength {
    int length = 0;               // least k with L^(k) = 0 in the truncation
    int vacuity_threshold = 0;    // ceil(log2(cutoff + 1)): L^(k) = 0 forced for k >= this
    bool informative() const { return length < vacuity_threshold; }
};

struct CentralizerCensus {
    std::set<int> nontrivial;       // zn-degrees i with T_i != 0
    std::set<int> noncentralizing;  // zn-degrees i of the ambient with [A_i, T] != 0
};

struct QuotientStats {
    std::size_t components = 0;
    std::size_t full_components = 0;
    std::size_t relator_brackets = 0;
    std::size_t closure_brackets = 0;
};

struct QuotientOptions {
    // Mark K full without elimination when every K - e_g is already full.
    bool skip_dead_components = true;
};

/* Component-wise computation of a presentation's quotient algebra.
 *
 * The ideal slice at fine degree K is
 *     I_K = R_K + sum_g [I_{K - e_g}, x_g]
 * where R_K are relator instances of fine degree exactly K. Relator slots are
 * filled with quotient representatives of lower fine degrees, which spans the
 * same subspace as filling them with all monomials because I is an ideal and
 * the bracket is multilinear. Results are cached per fine degree.
 *
 * Thread-safe: all public methods serialize on one mutex. */
class QuotientAlgebra {
public:
    explicit QuotientAlgebra(GradedPresentation p, QuotientOptions options = {});
    QuotientAlgebra(const QuotientAlgebra&) = delete;
    QuotientAlgebra& operator=(const QuotientAlgebra&) = delete;

    const GradedPresentation& presentation() const noexcept { return p_; }
    FreeLieAlgebra& free_algebra() noexcept { return free_; }
    void set_deadline(Deadline d);

    // Relator instances with fine degree componentwise <= key, slots over all
    // Hall monomials. Enumerative; meant for small keys and cross-checks.
    std::vector<LieElement> instantiate_relators(const FineDegree& key);

    QuotientComponent component(const FineDegree& key);
    std::size_t quotient_dimension(const FineDegree& key);

    bool is_zero(const LieElement& e);
    // Normal form modulo the ideal; e must be fine-homogeneous.
    LieElement reduce(const LieElement& e);
    // Normal-form coordinates of a vector over hall_basis(key).
    SparseVector reduce(const FineDegree& key, SparseVector v);

    IdealSnapshot ideal_generated(const std::vector<LieElement>& seeds, Ambient ambient,
                                  std::string description = {});
    // L^(1), ..., L^(depth).
    std::vector<IdealSnapshot> derived_series(int depth);
    DerivedLength derived_length();
    CentralizerCensus centralizer_census(const IdealSnapshot& t);

    // Bracket of normal-form vectors, reduced at a_key + b_key.
    SparseVector bracket(const FineDegree& a_key, const SparseVector& a, const FineDegree& b_key,
                         const SparseVector& b);

    // Every fine degree with 1 <= length <= max_length.
    std::vector<FineDegree> fine_degrees_up_to(int max_length) const;

    QuotientStats stats() const;

private:
    struct Slice {
        std::size_t dim = 0;
        RowSpace ideal;
        std::vector<uint32_t> free;
    };
    using PairKey = std::pair<int, int>;

    GradedPresentation p_;
    QuotientOptions options_;
    FreeLieAlgebra free_;
    Deadline deadline_;
    mutable std::recursive_mutex mutex_;
    std::map<FineDegree, std::unique_ptr<Slice>> slices_;
    std::map<FineDegree, std::map<PairKey, RowSpace>> inner_;
    std::map<FineDegree, std::map<int, RowSpace>> half_;
    std::map<FineDegree, std::vector<SparseVector>> explicit_;
    QuotientStats stats_;

    const Slice& slice(const FineDegree& key);
    void build_slice(const FineDegree& key, Slice& s);
    const std::map<PairKey, RowSpace>& inner_spans(const FineDegree& key);
    const std::map<int, RowSpace>& half_spans(const FineDegree& key);
    std::vector<SparseVector> representatives(const FineDegree& key);
    FineDegree unit(std::size_t g) const { return FineDegree::unit(p_.generators().size(), g); }
    int zn(const FineDegree& k) const { return k.zn_degree(p_.generators()); }
    void check_length(const FineDegree& key) const;
    FineDegree homogeneous_degree(const LieElement& e) const;
};

// All nonzero fine degrees componentwise <= key, in FineDegree order.
std::vector<FineDegree> sub_degrees(const FineDegree& key);

}  // namespace gradedlie

#endif  // GRADEDLIE_QUOTIENT_HPP
