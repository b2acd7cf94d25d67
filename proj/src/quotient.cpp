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

#include "gradedlie/quotient.hpp"

#include <algorithm>
#include <array>

#include "gradedlie/errors.hpp"
#include "gradedlie/zn.hpp"

namespace gradedlie {

namespace {

bool independent(std::initializer_list<int> values, int modulus) {
    std::array<int, 4> buf{};
    std::size_t k = 0;
    for (int v : values) buf[k++] = v;
    return !zn::minus_one_dependent(std::span<const int>(buf.data(), k), modulus);
}

void enumerate_counts(const std::vector<uint8_t>& bound, int max_length, std::vector<FineDegree>& out) {
    std::vector<uint8_t> c(bound.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < c.size() && c[i] == bound[i]) c[i++] = 0;
        if (i == c.size()) break;
        ++c[i];
        FineDegree d(c);
        if (d.length() <= max_length) out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
}

}  // namespace

const char* relator_kind_name(RelatorKind kind) {
    switch (kind) {
        case RelatorKind::ZeroComponentKill: return "ZeroComponentKill";
        case RelatorKind::SelectiveMetabelian: return "SelectiveMetabelian";
        case RelatorKind::SelectSecond: return "SelectSecond";
        case RelatorKind::ExplicitList: return "ExplicitList";
    }
    return "?";
}

RelatorKind parse_relator_kind(std::string_view name) {
    for (auto k : {RelatorKind::ZeroComponentKill, RelatorKind::SelectiveMetabelian, RelatorKind::SelectSecond,
                   RelatorKind::ExplicitList}) {
        if (name == relator_kind_name(k)) return k;
    }
    throw InputError("unknown relator family '" + std::string(name) + "'");
}

std::vector<FineDegree> sub_degrees(const FineDegree& key) {
    std::vector<FineDegree> out;
    enumerate_counts(key.counts(), key.length(), out);
    return out;
}

// ---------------------------------------------------------------- presentation

GradedPresentation::GradedPresentation(long long modulus, std::vector<Generator> generators,
                                       std::vector<RelatorFamily> families, int cutoff)
    : families_(std::move(families)), cutoff_(cutoff) {
    zn::require_odd_modulus(modulus);
    gens_ = GeneratorSet(modulus, std::move(generators));
    if (cutoff < 1 || cutoff > 64) throw InputError("cutoff must be in [1, 64]");
    if (has(RelatorKind::ZeroComponentKill)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_.degree(i) == 0) {
                throw InputError("generator '" + gens_[i].name + "' has degree 0 but the zero component is killed");
            }
        }
    }
    for (const auto& f : families_) {
        if (f.kind != RelatorKind::ExplicitList && !f.elements.empty()) {
            throw InputError(std::string(relator_kind_name(f.kind)) + " takes no explicit elements");
        }
        for (const auto& e : f.elements) {
            if (e.is_zero()) continue;
            if (!e.is_fine_homogeneous(gens_.size())) {
                throw InputError("explicit relator is not fine-homogeneous: " + e.str(gens_));
            }
        }
    }
}

bool GradedPresentation::has(RelatorKind kind) const {
    return std::any_of(families_.begin(), families_.end(), [&](const RelatorFamily& f) { return f.kind == kind; });
}

GradedPresentation GradedPresentation::with_cutoff(int cutoff) const {
    GradedPresentation p = *this;
    if (cutoff < 1 || cutoff > 64) throw InputError("cutoff must be in [1, 64]");
    p.cutoff_ = cutoff;
    return p;
}

GradedPresentation GradedPresentation::with_families(std::vector<RelatorFamily> families) const {
    return GradedPresentation(modulus(), gens_.all(), std::move(families), cutoff_);
}

// ---------------------------------------------------------------- snapshots

std::size_t IdealSnapshot::dimension(const FineDegree& key) const {
    auto it = components.find(key);
    return it == components.end() ? 0 : it->second.rank();
}

std::size_t IdealSnapshot::total_dimension() const {
    std::size_t t = 0;
    for (const auto& [k, r] : components) t += r.rank();
    return t;
}

std::map<int, std::size_t> IdealSnapshot::zn_census(const GeneratorSet& gens) const {
    std::map<int, std::size_t> out;
    for (const auto& [k, r] : components) out[k.zn_degree(gens)] += r.rank();
    return out;
}

// ---------------------------------------------------------------- quotient algebra

QuotientAlgebra::QuotientAlgebra(GradedPresentation p, QuotientOptions options)
    : p_(std::move(p)), options_(options), free_(p_.generators()) {
    const std::size_t rank = p_.generators().size();
    for (const auto& f : p_.families()) {
        if (f.kind != RelatorKind::ExplicitList) continue;
        for (const auto& e : f.elements) {
            if (e.is_zero()) continue;
            FineDegree k = *e.fine_degree(rank);
            if (k.length() > p_.cutoff()) continue;  // beyond the truncation
            explicit_[k].push_back(free_.coordinates(e, k));
        }
    }
}

void QuotientAlgebra::set_deadline(Deadline d) {
    std::lock_guard lock(mutex_);
    deadline_ = d;
}

QuotientStats QuotientAlgebra::stats() const {
    std::lock_guard lock(mutex_);
    return stats_;
}

void QuotientAlgebra::check_length(const FineDegree& key) const {
    if (key.size() != p_.generators().size()) throw InputError("fine degree does not match the generating set");
    if (key.length() < 1) throw InputError("fine degree must have length >= 1");
    if (key.length() > p_.cutoff()) {
        throw InputError("fine degree " + key.str(p_.generators()) + " exceeds the cutoff " +
                         std::to_string(p_.cutoff()));
    }
}

FineDegree QuotientAlgebra::homogeneous_degree(const LieElement& e) const {
    auto d = e.fine_degree(p_.generators().size());
    if (!d) throw InputError("element is not fine-homogeneous; split it by fine degree first");
    check_length(*d);
    return *d;
}

std::vector<FineDegree> QuotientAlgebra::fine_degrees_up_to(int max_length) const {
    std::vector<FineDegree> out;
    if (p_.generators().empty()) return out;
    std::vector<uint8_t> bound(p_.generators().size(), static_cast<uint8_t>(std::max(0, max_length)));
    enumerate_counts(bound, max_length, out);
    return out;
}

const QuotientAlgebra::Slice& QuotientAlgebra::slice(const FineDegree& key) {
    auto it = slices_.find(key);
    if (it != slices_.end()) return *it->second;
    check_length(key);
    auto s = std::make_unique<Slice>();
    build_slice(key, *s);
    return *slices_.emplace(key, std::move(s)).first->second;
}

void QuotientAlgebra::build_slice(const FineDegree& key, Slice& s) {
    deadline_.check("relation subspace construction");
    s.dim = free_.dimension(key);
    s.ideal = RowSpace(s.dim);
    ++stats_.components;
    if (s.dim == 0) return;

    const int n = p_.modulus();
    const std::size_t rank = p_.generators().size();
    auto finish = [&] {
        if (s.ideal.full()) ++stats_.full_components;
        s.free = s.ideal.free_columns();
    };

    if (p_.has(RelatorKind::ZeroComponentKill) && zn(key) == 0) {
        s.ideal.make_full();
        return finish();
    }

    // L_K = sum_g [L_{K-e_g}, x_g], so K is dead once every predecessor is.
    if (options_.skip_dead_components && key.length() >= 2) {
        bool all_dead = true;
        for (std::size_t g = 0; g < rank && all_dead; ++g) {
            if (key[g] == 0) continue;
            if (!slice(key - unit(g)).free.empty()) all_dead = false;
        }
        if (all_dead) {
            s.ideal.make_full();
            return finish();
        }
    }

    if (auto it = explicit_.find(key); it != explicit_.end()) {
        for (const auto& v : it->second) s.ideal.insert(v);
    }

    // Relator instances of fine degree exactly K.
    const bool sm = p_.has(RelatorKind::SelectiveMetabelian);
    const bool ss = p_.has(RelatorKind::SelectSecond);
    if ((sm || ss) && key.length() >= 4) {
        for (const FineDegree& left : sub_degrees(key)) {
            if (s.ideal.full()) break;
            if (left.length() < 2 || key.length() - left.length() < 2) continue;
            const FineDegree right = key - left;
            const auto& lhs = inner_spans(left);
            if (lhs.empty()) continue;
            if (sm && !(right < left)) {
                const auto& rhs = inner_spans(right);
                for (const auto& [kl, sl] : lhs) {
                    for (const auto& [kr, sr] : rhs) {
                        if (left == right && kr < kl) continue;
                        if (!independent({kl.first, kl.second, kr.first, kr.second}, n)) continue;
                        for (const auto& a : sl.basis()) {
                            for (const auto& b : sr.basis()) {
                                if (s.ideal.full()) break;
                                deadline_.check("relator instantiation");
                                ++stats_.relator_brackets;
                                s.ideal.insert(free_.bracket(left, a, right, b));
                            }
                        }
                    }
                }
            }
            if (ss) {
                const auto& rhs = half_spans(right);
                for (const auto& [kl, sl] : lhs) {
                    for (const auto& [d3, sr] : rhs) {
                        if (!independent({kl.first, kl.second, d3}, n)) continue;
                        for (const auto& a : sl.basis()) {
                            for (const auto& b : sr.basis()) {
                                if (s.ideal.full()) break;
                                deadline_.check("relator instantiation");
                                ++stats_.relator_brackets;
                                s.ideal.insert(free_.bracket(left, a, right, b));
                            }
                        }
                    }
                }
            }
        }
    }

    // Closure: [I_{K - e_g}, x_g].
    for (std::size_t g = 0; g < rank && !s.ideal.full(); ++g) {
        if (key[g] == 0 || key.length() < 2) continue;
        const FineDegree prev = key - unit(g);
        const Slice& ps = slice(prev);
        if (ps.ideal.empty()) continue;
        const SparseVector gen = unit_vector(0);
        for (const auto& row : ps.ideal.basis()) {
            if (s.ideal.full()) break;
            deadline_.check("ideal closure");
            ++stats_.closure_brackets;
            s.ideal.insert(free_.bracket(prev, row, unit(g), gen));
        }
    }
    finish();
}

std::vector<SparseVector> QuotientAlgebra::representatives(const FineDegree& key) {
    std::vector<SparseVector> out;
    for (uint32_t c : slice(key).free) out.push_back(unit_vector(c));
    return out;
}

const std::map<QuotientAlgebra::PairKey, RowSpace>& QuotientAlgebra::inner_spans(const FineDegree& key) {
    if (auto it = inner_.find(key); it != inner_.end()) return it->second;
    const Slice& target = slice(key);
    std::map<PairKey, RowSpace> spans;
    if (!target.free.empty()) {
        for (const FineDegree& a : sub_degrees(key)) {
            if (a.length() == key.length()) continue;
            const FineDegree b = key - a;
            if (b < a) continue;
            auto ra = representatives(a);
            auto rb = representatives(b);
            if (ra.empty() || rb.empty()) continue;
            PairKey pk = std::minmax(zn(a), zn(b));
            for (std::size_t i = 0; i < ra.size(); ++i) {
                for (std::size_t j = (a == b ? i + 1 : 0); j < rb.size(); ++j) {
                    deadline_.check("inner span construction");
                    SparseVector v = free_.bracket(a, ra[i], b, rb[j]);
                    target.ideal.reduce(v);
                    if (v.empty()) continue;
                    auto [it, inserted] = spans.try_emplace(pk, target.dim);
                    it->second.insert(std::move(v));
                }
            }
        }
    }
    return inner_.emplace(key, std::move(spans)).first->second;
}

const std::map<int, RowSpace>& QuotientAlgebra::half_spans(const FineDegree& key) {
    if (auto it = half_.find(key); it != half_.end()) return it->second;
    const Slice& target = slice(key);
    std::map<int, RowSpace> spans;
    if (!target.free.empty()) {
        for (const FineDegree& a : sub_degrees(key)) {
            if (a.length() == key.length()) continue;
            const FineDegree b = key - a;
            auto ra = representatives(a);
            auto rb = representatives(b);
            if (ra.empty() || rb.empty()) continue;
            const int d = zn(a);
            for (const auto& x : ra) {
                for (const auto& y : rb) {
                    deadline_.check("inner span construction");
                    SparseVector v = free_.bracket(a, x, b, y);
                    target.ideal.reduce(v);
                    if (v.empty()) continue;
                    auto [it, inserted] = spans.try_emplace(d, target.dim);
                    it->second.insert(std::move(v));
                }
            }
        }
    }
    return half_.emplace(key, std::move(spans)).first->second;
}

QuotientComponent QuotientAlgebra::component(const FineDegree& key) {
    std::lock_guard lock(mutex_);
    const Slice& s = slice(key);
    return QuotientComponent{key, free_.hall_basis(key), s.ideal, s.free};
}

std::size_t QuotientAlgebra::quotient_dimension(const FineDegree& key) {
    std::lock_guard lock(mutex_);
    return slice(key).free.size();
}

SparseVector QuotientAlgebra::reduce(const FineDegree& key, SparseVector v) {
    std::lock_guard lock(mutex_);
    slice(key).ideal.reduce(v);
    return v;
}

LieElement QuotientAlgebra::reduce(const LieElement& e) {
    std::lock_guard lock(mutex_);
    if (e.is_zero()) return e;
    FineDegree k = homogeneous_degree(e);
    SparseVector v = free_.coordinates(e, k);
    slice(k).ideal.reduce(v);
    return free_.element(k, v);
}

bool QuotientAlgebra::is_zero(const LieElement& e) {
    std::lock_guard lock(mutex_);
    if (e.is_zero()) return true;
    FineDegree k = homogeneous_degree(e);
    SparseVector v = free_.coordinates(e, k);
    slice(k).ideal.reduce(v);
    return v.empty();
}

SparseVector QuotientAlgebra::bracket(const FineDegree& a_key, const SparseVector& a, const FineDegree& b_key,
                                      const SparseVector& b) {
    std::lock_guard lock(mutex_);
    FineDegree k = a_key + b_key;
    check_length(k);
    SparseVector v = free_.bracket(a_key, a, b_key, b);
    slice(k).ideal.reduce(v);
    return v;
}

std::vector<LieElement> QuotientAlgebra::instantiate_relators(const FineDegree& key) {
    std::lock_guard lock(mutex_);
    check_length(key);
    const int n = p_.modulus();
    const std::size_t rank = p_.generators().size();
    std::vector<LieElement> out;
    const auto subs = sub_degrees(key);

    for (const auto& f : p_.families()) {
        switch (f.kind) {
            case RelatorKind::ZeroComponentKill:
                for (const auto& k : subs) {
                    if (zn(k) != 0) continue;
                    for (const auto& m : free_.hall_basis(k)) out.emplace_back(m);
                }
                break;
            case RelatorKind::ExplicitList:
                for (const auto& e : f.elements) {
                    if (!e.is_zero() && e.fine_degree(rank)->fits_in(key)) out.push_back(e);
                }
                break;
            case RelatorKind::SelectiveMetabelian:
            case RelatorKind::SelectSecond: {
                const bool second = f.kind == RelatorKind::SelectSecond;
                // Ordered quadruples of nonzero fine degrees summing to at most key.
                std::vector<FineDegree> parts(4);
                auto rec = [&](auto&& self, std::size_t depth, const FineDegree& room) -> void {
                    if (depth == 4) {
                        std::vector<std::vector<HallMonomial>> bases;
                        for (const auto& p : parts) bases.push_back(free_.hall_basis(p));
                        const int d1 = zn(parts[0]), d2 = zn(parts[1]), d3 = zn(parts[2]), d4 = zn(parts[3]);
                        bool ok = second ? independent({d1, d2, d3}, n) : independent({d1, d2, d3, d4}, n);
                        if (!ok) return;
                        for (const auto& m1 : bases[0]) {
                            for (const auto& m2 : bases[1]) {
                                LieElement inner = free_.bracket(LieElement(m1), LieElement(m2));
                                if (inner.is_zero()) continue;
                                for (const auto& m3 : bases[2]) {
                                    for (const auto& m4 : bases[3]) {
                                        deadline_.check("relator instantiation");
                                        LieElement r = free_.bracket(inner, free_.bracket(LieElement(m3), LieElement(m4)));
                                        if (!r.is_zero()) out.push_back(std::move(r));
                                    }
                                }
                            }
                        }
                        return;
                    }
                    for (const auto& k : sub_degrees(room)) {
                        if (static_cast<int>(4 - depth) > room.length() - k.length() + 1) continue;
                        parts[depth] = k;
                        self(self, depth + 1, room - k);
                    }
                };
                rec(rec, 0, key);
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- ideals

IdealSnapshot QuotientAlgebra::ideal_generated(const std::vector<LieElement>& seeds, Ambient ambient,
                                               std::string description) {
    std::lock_guard lock(mutex_);
    IdealSnapshot snap;
    snap.ambient = ambient;
    snap.description = std::move(description);

    std::map<FineDegree, std::vector<SparseVector>> seed_rows;
    for (const auto& e : seeds) {
        if (e.is_zero()) continue;
        FineDegree k = homogeneous_degree(e);
        SparseVector v = free_.coordinates(e, k);
        slice(k).ideal.reduce(v);
        if (!v.empty()) seed_rows[k].push_back(std::move(v));
    }
    if (seed_rows.empty()) return snap;

    const std::size_t rank = p_.generators().size();
    for (const FineDegree& key : fine_degrees_up_to(p_.cutoff())) {
        bool above = false;
        for (const auto& [sk, rows] : seed_rows) above = above || sk.fits_in(key);
        if (!above) continue;
        deadline_.check("ideal closure");
        const Slice& target = slice(key);
        if (target.free.empty()) continue;
        RowSpace t(target.dim);
        auto saturated = [&] { return t.rank() == target.free.size(); };
        auto add = [&](SparseVector v) {
            target.ideal.reduce(v);
            if (!v.empty()) t.insert(std::move(v));
        };
        if (auto it = seed_rows.find(key); it != seed_rows.end()) {
            for (const auto& v : it->second) add(v);
        }
        if (ambient == Ambient::Whole) {
            for (std::size_t g = 0; g < rank && !saturated(); ++g) {
                if (key[g] == 0 || key.length() < 2) continue;
                auto it = snap.components.find(key - unit(g));
                if (it == snap.components.end()) continue;
                for (const auto& row : it->second.basis()) {
                    if (saturated()) break;
                    add(free_.bracket(it->first, row, unit(g), unit_vector(0)));
                }
            }
        } else {
            for (const auto& [pk, rows] : snap.components) {
                if (saturated()) break;
                if (!pk.fits_in(key) || key.length() - pk.length() < 2) continue;
                const FineDegree q = key - pk;
                auto reps = representatives(q);
                if (reps.empty()) continue;
                for (const auto& row : rows.basis()) {
                    for (const auto& r : reps) {
                        if (saturated()) break;
                        deadline_.check("ideal closure");
                        add(free_.bracket(pk, row, q, r));
                    }
                }
            }
        }
        if (!t.empty()) snap.components.emplace(key, std::move(t));
    }
    return snap;
}

std::vector<IdealSnapshot> QuotientAlgebra::derived_series(int depth) {
    std::lock_guard lock(mutex_);
    if (depth < 1) throw InputError("derived series depth must be >= 1");
    std::vector<IdealSnapshot> series;
    const auto keys = fine_degrees_up_to(p_.cutoff());

    IdealSnapshot current;
    current.description = "L^(1)";
    for (const auto& key : keys) {
        if (key.length() < 2) continue;
        const Slice& s = slice(key);
        if (s.free.empty()) continue;
        RowSpace r(s.dim);
        for (uint32_t c : s.free) r.insert(unit_vector(c));
        current.components.emplace(key, std::move(r));
    }
    series.push_back(current);

    for (int k = 2; k <= depth; ++k) {
        IdealSnapshot next;
        next.description = "L^(" + std::to_string(k) + ")";
        for (const auto& key : keys) {
            if (current.is_zero()) break;
            if (key.length() < (1 << std::min(k, 20))) continue;
            const Slice& target = slice(key);
            if (target.free.empty()) continue;
            RowSpace t(target.dim);
            for (const auto& [a, ra] : current.components) {
                if (t.rank() == target.free.size()) break;
                if (!a.fits_in(key) || a.length() == key.length()) continue;
                const FineDegree b = key - a;
                if (b < a) continue;
                auto it = current.components.find(b);
                if (it == current.components.end()) continue;
                auto rows_a = ra.basis();
                auto rows_b = it->second.basis();
                for (std::size_t i = 0; i < rows_a.size(); ++i) {
                    for (std::size_t j = (a == b ? i + 1 : 0); j < rows_b.size(); ++j) {
                        if (t.rank() == target.free.size()) break;
                        deadline_.check("derived series");
                        SparseVector v = free_.bracket(a, rows_a[i], b, rows_b[j]);
                        target.ideal.reduce(v);
                        if (!v.empty()) t.insert(std::move(v));
                    }
                }
            }
            if (!t.empty()) next.components.emplace(key, std::move(t));
        }
        series.push_back(next);
        current = std::move(next);
    }
    return series;
}

DerivedLength QuotientAlgebra::derived_length() {
    std::lock_guard lock(mutex_);
    DerivedLength out;
    int t = 0;
    while ((1 << t) < p_.cutoff() + 1) ++t;
    out.vacuity_threshold = t;
    bool nonzero = false;
    for (std::size_t g = 0; g < p_.generators().size(); ++g) nonzero = nonzero || !slice(unit(g)).free.empty();
    if (!nonzero) {
        out.length = 0;
        return out;
    }
    auto series = derived_series(std::max(1, t));
    out.length = static_cast<int>(series.size()) + 1;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i].is_zero()) {
            out.length = static_cast<int>(i) + 1;
            break;
        }
    }
    return out;
}

CentralizerCensus QuotientAlgebra::centralizer_census(const IdealSnapshot& t) {
    std::lock_guard lock(mutex_);
    CentralizerCensus out;
    for (const auto& [k, r] : t.components) out.nontrivial.insert(zn(k));
    const int min_len = t.ambient == Ambient::Whole ? 1 : 2;
    const auto ambient_keys = fine_degrees_up_to(p_.cutoff());
    for (const auto& [tk, trows] : t.components) {
        auto rows = trows.basis();
        for (const auto& ak : ambient_keys) {
            if (ak.length() < min_len || ak.length() + tk.length() > p_.cutoff()) continue;
            const int za = zn(ak);
            if (out.noncentralizing.count(za)) continue;
            const FineDegree target_key = ak + tk;
            const Slice& target = slice(target_key);
            if (target.free.empty()) continue;
            bool hit = false;
            for (const auto& rep : representatives(ak)) {
                for (const auto& row : rows) {
                    deadline_.check("centralizer census");
                    SparseVector v = free_.bracket(ak, rep, tk, row);
                    target.ideal.reduce(v);
                    if (!v.empty()) {
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
            if (hit) out.noncentralizing.insert(za);
        }
    }
    return out;
}

}  // namespace gradedlie
