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

#include "gradedlie/eigenspace.hpp"

#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "gradedlie/errors.hpp"
#include "gradedlie/zn.hpp"

namespace gradedlie {

namespace {

bool is_zero_vector(const CycVector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::string format_vector(const SCAlgebra& alg, const CycVector& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        os << (first ? "" : " + ") << "(" << v[i].str() << ")*" << alg.labels()[i];
        first = false;
    }
    return first ? "0" : os.str();
}

// Row-reduces `rows` in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<CycVector>& rows, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        CyclotomicNumber inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c].is_zero()) continue;
            CyclotomicNumber f = rows[q][c];
            for (std::size_t k = 0; k < width; ++k) {
                if (!rows[r][k].is_zero()) rows[q][k] -= f * rows[r][k];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

bool in_span(const std::vector<CycVector>& basis, const CycVector& v, const FieldPtr& field) {
    if (is_zero_vector(v)) return true;
    std::vector<CycVector> with = basis;
    with.push_back(v);
    return vector_rank(with, field) == vector_rank(basis, field);
}

void require_dim(const SCAlgebra& alg, const CycMatrix& m, const char* what) {
    if (m.dim() != alg.dim()) {
        throw InputError(std::string(what) + " is " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()) +
                         " but the algebra has dimension " + std::to_string(alg.dim()));
    }
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- matrices

CycMatrix::CycMatrix(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {
    if (!field_) throw InputError("matrix needs a field");
    data_.assign(dim * dim, field_->zero());
}

CycMatrix CycMatrix::identity(FieldPtr field, std::size_t dim) {
    CycMatrix m(field, dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = m.field_->one();
    return m;
}

CycMatrix CycMatrix::diagonal(FieldPtr field, const CycVector& entries) {
    CycMatrix m(field, entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

CycVector CycMatrix::apply(const CycVector& v) const {
    if (v.size() != dim_) throw InputError("vector length does not match the matrix");
    CycVector out(dim_, field_->zero());
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!v[j].is_zero() && !at(i, j).is_zero()) out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw InputError("matrix size mismatch");
    CycMatrix out(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!rhs.at(k, j).is_zero()) out.at(i, j) += at(i, k) * rhs.at(k, j);
            }
        }
    }
    return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw InputError("matrix size mismatch");
    CycMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

CycMatrix CycMatrix::power(unsigned long long k) const {
    CycMatrix result = identity(field_, dim_);
    CycMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

std::vector<CycVector> null_space(const CycMatrix& m) {
    const std::size_t d = m.dim();
    std::vector<CycVector> rows(d, CycVector(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) rows[i][j] = m.at(i, j);
    }
    auto pivots = row_reduce(rows, d);
    std::vector<char> is_pivot(d, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<CycVector> basis;
    for (std::size_t f = 0; f < d; ++f) {
        if (is_pivot[f]) continue;
        CycVector v(d, m.field()->zero());
        v[f] = m.field()->one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t vector_rank(const std::vector<CycVector>& vectors, const FieldPtr& field) {
    if (vectors.empty()) return 0;
    (void)field;
    std::vector<CycVector> rows = vectors;
    return row_reduce(rows, rows.front().size()).size();
}

// ---------------------------------------------------------------- algebras

SCAlgebra::SCAlgebra(FieldPtr field, std::vector<std::string> labels, const std::vector<StructureConstant>& entries)
    : field_(std::move(field)), labels_(std::move(labels)) {
    if (!field_) throw InputError("structure-constant algebra needs a field");
    const std::size_t d = labels_.size();
    if (d == 0) throw InputError("algebra dimension must be >= 1");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != d) throw InputError("basis labels must be unique");

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, CyclotomicNumber> normalized;
    for (const auto& e : entries) {
        if (e.i >= d || e.j >= d || e.k >= d) throw InputError("structure constant index out of range");
        if (e.i == e.j) {
            if (e.value.is_zero()) continue;
            throw InputError("nonzero structure constant for [e_i, e_i] violates antisymmetry");
        }
        auto key = std::make_tuple(std::min(e.i, e.j), std::max(e.i, e.j), e.k);
        CyclotomicNumber v = e.i < e.j ? e.value : -e.value;
        auto [it, inserted] = normalized.emplace(key, v);
        if (!inserted && !(it->second == v)) {
            throw InputError("inconsistent structure constants for [" + labels_[e.i] + ", " + labels_[e.j] + "]");
        }
    }
    table_.assign(d * d, CycVector(d, field_->zero()));
    for (const auto& [key, v] : normalized) {
        auto [i, j, k] = key;
        table_[i * d + j][k] = v;
        table_[j * d + i][k] = -v;
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t k = j + 1; k < d; ++k) {
                CycVector s = bracket(basis_bracket(i, j), unit(k));
                CycVector t = bracket(basis_bracket(j, k), unit(i));
                CycVector u = bracket(basis_bracket(k, i), unit(j));
                for (std::size_t c = 0; c < d; ++c) s[c] += t[c] + u[c];
                if (!is_zero_vector(s)) {
                    throw InputError("Jacobi identity fails on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] +
                                     ")");
                }
            }
        }
    }
}

CycVector SCAlgebra::unit(std::size_t i) const {
    CycVector v = zero_vector();
    v.at(i) = field_->one();
    return v;
}

CycVector SCAlgebra::zero_vector() const { return CycVector(dim(), field_->zero()); }

CycVector SCAlgebra::bracket(const CycVector& x, const CycVector& y) const {
    const std::size_t d = dim();
    if (x.size() != d || y.size() != d) throw InputError("vector length does not match the algebra");
    CycVector out = zero_vector();
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j].is_zero() || i == j) continue;
            CyclotomicNumber f = x[i] * y[j];
            const CycVector& b = table_[i * d + j];
            for (std::size_t k = 0; k < d; ++k) {
                if (!b[k].is_zero()) out[k] += f * b[k];
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- checks

bool CheckList::passed() const {
    for (const auto& i : items) {
        if (!i.passed) return false;
    }
    return true;
}

const CheckItem* CheckList::find(const std::string& name) const {
    for (const auto& i : items) {
        if (i.name == name) return &i;
    }
    return nullptr;
}

std::optional<std::pair<std::size_t, std::size_t>> bracket_violation(const SCAlgebra& alg, const CycMatrix& m) {
    require_dim(alg, m, "matrix");
    std::vector<CycVector> images;
    for (std::size_t i = 0; i < alg.dim(); ++i) images.push_back(m.apply(alg.unit(i)));
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        for (std::size_t j = i + 1; j < alg.dim(); ++j) {
            if (!(m.apply(alg.basis_bracket(i, j)) == alg.bracket(images[i], images[j]))) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

CheckList verify_automorphism_pair(const SCAlgebra& alg, const AutomorphismPair& aut) {
    require_dim(alg, aut.phi, "phi");
    if (aut.h) require_dim(alg, *aut.h, "h");
    if (aut.order < 1) throw InputError("automorphism order must be >= 1");
    CheckList out;
    const auto& field = alg.field();
    const CycMatrix id = CycMatrix::identity(field, alg.dim());

    auto preserve = [&](const std::string& name, const CycMatrix& m) {
        CheckItem item{name, true, {}};
        if (auto w = bracket_violation(alg, m)) {
            item.passed = false;
            item.witness = "(" + std::to_string(w->first) + ", " + std::to_string(w->second) + ")";
        }
        out.items.push_back(item);
    };

    preserve("phi preserves bracket", aut.phi);
    {
        CheckItem item{"phi has order n", true, {}};
        if (!(aut.phi.power(static_cast<unsigned long long>(aut.order)) == id)) {
            item.passed = false;
            item.witness = "phi^" + std::to_string(aut.order) + " != I";
        } else {
            for (int p : prime_factors(aut.order)) {
                if (aut.phi.power(static_cast<unsigned long long>(aut.order / p)) == id) {
                    item.passed = false;
                    item.witness = "phi^" + std::to_string(aut.order / p) + " = I";
                    break;
                }
            }
        }
        out.items.push_back(item);
    }
    if (aut.h) {
        const CycMatrix& h = *aut.h;
        preserve("h preserves bracket", h);
        CheckItem inv{"h is an involution", true, {}};
        if (!(h * h == id)) {
            inv.passed = false;
            inv.witness = "h^2 != I";
        } else if (h == id) {
            inv.passed = false;
            inv.witness = "h = I";
        }
        out.items.push_back(inv);
        CheckItem conj{"h inverts phi", true, {}};
        CycMatrix phi_inv = aut.phi.power(static_cast<unsigned long long>(aut.order - 1));
        if (!(h * aut.phi * h == phi_inv)) {
            conj.passed = false;
            conj.witness = "h phi h != phi^(n-1)";
        }
        out.items.push_back(conj);
    }
    return out;
}

std::size_t Grading::dimension(int i) const {
    int k = ((i % order) + order) % order;
    return components.at(static_cast<std::size_t>(k)).size();
}

Grading eigenspace_decomposition(const SCAlgebra& alg, const AutomorphismPair& aut) {
    require_dim(alg, aut.phi, "phi");
    const int n = aut.order;
    if (n < 1) throw InputError("automorphism order must be >= 1");
    const auto& field = alg.field();
    if (field->order() % n != 0) {
        throw InputError("the coefficient field does not contain a primitive " + std::to_string(n) + "-th root of unity");
    }
    if (auto w = bracket_violation(alg, aut.phi)) {
        throw InputError("phi does not preserve the bracket at (" + std::to_string(w->first) + ", " +
                         std::to_string(w->second) + ")");
    }
    const CycMatrix id = CycMatrix::identity(field, alg.dim());
    if (!(aut.phi.power(static_cast<unsigned long long>(n)) == id)) throw InputError("phi^n != I");

    Grading g;
    g.order = n;
    const long long step = field->order() / n;
    std::size_t total = 0;
    for (int i = 0; i < n; ++i) {
        CycMatrix shifted = aut.phi - CycMatrix::diagonal(field, CycVector(alg.dim(), field->omega_power(step * i)));
        g.components.push_back(null_space(shifted));
        total += g.components.back().size();
    }
    if (total != alg.dim()) {
        throw InternalInconsistency("eigenspaces have total dimension " + std::to_string(total) + ", expected " +
                                    std::to_string(alg.dim()));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const auto& target = g.components[static_cast<std::size_t>((i + j) % n)];
            for (const auto& x : g.components[static_cast<std::size_t>(i)]) {
                for (const auto& y : g.components[static_cast<std::size_t>(j)]) {
                    if (!in_span(target, alg.bracket(x, y), field)) {
                        throw InternalInconsistency("grading law fails for components " + std::to_string(i) + " and " +
                                                    std::to_string(j));
                    }
                }
            }
        }
    }
    if (aut.h) {
        require_dim(alg, *aut.h, "h");
        for (int i = 0; i < n; ++i) {
            const auto& target = g.components[static_cast<std::size_t>((n - i) % n)];
            for (const auto& x : g.components[static_cast<std::size_t>(i)]) {
                if (!in_span(target, aut.h->apply(x), field)) {
                    throw InputError("h does not map L_" + std::to_string(i) + " into L_" + std::to_string((n - i) % n));
                }
            }
        }
    }
    return g;
}

std::vector<CycVector> fixed_subalgebra(const SCAlgebra& alg, const CycMatrix& map) {
    require_dim(alg, map, "map");
    if (auto w = bracket_violation(alg, map)) {
        throw InputError("map does not preserve the bracket at (" + std::to_string(w->first) + ", " +
                         std::to_string(w->second) + ")");
    }
    auto basis = null_space(map - CycMatrix::identity(alg.field(), alg.dim()));
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            if (!in_span(basis, alg.bracket(basis[a], basis[b]), alg.field())) {
                throw InternalInconsistency("fixed points are not closed under the bracket");
            }
        }
    }
    return basis;
}

CheckList verify_hypotheses(const SCAlgebra& alg, const AutomorphismPair& aut) {
    if (!aut.h) throw InputError("verifying the hypotheses needs the involution h");
    CheckList out;
    auto fixed_f = fixed_subalgebra(alg, aut.phi);
    CheckItem f{"fixed points of F are trivial", fixed_f.empty(), {}};
    if (!fixed_f.empty()) f.witness = format_vector(alg, fixed_f.front());
    out.items.push_back(f);

    auto c = fixed_subalgebra(alg, *aut.h);
    CheckItem m{"fixed points of H are metabelian", true, {}};
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, CycVector>> pairs;
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            CycVector v = alg.bracket(c[a], c[b]);
            if (!is_zero_vector(v)) pairs.push_back({{a, b}, std::move(v)});
        }
    }
    for (std::size_t p = 0; p < pairs.size() && m.passed; ++p) {
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            if (!is_zero_vector(alg.bracket(pairs[p].second, pairs[q].second))) {
                m.passed = false;
                m.witness = "[[c" + std::to_string(pairs[p].first.first) + ", c" + std::to_string(pairs[p].first.second) +
                            "], [c" + std::to_string(pairs[q].first.first) + ", c" +
                            std::to_string(pairs[q].first.second) + "]] != 0";
                break;
            }
        }
    }
    out.items.push_back(m);
    return out;
}

std::optional<SelectiveViolation> verify_selective_condition(const SCAlgebra& alg, const Grading& grading) {
    const int n = grading.order;
    std::vector<int> nonempty;
    for (int i = 0; i < n; ++i) {
        if (!grading.components[static_cast<std::size_t>(i)].empty()) nonempty.push_back(i);
    }
    // Inner brackets [x1, x2] cached per ordered component pair.
    std::map<std::pair<int, int>, std::vector<std::pair<std::pair<std::size_t, std::size_t>, CycVector>>> inner;
    auto inner_of = [&](int a, int b) -> const auto& {
        auto key = std::make_pair(a, b);
        auto it = inner.find(key);
        if (it != inner.end()) return it->second;
        auto& list = inner[key];
        const auto& ca = grading.components[static_cast<std::size_t>(a)];
        const auto& cb = grading.components[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < ca.size(); ++i) {
            for (std::size_t j = 0; j < cb.size(); ++j) {
                CycVector v = alg.bracket(ca[i], cb[j]);
                if (!is_zero_vector(v)) list.push_back({{i, j}, std::move(v)});
            }
        }
        return list;
    };
    for (int d1 : nonempty) {
        for (int d2 : nonempty) {
            for (int d3 : nonempty) {
                for (int d4 : nonempty) {
                    std::array<int, 4> d{d1, d2, d3, d4};
                    if (zn::minus_one_dependent(d, n)) continue;
                    const auto& left = inner_of(d1, d2);
                    if (left.empty()) continue;
                    const auto& right = inner_of(d3, d4);
                    for (const auto& [pl, vl] : left) {
                        for (const auto& [pr, vr] : right) {
                            CycVector v = alg.bracket(vl, vr);
                            if (!is_zero_vector(v)) {
                                return SelectiveViolation{d, {pl.first, pl.second, pr.first, pr.second}, v};
                            }
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace gradedlie
