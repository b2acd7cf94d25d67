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

#include "gradedlie/free_lie.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gradedlie/errors.hpp"

namespace gradedlie {

// ---------------------------------------------------------------- generators

GeneratorSet::GeneratorSet(long long modulus, std::vector<Generator> generators)
    : generators_(std::move(generators)) {
    if (modulus < 1 || modulus > (1LL << 30)) throw InputError("generator modulus must be >= 1");
    modulus_ = static_cast<int>(modulus);
    if (generators_.size() > 64) throw InputError("at most 64 generators are supported");
    std::sort(generators_.begin(), generators_.end(),
              [](const Generator& a, const Generator& b) { return a.name < b.name; });
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name.empty()) throw InputError("generator names must be nonempty");
        if (i > 0 && generators_[i].name == generators_[i - 1].name) {
            throw InputError("duplicate generator name '" + generators_[i].name + "'");
        }
        long long d = generators_[i].degree % modulus_;
        if (d < 0) d += modulus_;
        degrees_.push_back(static_cast<int>(d));
    }
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name == name) return i;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- fine degrees

FineDegree::FineDegree(std::vector<uint8_t> counts) : counts_(std::move(counts)) {
    for (uint8_t c : counts_) length_ += c;
}

FineDegree FineDegree::unit(std::size_t generators, std::size_t index) {
    std::vector<uint8_t> c(generators, 0);
    c.at(index) = 1;
    return FineDegree(std::move(c));
}

int FineDegree::zn_degree(const GeneratorSet& gens) const {
    long long s = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) s += static_cast<long long>(counts_[i]) * gens.degree(i);
    return static_cast<int>(s % gens.modulus());
}

bool FineDegree::fits_in(const FineDegree& other) const {
    if (other.counts_.size() != counts_.size()) return false;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] > other.counts_[i]) return false;
    }
    return true;
}

FineDegree FineDegree::operator+(const FineDegree& rhs) const {
    if (rhs.counts_.size() != counts_.size()) throw InputError("fine degrees over different generating sets");
    std::vector<uint8_t> c(counts_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        int v = counts_[i] + rhs.counts_[i];
        if (v > 255) throw InputError("fine degree count overflow");
        c[i] = static_cast<uint8_t>(v);
    }
    return FineDegree(std::move(c));
}

FineDegree FineDegree::operator-(const FineDegree& rhs) const {
    if (!rhs.fits_in(*this)) throw InputError("fine degree subtraction underflow");
    std::vector<uint8_t> c(counts_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<uint8_t>(counts_[i] - rhs.counts_[i]);
    return FineDegree(std::move(c));
}

std::strong_ordering operator<=>(const FineDegree& a, const FineDegree& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.counts_ <=> b.counts_;
}

std::string FineDegree::str(const GeneratorSet& gens) const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] == 0) continue;
        os << (first ? "" : ",") << (i < gens.size() ? gens[i].name : std::to_string(i)) << ":"
           << static_cast<int>(counts_[i]);
        first = false;
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- Lyndon words

bool is_lyndon_word(std::string_view w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (!(w < w.substr(i))) return false;
    }
    return true;
}

std::size_t standard_factor_split(std::string_view w) {
    if (w.size() < 2) throw InputError("standard factorization needs a word of length >= 2");
    std::size_t best = 1;
    for (std::size_t i = 2; i < w.size(); ++i) {
        if (w.substr(i) < w.substr(best)) best = i;
    }
    return best;
}

HallMonomial::HallMonomial(std::string letters) : word_(std::move(letters)) {
    if (!is_lyndon_word(word_)) throw InputError("not a Lyndon word");
}

HallMonomial HallMonomial::generator(std::size_t letter) {
    if (letter > 127) throw InputError("generator index out of range");
    return HallMonomial(std::string(1, static_cast<char>(letter)), Unchecked{});
}

HallMonomial HallMonomial::left() const {
    if (is_generator()) throw InputError("a generator has no factorization");
    return HallMonomial(word_.substr(0, standard_factor_split(word_)), Unchecked{});
}

HallMonomial HallMonomial::right() const {
    if (is_generator()) throw InputError("a generator has no factorization");
    return HallMonomial(word_.substr(standard_factor_split(word_)), Unchecked{});
}

FineDegree HallMonomial::fine_degree(std::size_t generators) const {
    std::vector<uint8_t> c(generators, 0);
    for (char ch : word_) {
        auto i = static_cast<std::size_t>(static_cast<unsigned char>(ch));
        if (i >= generators) throw InputError("monomial uses a letter outside the generating set");
        ++c[i];
    }
    return FineDegree(std::move(c));
}

std::string HallMonomial::str(const GeneratorSet& gens) const {
    if (is_generator()) {
        auto i = static_cast<std::size_t>(static_cast<unsigned char>(word_[0]));
        return i < gens.size() ? gens[i].name : "g" + std::to_string(i);
    }
    return "[" + left().str(gens) + "," + right().str(gens) + "]";
}

std::strong_ordering operator<=>(const HallMonomial& a, const HallMonomial& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    int c = a.word_.compare(b.word_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------- elements

LieElement::LieElement(const HallMonomial& m, Rational c) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

Rational LieElement::coefficient(const HallMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

void LieElement::add_term(const HallMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<FineDegree> LieElement::fine_degree(std::size_t generators) const {
    std::optional<FineDegree> out;
    for (const auto& [m, c] : terms_) {
        FineDegree d = m.fine_degree(generators);
        if (!out) {
            out = std::move(d);
        } else if (!(*out == d)) {
            return std::nullopt;
        }
    }
    return out;
}

std::map<FineDegree, LieElement> LieElement::split_by_fine_degree(std::size_t generators) const {
    std::map<FineDegree, LieElement> out;
    for (const auto& [m, c] : terms_) out[m.fine_degree(generators)].add_term(m, c);
    return out;
}

LieElement& LieElement::operator+=(const LieElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::string LieElement::str(const GeneratorSet& gens) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (c.sign() < 0) {
            os << (first ? "-" : " - ");
        } else if (!first) {
            os << " + ";
        }
        Rational a = c.sign() < 0 ? -c : c;
        if (!a.is_one()) os << a << "*";
        os << m.str(gens);
        first = false;
    }
    return os.str();
}

BracketExpr BracketExpr::leaf(LieElement value) {
    BracketExpr e;
    auto n = std::make_shared<Node>();
    n->leaf = std::move(value);
    e.node_ = std::move(n);
    return e;
}

BracketExpr BracketExpr::bracket(BracketExpr left, BracketExpr right) {
    BracketExpr e;
    auto n = std::make_shared<Node>();
    n->left = std::make_unique<BracketExpr>(std::move(left));
    n->right = std::make_unique<BracketExpr>(std::move(right));
    e.node_ = std::move(n);
    return e;
}

// ---------------------------------------------------------------- free algebra

FreeLieAlgebra::FreeLieAlgebra(GeneratorSet gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) intern(std::string(1, static_cast<char>(i)));
}

FreeLieAlgebra::WordId FreeLieAlgebra::intern(const std::string& w) {
    auto it = ids_.find(w);
    if (it != ids_.end()) return it->second;
    auto id = static_cast<WordId>(words_.size());
    words_.push_back(w);
    position_.push_back(-1);
    split_.push_back(w.size() >= 2 ? static_cast<int32_t>(standard_factor_split(w)) : 0);
    ids_.emplace(w, id);
    return id;
}

FineDegree FreeLieAlgebra::degree_of(const std::string& w) const {
    std::vector<uint8_t> c(gens_.size(), 0);
    for (char ch : w) ++c[static_cast<unsigned char>(ch)];
    return FineDegree(std::move(c));
}

const FreeLieAlgebra::Basis& FreeLieAlgebra::basis_locked(const FineDegree& target) {
    auto it = bases_.find(target);
    if (it != bases_.end()) return it->second;
    if (gens_.empty()) throw InputError("empty generating set");
    if (target.size() != gens_.size()) throw InputError("fine degree does not match the generating set");
    if (target.length() < 1) throw InputError("fine degree must have length >= 1");
    if (target.length() > 64) throw InputError("fine degree too long");
    std::string w;
    for (std::size_t i = 0; i < target.size(); ++i) w.append(target[i], static_cast<char>(i));
    Basis b;
    // Permutations in increasing lexicographic order; keep the Lyndon ones.
    do {
        if (is_lyndon_word(w)) {
            WordId id = intern(w);
            position_[id] = static_cast<int32_t>(b.words.size());
            b.words.push_back(id);
        }
    } while (std::next_permutation(w.begin(), w.end()));
    return bases_.emplace(target, std::move(b)).first->second;
}

std::vector<HallMonomial> FreeLieAlgebra::hall_basis(const FineDegree& target) {
    std::lock_guard lock(mutex_);
    const Basis& b = basis_locked(target);
    std::vector<HallMonomial> out;
    out.reserve(b.words.size());
    for (WordId id : b.words) out.push_back(HallMonomial(words_[id], HallMonomial::Unchecked{}));
    return out;
}

std::size_t FreeLieAlgebra::dimension(const FineDegree& target) {
    std::lock_guard lock(mutex_);
    return basis_locked(target).words.size();
}

HallMonomial FreeLieAlgebra::basis_element(const FineDegree& target, std::size_t position) {
    std::lock_guard lock(mutex_);
    const Basis& b = basis_locked(target);
    return HallMonomial(words_[b.words.at(position)], HallMonomial::Unchecked{});
}

LieElement FreeLieAlgebra::generator(std::string_view name) const {
    auto i = gens_.index_of(name);
    if (!i) throw InputError("unknown generator '" + std::string(name) + "'");
    return generator(*i);
}

LieElement FreeLieAlgebra::generator(std::size_t index) const {
    if (index >= gens_.size()) throw InputError("generator index out of range");
    return LieElement(HallMonomial::generator(index));
}

const FreeLieAlgebra::Terms& FreeLieAlgebra::bracket_words(WordId u, WordId v) {
    const uint64_t key = (static_cast<uint64_t>(u) << 32) | v;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::string uw = words_[u];
    const std::string vw = words_[v];
    Terms result;
    const auto split = static_cast<std::size_t>(split_[u]);
    if (uw.size() == 1 || std::string_view(uw).substr(split) >= std::string_view(vw)) {
        result.emplace_back(intern(uw + vw), Rational(1));
    } else {
        // u = u'u'' with u'' < v:  [[u', v], u''] + [u', [u'', v]]
        const WordId u1 = intern(uw.substr(0, split));
        const WordId u2 = intern(uw.substr(split));
        Terms a = bracket_terms(Terms{{u1, Rational(1)}}, Terms{{v, Rational(1)}});
        Terms b = bracket_terms(Terms{{u2, Rational(1)}}, Terms{{v, Rational(1)}});
        Terms first = bracket_terms(a, Terms{{u2, Rational(1)}});
        Terms second = bracket_terms(Terms{{u1, Rational(1)}}, b);
        std::map<WordId, Rational> acc;
        for (auto& [w, c] : first) acc[w] += c;
        for (auto& [w, c] : second) acc[w] += c;
        for (auto& [w, c] : acc) {
            if (!c.is_zero()) result.emplace_back(w, std::move(c));
        }
    }
    return memo_.emplace(key, std::move(result)).first->second;
}

FreeLieAlgebra::Terms FreeLieAlgebra::bracket_terms(const Terms& a, const Terms& b) {
    std::map<WordId, Rational> acc;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            if (wa == wb) continue;
            const bool ordered = words_[wa] < words_[wb];
            const Terms& t = ordered ? bracket_words(wa, wb) : bracket_words(wb, wa);
            Rational f = ca * cb;
            if (!ordered) f = -f;
            for (const auto& [w, c] : t) acc[w] += f * c;
        }
    }
    Terms out;
    out.reserve(acc.size());
    for (auto& [w, c] : acc) {
        if (!c.is_zero()) out.emplace_back(w, std::move(c));
    }
    return out;
}

LieElement FreeLieAlgebra::to_element(const Terms& t) const {
    LieElement out;
    for (const auto& [w, c] : t) out.add_term(HallMonomial(words_[w], HallMonomial::Unchecked{}), c);
    return out;
}

FreeLieAlgebra::Terms FreeLieAlgebra::to_terms(const LieElement& x) {
    Terms t;
    t.reserve(x.size());
    for (const auto& [m, c] : x.terms()) {
        for (char ch : m.word()) {
            if (static_cast<std::size_t>(static_cast<unsigned char>(ch)) >= gens_.size()) {
                throw InputError("element uses a letter outside the generating set");
            }
        }
        t.emplace_back(intern(m.word()), c);
    }
    return t;
}

LieElement FreeLieAlgebra::bracket(const LieElement& x, const LieElement& y) {
    std::lock_guard lock(mutex_);
    Terms tx = to_terms(x);
    Terms ty = to_terms(y);
    return to_element(bracket_terms(tx, ty));
}

LieElement FreeLieAlgebra::normalize(const BracketExpr& expr) {
    if (expr.is_leaf()) {
        std::lock_guard lock(mutex_);
        to_terms(expr.value());  // validates letters
        return expr.value();
    }
    LieElement l = normalize(expr.left());
    LieElement r = normalize(expr.right());
    return bracket(l, r);
}

LieElement FreeLieAlgebra::left_normalized(std::span<const LieElement> elems) {
    if (elems.empty()) throw InputError("left-normalized product needs at least one factor");
    LieElement acc = elems.front();
    for (std::size_t i = 1; i < elems.size(); ++i) acc = bracket(acc, elems[i]);
    return acc;
}

SparseVector FreeLieAlgebra::coordinates(const LieElement& x, const FineDegree& target) {
    std::lock_guard lock(mutex_);
    basis_locked(target);
    thread_local Accumulator acc;
    acc.resize(basis_locked(target).words.size());
    for (const auto& [m, c] : x.terms()) {
        if (!(m.fine_degree(gens_.size()) == target)) {
            throw InputError("element has a term outside fine degree " + target.str(gens_));
        }
        acc.add(static_cast<uint32_t>(position_[intern(m.word())]), c);
    }
    return acc.take();
}

LieElement FreeLieAlgebra::element(const FineDegree& target, const SparseVector& coords) {
    std::lock_guard lock(mutex_);
    const Basis& b = basis_locked(target);
    LieElement out;
    for (const auto& [i, c] : coords) {
        out.add_term(HallMonomial(words_[b.words.at(i)], HallMonomial::Unchecked{}), c);
    }
    return out;
}

SparseVector FreeLieAlgebra::bracket(const FineDegree& a_deg, const SparseVector& a, const FineDegree& b_deg,
                                     const SparseVector& b) {
    std::lock_guard lock(mutex_);
    const FineDegree target = a_deg + b_deg;
    const std::size_t dim = basis_locked(target).words.size();
    const Basis& ba = basis_locked(a_deg);
    const Basis& bb = basis_locked(b_deg);
    thread_local Accumulator acc;
    acc.resize(dim);
    for (const auto& [i, ci] : a) {
        const WordId wi = ba.words.at(i);
        for (const auto& [j, cj] : b) {
            const WordId wj = bb.words.at(j);
            if (wi == wj) continue;
            const bool ordered = words_[wi] < words_[wj];
            Rational f = ci * cj;
            if (!ordered) f = -f;
            const Terms& t = ordered ? bracket_words(wi, wj) : bracket_words(wj, wi);
            for (const auto& [w, c] : t) acc.add_product(static_cast<uint32_t>(position_[w]), f, c);
        }
    }
    return acc.take();
}

std::size_t FreeLieAlgebra::cached_brackets() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

// ---------------------------------------------------------------- Witt formula

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace

uint64_t witt_dimension(const FineDegree& target) {
    const int total = target.length();
    if (total < 1) throw InputError("witt_dimension needs length >= 1");
    int g = 0;
    for (uint8_t c : target.counts()) g = std::gcd(g, static_cast<int>(c));
    mpz_class sum = 0;
    for (int d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        int mu = mobius(d);
        if (mu == 0) continue;
        mpz_class term = factorial(static_cast<unsigned long>(total / d));
        for (uint8_t c : target.counts()) term /= factorial(static_cast<unsigned long>(c / d));
        if (mu > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if (sum % total != 0) throw InternalInconsistency("necklace sum not divisible by length");
    sum /= total;
    if (!mpz_fits_ulong_p(sum.get_mpz_t())) throw InputError("witt dimension exceeds 64 bits");
    return sum.get_ui();
}

}  // namespace gradedlie
