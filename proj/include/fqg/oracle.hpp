#ifndef FQG_ORACLE_HPP
#define FQG_ORACLE_HPP

// Brute-force Wedderburn decomposition of F_qG. Primitive central idempotents
// are found by splitting the center Z(F_qG) (spanned by the class sums) with
// factored minimal polynomials; each block e·F_qG then has dimension
// D = rank{e·g : g ∈ G} = d·n², where d = dim e·Z. No character theory is used.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fqg/error.hpp"
#include "fqg/ffield.hpp"
#include "fqg/numeric.hpp"
#include "fqg/perm.hpp"
#include "fqg/wedder.hpp"

namespace fqg {

template <FiniteField F>
struct AlgebraElement {
    const FiniteGroup* group = nullptr;
    Vec<F> coeffs;  // indexed by position in group->elements()

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.group == b.group && a.coeffs == b.coeffs;
    }
};

// The regular algebra F G with the convolution product.
template <FiniteField F>
class GroupAlgebra {
public:
    GroupAlgebra(const FiniteGroup& group, const F& field) : group_(&group), field_(&field) {}

    const FiniteGroup& group() const noexcept { return *group_; }
    const F& field() const noexcept { return *field_; }
    std::size_t dimension() const noexcept { return group_->order(); }

    AlgebraElement<F> zero() const { return {group_, Vec<F>(dimension(), field_->zero())}; }

    AlgebraElement<F> basis(std::size_t element_index) const {
        auto out = zero();
        out.coeffs[element_index] = field_->one();
        return out;
    }

    AlgebraElement<F> one() const { return basis(group_->identity_index()); }

    AlgebraElement<F> class_sum(std::size_t class_index) const {
        auto out = zero();
        for (auto m : group_->classes().at(class_index).members) out.coeffs[m] = field_->one();
        return out;
    }

    // Σ_{g ∈ G} g.
    AlgebraElement<F> all_ones() const { return {group_, Vec<F>(dimension(), field_->one())}; }

    AlgebraElement<F> multiply(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const {
        check(a);
        check(b);
        const F& f = *field_;
        auto out = zero();
        const std::size_t n = dimension();
        std::vector<std::size_t> support_b;
        for (std::size_t x = 0; x < n; ++x) {
            if (!f.is_zero(b.coeffs[x])) support_b.push_back(x);
        }
        for (std::size_t h = 0; h < n; ++h) {
            if (f.is_zero(a.coeffs[h])) continue;
            for (auto x : support_b) {
                auto& slot = out.coeffs[group_->multiply(h, x)];
                slot = f.add(slot, f.mul(a.coeffs[h], b.coeffs[x]));
            }
        }
        return out;
    }

    AlgebraElement<F> add(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const {
        check(a);
        check(b);
        auto out = zero();
        for (std::size_t i = 0; i < dimension(); ++i) out.coeffs[i] = field_->add(a.coeffs[i], b.coeffs[i]);
        return out;
    }

    AlgebraElement<F> scale(const AlgebraElement<F>& a, const typename F::value_type& c) const {
        check(a);
        auto out = zero();
        for (std::size_t i = 0; i < dimension(); ++i) out.coeffs[i] = field_->mul(a.coeffs[i], c);
        return out;
    }

    bool commutes(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const {
        return multiply(a, b) == multiply(b, a);
    }

    // Dimension of the right ideal a·FG, as the rank of {a·g : g ∈ G}.
    std::size_t right_ideal_dimension(const AlgebraElement<F>& a) const {
        check(a);
        const std::size_t n = dimension();
        Matrix<F> m(*field_, n, n);
        for (std::size_t g = 0; g < n; ++g) {
            const auto g_inv = group_->inverse(g);
            for (std::size_t x = 0; x < n; ++x) m(g, x) = a.coeffs[group_->multiply(x, g_inv)];
        }
        return rank(std::move(m));
    }

private:
    void check(const AlgebraElement<F>& a) const {
        if (a.group != group_ || a.coeffs.size() != dimension()) {
            throw Error("GroupAlgebra: element belongs to a different group algebra");
        }
    }

    const FiniteGroup* group_;
    const F* field_;
};

template <FiniteField F>
std::vector<AlgebraElement<F>> center_basis(const GroupAlgebra<F>& algebra) {
    std::vector<AlgebraElement<F>> out;
    for (std::size_t c = 0; c < algebra.group().class_count(); ++c) out.push_back(algebra.class_sum(c));
    return out;
}

// Z(FG) in the class-sum basis, multiplied through integer structure
// constants: C_i C_j = Σ_k a_ijk C_k with a_ijk = #{x ∈ C_i : x⁻¹ z_k ∈ C_j}.
template <FiniteField F>
class CenterAlgebra {
public:
    CenterAlgebra(const FiniteGroup& group, const F& field) : group_(&group), field_(&field) {
        const std::size_t r = group.class_count();
        constants_.assign(r * r * r, field.zero());
        std::vector<std::int64_t> counts(r * r * r, 0);
        for (std::size_t k = 0; k < r; ++k) {
            const auto z = group.classes()[k].representative_index;
            for (std::size_t i = 0; i < r; ++i) {
                for (auto x : group.classes()[i].members) {
                    const auto j = group.class_of(group.multiply(group.inverse(x), z));
                    ++counts[(i * r + j) * r + k];
                }
            }
        }
        for (std::size_t t = 0; t < counts.size(); ++t) constants_[t] = field.from_int(counts[t]);
    }

    const FiniteGroup& group() const noexcept { return *group_; }
    const F& field() const noexcept { return *field_; }
    std::size_t dimension() const noexcept { return group_->class_count(); }

    Vec<F> zero() const { return Vec<F>(dimension(), field_->zero()); }
    Vec<F> basis(std::size_t c) const {
        auto v = zero();
        v[c] = field_->one();
        return v;
    }
    Vec<F> one() const { return basis(group_->class_of(group_->identity_index())); }

    Vec<F> multiply(const Vec<F>& a, const Vec<F>& b) const {
        const F& f = *field_;
        const std::size_t r = dimension();
        auto out = zero();
        for (std::size_t i = 0; i < r; ++i) {
            if (f.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < r; ++j) {
                if (f.is_zero(b[j])) continue;
                const auto ab = f.mul(a[i], b[j]);
                for (std::size_t k = 0; k < r; ++k) {
                    const auto& c = constants_[(i * r + j) * r + k];
                    if (!f.is_zero(c)) out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        return out;
    }

    Vec<F> add(const Vec<F>& a, const Vec<F>& b) const {
        auto out = zero();
        for (std::size_t i = 0; i < dimension(); ++i) out[i] = field_->add(a[i], b[i]);
        return out;
    }

    Vec<F> scale(const Vec<F>& a, const typename F::value_type& c) const {
        auto out = zero();
        for (std::size_t i = 0; i < dimension(); ++i) out[i] = field_->mul(a[i], c);
        return out;
    }

    Vec<F> power(Vec<F> a, std::uint64_t e) const {
        Vec<F> result = one();
        while (e > 0) {
            if (e & 1U) result = multiply(result, a);
            a = multiply(a, a);
            e >>= 1U;
        }
        return result;
    }

    // poly(z) by Horner's rule.
    Vec<F> evaluate(const Polynomial<F>& poly, const Vec<F>& z) const {
        auto out = zero();
        for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) {
            out = add(multiply(out, z), scale(one(), *it));
        }
        return out;
    }

    // The class function with the given class coordinates, as an element of FG.
    AlgebraElement<F> embed(const Vec<F>& v) const {
        AlgebraElement<F> out{group_, Vec<F>(group_->order(), field_->zero())};
        for (std::size_t g = 0; g < group_->order(); ++g) out.coeffs[g] = v[group_->class_of(g)];
        return out;
    }

    // Basis of e·Z, as rows of the reduced echelon form of {e·C_j}.
    std::vector<Vec<F>> ideal_basis(const Vec<F>& e) const {
        std::vector<Vec<F>> rows;
        for (std::size_t c = 0; c < dimension(); ++c) rows.push_back(multiply(e, basis(c)));
        auto reduced = row_reduce(Matrix<F>::from_rows(*field_, rows));
        std::vector<Vec<F>> out;
        for (std::size_t r = 0; r < reduced.rank(); ++r) out.push_back(reduced.matrix.row(r));
        return out;
    }

private:
    const FiniteGroup* group_;
    const F* field_;
    std::vector<typename F::value_type> constants_;
};

template <FiniteField F>
struct CentralSplit {
    std::vector<AlgebraElement<F>> idempotents;
    std::vector<Vec<F>> center_idempotents;  // same idempotents in class-sum coordinates
    std::vector<std::size_t> block_dims;     // D_i
    std::vector<std::size_t> center_dims;    // d_i
    std::vector<std::size_t> matrix_sizes;   // n_i

    std::vector<Component> components() const {
        std::vector<Component> out;
        for (std::size_t i = 0; i < matrix_sizes.size(); ++i) out.push_back({matrix_sizes[i], center_dims[i]});
        canonicalize(out);
        return out;
    }
};

namespace detail {

// Kernel of x ↦ x^q - x on e·Z, the subalgebra fixed by Frobenius. Its
// dimension is the number of simple factors of e·Z. Returned as elements of Z.
template <FiniteField F>
std::vector<Vec<F>> frobenius_fixed_subalgebra(const CenterAlgebra<F>& center, const Vec<F>& e) {
    const F& f = center.field();
    const auto basis = center.ideal_basis(e);
    const std::size_t r = center.dimension();
    Matrix<F> m(f, r, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto image = center.power(basis[i], f.size());
        for (std::size_t k = 0; k < r; ++k) m(k, i) = f.sub(image[k], basis[i][k]);
    }
    std::vector<Vec<F>> out;
    for (const auto& c : kernel(m)) {
        auto x = center.zero();
        for (std::size_t i = 0; i < basis.size(); ++i) x = center.add(x, center.scale(basis[i], c[i]));
        out.push_back(std::move(x));
    }
    return out;
}

template <FiniteField F>
bool proportional(const F& f, const Vec<F>& a, const Vec<F>& b) {
    // a = λ b for some λ
    std::size_t pivot = 0;
    while (pivot < b.size() && f.is_zero(b[pivot])) ++pivot;
    if (pivot == b.size()) return true;
    const auto lambda = f.mul(a[pivot], f.inv(b[pivot]));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != f.mul(lambda, b[i])) return false;
    }
    return true;
}

template <FiniteField F>
struct Block {
    Vec<F> idempotent;
    bool is_field = false;
};

// Splits every uncertified block by the factors of the minimal polynomial of z on it.
template <FiniteField F>
std::vector<Block<F>> refine(const CenterAlgebra<F>& center, const std::vector<Block<F>>& blocks,
                             const Vec<F>& z, Rng& rng) {
    const F& f = center.field();
    std::vector<Block<F>> out;
    for (const auto& block : blocks) {
        if (block.is_field) {
            out.push_back(block);
            continue;
        }
        const auto& e = block.idempotent;
        auto m = krylov_minpoly(f, [&](const Vec<F>& v) { return center.multiply(z, v); }, e);
        auto factors = factor(m, rng);
        for (const auto& term : factors) {
            if (term.multiplicity != 1) {
                throw InvariantError("split_center: nilpotent element in the center (not semisimple)");
            }
        }
        if (factors.size() <= 1) {
            out.push_back(block);
            continue;
        }
        for (const auto& term : factors) {
            auto cofactor = m / term.factor;
            auto crt = (cofactor * inverse_mod(cofactor, term.factor)) % m;
            out.push_back({center.multiply(e, center.evaluate(crt, z)), false});
        }
    }
    return out;
}

template <FiniteField F>
bool certify_all(const CenterAlgebra<F>& center, std::vector<Block<F>>& blocks) {
    bool all = true;
    for (auto& block : blocks) {
        if (!block.is_field) block.is_field = frobenius_fixed_subalgebra(center, block.idempotent).size() == 1;
        all = all && block.is_field;
    }
    return all;
}

}  // namespace detail

// Primitive central idempotents of FG and the (n_i, d_i) of each block.
// The class sums are tried first, then seeded random central elements; any
// block still not a field is split by a non-scalar Frobenius-fixed element.
template <FiniteField F>
CentralSplit<F> split_center(const FiniteGroup& group, const F& field, std::uint64_t seed = 0) {
    if (group.order() % field.characteristic() == 0) throw ModularCaseError(field.characteristic(), group.order());
    constexpr int kRandomRounds = 8;
    Rng rng(seed);
    CenterAlgebra<F> center(group, field);
    std::vector<detail::Block<F>> blocks{{center.one(), false}};

    bool done = detail::certify_all(center, blocks);
    for (std::size_t c = 0; c < center.dimension() && !done; ++c) {
        blocks = detail::refine(center, blocks, center.basis(c), rng);
        done = detail::certify_all(center, blocks);
    }
    for (int round = 0; round < kRandomRounds && !done; ++round) {
        auto z = center.zero();
        for (auto& x : z) x = field.random(rng);
        blocks = detail::refine(center, blocks, z, rng);
        done = detail::certify_all(center, blocks);
    }
    for (std::size_t guard = 0; !done; ++guard) {
        if (guard > center.dimension()) throw InvariantError("split_center: blocks failed to stabilize");
        std::vector<detail::Block<F>> next;
        for (const auto& block : blocks) {
            if (block.is_field) {
                next.push_back(block);
                continue;
            }
            const auto fixed = detail::frobenius_fixed_subalgebra(center, block.idempotent);
            const Vec<F>* splitter = nullptr;
            for (const auto& x : fixed) {
                if (!detail::proportional(field, x, block.idempotent)) {
                    splitter = &x;
                    break;
                }
            }
            if (splitter == nullptr) throw InvariantError("split_center: no splitting element found");
            auto parts = detail::refine(center, {block}, *splitter, rng);
            next.insert(next.end(), parts.begin(), parts.end());
        }
        blocks = std::move(next);
        done = detail::certify_all(center, blocks);
    }

    GroupAlgebra<F> algebra(group, field);
    CentralSplit<F> split;
    for (const auto& block : blocks) {
        auto e = center.embed(block.idempotent);
        const std::size_t block_dim = algebra.right_ideal_dimension(e);
        const std::size_t center_dim = center.ideal_basis(block.idempotent).size();
        if (center_dim == 0 || block_dim % center_dim != 0) {
            throw InvariantError("split_center: block dimension not a multiple of its center degree");
        }
        const std::size_t n = isqrt(block_dim / center_dim);
        if (n * n * center_dim != block_dim) {
            throw InvariantError("split_center: block dimension / center degree is not a square");
        }
        split.idempotents.push_back(std::move(e));
        split.center_idempotents.push_back(block.idempotent);
        split.block_dims.push_back(block_dim);
        split.center_dims.push_back(center_dim);
        split.matrix_sizes.push_back(n);
    }
    return split;
}

// Re-checks every CentralSplit invariant by explicit multiplication and rank
// computation: e_i² = e_i, e_i e_j = 0, Σ e_i = 1, each e_i commutes with the
// generators, D_i = rank{e_i g}, Σ D_i = |G| and D_i = d_i n_i².
template <FiniteField F>
bool verify_split(const FiniteGroup& group, const F& field, const CentralSplit<F>& split) {
    const std::size_t count = split.idempotents.size();
    if (split.block_dims.size() != count || split.center_dims.size() != count ||
        split.matrix_sizes.size() != count || split.center_idempotents.size() != count || count == 0) {
        return false;
    }
    GroupAlgebra<F> algebra(group, field);
    CenterAlgebra<F> center(group, field);
    try {
        auto sum = algebra.zero();
        std::size_t total = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const auto& e = split.idempotents[i];
            if (algebra.multiply(e, e) != e) return false;
            for (std::size_t j = i + 1; j < count; ++j) {
                if (algebra.multiply(e, split.idempotents[j]) != algebra.zero()) return false;
            }
            for (auto g : group.generator_indices()) {
                if (!algebra.commutes(e, algebra.basis(g))) return false;
            }
            if (center.embed(split.center_idempotents[i]) != e) return false;
            sum = algebra.add(sum, e);
            const auto block_dim = algebra.right_ideal_dimension(e);
            if (block_dim != split.block_dims[i]) return false;
            if (center.ideal_basis(split.center_idempotents[i]).size() != split.center_dims[i]) return false;
            const auto n = split.matrix_sizes[i];
            if (split.center_dims[i] * n * n != block_dim) return false;
            total += block_dim;
        }
        return sum == algebra.one() && total == group.order();
    } catch (const Error&) {
        return false;
    }
}

struct OracleResult {
    std::vector<Component> components;
    bool verified = false;
};

template <FiniteField F>
OracleResult run_oracle_over(const FiniteGroup& group, const F& field, std::uint64_t seed, bool verify) {
    auto split = split_center(group, field, seed);
    OracleResult result{split.components(), false};
    if (verify) result.verified = verify_split(group, field, split);
    return result;
}

// Oracle over F_{p^k}: the prime field directly for k = 1, otherwise an
// extension built with make_field(p, k, seed).
inline OracleResult run_oracle(const FiniteGroup& group, std::uint64_t p, unsigned k, std::uint64_t seed = 0,
                               bool verify = true) {
    if (group.order() % p == 0) throw ModularCaseError(p, group.order());
    if (k == 1) return run_oracle_over(group, PrimeField(p), seed, verify);
    const auto field = make_field(p, k, seed);
    return run_oracle_over(group, field, seed, verify);
}

}  // namespace fqg

#endif  // FQG_ORACLE_HPP
