#ifndef FQG_EXTENSION_FIELD_HPP
#define FQG_EXTENSION_FIELD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqg/error.hpp"
#include "fqg/field.hpp"
#include "fqg/numeric.hpp"
#include "fqg/poly.hpp"

namespace fqg {

// F_{p^k} = F_p[t] / (modulus). Elements are length-k coefficient vectors,
// low degree first. For k = 1 the modulus is t and elements are residues mod p.
class ExtensionField {
public:
    using value_type = std::vector<std::uint64_t>;

    // modulus: monic, degree k, low degree first (length k + 1). Irreducibility
    // is verified.
    ExtensionField(std::uint64_t p, std::vector<std::uint64_t> modulus)
        : base_(p), modulus_(std::move(modulus)) {
        if (modulus_.size() < 2 || modulus_.back() != 1) {
            throw Error("ExtensionField: modulus must be monic of degree >= 1");
        }
        for (auto c : modulus_) {
            if (c >= p) throw Error("ExtensionField: modulus coefficient out of range");
        }
        k_ = static_cast<unsigned>(modulus_.size() - 1);
        auto q = checked_power(p, k_);
        if (!q) throw Error("ExtensionField: p^k exceeds 2^63");
        q_ = *q;
        if (!is_irreducible(Polynomial<PrimeField>(base_, modulus_))) {
            throw Error("ExtensionField: modulus is reducible over F_" + std::to_string(p));
        }
    }

    std::uint64_t characteristic() const noexcept { return base_.characteristic(); }
    unsigned degree() const noexcept { return k_; }
    std::uint64_t size() const noexcept { return q_; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    const PrimeField& prime_field() const noexcept { return base_; }

    value_type zero() const { return value_type(k_, 0); }
    value_type one() const {
        value_type v(k_, 0);
        v[0] = 1;
        return v;
    }
    value_type from_int(std::int64_t n) const {
        value_type v(k_, 0);
        v[0] = base_.from_int(n);
        return v;
    }

    value_type add(const value_type& a, const value_type& b) const {
        value_type out(k_);
        for (unsigned i = 0; i < k_; ++i) out[i] = base_.add(a[i], b[i]);
        return out;
    }
    value_type sub(const value_type& a, const value_type& b) const {
        value_type out(k_);
        for (unsigned i = 0; i < k_; ++i) out[i] = base_.sub(a[i], b[i]);
        return out;
    }
    value_type neg(const value_type& a) const {
        value_type out(k_);
        for (unsigned i = 0; i < k_; ++i) out[i] = base_.neg(a[i]);
        return out;
    }

    value_type mul(const value_type& a, const value_type& b) const {
        if (k_ == 1) return {base_.mul(a[0], b[0])};
        std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < k_; ++j) {
                prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
            }
        }
        // Reduce with t^k = -(m_0 + ... + m_{k-1} t^{k-1}).
        for (std::size_t i = prod.size(); i-- > k_;) {
            const auto c = prod[i];
            if (c == 0) continue;
            for (unsigned j = 0; j < k_; ++j) {
                prod[i - k_ + j] = base_.sub(prod[i - k_ + j], base_.mul(c, modulus_[j]));
            }
        }
        prod.resize(k_);
        return prod;
    }

    value_type pow(value_type a, std::uint64_t e) const {
        value_type result = one();
        while (e > 0) {
            if (e & 1U) result = mul(result, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return result;
    }

    value_type inv(const value_type& a) const {
        if (is_zero(a)) throw Error("ExtensionField: inverse of zero");
        return pow(a, q_ - 2);
    }

    bool is_zero(const value_type& a) const {
        for (auto c : a) {
            if (c != 0) return false;
        }
        return true;
    }

    value_type random(Rng& rng) const {
        value_type v(k_);
        for (auto& c : v) c = base_.random(rng);
        return v;
    }

    std::vector<std::uint64_t> coefficients(const value_type& a) const { return a; }

    // The element t (a root of the modulus); for k = 1 this is 0.
    value_type generator() const {
        value_type v(k_, 0);
        if (k_ > 1) {
            v[1] = 1;
        } else {
            v[0] = base_.neg(modulus_[0]);
        }
        return v;
    }

    friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
        return a.base_ == b.base_ && a.modulus_ == b.modulus_;
    }

private:
    PrimeField base_;
    std::vector<std::uint64_t> modulus_;
    unsigned k_ = 1;
    std::uint64_t q_ = 0;
};

// F_{p^k} with a monic irreducible modulus found by seeded random search.
// Requires p prime, p >= 5 and p^k < 2^63.
inline ExtensionField make_field(std::uint64_t p, unsigned k, std::uint64_t seed = 0) {
    if (!is_prime(p)) throw Error("make_field: " + std::to_string(p) + " is not prime");
    if (p < 5) throw Error("make_field: characteristic must be at least 5");
    if (k == 0) throw Error("make_field: extension degree must be positive");
    if (!checked_power(p, k)) {
        throw Error("make_field: " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^63");
    }
    if (k == 1) return ExtensionField(p, {0, 1});

    constexpr int kMaxAttempts = 100000;
    PrimeField base(p);
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<std::uint64_t> coeffs(k + 1);
        for (unsigned i = 0; i < k; ++i) coeffs[i] = base.random(rng);
        coeffs[k] = 1;
        if (coeffs[0] == 0) continue;
        if (is_irreducible(Polynomial<PrimeField>(base, coeffs))) return ExtensionField(p, coeffs);
    }
    throw InvariantError("make_field: no irreducible polynomial found");
}

}  // namespace fqg

#endif  // FQG_EXTENSION_FIELD_HPP
