#ifndef FQG_FIELD_HPP
#define FQG_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fqg/error.hpp"
#include "fqg/numeric.hpp"

namespace fqg {

using Rng = std::mt19937_64;

// Interface shared by PrimeField and ExtensionField. Elements are plain values;
// all arithmetic goes through the field object.
template <class F>
concept FiniteField = requires(const F& f, const typename F::value_type& a, Rng& rng,
                               std::uint64_t e, std::int64_t n) {
    typename F::value_type;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.degree() } -> std::convertible_to<unsigned>;
    { f.size() } -> std::convertible_to<std::uint64_t>;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(n) } -> std::same_as<typename F::value_type>;
    { f.add(a, a) } -> std::same_as<typename F::value_type>;
    { f.sub(a, a) } -> std::same_as<typename F::value_type>;
    { f.neg(a) } -> std::same_as<typename F::value_type>;
    { f.mul(a, a) } -> std::same_as<typename F::value_type>;
    { f.inv(a) } -> std::same_as<typename F::value_type>;
    { f.pow(a, e) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.random(rng) } -> std::same_as<typename F::value_type>;
    { f.coefficients(a) } -> std::same_as<std::vector<std::uint64_t>>;
};

class PrimeField {
public:
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw Error("PrimeField: " + std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 63U)) throw Error("PrimeField: characteristic must be below 2^63");
    }

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return 1; }
    std::uint64_t size() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type from_int(std::int64_t n) const noexcept {
        const auto m = static_cast<std::int64_t>(p_);
        auto r = n % m;
        if (r < 0) r += m;
        return static_cast<std::uint64_t>(r);
    }

    value_type add(value_type a, value_type b) const noexcept {
        return a >= p_ - b ? a - (p_ - b) : a + b;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept { return mul_mod(a, b, p_); }
    value_type pow(value_type a, std::uint64_t e) const noexcept { return pow_mod(a, e, p_); }
    value_type inv(value_type a) const {
        if (a == 0) throw Error("PrimeField: inverse of zero");
        return pow_mod(a, p_ - 2, p_);
    }
    bool is_zero(value_type a) const noexcept { return a == 0; }

    value_type random(Rng& rng) const {
        return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng);
    }

    std::vector<std::uint64_t> coefficients(value_type a) const { return {a}; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

template <FiniteField F>
std::string element_to_string(const F& field, const typename F::value_type& a) {
    auto coeffs = field.coefficients(a);
    if (coeffs.size() == 1) return std::to_string(coeffs.front());
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(coeffs[i]);
    }
    return out + "]";
}

}  // namespace fqg

#endif  // FQG_FIELD_HPP
