#ifndef FQG_POLY_HPP
#define FQG_POLY_HPP

// Dense univariate polynomials over a finite field and their factorization:
// squarefree decomposition, distinct-degree and Cantor-Zassenhaus
// equal-degree splitting (odd characteristic).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fqg/error.hpp"
#include "fqg/field.hpp"
#include "fqg/numeric.hpp"

namespace fqg {

// Coefficients are stored low degree first and kept trimmed. The field must
// outlive the polynomial.
template <FiniteField F>
class Polynomial {
public:
    using value_type = typename F::value_type;

    explicit Polynomial(const F& field) : field_(&field) {}
    Polynomial(const F& field, std::vector<value_type> coeffs)
        : field_(&field), coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(const F& field, value_type c) { return Polynomial(field, {std::move(c)}); }

    static Polynomial monomial(const F& field, value_type c, std::size_t deg) {
        std::vector<value_type> coeffs(deg + 1, field.zero());
        coeffs[deg] = std::move(c);
        return Polynomial(field, std::move(coeffs));
    }

    static Polynomial x(const F& field) { return monomial(field, field.one(), 1); }

    // Small integer coefficients, low degree first; convenient in tests.
    static Polynomial from_ints(const F& field, const std::vector<std::int64_t>& ints) {
        std::vector<value_type> coeffs;
        coeffs.reserve(ints.size());
        for (auto n : ints) coeffs.push_back(field.from_int(n));
        return Polynomial(field, std::move(coeffs));
    }

    const F& field() const noexcept { return *field_; }
    const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }

    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == field_->one(); }

    value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }
    const value_type& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

    value_type evaluate(const value_type& at) const {
        value_type result = field_->zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            result = field_->add(field_->mul(result, at), *it);
        }
        return result;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const auto& c = coeffs_[static_cast<std::size_t>(i)];
            if (field_->is_zero(c)) continue;
            if (!out.empty()) out += " + ";
            bool unit = c == field_->one();
            if (!unit || i == 0) out += element_to_string(*field_, c);
            if (i >= 1) out += (unit ? "x" : "*x");
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    // Degree first, then coefficients from the top down.
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                            b.coeffs_.rend());
    }

    void trim() {
        while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<value_type>& mutable_coeffs() noexcept { return coeffs_; }

private:
    const F* field_;
    std::vector<value_type> coeffs_;
};

template <FiniteField F>
Polynomial<F> operator+(const Polynomial<F>& a, const Polynomial<F>& b) {
    const F& f = a.field();
    std::vector<typename F::value_type> out(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Polynomial<F>(f, std::move(out));
}

template <FiniteField F>
Polynomial<F> operator-(const Polynomial<F>& a, const Polynomial<F>& b) {
    const F& f = a.field();
    std::vector<typename F::value_type> out(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return Polynomial<F>(f, std::move(out));
}

template <FiniteField F>
Polynomial<F> operator*(const Polynomial<F>& a, const Polynomial<F>& b) {
    const F& f = a.field();
    if (a.is_zero() || b.is_zero()) return Polynomial<F>(f);
    std::vector<typename F::value_type> out(a.coeffs().size() + b.coeffs().size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (f.is_zero(a.coeffs()[i])) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
        }
    }
    return Polynomial<F>(f, std::move(out));
}

template <FiniteField F>
Polynomial<F> scale(const Polynomial<F>& a, const typename F::value_type& c) {
    const F& f = a.field();
    std::vector<typename F::value_type> out;
    out.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) out.push_back(f.mul(x, c));
    return Polynomial<F>(f, std::move(out));
}

template <FiniteField F>
Polynomial<F> monic(const Polynomial<F>& a) {
    if (a.is_zero()) return a;
    return scale(a, a.field().inv(a.leading()));
}

template <FiniteField F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
    const F& f = a.field();
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial<F>(f), a};
    auto rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    const auto lead_inv = f.inv(b.leading());
    std::vector<typename F::value_type> quot(rem.size() - db, f.zero());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (f.is_zero(rem[i])) continue;
        auto c = f.mul(rem[i], lead_inv);
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
        }
    }
    rem.resize(db);
    return {Polynomial<F>(f, std::move(quot)), Polynomial<F>(f, std::move(rem))};
}

template <FiniteField F>
Polynomial<F> operator/(const Polynomial<F>& a, const Polynomial<F>& b) {
    return divmod(a, b).first;
}

template <FiniteField F>
Polynomial<F> operator%(const Polynomial<F>& a, const Polynomial<F>& b) {
    return divmod(a, b).second;
}

// Monic gcd; gcd(0, 0) = 0.
template <FiniteField F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
template <FiniteField F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>> extended_gcd(const Polynomial<F>& a,
                                                                    const Polynomial<F>& b) {
    const F& f = a.field();
    Polynomial<F> r0 = a, r1 = b;
    Polynomial<F> s0 = Polynomial<F>::constant(f, f.one()), s1(f);
    Polynomial<F> t0(f), t1 = Polynomial<F>::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto inv = f.inv(r0.leading());
    return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
template <FiniteField F>
Polynomial<F> inverse_mod(const Polynomial<F>& a, const Polynomial<F>& m) {
    auto [g, s, t] = extended_gcd(a % m, m);
    if (!g.is_one()) throw Error("inverse_mod: polynomials are not coprime");
    return s % m;
}

template <FiniteField F>
Polynomial<F> lcm(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<F>(a.field());
    return monic((a / gcd(a, b)) * b);
}

template <FiniteField F>
Polynomial<F> derivative(const Polynomial<F>& a) {
    const F& f = a.field();
    if (a.degree() < 1) return Polynomial<F>(f);
    std::vector<typename F::value_type> out(a.coeffs().size() - 1, f.zero());
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        out[i - 1] = f.mul(a.coeffs()[i], f.from_int(static_cast<std::int64_t>(i % f.characteristic())));
    }
    return Polynomial<F>(f, std::move(out));
}

// base^exp mod modulus, for exponents of any size.
template <FiniteField F>
Polynomial<F> pow_mod(const Polynomial<F>& base, const BigInt& exp, const Polynomial<F>& modulus) {
    const F& f = base.field();
    Polynomial<F> result = Polynomial<F>::constant(f, f.one()) % modulus;
    if (exp == 0) return result;
    Polynomial<F> b = base % modulus;
    const auto top = static_cast<std::size_t>(boost::multiprecision::msb(exp));
    for (std::size_t bit = top + 1; bit-- > 0;) {
        result = (result * result) % modulus;
        if (boost::multiprecision::bit_test(exp, static_cast<unsigned>(bit))) result = (result * b) % modulus;
    }
    return result;
}

template <FiniteField F>
Polynomial<F> pow_mod(const Polynomial<F>& base, std::uint64_t exp, const Polynomial<F>& modulus) {
    return pow_mod(base, BigInt(exp), modulus);
}

// x^(q^n) mod f by n successive q-th powers.
template <FiniteField F>
Polynomial<F> frobenius_power_of_x(const Polynomial<F>& f_mod, unsigned n) {
    const F& f = f_mod.field();
    auto h = Polynomial<F>::x(f) % f_mod;
    for (unsigned i = 0; i < n; ++i) h = pow_mod(h, f.size(), f_mod);
    return h;
}

// Rabin's test: f of degree n is irreducible iff x^(q^n) = x mod f and
// gcd(x^(q^(n/r)) - x, f) = 1 for every prime r dividing n.
template <FiniteField F>
bool is_irreducible(const Polynomial<F>& poly) {
    if (poly.degree() < 1) return false;
    if (poly.degree() == 1) return true;
    const F& f = poly.field();
    const auto g = monic(poly);
    const auto n = static_cast<unsigned>(g.degree());
    const auto x = Polynomial<F>::x(f);
    std::vector<unsigned> prime_divisors;
    for (unsigned r = 2, m = n; r <= m; ++r) {
        if (m % r != 0) continue;
        prime_divisors.push_back(r);
        while (m % r == 0) m /= r;
    }
    for (unsigned r : prime_divisors) {
        auto h = frobenius_power_of_x(g, n / r);
        if (!gcd(h - x, g).is_one()) return false;
    }
    return frobenius_power_of_x(g, n) == x % g;
}

template <FiniteField F>
struct FactorTerm {
    Polynomial<F> factor;  // monic irreducible
    unsigned multiplicity = 1;
};

namespace detail {

// a^(1/p) coefficientwise, for a polynomial in x^p.
template <FiniteField F>
Polynomial<F> pth_root(const Polynomial<F>& a) {
    const F& f = a.field();
    const auto p = f.characteristic();
    std::uint64_t root_exp = 1;  // c^(1/p) = c^(p^(k-1))
    for (unsigned i = 1; i < f.degree(); ++i) root_exp *= p;
    std::vector<typename F::value_type> out;
    for (std::size_t i = 0; i < a.coeffs().size(); i += p) out.push_back(f.pow(a.coeffs()[i], root_exp));
    return Polynomial<F>(f, std::move(out));
}

}  // namespace detail

// Monic f as a product of g_i^{m_i} with each g_i squarefree and pairwise coprime.
template <FiniteField F>
std::vector<FactorTerm<F>> squarefree_decomposition(const Polynomial<F>& poly) {
    const F& f = poly.field();
    std::vector<FactorTerm<F>> out;
    auto a = monic(poly);
    if (a.degree() < 1) return out;
    auto c = gcd(a, derivative(a));
    auto w = a / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        auto y = gcd(w, c);
        auto fac = w / y;
        if (fac.degree() > 0) out.push_back({monic(fac), i});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        const auto p = static_cast<unsigned>(f.characteristic());
        for (auto& term : squarefree_decomposition(detail::pth_root(c))) {
            out.push_back({std::move(term.factor), term.multiplicity * p});
        }
    }
    return out;
}

// Squarefree monic f split into (product of all irreducible factors of degree d, d).
template <FiniteField F>
std::vector<std::pair<Polynomial<F>, unsigned>> distinct_degree_factorization(const Polynomial<F>& poly) {
    const F& f = poly.field();
    std::vector<std::pair<Polynomial<F>, unsigned>> out;
    auto rest = monic(poly);
    const auto x = Polynomial<F>::x(f);
    auto h = x % rest;
    unsigned d = 0;
    while (rest.degree() >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = pow_mod(h, f.size(), rest);
        auto g = gcd(h - x, rest);
        if (!g.is_one()) {
            rest = rest / g;
            h = h % rest;
            out.emplace_back(std::move(g), d);
        }
    }
    if (rest.degree() > 0) {
        auto deg = static_cast<unsigned>(rest.degree());
        out.emplace_back(std::move(rest), deg);
    }
    return out;
}

// Splits a squarefree monic product of degree-d irreducibles. Odd q uses
// a^((q^d - 1)/2) - 1; q = 2^m uses the trace a + a^2 + ... + a^(2^(md - 1)).
template <FiniteField F>
std::vector<Polynomial<F>> equal_degree_factorization(const Polynomial<F>& poly, unsigned d, Rng& rng) {
    const F& f = poly.field();
    const int n = poly.degree();
    if (n <= static_cast<int>(d)) return {monic(poly)};
    const bool even = f.characteristic() == 2;
    const BigInt exponent = (boost::multiprecision::pow(BigInt(f.size()), d) - 1) / 2;
    const auto one = Polynomial<F>::constant(f, f.one());
    auto probe = [&](const Polynomial<F>& a) {
        if (!even) return pow_mod(a, exponent, poly) - one;
        auto term = a % poly;
        auto trace = term;
        for (unsigned i = 1; i < f.degree() * d; ++i) {
            term = (term * term) % poly;
            trace = trace + term;
        }
        return trace;
    };
    while (true) {
        std::vector<typename F::value_type> coeffs(static_cast<std::size_t>(n));
        for (auto& c : coeffs) c = f.random(rng);
        Polynomial<F> a(f, std::move(coeffs));
        if (a.degree() < 1) continue;
        auto g = gcd(a, poly);
        if (g.degree() < 1 || g.degree() == n) {
            g = gcd(probe(a), poly);
        }
        if (g.degree() >= 1 && g.degree() < n) {
            auto left = equal_degree_factorization(g, d, rng);
            auto right = equal_degree_factorization(poly / g, d, rng);
            left.insert(left.end(), std::make_move_iterator(right.begin()),
                        std::make_move_iterator(right.end()));
            return left;
        }
    }
}

// Complete factorization into monic irreducibles with multiplicities, sorted
// by (degree, coefficients). The product of the factors is monic(f).
template <FiniteField F>
std::vector<FactorTerm<F>> factor(const Polynomial<F>& poly, Rng& rng) {
    if (poly.is_zero()) throw Error("factor: zero polynomial");
    std::vector<FactorTerm<F>> out;
    for (const auto& sq : squarefree_decomposition(poly)) {
        for (const auto& [part, d] : distinct_degree_factorization(sq.factor)) {
            for (auto& irreducible : equal_degree_factorization(part, d, rng)) {
                out.push_back({monic(irreducible), sq.multiplicity});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorTerm<F>& a, const FactorTerm<F>& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return a.factor < b.factor;
    });
    return out;
}

template <FiniteField F>
std::vector<FactorTerm<F>> factor(const Polynomial<F>& poly, std::uint64_t seed = 0) {
    Rng rng(seed);
    return factor(poly, rng);
}

}  // namespace fqg

#endif  // FQG_POLY_HPP
