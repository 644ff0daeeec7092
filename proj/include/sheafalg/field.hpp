#pragma once

// Exact base fields: prime fields F_p and the rationals.
//
// A field object is a small value that carries whatever runtime data the
// arithmetic needs (the prime for F_p, nothing for Q). Elements are plain
// values of Field::value_type; every operation goes through the field object.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "sheafalg/error.hpp"

namespace sheafalg {

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, long long n) {
    typename F::value_type;
    { F::is_finite } -> std::convertible_to<bool>;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.add(a, a) } -> std::same_as<typename F::value_type>;
    { f.sub(a, a) } -> std::same_as<typename F::value_type>;
    { f.mul(a, a) } -> std::same_as<typename F::value_type>;
    { f.neg(a) } -> std::same_as<typename F::value_type>;
    { f.inv(a) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.from_int(n) } -> std::same_as<typename F::value_type>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.name() } -> std::convertible_to<std::string>;
};

template <class F>
concept FiniteField = Field<F> && F::is_finite && requires(const F& f, std::uint64_t i) {
    { f.order() } -> std::convertible_to<std::uint64_t>;
    { f.element(i) } -> std::same_as<typename F::value_type>;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class PrimeField {
  public:
    using value_type = std::uint32_t;
    static constexpr bool is_finite = true;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p) || p >= (1u << 16))
            throw InputError("F_p requires a prime p < 65536, got " + std::to_string(p));
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint64_t order() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((std::uint64_t{a} * b) % p_);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("inverse of zero in " + name());
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += p_;
        return static_cast<value_type>(t);
    }
    bool is_zero(value_type a) const { return a == 0; }
    value_type from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }
    // i-th element in the canonical enumeration 0, 1, ..., p-1.
    value_type element(std::uint64_t i) const { return static_cast<value_type>(i % p_); }
    std::uint64_t index(value_type a) const { return a; }

    std::string to_string(value_type a) const { return std::to_string(a); }
    std::string name() const { return "F_" + std::to_string(p_); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

  private:
    std::uint32_t p_;
};

class RationalField {
  public:
    using value_type = mpq_class;
    static constexpr bool is_finite = false;

    value_type zero() const { return mpq_class(0); }
    value_type one() const { return mpq_class(1); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (sgn(a) == 0) throw std::domain_error("inverse of zero in Q");
        return mpq_class(1) / a;
    }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    value_type from_int(long long n) const { return mpq_class(static_cast<long>(n)); }

    // Parses "n" or "n/d".
    value_type parse(const std::string& s) const {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
        if (s.find('/') != std::string::npos && sgn(q.get_den()) == 0)
            throw InputError("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    }
    // Always "num/den" so encodings are uniform.
    std::string to_string(const value_type& a) const {
        return a.get_num().get_str() + "/" + a.get_den().get_str();
    }
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace sheafalg
