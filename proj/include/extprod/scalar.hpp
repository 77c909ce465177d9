/*
 * Copyright 2026 The extprod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @brief Coefficient domains for all kernels.
 *
 * Every evaluator in this library is generic over a commutative ring. Four
 * concrete rings are supported: arbitrary-precision integers, exact
 * rationals, integers modulo a prime, and complex doubles. The exact kinds
 * compare exactly; complex values are only ever compared with tolerances.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include "extprod/errors.hpp"

namespace extprod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

/// Dynamic tag for the scalar kind of a value loaded from a file.
enum class ScalarKind { BigIntKind, RationalKind, ModPKind, ComplexKind };

/// Default prime modulus for ModP inputs that do not declare one.
inline constexpr std::uint64_t kDefaultModulus = 1'000'000'007ULL;

/// Largest accepted modulus; keeps a+b < 2^64 and a*b within __int128.
inline constexpr std::uint64_t kMaxModulus = (1ULL << 62);

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, p);
        base = mulmod_u64(base, base, p);
        exp >>= 1;
    }
    return acc;
}

} // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs (exact below 2^64).
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/**
 * @brief Residue class modulo a prime p, closed in [0, p).
 *
 * A default-constructed value is an "unbound" small integer (modulus not yet
 * known); it binds to the modulus of the other operand on first use. This
 * makes zero-initialized containers behave as ring zeros without threading a
 * modulus through every construction site.
 */
class ModP {
  public:
    ModP() = default;

    ModP(std::uint64_t value, std::uint64_t modulus) : v_(value), p_(modulus) {
        if (p_) v_ %= p_;
    }

    /// Unbound small literal (used for generic 0/1 constants).
    explicit ModP(std::uint64_t literal) : v_(literal), p_(0) {}

    static ModP from_int(std::int64_t x, std::uint64_t p) {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        return ModP(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool bound() const { return p_ != 0; }

    friend ModP operator+(const ModP& a, const ModP& b) {
        auto [x, y, p] = align(a, b);
        if (!p) return ModP(x + y, 0);
        std::uint64_t s = x + y;
        if (s >= p) s -= p;
        return ModP(s, p);
    }

    friend ModP operator-(const ModP& a, const ModP& b) {
        auto [x, y, p] = align(a, b);
        if (!p) {
            if (y > x) throw Error("ModP: unbound subtraction underflow");
            return ModP(x - y, 0);
        }
        return ModP(x >= y ? x - y : x + p - y, p);
    }

    friend ModP operator*(const ModP& a, const ModP& b) {
        auto [x, y, p] = align(a, b);
        if (!p) return ModP(x * y, 0);
        return ModP(detail::mulmod_u64(x, y, p), p);
    }

    ModP operator-() const {
        if (!p_) {
            if (v_) throw Error("ModP: cannot negate unbound nonzero literal");
            return *this;
        }
        return ModP(v_ ? p_ - v_ : 0, p_);
    }

    ModP& operator+=(const ModP& o) { return *this = *this + o; }
    ModP& operator-=(const ModP& o) { return *this = *this - o; }
    ModP& operator*=(const ModP& o) { return *this = *this * o; }

    /// Multiplicative inverse (extended Euclid); p must be prime.
    ModP inverse() const {
        if (!p_ || v_ == 0) throw Error("ModP: inverse of zero");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (r != 1) throw Error("ModP: value not invertible (composite modulus?)");
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return ModP(static_cast<std::uint64_t>(t), p_);
    }

    friend ModP operator/(const ModP& a, const ModP& b) {
        if (!b.bound()) {
            if (b.v_ == 1) return a;
            throw Error("ModP: division by unbound value");
        }
        return a * b.inverse();
    }

    friend bool operator==(const ModP& a, const ModP& b) {
        if (a.v_ == 0 && b.v_ == 0) return true;
        auto [x, y, p] = align(a, b);
        (void)p;
        return x == y;
    }
    friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

  private:
    // Reduce both operands into a common modulus (0 if both unbound).
    static std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> align(const ModP& a, const ModP& b) {
        if (a.p_ && b.p_) {
            if (a.p_ != b.p_) throw Error("ModP: mixed moduli");
            return {a.v_, b.v_, a.p_};
        }
        if (a.p_) return {a.v_, b.v_ % a.p_, a.p_};
        if (b.p_) return {a.v_ % b.p_, b.v_, b.p_};
        return {a.v_, b.v_, 0};
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

/**
 * @brief Static properties and generic helpers for each scalar kind.
 *
 * Generic kernels obtain constants through zero_like/one_like so that a
 * modulus (when there is one) propagates from the input values.
 */
template <typename R>
struct ring_traits;

template <>
struct ring_traits<BigInt> {
    static constexpr ScalarKind kind = ScalarKind::BigIntKind;
    static constexpr bool is_exact = true;
    static constexpr bool is_field = false;
    static BigInt zero_like(const BigInt&) { return BigInt(0); }
    static BigInt one_like(const BigInt&) { return BigInt(1); }
    static bool is_zero(const BigInt& x) { return x.is_zero(); }
    // Quotient is exact by construction everywhere this is called.
    static BigInt div_exact(const BigInt& a, const BigInt& b) { return a / b; }
    static std::string to_string(const BigInt& x) { return x.str(); }
};

template <>
struct ring_traits<Rational> {
    static constexpr ScalarKind kind = ScalarKind::RationalKind;
    static constexpr bool is_exact = true;
    static constexpr bool is_field = true;
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational div_exact(const Rational& a, const Rational& b) { return a / b; }
    static std::string to_string(const Rational& x) {
        if (denominator(x) == 1) return numerator(x).str();
        return numerator(x).str() + "/" + denominator(x).str();
    }
};

template <>
struct ring_traits<ModP> {
    static constexpr ScalarKind kind = ScalarKind::ModPKind;
    static constexpr bool is_exact = true;
    static constexpr bool is_field = true;
    static ModP zero_like(const ModP& x) { return ModP(0, x.modulus()); }
    static ModP one_like(const ModP& x) { return x.bound() ? ModP(1, x.modulus()) : ModP(std::uint64_t(1)); }
    static bool is_zero(const ModP& x) { return x.value() == 0; }
    static ModP div_exact(const ModP& a, const ModP& b) { return a / b; }
    static std::string to_string(const ModP& x) { return std::to_string(x.value()); }
};

template <>
struct ring_traits<Cplx> {
    static constexpr ScalarKind kind = ScalarKind::ComplexKind;
    static constexpr bool is_exact = false;
    static constexpr bool is_field = true;
    static Cplx zero_like(const Cplx&) { return Cplx(0.0, 0.0); }
    static Cplx one_like(const Cplx&) { return Cplx(1.0, 0.0); }
    static bool is_zero(const Cplx& x) { return x.real() == 0.0 && x.imag() == 0.0; }
    static Cplx div_exact(const Cplx& a, const Cplx& b) { return a / b; }
    static std::string to_string(const Cplx& x) {
        std::ostringstream os;
        os.precision(17);
        os << x.real() << " " << x.imag();
        return os.str();
    }
};

inline const char* scalar_kind_name(ScalarKind k) {
    switch (k) {
        case ScalarKind::BigIntKind: return "bigint";
        case ScalarKind::RationalKind: return "rational";
        case ScalarKind::ModPKind: return "modp";
        case ScalarKind::ComplexKind: return "complex";
    }
    return "?";
}

} // namespace extprod
