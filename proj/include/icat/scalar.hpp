#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "icat/error.hpp"

namespace icat {

/// Field tag: characteristic 0 means the rationals, otherwise the prime field F_p.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    constexpr bool is_rational() const { return p_ == 0; }
    constexpr std::uint64_t characteristic() const { return p_; }

    std::string name() const;

    friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); F_p values are integers in [0, p).
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Field f) : field_(f) {}
    Scalar(long v, Field f = {});
    Scalar(const mpq_class& v, Field f = {});

    /// Parses "n", "-n" or "p/q". Over F_p a denominator must be invertible.
    static Scalar parse(const std::string& text, Field f = {});

    Field field() const { return field_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    /// Adds a*b in place; the hot path of every matrix product.
    void add_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.v_ == b.v_;
    }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    void reduce();
    void check_field(const Scalar& o) const;

    mpq_class v_ = 0;
    Field field_{};
};

}  // namespace icat
