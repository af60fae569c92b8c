#include "icat/scalar.hpp"

#include <cctype>

namespace icat {

std::string_view error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NoFactorization: return "NoFactorization";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::ComonoidMismatch: return "ComonoidMismatch";
        case ErrorKind::NotComonoidMap: return "NotComonoidMap";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::GodementMismatch: return "GodementMismatch";
        case ErrorKind::IdentityMismatch: return "IdentityMismatch";
        case ErrorKind::NotPhiImage: return "NotPhiImage";
        case ErrorKind::NotBiNatural: return "NotBiNatural";
        case ErrorKind::NotTAlgebra: return "NotTAlgebra";
        case ErrorKind::NotIsomorphism: return "NotIsomorphism";
        case ErrorKind::NotCentral: return "NotCentral";
        case ErrorKind::NotConvolutionInvertible: return "NotConvolutionInvertible";
        case ErrorKind::NotGalois: return "NotGalois";
        case ErrorKind::NotGrouplike: return "NotGrouplike";
        case ErrorKind::LawViolation: return "LawViolation";
        case ErrorKind::Mismatch: return "Mismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnresolvedReference: return "UnresolvedReference";
        case ErrorKind::BadScalar: return "BadScalar";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
    }
    return "Error";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::BadScalar, "field characteristic " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const {
    return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar::Scalar(long v, Field f) : v_(v), field_(f) { reduce(); }

Scalar::Scalar(const mpq_class& v, Field f) : v_(v), field_(f) {
    v_.canonicalize();
    reduce();
}

void Scalar::reduce() {
    if (field_.is_rational()) return;
    mpz_class p = static_cast<unsigned long>(field_.characteristic());
    mpz_class num = v_.get_num();
    mpz_class den = v_.get_den();
    if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw Error(ErrorKind::DivisionByZero, "denominator not invertible in " + field_.name());
        num *= inv;
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    v_ = mpq_class(r);
}

void Scalar::check_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::parse(const std::string& text, Field f) {
    auto bad = [&] { return Error(ErrorKind::BadScalar, "'" + text + "'"); };
    if (text.empty()) throw bad();
    std::size_t slash = text.find('/');
    auto valid_int = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw bad();
    mpq_class q(n, d);
    q.canonicalize();
    try {
        return Scalar(q, f);
    } catch (const Error&) {
        throw bad();
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.v_ = -r.v_;
    r.reduce();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_field(o);
    v_ += o.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_field(o);
    v_ -= o.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_field(o);
    v_ *= o.v_;
    reduce();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    Scalar r = *this;
    r.v_ = 1 / r.v_;
    r.reduce();
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_field(o);
    return *this *= o.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    check_field(a);
    check_field(b);
    if (field_.is_rational()) {
        if (a.v_.get_den() == 1 && b.v_.get_den() == 1 && v_.get_den() == 1) {
            mpz_addmul(v_.get_num_mpz_t(), a.v_.get_num_mpz_t(), b.v_.get_num_mpz_t());
            return;
        }
        v_ += a.v_ * b.v_;
        return;
    }
    v_ += a.v_ * b.v_;
    reduce();
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace icat
