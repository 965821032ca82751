#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tannaka::exact {

class Scalar;

/// Ground field configuration: either the rationals or Z/p for a prime
/// p < 2^31.
class Field {
public:
    constexpr Field() = default;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return modulus_ == 0; }
    std::uint64_t modulus() const { return modulus_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;

    /// Parses "p/q", "p" or "r mod p". Rational literals are reduced into
    /// Z/p when this is a prime field.
    Scalar parse(std::string_view text) const;

    /// Brings an integer-valued or rational scalar into this field.
    Scalar coerce(const Scalar& s) const;

    /// "Q" or "Fp:<p>", the spelling used by the --field flag.
    std::string name() const;
    static Field from_name(std::string_view name);

    bool operator==(const Field&) const = default;

private:
    explicit constexpr Field(std::uint64_t p) : modulus_(p) {}
    std::uint64_t modulus_ = 0;
    friend class Scalar;
};

/// An exact field element. Rationals stay in lowest terms with a positive
/// denominator; values that fit in 64 bits avoid GMP entirely.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v);  // NOLINT: integer literals are scalars
    Scalar(int v) : Scalar(static_cast<long long>(v)) {}
    Scalar(long long num, long long den);

    static Scalar residue(std::uint64_t value, std::uint64_t modulus);
    static Scalar from_mpq(const mpq_class& q);

    /// Parses "p/q", "p" (rationals, any size) or "r mod p".
    static Scalar parse(std::string_view text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;
    bool is_residue() const { return kind_ == Kind::Residue; }
    /// p for residues, 0 for rationals.
    std::uint64_t modulus() const { return kind_ == Kind::Residue ? static_cast<std::uint64_t>(b_) : 0; }

    /// Rational value (throws FieldMismatch for residues).
    mpq_class to_mpq() const;
    /// Canonical representative in [0, p) (throws for rationals).
    std::uint64_t residue_value() const;

    std::string to_string() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Size used by max-norm residues: |x| for rationals, the canonical
    /// representative for residues.
    Scalar magnitude() const;
    /// Total order on magnitudes of scalars of one field.
    static bool less_magnitude(const Scalar& a, const Scalar& b);

private:
    enum class Kind : std::uint8_t { Small, Big, Residue };

    // Small: a_ / b_ with b_ > 0. Residue: a_ mod b_.
    Kind kind_ = Kind::Small;
    std::int64_t a_ = 0;
    std::int64_t b_ = 1;
    std::shared_ptr<const mpq_class> big_;

    static Scalar normalized(__int128 num, __int128 den);
    static Scalar demote(mpq_class q);
    friend class Field;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace tannaka::exact
