#include "tannaka/exact/scalar.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "tannaka/errors.hpp"

namespace tannaka::exact {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_small(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    text = trim(text);
    std::string digits(text);
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    bool ok = !digits.empty();
    for (std::size_t i = 0; i < digits.size(); ++i) {
        char c = digits[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && digits.size() > 1)))
            ok = false;
    }
    if (!ok) throw ParseError("malformed scalar literal '" + std::string(whole) + "'");
    return mpz_class(digits, 10);
}

} // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw InvalidInput("prime modulus must be below 2^31");
    if (!is_prime(p)) throw InvalidInput("field modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    if (is_rational()) return Scalar(v);
    auto p = static_cast<long long>(modulus_);
    long long r = v % p;
    if (r < 0) r += p;
    return Scalar::residue(static_cast<std::uint64_t>(r), modulus_);
}

Scalar Field::coerce(const Scalar& s) const {
    if (is_rational()) {
        if (s.is_residue()) throw FieldMismatch("residue " + s.to_string() + " used in a rational context");
        return s;
    }
    if (s.is_residue()) {
        if (s.field() != *this)
            throw FieldMismatch("residue " + s.to_string() + " used in field " + name());
        return s;
    }
    mpq_class q = s.to_mpq();
    std::uint64_t den = reduce_mod(q.get_den(), modulus_);
    if (den == 0)
        throw DivisionByZero();
    std::uint64_t num = reduce_mod(q.get_num(), modulus_);
    return Scalar::residue(num * mod_pow(den, modulus_ - 2, modulus_) % modulus_, modulus_);
}

Scalar Field::parse(std::string_view text) const { return coerce(Scalar::parse(text)); }

std::string Field::name() const {
    return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

Field Field::from_name(std::string_view name) {
    name = trim(name);
    if (name == "Q") return rationals();
    for (std::string_view prefix : {"Fp:", "F", "GF"}) {
        if (name.substr(0, prefix.size()) == prefix) {
            auto rest = name.substr(prefix.size());
            std::uint64_t p = 0;
            auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
            if (ec == std::errc{} && ptr == rest.data() + rest.size()) return prime(p);
        }
    }
    throw ParseError("unknown field '" + std::string(name) + "' (expected Q or Fp:<p>)");
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long long v) {
    if (v == std::numeric_limits<long long>::min()) {
        *this = demote(mpq_class(mpz_class(std::to_string(v))));
    } else {
        a_ = v;
    }
}

Scalar::Scalar(long long num, long long den) {
    if (den == 0) throw DivisionByZero();
    *this = normalized(num, den);
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t modulus) {
    Scalar s;
    s.kind_ = Kind::Residue;
    s.a_ = static_cast<std::int64_t>(value % modulus);
    s.b_ = static_cast<std::int64_t>(modulus);
    return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return demote(std::move(c));
}

Scalar Scalar::normalized(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (num == 0) den = 1;
    if (fits_small(num) && fits_small(den)) {
        Scalar s;
        s.a_ = static_cast<std::int64_t>(num);
        s.b_ = static_cast<std::int64_t>(den);
        return s;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    return demote(std::move(q));
}

Scalar Scalar::demote(mpq_class q) {
    Scalar s;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
        q.get_num() != std::numeric_limits<long>::min()) {
        s.a_ = q.get_num().get_si();
        s.b_ = q.get_den().get_si();
        return s;
    }
    s.kind_ = Kind::Big;
    s.big_ = std::make_shared<const mpq_class>(std::move(q));
    return s;
}

Scalar Scalar::parse(std::string_view text) {
    std::string_view t = trim(text);
    if (auto pos = t.find("mod"); pos != std::string_view::npos) {
        mpz_class r = parse_integer(t.substr(0, pos), text);
        mpz_class p = parse_integer(t.substr(pos + 3), text);
        if (p <= 1 || !p.fits_ulong_p()) throw ParseError("bad modulus in '" + std::string(text) + "'");
        Field f = Field::prime(p.get_ui());
        return residue(reduce_mod(r, f.modulus()), f.modulus());
    }
    if (auto slash = t.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(t.substr(0, slash), text);
        mpz_class den = parse_integer(t.substr(slash + 1), text);
        if (den == 0) throw DivisionByZero();
        return from_mpq(mpq_class(num, den));
    }
    return demote(mpq_class(parse_integer(t, text)));
}

Field Scalar::field() const {
    return Field(modulus());
}

bool Scalar::is_zero() const { return kind_ != Kind::Big && a_ == 0; }

bool Scalar::is_one() const {
    if (kind_ == Kind::Small) return a_ == 1 && b_ == 1;
    if (kind_ == Kind::Residue) return a_ == 1 % b_;
    return false;
}

mpq_class Scalar::to_mpq() const {
    switch (kind_) {
    case Kind::Small: return mpq_class(mpz_class(static_cast<long>(a_)), mpz_class(static_cast<long>(b_)));
    case Kind::Big: return *big_;
    case Kind::Residue: break;
    }
    throw FieldMismatch("residue " + to_string() + " has no rational value");
}

std::uint64_t Scalar::residue_value() const {
    if (kind_ != Kind::Residue) throw FieldMismatch("rational " + to_string() + " has no residue value");
    return static_cast<std::uint64_t>(a_);
}

std::string Scalar::to_string() const {
    switch (kind_) {
    case Kind::Small:
        return b_ == 1 ? std::to_string(a_) : std::to_string(a_) + "/" + std::to_string(b_);
    case Kind::Big:
        return big_->get_den() == 1 ? big_->get_num().get_str() : big_->get_str();
    case Kind::Residue:
        return std::to_string(a_) + " mod " + std::to_string(b_);
    }
    return {};
}

namespace {

// Brings a pair into a common representation. Returns the modulus when the
// pair is to be combined in Z/p, 0 for rational arithmetic.
std::uint64_t common_modulus(const Scalar& a, const Scalar& b) {
    if (!a.is_residue() && !b.is_residue()) return 0;
    const Scalar& r = a.is_residue() ? a : b;
    const Scalar& o = a.is_residue() ? b : a;
    std::uint64_t p = r.modulus();
    if (o.is_residue()) {
        if (o.modulus() != p)
            throw FieldMismatch("cannot combine " + a.to_string() + " and " + b.to_string());
        return p;
    }
    if (o.to_mpq().get_den() != 1)
        throw FieldMismatch("cannot combine " + a.to_string() + " and " + b.to_string());
    return p;
}

std::uint64_t as_residue(const Scalar& s, std::uint64_t p) {
    if (s.is_residue()) return s.residue_value();
    return reduce_mod(s.to_mpq().get_num(), p);
}

} // namespace

Scalar Scalar::operator-() const {
    switch (kind_) {
    case Kind::Small: {
        Scalar s = *this;
        s.a_ = -a_;
        return s;
    }
    case Kind::Big: return demote(mpq_class(-*big_));
    case Kind::Residue: return residue((static_cast<std::uint64_t>(b_) - static_cast<std::uint64_t>(a_)) % static_cast<std::uint64_t>(b_),
                                       static_cast<std::uint64_t>(b_));
    }
    return {};
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    switch (kind_) {
    case Kind::Small: return normalized(b_, a_);
    case Kind::Big: return demote(mpq_class(1 / *big_));
    case Kind::Residue: {
        auto p = static_cast<std::uint64_t>(b_);
        return residue(mod_pow(static_cast<std::uint64_t>(a_), p - 2, p), p);
    }
    }
    return {};
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    using K = Scalar::Kind;
    if (a.kind_ == K::Small && b.kind_ == K::Small) {
        if (a.b_ == 1 && b.b_ == 1) return Scalar::normalized(static_cast<i128>(a.a_) + b.a_, 1);
        return Scalar::normalized(static_cast<i128>(a.a_) * b.b_ + static_cast<i128>(b.a_) * a.b_,
                                  static_cast<i128>(a.b_) * b.b_);
    }
    if (std::uint64_t p = common_modulus(a, b)) return Scalar::residue((as_residue(a, p) + as_residue(b, p)) % p, p);
    return Scalar::demote(mpq_class(a.to_mpq() + b.to_mpq()));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    using K = Scalar::Kind;
    if (a.kind_ == K::Small && b.kind_ == K::Small) {
        if (a.a_ == 0 || b.a_ == 0) return Scalar{};
        if (a.b_ == 1 && b.b_ == 1) return Scalar::normalized(static_cast<i128>(a.a_) * b.a_, 1);
        return Scalar::normalized(static_cast<i128>(a.a_) * b.a_, static_cast<i128>(a.b_) * b.b_);
    }
    if (std::uint64_t p = common_modulus(a, b)) return Scalar::residue(as_residue(a, p) * as_residue(b, p) % p, p);
    return Scalar::demote(mpq_class(a.to_mpq() * b.to_mpq()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    using K = Scalar::Kind;
    if (a.kind_ == K::Small && b.kind_ == K::Small) return a.a_ == b.a_ && a.b_ == b.b_;
    if (a.kind_ == K::Residue || b.kind_ == K::Residue) {
        std::uint64_t p = common_modulus(a, b);
        return as_residue(a, p) == as_residue(b, p);
    }
    return a.to_mpq() == b.to_mpq();
}

Scalar Scalar::magnitude() const {
    switch (kind_) {
    case Kind::Small: return a_ < 0 ? -*this : *this;
    case Kind::Big: return demote(mpq_class(abs(*big_)));
    case Kind::Residue: return *this;
    }
    return {};
}

bool Scalar::less_magnitude(const Scalar& a, const Scalar& b) {
    Scalar ma = a.magnitude();
    Scalar mb = b.magnitude();
    if (ma.is_residue() || mb.is_residue()) return as_residue(ma, common_modulus(ma, mb)) < as_residue(mb, common_modulus(ma, mb));
    if (ma.kind_ == Kind::Small && mb.kind_ == Kind::Small)
        return static_cast<i128>(ma.a_) * mb.b_ < static_cast<i128>(mb.a_) * ma.b_;
    return ma.to_mpq() < mb.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace tannaka::exact
