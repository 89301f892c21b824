#include "nkcfg/rational.hpp"

#include <cctype>

namespace nkcfg {

namespace {

// FNV-1a style mixing over the limbs; sign and magnitude both contribute.
std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
    return h;
}

bool valid_integer_text(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit((unsigned char)s[i])) return false;
    return true;
}

} // namespace

std::uint64_t hash_int(const Int& v) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = mix(h, (std::uint64_t)(sgn(v) + 1));
    const mpz_srcptr z = v.get_mpz_t();
    std::size_t limbs = mpz_size(z);
    for (std::size_t i = 0; i < limbs; ++i)
        h = mix(h, (std::uint64_t)mpz_getlimbn(z, i));
    return h;
}

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw Error(Errc::ParseError, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_text(s)) throw Error(Errc::ParseError, "bad rational '" + s + "'");
        return Rational(Int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    // Denominators are written positive, so only the numerator may be signed.
    if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-')
        throw Error(Errc::ParseError, "bad rational '" + s + "'");
    return Rational(Int(num), Int(den));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::uint64_t Rational::hash() const {
    return hash_int(num()) * 0x9e3779b97f4a7c15ULL + hash_int(den());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::BadParams, "division by zero");
    v_ /= o.v_;
    return *this;
}

} // namespace nkcfg
