#include "rwords/rational.hpp"

#include <cctype>
#include <sstream>

#include "rwords/errors.hpp"

namespace rwords {

Rat make_rat(long num, long den) {
    if (den == 0) throw ParseError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("not a rational: '" + text + "'");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw ParseError("not a rational: '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ParseError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::vector<Rat> parse_rational_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ParseError("empty rational list");
    return out;
}

std::string fraction_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rat& q, int digits) {
    Int scale = int_pow(Int(10), static_cast<unsigned long>(digits));
    // round(|q|*scale) with ties away from zero: floor((2*|num|*scale + den) / (2*den))
    Int num = abs(q.get_num());
    Int den = q.get_den();
    Int rounded = (2 * num * scale + den) / (2 * den); // positive operands: truncation == floor
    Int whole = rounded / scale;
    Int frac = rounded % scale;
    std::string sign = (sgn(q) < 0 && rounded != 0) ? "-" : "";
    if (digits == 0) return sign + whole.get_str();
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), static_cast<std::size_t>(digits) - fs.size(), '0');
    return sign + whole.get_str() + "." + fs;
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    const unsigned long e =
        exp > 0 ? static_cast<unsigned long>(exp) : static_cast<unsigned long>(-exp);
    Rat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    if (exp < 0) {
        if (sgn(base) == 0) throw Error("0 raised to a negative power");
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    }
    // base canonical implies base^e canonical; inversion fixes the sign.
    return out;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

} // namespace rwords
