#include "cgsig/rational_io.hpp"

#include "cgsig/errors.hpp"

namespace cgsig {

std::string rational_to_string(const mpq_class& x) {
    mpq_class c(x);
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

static bool valid_decimal(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

mpz_class parse_integer(const std::string& s) {
    if (!valid_decimal(s))
        throw ParseError("not a decimal integer: '" + s + "'");
    return mpz_class(s, 10);
}

mpq_class parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return mpq_class(parse_integer(s));
    }
    mpz_class num = parse_integer(s.substr(0, slash));
    mpz_class den = parse_integer(s.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + s + "'");
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

} // namespace cgsig
