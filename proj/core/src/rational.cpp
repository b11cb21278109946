#include "inexp/rational.hpp"

#include <stdexcept>

namespace inexp {

Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

Count binomial(long n, unsigned long k) {
    if (n < 0) return 0;
    Count r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), k);
    return r;
}

Count factorial(unsigned long n) {
    Count r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace inexp
