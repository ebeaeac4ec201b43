#ifndef WITTSWAN_SYMMETRIC_HPP
#define WITTSWAN_SYMMETRIC_HPP

#include "wittswan/sfrac.hpp"

namespace wittswan {

// e_k(t_1..t_d) as a polynomial in t1..td; e_0 = 1
MultiLaurentPoly elementary_symmetric(int p, int d, int k);

// Rewrite a symmetric Laurent polynomial in t_1..t_d as a canonical
// fraction in the elementary symmetric coordinates S_1..S_d. Negative
// exponents are cleared by the symmetric monomial (t_1...t_d)^M, which
// accounts for the denominator power. Throws std::invalid_argument when
// the input is not symmetric.
SFraction sym_to_elementary(const MultiLaurentPoly& f);

// Substitute S_k -> e_k(t_1..t_d); inverse direction, used for checks
MultiLaurentPoly expand_elementary(const MultiLaurentPoly& s_poly);

// expand_elementary applied to an SFraction, as (numerator expansion, M)
// so that f = expansion / (t_1...t_d)^M
MultiLaurentPoly expand_numerator(const SFraction& f);

} // namespace wittswan

#endif
