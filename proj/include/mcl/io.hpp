#ifndef MCL_IO_HPP
#define MCL_IO_HPP

#include <optional>
#include <string>

#include "mcl/ideal.hpp"

namespace mcl {

// Text format: one generator per line, `x<i>^<e>` factors joined by `*`,
// `^1` omitted, the unit monomial written `1`.  Generic ideals index
// variables from 1, curve ideals from 0; index_base selects which.
std::string format_monomial(const ExponentVector& m, int index_base = 1);
std::string format_ideal_text(const MonomialIdeal& I, int index_base = 1);

// Accepts monomials separated by newlines or commas.  num_vars is inferred
// from the largest variable index unless given.  Parse failures throw
// DomainError.
MonomialIdeal parse_ideal_text(const std::string& text, int index_base = 1,
                               std::optional<int> num_vars = std::nullopt);

// JSON format: {"num_vars": n, "generators": [[e0,e1,...], ...]}
std::string ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const std::string& json_text);

}  // namespace mcl

#endif
