#ifndef MONOCOMP_JSON_IO_HPP
#define MONOCOMP_JSON_IO_HPP

#include "monocomp/composition.hpp"
#include "monocomp/dedekind.hpp"
#include "monocomp/search.hpp"

#include <json.hpp>

namespace monocomp::io {

using json = nlohmann::ordered_json;

// Integers that fit a signed 64-bit word become JSON numbers, anything
// larger a decimal string.
json integer(Integer const& z);
json coefficients(ModPoly const& u);
json coefficients(IntPoly const& u);

json record(SearchRecord const& rec);
json disc(CompositionInstance const& inst, DiscFormula const& df, std::optional<Integer> const& oracle);
json dedekind(IntPoly const& f, PrimeIndexVerdict const& v, ModFactorization const& fac);
json binom(long n, Integer const& b, BinomMonogenicity const& v, BinomialIrreducibility const& irr);
json family_row(FamilyRow const& row);

}  // namespace monocomp::io

#endif  // MONOCOMP_JSON_IO_HPP
