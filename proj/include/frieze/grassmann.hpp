#pragma once

// Euler characteristics of submodule Grassmannians of string modules, by two
// independent routes that the test suite plays against each other:
//
//  1. chi_table / chi_total: the Grassmannian of a string (or union of
//     strings) has a cell decomposition indexed by successor-closed subsets
//     of the coefficient quiver, so chi(Gr_e) counts subsets of the letter
//     positions, closed under following arrows, with e letters per diagonal.
//
//  2. count_subreps_fq / chi_via_fq: count actual subrepresentation tuples
//     over a finite field F_q; the count is a polynomial in q, so exact
//     Lagrange interpolation through enough prime-power sample points and
//     evaluation at q = 1 recovers chi.

#include <map>

#include "frieze/gmodule.hpp"

namespace frieze {

// chi(Gr_e) per dimension vector e; entries absent means zero.  Always
// contains e = 0 and e = dim_vec(M), both with value 1.
using SubsetCountTable = std::map<DimVec, long long>;

SubsetCountTable chi_table(const GModule& M);

// Sum of the table = chi of the whole submodule Grassmannian; multiplicative
// over words, 1 for the zero module.
long long chi_total(const GModule& M);

// Prime powers with precomputed field tables.
inline constexpr int kSupportedFields[] = {2, 3, 4, 5, 7, 8, 9};

// Number of subrepresentations of M over F_q with dimension vector e.
// Throws UnsupportedField for other q.
long long count_subreps_fq(const GModule& M, const DimVec& e, int q);

// chi(Gr_e) via route 2.  The counting polynomial has degree
// sum_d e_d (dim_d - e_d); throws InsufficientSamples if that needs more
// than the seven supported fields.
long long chi_via_fq(const GModule& M, const DimVec& e);

}  // namespace frieze
