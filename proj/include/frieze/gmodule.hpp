#pragma once

// String-module realization of the functor G(c) = Hom(R, Sigma c) attached to
// a dissection D (the rigid object R) and an arc c.  The arc crosses some
// diagonals of D; listed from one endpoint to the other they form the
// crossing sequence.  Maximal runs of consecutive crossed diagonals sharing a
// polygon vertex become string words: the letters are the crossed diagonals
// and each adjacent pair carries an arrow whose direction records which side
// of the arc the shared vertex lies on.  G of a direct sum is the disjoint
// union of the words.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frieze/cluster.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

enum class Sign : int8_t { forward = 1, backward = -1 };

inline Sign flip(Sign s) { return s == Sign::forward ? Sign::backward : Sign::forward; }

// A word: letters[k] --signs[k]--> letters[k+1] when forward, the reverse
// arrow when backward.  Letters within a word are pairwise distinct
// diagonals of D; signs.size() == letters.size() - 1.
struct StringWord {
  std::vector<Diagonal> letters;
  std::vector<Sign> signs;
  friend auto operator<=>(const StringWord&, const StringWord&) = default;
};

struct GModule {
  std::vector<StringWord> words;  // zero module = no words
  friend auto operator<=>(const GModule&, const GModule&) = default;
};

// Dimension vector over the basis of dissection diagonals; zero entries are
// absent, so equal maps mean equal vectors.
using DimVec = std::map<Diagonal, int>;

// Global orientation convention for the arrow signs.  Flipping it reverses
// every arrow; all isomorphism verdicts and Euler characteristics are
// unaffected (words are only defined up to simultaneous reversal).
enum class Handedness { standard, flipped };

// The diagonals of D crossed by `arc`, ordered from endpoint min(arc) towards
// max(arc) (nested-interval order).  Empty when arc is in D or crosses nothing.
std::vector<Diagonal> crossing_sequence(const Dissection& D, const Diagonal& arc);

std::vector<StringWord> string_of_arc(const Dissection& D, const Diagonal& arc,
                                      Handedness h = Handedness::standard);

GModule g_module(const Dissection& D, const Obj& x, Handedness h = Handedness::standard);
GModule g_module(const Dissection& D, const Diagonal& arc, Handedness h = Handedness::standard);

DimVec dim_vec(const GModule& M);

// Isomorphism of direct sums of string modules: the multisets of words agree
// up to reversal of individual words.
bool is_isomorphic(const GModule& M1, const GModule& M2);

// Whether the AR triangle tau(c) -> b -> c stays short exact and split after
// applying G.  False outright when c or tau(c) lies in D (the functor kills
// one end and the sequence degenerates); otherwise compares the middle with
// the direct sum of the ends.
bool mesh_is_split(const Dissection& D, const Diagonal& c);

// Debug/fixture form: letters joined by `>`/`<`, words joined by `,`,
// zero module = `0`.  Example: `0-2>0-3`.
std::string to_string(const StringWord& w);
std::string to_string(const GModule& M);

}  // namespace frieze
