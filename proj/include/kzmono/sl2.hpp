#pragma once

#include "kzmono/rational.hpp"

#include <array>
#include <vector>

namespace kz {

// Element of SL2(Z), row-major [[a, b], [c, d]].
struct IntMat2 {
  Integer a{1}, b{0}, c{0}, d{1};

  static IntMat2 identity() { return {}; }
  static IntMat2 t_power(const Integer& n) { return {1, n, 0, 1}; }
  static IntMat2 s() { return {0, -1, 1, 0}; }

  Integer det() const { return a * d - b * c; }
  IntMat2 inverse() const { return {d, -b, -c, a}; } // valid since det = 1
  IntMat2 operator-() const { return {-a, -b, -c, -d}; }

  friend IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  bool operator==(const IntMat2& o) const = default;

  std::string str() const; // "[[a, b], [c, d]]"
};

// A word in the generators T and S, stored as letters with integer exponents.
// Empty words are the identity.
struct Letter {
  char gen; // 'T' or 'S'
  long exp;
  bool operator==(const Letter& o) const = default;
};
using Word = std::vector<Letter>;

// Parses strings over the tokens "T", "T^<int>", "S", "S^<int>" with
// "( ... )^<int>" grouping, whitespace ignored; e.g. "(T^2 S T^3 S)^2".
// Group exponents expand immediately (negative ones invert the group word).
Word parse_word(const std::string& text);
std::string word_str(const Word& w);

Word word_tts3(long t);             // (T^t S)^3
Word word_trsts2(long r, long s);   // (T^r S T^s S)^2

IntMat2 eval_word(const Word& w);

// Literal transcriptions of the closed-form displays for (T^t S)^3 and
// (T^r S T^s S)^2. Both are kept verbatim so the test suite can document how
// they differ from direct evaluation (a global sign for the first, the sign
// of the (2,1) entry for the second) instead of silently absorbing the fix.
IntMat2 closed_form_tts3(long t);             // pre: t != 0
IntMat2 closed_form_trsts2(long r, long s);   // pre: r != 1, s != 1

enum class Membership { InGamma, MinusInGamma, Neither };
std::string membership_str(Membership m);

// Reduction mod N: InGamma iff m == E, MinusInGamma iff m == -E.
Membership gamma_membership(const IntMat2& m, const Integer& modulus);

// Entrywise comparison of a closed form against direct evaluation.
// Zero means both entries vanish (sign indeterminate).
enum class EntryRelation { Equal, Negated, Zero, Mismatch };
std::array<EntryRelation, 4> compare_entries(const IntMat2& closed,
                                             const IntMat2& direct);

} // namespace kz
