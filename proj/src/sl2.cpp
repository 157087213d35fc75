#include "kzmono/sl2.hpp"

#include <cctype>
#include <sstream>

namespace kz {

std::string IntMat2::str() const {
  std::ostringstream os;
  os << "[[" << a << ", " << b << "], [" << c << ", " << d << "]]";
  return os.str();
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse_word: " + what + " at position " +
                                std::to_string(pos) + " in \"" + text + "\"");
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stol(text.substr(start, pos - start));
  }

  long exponent() { // "^<int>" if present, else 1
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      return integer();
    }
    return 1;
  }

  Word word(bool inside_group) {
    Word w;
    while (!done()) {
      char c = peek();
      if (c == ')') {
        if (!inside_group) fail("unmatched ')'");
        return w;
      }
      if (c == 'T' || c == 'S') {
        ++pos;
        w.push_back({c, exponent()});
      } else if (c == '(') {
        ++pos;
        Word inner = word(true);
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        long e = exponent();
        Word block = inner;
        if (e < 0) {
          // Invert the group word: reverse order, negate exponents.
          block.assign(inner.rbegin(), inner.rend());
          for (auto& l : block) l.exp = -l.exp;
          e = -e;
        }
        for (long i = 0; i < e; ++i) w.insert(w.end(), block.begin(), block.end());
      } else {
        fail("unexpected character");
      }
    }
    if (inside_group) fail("missing ')'");
    return w;
  }
};

IntMat2 mat_pow(IntMat2 base, long e) {
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  IntMat2 acc;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

} // namespace

Word parse_word(const std::string& text) {
  Parser p{text};
  return p.word(false);
}

std::string word_str(const Word& w) {
  if (w.empty()) return "E";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w) {
    if (!first) os << " ";
    os << l.gen;
    if (l.exp != 1) os << "^" << l.exp;
    first = false;
  }
  return os.str();
}

Word word_tts3(long t) {
  Word w;
  for (int i = 0; i < 3; ++i) {
    w.push_back({'T', t});
    w.push_back({'S', 1});
  }
  return w;
}

Word word_trsts2(long r, long s) {
  Word w;
  for (int i = 0; i < 2; ++i) {
    w.push_back({'T', r});
    w.push_back({'S', 1});
    w.push_back({'T', s});
    w.push_back({'S', 1});
  }
  return w;
}

IntMat2 eval_word(const Word& w) {
  IntMat2 m;
  for (const auto& l : w) {
    if (l.gen == 'T')
      m = m * IntMat2::t_power(l.exp);
    else if (l.gen == 'S')
      m = m * mat_pow(IntMat2::s(), l.exp);
    else
      throw std::invalid_argument("eval_word: unknown generator");
  }
  return m;
}

IntMat2 closed_form_tts3(long t) {
  if (t == 0) throw std::invalid_argument("closed_form_tts3: t must be nonzero");
  Integer T = t;
  return {-1 - (T + 1) * (T * T - T - 1), (T + 1) * (T - 1),
          -(T + 1) * (T - 1), T};
}

IntMat2 closed_form_trsts2(long r, long s) {
  if (r == 1 || s == 1)
    throw std::invalid_argument("closed_form_trsts2: r and s must differ from 1");
  Integer M = Integer(r) * Integer(s) - 2;
  return {M * M + M - 1, -Integer(r) * M, -Integer(s) * M, -1 - M};
}

std::string membership_str(Membership m) {
  switch (m) {
    case Membership::InGamma: return "InGamma";
    case Membership::MinusInGamma: return "MinusInGamma";
    case Membership::Neither: return "Neither";
  }
  return "Neither";
}

Membership gamma_membership(const IntMat2& m, const Integer& modulus) {
  if (modulus < 1)
    throw std::invalid_argument("gamma_membership: modulus must be positive");
  auto congruent = [&](const IntMat2& x, const IntMat2& y) {
    return mod_floor(x.a - y.a, modulus) == 0 && mod_floor(x.b - y.b, modulus) == 0 &&
           mod_floor(x.c - y.c, modulus) == 0 && mod_floor(x.d - y.d, modulus) == 0;
  };
  IntMat2 e = IntMat2::identity();
  if (congruent(m, e)) return Membership::InGamma;
  if (congruent(m, -e)) return Membership::MinusInGamma;
  return Membership::Neither;
}

std::array<EntryRelation, 4> compare_entries(const IntMat2& closed,
                                             const IntMat2& direct) {
  auto rel = [](const Integer& x, const Integer& y) {
    if (x == 0 && y == 0) return EntryRelation::Zero;
    if (x == y) return EntryRelation::Equal;
    if (x == -y) return EntryRelation::Negated;
    return EntryRelation::Mismatch;
  };
  return {rel(closed.a, direct.a), rel(closed.b, direct.b),
          rel(closed.c, direct.c), rel(closed.d, direct.d)};
}

} // namespace kz
