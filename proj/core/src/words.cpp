#include "fiberscope/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace fiberscope::words {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

std::vector<int> reduce_letters(const std::vector<int>& in) {
  std::vector<int> out;
  out.reserve(in.size());
  for (int x : in) {
    if (x == 0) throw ValidationError("GroupWord: zero letter");
    push_reduced(out, x);
  }
  return out;
}

}  // namespace

GroupWord::GroupWord(std::vector<int> letters)
    : letters_(reduce_letters(letters)) {}

GroupWord GroupWord::inverse() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(-*it);
  GroupWord w;
  w.letters_ = std::move(out);  // inverse of reduced word is reduced
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  std::vector<int> out = letters_;
  for (int x : rhs.letters_) push_reduced(out, x);
  GroupWord w;
  w.letters_ = std::move(out);
  return w;
}

GroupWord GroupWord::pow(long k) const {
  GroupWord base = k >= 0 ? *this : inverse();
  long n = k >= 0 ? k : -k;
  GroupWord out;
  for (long i = 0; i < n; ++i) out = out * base;
  return out;
}

std::size_t GroupWord::alphabet_size() const {
  std::size_t n = 0;
  for (int x : letters_) n = std::max<std::size_t>(n, std::abs(x));
  return n;
}

std::vector<Int> GroupWord::exponent_vector(std::size_t rank) const {
  std::vector<Int> v(rank, Int(0));
  for (int x : letters_) {
    std::size_t idx = std::abs(x) - 1;
    if (idx >= rank)
      throw ValidationError("exponent_vector: generator index out of range");
    v[idx] += (x > 0 ? 1 : -1);
  }
  return v;
}

GroupWord free_reduce(const GroupWord& w) { return w; }  // invariant of type

GroupWord cyclic_reduce(const GroupWord& w) {
  std::vector<int> l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi > lo + 1 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return GroupWord(std::vector<int>(l.begin() + lo, l.begin() + hi));
}

bool is_cyclic_rotation(const GroupWord& a, const GroupWord& b) {
  if (a.length() != b.length()) return false;
  if (a.empty()) return true;
  const auto& la = a.letters();
  const auto& lb = b.letters();
  std::vector<int> doubled = la;
  doubled.insert(doubled.end(), la.begin(), la.end());
  for (std::size_t off = 0; off < la.size(); ++off)
    if (std::equal(lb.begin(), lb.end(), doubled.begin() + off)) return true;
  return false;
}

SurfacePresentation::SurfacePresentation(int genus_) : genus(genus_) {
  if (genus < 1) throw ValidationError("SurfacePresentation: genus must be >= 1");
}

GroupWord SurfacePresentation::relator() const {
  std::vector<int> l;
  l.reserve(4 * genus);
  for (int i = 0; i < genus; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    l.push_back(a);
    l.push_back(b);
    l.push_back(-a);
    l.push_back(-b);
  }
  return GroupWord(l);
}

GroupAutomorphism identity_automorphism(std::size_t n) {
  GroupAutomorphism phi;
  phi.images.reserve(n);
  phi.inverse_images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    phi.images.push_back(GroupWord::generator(int(i)));
    phi.inverse_images.push_back(GroupWord::generator(int(i)));
  }
  return phi;
}

namespace {

GroupWord substitute(const std::vector<GroupWord>& table, const GroupWord& w) {
  std::vector<int> out;
  for (int x : w.letters()) {
    std::size_t idx = std::abs(x) - 1;
    if (idx >= table.size())
      throw ValidationError("apply_automorphism: generator index out of range");
    const auto& img = table[idx].letters();
    if (x > 0) {
      for (int y : img) push_reduced(out, y);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        push_reduced(out, -*it);
    }
  }
  return GroupWord(std::move(out));
}

}  // namespace

GroupWord apply_automorphism(const GroupAutomorphism& phi,
                             const GroupWord& w) {
  return substitute(phi.images, w);
}

GroupWord apply_inverse_automorphism(const GroupAutomorphism& phi,
                                     const GroupWord& w) {
  return substitute(phi.inverse_images, w);
}

GroupAutomorphism compose(const GroupAutomorphism& phi,
                          const GroupAutomorphism& psi) {
  if (phi.size() != psi.size())
    throw ValidationError("compose: automorphism domains disagree");
  GroupAutomorphism out;
  out.images.reserve(phi.size());
  out.inverse_images.reserve(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    out.images.push_back(apply_automorphism(phi, psi.images[i]));
    out.inverse_images.push_back(
        apply_inverse_automorphism(psi, phi.inverse_images[i]));
  }
  return out;
}

GroupAutomorphism inverse(const GroupAutomorphism& phi) {
  return GroupAutomorphism{phi.inverse_images, phi.images};
}

namespace {

// Symmetrized relator set: all cyclic rotations of R and R^{-1}.
std::vector<std::vector<int>> symmetrized_relators(int genus) {
  GroupWord r = SurfacePresentation(genus).relator();
  std::vector<std::vector<int>> out;
  for (const GroupWord& base : {r, r.inverse()}) {
    const auto& l = base.letters();
    for (std::size_t off = 0; off < l.size(); ++off) {
      std::vector<int> rot(l.begin() + off, l.end());
      rot.insert(rot.end(), l.begin(), l.begin() + off);
      out.push_back(std::move(rot));
    }
  }
  return out;
}

}  // namespace

bool surface_word_is_trivial(const GroupWord& w, int genus) {
  if (genus < 2)
    throw ValidationError("surface_word_is_trivial: requires genus >= 2");
  const auto rels = symmetrized_relators(genus);
  const std::size_t rlen = 4 * std::size_t(genus);
  std::vector<int> cur = w.letters();
  for (;;) {
    if (cur.empty()) return true;
    bool replaced = false;
    for (std::size_t i = 0; i < cur.size() && !replaced; ++i) {
      for (const auto& rel : rels) {
        std::size_t match = 0;
        while (match < rlen && i + match < cur.size() &&
               cur[i + match] == rel[match])
          ++match;
        if (2 * match <= rlen) continue;
        // rel = p q with p the matched prefix; p = q^{-1} in the group, so
        // splice in the strictly shorter q^{-1}
        std::vector<int> next(cur.begin(), cur.begin() + i);
        for (std::size_t k = rlen; k > match; --k)
          push_reduced(next, -rel[k - 1]);
        for (std::size_t k = i + match; k < cur.size(); ++k)
          push_reduced(next, cur[k]);
        cur = std::move(next);
        replaced = true;
        break;
      }
    }
    if (!replaced) return false;
  }
}

bool verify_surface_automorphism(const GroupAutomorphism& phi, int genus) {
  const std::size_t n = 2 * std::size_t(genus);
  if (phi.size() != n || phi.inverse_images.size() != n) return false;
  SurfacePresentation pres(genus);
  GroupWord r = pres.relator();
  GroupWord image = cyclic_reduce(apply_automorphism(phi, r));
  if (!is_cyclic_rotation(image, r)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    GroupWord x = GroupWord::generator(int(i));
    GroupWord lhs = apply_automorphism(phi, phi.inverse_images[i]) *
                    x.inverse();
    GroupWord rhs = apply_inverse_automorphism(phi, phi.images[i]) *
                    x.inverse();
    if (!surface_word_is_trivial(lhs, genus)) return false;
    if (!surface_word_is_trivial(rhs, genus)) return false;
  }
  return true;
}

IntegerMatrix abelianize_automorphism(const GroupAutomorphism& phi,
                                      std::size_t rank) {
  IntegerMatrix m(rank, rank);
  if (phi.size() != rank)
    throw ValidationError("abelianize_automorphism: rank mismatch");
  for (std::size_t j = 0; j < rank; ++j) {
    auto v = phi.images[j].exponent_vector(rank);
    for (std::size_t i = 0; i < rank; ++i) m.at(i, j) = v[i];
  }
  return m;
}

std::vector<std::string> fiber_generator_names(int genus) {
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  return names;
}

std::vector<std::string> free_base_generator_names(int rank) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<std::string> surface_base_generator_names(int genus) {
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  return names;
}

std::string format_word(const GroupWord& w,
                        const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int x : w.letters()) {
    std::size_t idx = std::abs(x) - 1;
    if (idx >= names.size())
      throw ValidationError("format_word: generator index out of range");
    if (!first) os << "*";
    os << names[idx];
    if (x < 0) os << "^-1";
    first = false;
  }
  return os.str();
}

GroupWord parse_word(const std::string& text,
                     const std::vector<std::string>& names) {
  std::vector<int> letters;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text.compare(pos, 1, "1") == 0 &&
      pos + 1 >= text.size())
    return GroupWord();
  bool expect_factor = true;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!expect_factor) {
      if (text[pos] != '*')
        throw ValidationError("parse_word: expected '*' at position " +
                              std::to_string(pos));
      ++pos;
      expect_factor = true;
      continue;
    }
    // longest-match generator name
    std::size_t best = names.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& nm = names[i];
      if (nm.size() > best_len && text.compare(pos, nm.size(), nm) == 0) {
        best = i;
        best_len = nm.size();
      }
    }
    if (best == names.size())
      throw ValidationError("parse_word: unknown generator at position " +
                            std::to_string(pos) + " in '" + text + "'");
    pos += best_len;
    long exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ValidationError("parse_word: malformed exponent in '" + text +
                              "'");
      long mag = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        mag = mag * 10 + (text[pos] - '0');
        ++pos;
      }
      exp = neg ? -mag : mag;
    }
    int letter = int(best) + 1;
    long n = exp >= 0 ? exp : -exp;
    for (long k = 0; k < n; ++k) letters.push_back(exp >= 0 ? letter : -letter);
    expect_factor = false;
  }
  if (expect_factor && !letters.empty())
    throw ValidationError("parse_word: trailing '*' in '" + text + "'");
  return GroupWord(std::move(letters));
}

}  // namespace fiberscope::words
