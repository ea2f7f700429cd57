#pragma once

#include <string>
#include <vector>

#include "fiberscope/matrix.hpp"

namespace fiberscope::words {

/// A word in a finitely generated group, stored freely reduced.
/// Letters are nonzero ints: +(i+1) is generator i, -(i+1) its inverse.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<int> letters);

  static GroupWord generator(int index, bool inverse = false) {
    return GroupWord({inverse ? -(index + 1) : index + 1});
  }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& rhs) const;
  GroupWord pow(long k) const;

  bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const GroupWord& o) const { return !(*this == o); }
  bool operator<(const GroupWord& o) const { return letters_ < o.letters_; }

  /// Largest generator index mentioned, plus one (0 for the empty word).
  std::size_t alphabet_size() const;

  /// Signed exponent sums over `rank` generators.
  std::vector<Int> exponent_vector(std::size_t rank) const;

 private:
  std::vector<int> letters_;
};

GroupWord free_reduce(const GroupWord& w);

/// Strips matching conjugating prefix/suffix pairs: u v u^{-1} -> v.
GroupWord cyclic_reduce(const GroupWord& w);

/// True iff the cyclic words of a and b coincide (free-group conjugacy test
/// for cyclically reduced words).
bool is_cyclic_rotation(const GroupWord& a, const GroupWord& b);

/// The genus-g one-relator surface presentation.
/// Generators are indexed a_1 = 0, b_1 = 1, ..., a_g = 2g-2, b_g = 2g-1.
struct SurfacePresentation {
  explicit SurfacePresentation(int genus);
  int genus;
  std::size_t num_generators() const { return 2 * std::size_t(genus); }
  /// prod_i [a_i, b_i], length 4g.
  GroupWord relator() const;
};

/// An endomorphism given by generator images. Shipped automorphisms carry
/// explicit inverse images; inversion in Aut of a surface group is not
/// something we ever compute.
struct GroupAutomorphism {
  std::vector<GroupWord> images;
  std::vector<GroupWord> inverse_images;

  std::size_t size() const { return images.size(); }
  bool operator==(const GroupAutomorphism& o) const {
    return images == o.images && inverse_images == o.inverse_images;
  }
};

GroupAutomorphism identity_automorphism(std::size_t n);

/// Substitution homomorphism: each letter of w is replaced by the image (or
/// inverse image) word, then freely reduced.
GroupWord apply_automorphism(const GroupAutomorphism& phi, const GroupWord& w);
GroupWord apply_inverse_automorphism(const GroupAutomorphism& phi,
                                     const GroupWord& w);

/// (phi o psi)(x) = phi(psi(x)).
GroupAutomorphism compose(const GroupAutomorphism& phi,
                          const GroupAutomorphism& psi);
GroupAutomorphism inverse(const GroupAutomorphism& phi);

/// Word problem for the genus-g surface group (g >= 2) by Dehn's algorithm
/// over the symmetrized relator set. A freely reduced word representing the
/// identity must contain more than half of some cyclic rotation of the
/// relator or its inverse; replacing that piece strictly shortens the word.
bool surface_word_is_trivial(const GroupWord& w, int genus);

/// Checks that phi is an automorphism of the genus-g surface group:
/// (a) phi(relator) is freely conjugate to the relator (cyclic reduction
///     plus rotation matching), which makes phi a well-defined,
///     orientation-preserving endomorphism, and
/// (b) phi o phi^{-1} and phi^{-1} o phi fix every generator in the surface
///     group (word problem).
bool verify_surface_automorphism(const GroupAutomorphism& phi, int genus);

/// Matrix of signed generator-occurrence counts; column j is the abelianized
/// image of generator j.
IntegerMatrix abelianize_automorphism(const GroupAutomorphism& phi,
                                      std::size_t rank);

// --- textual word syntax ---------------------------------------------------
// Generators are named a1,b1,...,ag,bg for fiber groups and x1,...,xn for
// base groups; inverses use ^-1 and concatenation uses *:  a1*b1^-1*a2

std::vector<std::string> fiber_generator_names(int genus);
std::vector<std::string> free_base_generator_names(int rank);
std::vector<std::string> surface_base_generator_names(int genus);

std::string format_word(const GroupWord& w,
                        const std::vector<std::string>& names);
GroupWord parse_word(const std::string& text,
                     const std::vector<std::string>& names);

}  // namespace fiberscope::words
