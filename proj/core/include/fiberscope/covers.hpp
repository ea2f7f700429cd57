#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fiberscope/matrix.hpp"
#include "fiberscope/words.hpp"

namespace fiberscope::covers {

/// Finite abelian cover of a one-relator (or free) group, given by the
/// kernel of the exponent map to (Z/q)^j described by `quotient_map`
/// (j rows, one column per generator, entries mod q).
///
/// Cosets are the vectors of (Z/q)^j in lexicographic order; the Schreier
/// transversal consists of exponent normal forms, which are prefix-closed.
/// For a one-relator group the Reidemeister-Schreier presentation is reduced
/// by Tietze eliminations (merging relator disks along shared Schreier
/// generators) until a single relator on the surviving generators remains;
/// that relator abelianizes to zero, so the survivors are a homology basis.
class AbelianCover {
 public:
  AbelianCover(std::size_t num_gens,
               std::optional<words::GroupWord> relator,
               std::vector<std::vector<int>> quotient_map, int q,
               std::size_t index_cap = 1 << 20);

  std::size_t num_gens() const { return num_gens_; }
  int modulus() const { return q_; }
  std::size_t index() const { return cosets_.size(); }

  const std::vector<std::vector<int>>& cosets() const { return cosets_; }
  const words::GroupWord& transversal(std::size_t coset) const {
    return transversal_[coset];
  }

  /// Words (in the base group) for the surviving homology-basis generators.
  const std::vector<words::GroupWord>& basis_words() const {
    return basis_words_;
  }
  std::size_t basis_size() const { return basis_words_.size(); }

  /// All Schreier generator words, tree edges excluded.
  std::size_t schreier_generator_count() const {
    return schreier_words_.size();
  }
  const words::GroupWord& schreier_word(std::size_t i) const {
    return schreier_words_[i];
  }

  /// True iff the exponent vector of w vanishes under the quotient map,
  /// i.e. w lies in the cover subgroup.
  bool contains(const words::GroupWord& w) const;

  /// Class of w (which must lie in the subgroup) in the abelianization of
  /// the cover group, in the surviving basis. Throws MembershipError.
  std::vector<Int> rewrite(const words::GroupWord& w) const;

  /// Coset reached from `coset` by the (signed) letter.
  std::size_t step(std::size_t coset, int letter) const;
  std::size_t coset_of_word(const words::GroupWord& w) const;

 private:
  std::size_t num_gens_;
  int q_;
  std::vector<std::vector<int>> map_;             // j x num_gens
  std::vector<std::vector<int>> cosets_;          // lex ordered
  std::vector<words::GroupWord> transversal_;
  // schreier generator bookkeeping
  std::vector<std::vector<long>> gen_index_;      // coset x gen -> id or -1
  std::vector<words::GroupWord> schreier_words_;
  std::vector<std::vector<Int>> abelian_vec_;     // schreier id -> basis vec
  std::vector<words::GroupWord> basis_words_;

  std::vector<int> apply_map(const std::vector<Int>& exponents) const;
  std::vector<int> rewrite_schreier(const words::GroupWord& w,
                                    std::size_t start_coset) const;
  void build(const std::optional<words::GroupWord>& relator,
             std::size_t index_cap);
};

/// Mod-m homology cover of the genus-g fiber surface group:
/// the kernel of K -> H_1(K; Z/m), which is characteristic in K.
struct FiberCover {
  int genus_base = 0;
  int modulus = 1;
  Int index = 1;                      // m^{2g}
  int cover_genus = 0;                // 1 + index (g - 1)
  std::shared_ptr<const AbelianCover> cover;

  std::size_t homology_dim() const { return 2 * std::size_t(cover_genus); }
  const std::vector<words::GroupWord>& subgroup_generators() const {
    return cover->basis_words();
  }
};

/// Builds the mod-m cover; throws ResourceError if m^{2g} exceeds the cap.
FiberCover mod_m_cover(int genus, int modulus, std::size_t index_cap = 1 << 20);

/// Class of w in H_1 of the cover in the fixed surface basis.
/// Pre: the exponent vector of w vanishes mod m (else MembershipError).
std::vector<Int> rewrite_in_cover(const FiberCover& c,
                                  const words::GroupWord& w);

/// Action of a mapping class (or any automorphism preserving the cover
/// subgroup, which mod-m kernels always are) on H_1 of the cover.
struct CoverHomologyAction {
  std::shared_ptr<const AbelianCover> cover;
  IntegerMatrix matrix;
};

CoverHomologyAction induced_action(const FiberCover& c,
                                   const words::GroupAutomorphism& phi);

/// Action of x -> k x k^{-1} on H_1 of the cover, for any k in K.
CoverHomologyAction conjugation_action(const FiberCover& c,
                                       const words::GroupWord& k);

}  // namespace fiberscope::covers
