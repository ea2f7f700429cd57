#pragma once

#include <string>
#include <vector>

#include "fiberscope/matrix.hpp"
#include "fiberscope/words.hpp"

namespace fiberscope::mcg {

/// 2g x 2g integer matrix preserving the standard symplectic form
/// <a_i, b_i> = +1 (basis order a_1, b_1, ..., a_g, b_g).
struct SymplecticMatrix {
  int genus = 0;
  IntegerMatrix matrix;
};

/// The standard form J with <a_i, b_i> = 1 and all other basis pairings 0.
IntegerMatrix standard_symplectic_form(int genus);

/// M^T J M = J, checked exactly.
bool verify_symplectic(const IntegerMatrix& m, int genus);

/// Symplectic transvection along c: x -> x + <x, c> c. Rejects c = 0.
SymplecticMatrix transvection(int genus, const std::vector<Int>& c);

/// A mapping class in Mod_g^1, carried as an explicit surface-group
/// automorphism together with its symplectic image and the homology class of
/// the twisting curve (for twist generators).
struct MappingClass {
  words::GroupAutomorphism automorphism;
  SymplecticMatrix symplectic;
  std::string label;
  std::vector<Int> curve_class;  // empty for composite classes
};

MappingClass identity_mapping_class(int genus);
MappingClass compose(const MappingClass& f, const MappingClass& g);
MappingClass inverse(const MappingClass& f);

/// The 2g+1 twist generators, hardcoded generator-image tables.
/// Ordering: the 2g chain twists t_{c_1}, ..., t_{c_{2g}} (consecutive curves
/// intersecting once, all other chain pairings zero), then the extra twist
/// t_{c_0} whose curve meets only c_4. Homology classes of the chain:
/// c_1 = a_1, c_{2i} = +-b_i, c_{2i+1} = +-(a_i + a_{i+1}), signs normalized
/// so that <c_i, c_{i+1}> = +1; c_0 = a_2.
std::vector<MappingClass> humphries_twists(int genus);

/// t_{c_1} o t_{c_2} o ... o t_{c_{2g}}. Its symplectic image has order
/// exactly 4g+2 and determinant-nonzero (Phi - I), i.e. rank-zero rational
/// coinvariants.
MappingClass chain_periodic_element(int genus);

struct KorkmazPair {
  MappingClass x;
  MappingClass y;
  MappingClass delta;
};

/// x the periodic chain element, delta a nonseparating twist, y = delta o x
/// o delta^{-1}; both x and y have symplectic order 4g+2. Requires g >= 3.
KorkmazPair korkmaz_pair(int genus);

/// Both MappingClass invariants: stored symplectic image equals the
/// abelianization, and the automorphism passes verify_surface_automorphism.
bool verify_mapping_class(const MappingClass& mc);

}  // namespace fiberscope::mcg
