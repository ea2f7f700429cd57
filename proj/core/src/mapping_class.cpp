#include "fiberscope/mapping_class.hpp"

#include "fiberscope/linalg.hpp"

namespace fiberscope::mcg {

using words::GroupAutomorphism;
using words::GroupWord;
using words::identity_automorphism;

IntegerMatrix standard_symplectic_form(int genus) {
  const std::size_t n = 2 * std::size_t(genus);
  IntegerMatrix j(n, n);
  for (int k = 0; k < genus; ++k) {
    j.at(2 * k, 2 * k + 1) = 1;
    j.at(2 * k + 1, 2 * k) = -1;
  }
  return j;
}

bool verify_symplectic(const IntegerMatrix& m, int genus) {
  const std::size_t n = 2 * std::size_t(genus);
  if (m.rows() != n || m.cols() != n)
    throw ValidationError("verify_symplectic: matrix size mismatch");
  IntegerMatrix j = standard_symplectic_form(genus);
  return m.transpose() * j * m == j;
}

SymplecticMatrix transvection(int genus, const std::vector<Int>& c) {
  const std::size_t n = 2 * std::size_t(genus);
  if (c.size() != n)
    throw ValidationError("transvection: class vector has wrong length");
  bool zero = true;
  for (const Int& e : c)
    if (e != 0) zero = false;
  if (zero) throw ValidationError("transvection: zero class vector");
  IntegerMatrix j = standard_symplectic_form(genus);
  IntegerMatrix t = IntegerMatrix::identity(n);
  // column j gets <e_j, c> c added
  for (std::size_t col = 0; col < n; ++col) {
    Int pairing(0);
    for (std::size_t k = 0; k < n; ++k) pairing += j.at(col, k) * c[k];
    if (pairing == 0) continue;
    for (std::size_t row = 0; row < n; ++row)
      t.at(row, col) += pairing * c[row];
  }
  return SymplecticMatrix{genus, std::move(t)};
}

namespace {

// letter helpers, 1-based signed encoding: a_i -> 2i-1, b_i -> 2i
int A(int i) { return 2 * i - 1; }
int B(int i) { return 2 * i; }

GroupWord W(std::vector<int> l) { return GroupWord(std::move(l)); }

std::vector<Int> basis_class(int genus, std::initializer_list<std::pair<int, int>>
                                            entries) {
  std::vector<Int> v(2 * std::size_t(genus), Int(0));
  for (auto [letter, coeff] : entries) v[letter - 1] = coeff;
  return v;
}

MappingClass make_twist(int genus, const GroupAutomorphism& phi,
                        std::vector<Int> curve_class, std::string label) {
  MappingClass mc;
  mc.automorphism = phi;
  mc.symplectic =
      SymplecticMatrix{genus, words::abelianize_automorphism(
                                  phi, 2 * std::size_t(genus))};
  mc.label = std::move(label);
  mc.curve_class = std::move(curve_class);
  return mc;
}

// Twist along the curve of class a_i: only b_i moves, b_i -> b_i a_i^{-1}.
GroupAutomorphism twist_alpha(int genus, int i) {
  GroupAutomorphism phi = identity_automorphism(2 * std::size_t(genus));
  phi.images[B(i) - 1] = W({B(i), -A(i)});
  phi.inverse_images[B(i) - 1] = W({B(i), A(i)});
  return phi;
}

// Twist along the curve of class b_i: only a_i moves, a_i -> a_i b_i.
GroupAutomorphism twist_beta(int genus, int i) {
  GroupAutomorphism phi = identity_automorphism(2 * std::size_t(genus));
  phi.images[A(i) - 1] = W({A(i), B(i)});
  phi.inverse_images[A(i) - 1] = W({A(i), -B(i)});
  return phi;
}

// Twist along the connector through handles i and i+1 (class a_i + a_{i+1}).
// Derived from the disk-with-bands picture; fixes the relator exactly and
// satisfies the braid relations with the neighboring b_i, b_{i+1} twists.
GroupAutomorphism twist_gamma(int genus, int i) {
  GroupAutomorphism phi = identity_automorphism(2 * std::size_t(genus));
  const int a = A(i), b = B(i), c = A(i + 1), d = B(i + 1);
  phi.images[a - 1] = W({a, c, a, -c, -a});
  phi.images[b - 1] = W({a, c, -a, -c, b, -c, -a});
  phi.images[c - 1] = W({a, c, -a});
  phi.images[d - 1] = W({d, -c, -a});
  phi.inverse_images[a - 1] = W({-c, a, c});
  phi.inverse_images[b - 1] = W({-c, -a, c, a, b, a, c});
  phi.inverse_images[c - 1] = W({-c, -a, c, a, c});
  phi.inverse_images[d - 1] = W({d, a, c});
  return phi;
}

}  // namespace

MappingClass identity_mapping_class(int genus) {
  MappingClass mc;
  mc.automorphism = identity_automorphism(2 * std::size_t(genus));
  mc.symplectic = SymplecticMatrix{
      genus, IntegerMatrix::identity(2 * std::size_t(genus))};
  mc.label = "id";
  return mc;
}

MappingClass compose(const MappingClass& f, const MappingClass& g) {
  if (f.symplectic.genus != g.symplectic.genus)
    throw ValidationError("compose: genus mismatch");
  MappingClass mc;
  mc.automorphism = words::compose(f.automorphism, g.automorphism);
  mc.symplectic = SymplecticMatrix{
      f.symplectic.genus, f.symplectic.matrix * g.symplectic.matrix};
  mc.label = f.label + "*" + g.label;
  return mc;
}

MappingClass inverse(const MappingClass& f) {
  MappingClass mc;
  mc.automorphism = words::inverse(f.automorphism);
  mc.symplectic =
      SymplecticMatrix{f.symplectic.genus,
                       words::abelianize_automorphism(
                           mc.automorphism, 2 * std::size_t(f.symplectic.genus))};
  mc.label = f.label + "^-1";
  return mc;
}

std::vector<MappingClass> humphries_twists(int genus) {
  if (genus < 2)
    throw ValidationError("humphries_twists: genus must be >= 2");
  std::vector<MappingClass> out;
  out.reserve(2 * genus + 1);
  // chain, with signs normalized so consecutive classes pair to +1
  out.push_back(make_twist(genus, twist_alpha(genus, 1),
                           basis_class(genus, {{A(1), 1}}), "t_c1"));
  int k = 2;
  for (int i = 1; i <= genus; ++i) {
    int sb = (i % 2 == 1) ? 1 : -1;
    out.push_back(make_twist(genus, twist_beta(genus, i),
                             basis_class(genus, {{B(i), sb}}),
                             "t_c" + std::to_string(k++)));
    if (i < genus) {
      int sg = (i % 2 == 1) ? -1 : 1;
      out.push_back(make_twist(
          genus, twist_gamma(genus, i),
          basis_class(genus, {{A(i), sg}, {A(i + 1), sg}}),
          "t_c" + std::to_string(k++)));
    }
  }
  out.push_back(make_twist(genus, twist_alpha(genus, 2),
                           basis_class(genus, {{A(2), 1}}), "t_c0"));
  return out;
}

MappingClass chain_periodic_element(int genus) {
  if (genus < 2)
    throw ValidationError("chain_periodic_element: genus must be >= 2");
  auto twists = humphries_twists(genus);
  MappingClass chain = twists[0];
  for (int i = 1; i < 2 * genus; ++i) chain = compose(chain, twists[i]);
  chain.label = "chain_g" + std::to_string(genus);
  return chain;
}

KorkmazPair korkmaz_pair(int genus) {
  if (genus < 3)
    throw ValidationError("korkmaz_pair: requires genus >= 3");
  KorkmazPair pair;
  pair.x = chain_periodic_element(genus);
  pair.x.label = "korkmaz_x";
  auto twists = humphries_twists(genus);
  pair.delta = twists[0];  // nonseparating twist t_{c_1}
  pair.delta.label = "korkmaz_delta";
  pair.y = compose(compose(pair.delta, pair.x), inverse(pair.delta));
  pair.y.label = "korkmaz_y";
  return pair;
}

bool verify_mapping_class(const MappingClass& mc) {
  const int g = mc.symplectic.genus;
  if (!words::verify_surface_automorphism(mc.automorphism, g)) return false;
  if (words::abelianize_automorphism(mc.automorphism, 2 * std::size_t(g)) !=
      mc.symplectic.matrix)
    return false;
  return verify_symplectic(mc.symplectic.matrix, g);
}

}  // namespace fiberscope::mcg
