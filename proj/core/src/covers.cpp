#include "fiberscope/covers.hpp"

#include <algorithm>
#include <map>

#include "fiberscope/parallel.hpp"

namespace fiberscope::covers {

using words::GroupWord;

namespace {

std::vector<int> cyclic_reduce_letters(std::vector<int> l) {
  // free reduce
  std::vector<int> red;
  for (int x : l) {
    if (!red.empty() && red.back() == -x)
      red.pop_back();
    else
      red.push_back(x);
  }
  std::size_t lo = 0, hi = red.size();
  while (hi > lo + 1 && red[lo] == -red[hi - 1]) {
    ++lo;
    --hi;
  }
  return std::vector<int>(red.begin() + lo, red.begin() + hi);
}

}  // namespace

AbelianCover::AbelianCover(std::size_t num_gens,
                           std::optional<GroupWord> relator,
                           std::vector<std::vector<int>> quotient_map, int q,
                           std::size_t index_cap)
    : num_gens_(num_gens), q_(q), map_(std::move(quotient_map)) {
  if (q_ < 1) throw ValidationError("AbelianCover: modulus must be >= 1");
  for (auto& row : map_) {
    if (row.size() != num_gens_)
      throw ValidationError("AbelianCover: quotient map shape mismatch");
    for (int& e : row) e = ((e % q_) + q_) % q_;
  }
  build(relator, index_cap);
}

std::vector<int> AbelianCover::apply_map(
    const std::vector<Int>& exponents) const {
  std::vector<int> v(map_.size(), 0);
  for (std::size_t k = 0; k < map_.size(); ++k) {
    Int acc(0);
    for (std::size_t i = 0; i < num_gens_; ++i)
      acc += Int(map_[k][i]) * exponents[i];
    Int r = acc % q_;
    if (r < 0) r += q_;
    v[k] = int(r.get_si());
  }
  return v;
}

std::size_t AbelianCover::step(std::size_t coset, int letter) const {
  std::size_t gen = std::abs(letter) - 1;
  if (gen >= num_gens_)
    throw ValidationError("AbelianCover::step: letter out of range");
  const std::vector<int>& v = cosets_[coset];
  std::size_t idx = 0;
  for (std::size_t k = 0; k < map_.size(); ++k) {
    int e = v[k] + (letter > 0 ? map_[k][gen] : q_ - map_[k][gen]);
    e %= q_;
    idx = idx * std::size_t(q_) + std::size_t(e);
  }
  return idx;
}

std::size_t AbelianCover::coset_of_word(const GroupWord& w) const {
  std::size_t c = 0;
  for (int x : w.letters()) c = step(c, x);
  return c;
}

bool AbelianCover::contains(const GroupWord& w) const {
  auto v = apply_map(w.exponent_vector(num_gens_));
  for (int e : v)
    if (e != 0) return false;
  return true;
}

std::vector<int> AbelianCover::rewrite_schreier(const GroupWord& w,
                                                std::size_t start) const {
  std::vector<int> out;
  std::size_t c = start;
  for (int x : w.letters()) {
    std::size_t gen = std::abs(x) - 1;
    if (x > 0) {
      long id = gen_index_[c][gen];
      if (id >= 0) out.push_back(int(id) + 1);
      c = step(c, x);
    } else {
      c = step(c, x);
      long id = gen_index_[c][gen];
      if (id >= 0) out.push_back(-(int(id) + 1));
    }
  }
  return out;
}

void AbelianCover::build(const std::optional<GroupWord>& relator,
                         std::size_t index_cap) {
  const std::size_t j = map_.size();
  // guard q^j against the cap
  std::size_t index = 1;
  for (std::size_t k = 0; k < j; ++k) {
    if (index > index_cap / std::size_t(q_) + 1)
      throw ResourceError("AbelianCover: index exceeds configured cap");
    index *= std::size_t(q_);
  }
  if (index > index_cap)
    throw ResourceError("AbelianCover: index exceeds configured cap");

  // cosets in lexicographic order
  cosets_.reserve(index);
  std::vector<int> v(j, 0);
  for (std::size_t c = 0; c < index; ++c) {
    cosets_.push_back(v);
    for (std::size_t k = j; k-- > 0;) {
      if (++v[k] < q_) break;
      v[k] = 0;
    }
  }

  // pilot generator for each quotient coordinate: a column with a lone 1 in
  // that row, so exponent normal forms are prefix-closed Schreier words
  std::vector<std::size_t> pilot(j, num_gens_);
  for (std::size_t k = 0; k < j; ++k) {
    for (std::size_t i = 0; i < num_gens_; ++i) {
      if (map_[k][i] != 1 % q_) continue;
      bool lone = true;
      for (std::size_t k2 = 0; k2 < j && lone; ++k2)
        if (k2 != k && map_[k2][i] != 0) lone = false;
      if (lone) {
        pilot[k] = i;
        break;
      }
    }
    if (q_ > 1 && pilot[k] == num_gens_)
      throw ValidationError(
          "AbelianCover: quotient map has no pilot generator for some "
          "coordinate");
  }

  transversal_.reserve(index);
  for (std::size_t c = 0; c < index; ++c) {
    std::vector<int> letters;
    for (std::size_t k = 0; k < j; ++k)
      for (int rep = 0; rep < cosets_[c][k]; ++rep)
        letters.push_back(int(pilot[k]) + 1);
    transversal_.push_back(GroupWord(std::move(letters)));
  }

  // Schreier generators in (coset, generator) order
  gen_index_.assign(index, std::vector<long>(num_gens_, -1));
  std::size_t tree_edges = 0;
  for (std::size_t c = 0; c < index; ++c) {
    for (std::size_t i = 0; i < num_gens_; ++i) {
      GroupWord s = transversal_[c] * GroupWord::generator(int(i)) *
                    transversal_[step(c, int(i) + 1)].inverse();
      if (s.empty()) {
        ++tree_edges;
        continue;
      }
      gen_index_[c][i] = long(schreier_words_.size());
      schreier_words_.push_back(std::move(s));
    }
  }
  if (tree_edges != index - 1)
    throw Error("AbelianCover: transversal is not a spanning tree");

  const std::size_t n_schreier = schreier_words_.size();

  std::vector<std::size_t> survivors;
  std::vector<std::pair<std::size_t, std::vector<int>>> eliminated;

  if (!relator) {
    survivors.resize(n_schreier);
    for (std::size_t i = 0; i < n_schreier; ++i) survivors[i] = i;
  } else {
    // one rewritten relator per coset
    std::vector<std::vector<int>> rels;
    rels.reserve(index);
    for (std::size_t c = 0; c < index; ++c)
      rels.push_back(cyclic_reduce_letters(rewrite_schreier(*relator, c)));

    std::vector<bool> gone(n_schreier, false);
    while (rels.size() > 1) {
      // candidate: generator occurring exactly once in some relator;
      // smallest generator wins, then smallest relator
      std::size_t best_gen = n_schreier, best_rel = rels.size(),
                  best_pos = 0;
      for (std::size_t r = 0; r < rels.size(); ++r) {
        std::map<std::size_t, std::pair<int, std::size_t>> count;
        for (std::size_t p = 0; p < rels[r].size(); ++p) {
          std::size_t gidx = std::abs(rels[r][p]) - 1;
          auto& e = count[gidx];
          e.first += 1;
          e.second = p;
        }
        for (const auto& [gidx, cp] : count) {
          if (cp.first != 1) continue;
          if (gidx < best_gen || (gidx == best_gen && r < best_rel)) {
            best_gen = gidx;
            best_rel = r;
            best_pos = cp.second;
          }
        }
      }
      if (best_gen == n_schreier)
        throw Error("AbelianCover: relator elimination got stuck");

      const std::vector<int>& r = rels[best_rel];
      int eps = r[best_pos] > 0 ? 1 : -1;
      std::vector<int> u(r.begin(), r.begin() + best_pos);
      std::vector<int> w(r.begin() + best_pos + 1, r.end());
      // u s^eps w = 1  =>  s^eps = u^{-1} w^{-1}
      std::vector<int> expr;
      if (eps > 0) {
        for (auto it = u.rbegin(); it != u.rend(); ++it) expr.push_back(-*it);
        for (auto it = w.rbegin(); it != w.rend(); ++it) expr.push_back(-*it);
      } else {
        expr.insert(expr.end(), w.begin(), w.end());
        expr.insert(expr.end(), u.begin(), u.end());
      }
      gone[best_gen] = true;
      eliminated.emplace_back(best_gen, expr);

      std::vector<std::vector<int>> next;
      next.reserve(rels.size() - 1);
      for (std::size_t r2 = 0; r2 < rels.size(); ++r2) {
        if (r2 == best_rel) continue;
        std::vector<int> sub;
        for (int x : rels[r2]) {
          if (std::size_t(std::abs(x)) - 1 == best_gen) {
            if (x > 0)
              sub.insert(sub.end(), expr.begin(), expr.end());
            else
              for (auto it = expr.rbegin(); it != expr.rend(); ++it)
                sub.push_back(-*it);
          } else {
            sub.push_back(x);
          }
        }
        next.push_back(cyclic_reduce_letters(std::move(sub)));
      }
      rels = std::move(next);
    }

    for (std::size_t i = 0; i < n_schreier; ++i)
      if (!gone[i]) survivors.push_back(i);

    // the remaining relator must abelianize to zero over the survivors
    std::map<std::size_t, long> relsum;
    for (int x : rels[0]) relsum[std::abs(x) - 1] += x > 0 ? 1 : -1;
    for (const auto& [gidx, sum] : relsum) {
      if (sum != 0)
        throw Error("AbelianCover: cover relator has nonzero exponent sum");
    }
  }

  // abelianized expression of every Schreier generator in the basis
  const std::size_t rank = survivors.size();
  std::vector<long> basis_pos(n_schreier, -1);
  for (std::size_t k = 0; k < rank; ++k) basis_pos[survivors[k]] = long(k);

  abelian_vec_.assign(n_schreier, {});
  for (std::size_t k = 0; k < rank; ++k) {
    std::vector<Int> e(rank, Int(0));
    e[k] = 1;
    abelian_vec_[survivors[k]] = std::move(e);
  }
  // expressions may reference generators eliminated later; process in
  // reverse elimination order so dependencies are already resolved
  for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it) {
    std::vector<Int> v(rank, Int(0));
    for (int x : it->second) {
      const auto& sub = abelian_vec_[std::abs(x) - 1];
      if (sub.empty())
        throw Error("AbelianCover: unresolved elimination dependency");
      for (std::size_t k = 0; k < rank; ++k)
        v[k] += x > 0 ? sub[k] : -sub[k];
    }
    abelian_vec_[it->first] = std::move(v);
  }

  basis_words_.reserve(rank);
  for (std::size_t k = 0; k < rank; ++k)
    basis_words_.push_back(schreier_words_[survivors[k]]);
}

std::vector<Int> AbelianCover::rewrite(const GroupWord& w) const {
  if (!contains(w))
    throw MembershipError(
        "rewrite: word does not lie in the cover subgroup (nonzero exponent "
        "vector mod q)");
  std::vector<Int> v(basis_words_.size(), Int(0));
  for (int x : rewrite_schreier(w, 0)) {
    const auto& sub = abelian_vec_[std::abs(x) - 1];
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] += x > 0 ? sub[k] : -sub[k];
  }
  return v;
}

FiberCover mod_m_cover(int genus, int modulus, std::size_t index_cap) {
  if (genus < 2) throw ValidationError("mod_m_cover: genus must be >= 2");
  if (modulus < 1) throw ValidationError("mod_m_cover: modulus must be >= 1");
  const std::size_t n = 2 * std::size_t(genus);
  std::vector<std::vector<int>> idmap(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) idmap[i][i] = 1;
  FiberCover fc;
  fc.genus_base = genus;
  fc.modulus = modulus;
  fc.cover = std::make_shared<AbelianCover>(
      n, words::SurfacePresentation(genus).relator(), idmap, modulus,
      index_cap);
  fc.index = Int(static_cast<unsigned long>(fc.cover->index()));
  std::size_t basis = fc.cover->basis_size();
  if (basis % 2 != 0)
    throw Error("mod_m_cover: odd homology rank");
  fc.cover_genus = int(basis / 2);
  // Euler characteristic cross-check
  Int expect = 1 + fc.index * (genus - 1);
  if (Int(fc.cover_genus) != expect)
    throw Error("mod_m_cover: cover genus disagrees with Euler formula");
  return fc;
}

std::vector<Int> rewrite_in_cover(const FiberCover& c, const GroupWord& w) {
  return c.cover->rewrite(w);
}

CoverHomologyAction induced_action(const FiberCover& c,
                                   const words::GroupAutomorphism& phi) {
  const std::size_t dim = c.cover->basis_size();
  IntegerMatrix m(dim, dim);
  std::vector<std::vector<Int>> cols(dim);
  parallel_for(dim, [&](std::size_t j) {
    cols[j] = c.cover->rewrite(
        words::apply_automorphism(phi, c.cover->basis_words()[j]));
  });
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  return CoverHomologyAction{c.cover, std::move(m)};
}

CoverHomologyAction conjugation_action(const FiberCover& c,
                                       const GroupWord& k) {
  const std::size_t dim = c.cover->basis_size();
  IntegerMatrix m(dim, dim);
  GroupWord kinv = k.inverse();
  std::vector<std::vector<Int>> cols(dim);
  parallel_for(dim, [&](std::size_t j) {
    cols[j] = c.cover->rewrite(k * c.cover->basis_words()[j] * kinv);
  });
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  return CoverHomologyAction{c.cover, std::move(m)};
}

}  // namespace fiberscope::covers
