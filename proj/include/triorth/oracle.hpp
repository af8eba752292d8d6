#ifndef TRIORTH_ORACLE_HPP
#define TRIORTH_ORACLE_HPP

// Slow reference implementations for tests. Everything here works on plain
// integer masks and set closures; nothing calls into the elimination code, so
// agreement with the main modules is independent evidence.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "triorth/codes.hpp"
#include "triorth/errors.hpp"
#include "triorth/gf2.hpp"

namespace triorth::oracle {

using Mask = std::uint32_t;

inline constexpr std::size_t max_length = 20;

inline Mask to_mask(const Vector& v) {
  if (v.size() > max_length) throw ResourceError("oracle: vector too long", v.size(), max_length);
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.test(i)) m |= Mask{1} << (v.size() - 1 - i);
  }
  return m;
}

inline bool mask_parity(Mask m) { return std::popcount(m) & 1; }

/// All elements of span(generators), by closure under addition.
inline std::vector<Mask> span_closure(std::size_t n, const std::vector<Mask>& generators) {
  std::vector<bool> in(std::size_t{1} << n, false);
  std::vector<Mask> elems{0};
  in[0] = true;
  for (Mask g : generators) {
    if (in[g]) continue;
    const std::size_t count = elems.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Mask x = elems[i] ^ g;
      in[x] = true;
      elems.push_back(x);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

/// The generating rows of C as masks, straight from its stored basis.
inline std::vector<Mask> generators(const LinearCode& c) {
  std::vector<Mask> g;
  for (const auto& r : c.basis()) g.push_back(to_mask(r));
  return g;
}

inline std::vector<Vector> to_vectors(std::size_t n, const std::vector<Mask>& masks) {
  std::vector<Vector> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(Vector::from_mask(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

/// Every codeword of C, sorted canonically.
inline std::vector<Vector> brute_codewords(const LinearCode& c) {
  if (c.dimension() > 16) throw ResourceError("brute_codewords: dimension above 16", c.dimension(), 16);
  if (c.length() > max_length) throw ResourceError("brute_codewords: length too large", c.length(), max_length);
  std::vector<Mask> gens = generators(c);
  std::vector<Mask> words;
  const std::uint32_t total = std::uint32_t{1} << gens.size();
  for (std::uint32_t s = 0; s < total; ++s) {
    Mask w = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (s & (std::uint32_t{1} << i)) w ^= gens[i];
    }
    words.push_back(w);
  }
  return to_vectors(c.length(), words);
}

inline void require_small(const LinearCode& c, const char* op) {
  if (c.length() > 14 || c.dimension() > 12) {
    throw ResourceError(std::string(op) + ": requires n <= 14 and dim <= 12", c.length(), 14);
  }
}

/// All x in F2^n orthogonal to every codeword, by filtering the whole space.
inline std::vector<Vector> brute_dual(const LinearCode& c) {
  require_small(c, "brute_dual");
  const std::size_t n = c.length();
  std::vector<Mask> words;
  for (const auto& w : brute_codewords(c)) words.push_back(to_mask(w));
  std::vector<Mask> out;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    bool orth = true;
    for (Mask w : words) {
      if (mask_parity(x & w)) {
        orth = false;
        break;
      }
    }
    if (orth) out.push_back(x);
  }
  return to_vectors(n, out);
}

inline std::size_t brute_min_distance(const LinearCode& c) {
  require_small(c, "brute_min_distance");
  std::size_t best = c.length() + 1;
  for (const auto& w : brute_codewords(c)) {
    const auto wt = w.weight();
    if (wt != 0) best = std::min(best, wt);
  }
  if (best > c.length()) throw DomainError("brute_min_distance: zero code");
  return best;
}

/// Span of u*v over all codeword pairs (not just basis pairs).
inline std::vector<Vector> brute_schur_square(const LinearCode& c) {
  require_small(c, "brute_schur_square");
  std::vector<Mask> words;
  for (const auto& w : brute_codewords(c)) words.push_back(to_mask(w));
  std::vector<Mask> products;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) products.push_back(words[i] & words[j]);
  }
  return to_vectors(c.length(), span_closure(c.length(), products));
}

/// Some basis of C (as an unordered set of rows, which is all the definition sees)
/// forms a triorthogonal matrix.
inline bool brute_triorthogonal(const LinearCode& c) {
  if (c.dimension() > 4) throw ResourceError("brute_triorthogonal: dimension above 4", c.dimension(), 4);
  if (c.length() > max_length) throw ResourceError("brute_triorthogonal: length too large", c.length(), max_length);
  const std::size_t k = c.dimension();
  const std::size_t n = c.length();
  std::vector<Mask> nonzero;
  for (const auto& w : brute_codewords(c)) {
    if (!w.is_zero()) nonzero.push_back(to_mask(w));
  }
  const std::size_t target = std::size_t{1} << k;

  std::vector<Mask> pick;
  auto triorthogonal = [&]() {
    for (std::size_t i = 0; i < pick.size(); ++i) {
      for (std::size_t j = i + 1; j < pick.size(); ++j) {
        if (mask_parity(pick[i] & pick[j])) return false;
        for (std::size_t l = j + 1; l < pick.size(); ++l) {
          if (mask_parity(pick[i] & pick[j] & pick[l])) return false;
        }
      }
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t from) -> bool {
    if (pick.size() == k) return span_closure(n, pick).size() == target && triorthogonal();
    for (std::size_t i = from; i < nonzero.size(); ++i) {
      pick.push_back(nonzero[i]);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return recurse(recurse, 0);
}

}  // namespace triorth::oracle

#endif  // TRIORTH_ORACLE_HPP
