#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gtmm/group.hpp"
#include "gtmm/tpp.hpp"

namespace gtmm::test {

inline std::vector<Elem> elems(const Group& g,
                               std::initializer_list<std::uint64_t> codes) {
  std::vector<Elem> out;
  for (std::uint64_t c : codes) out.push_back(g.element(c));
  return out;
}

// Literal sextuple-loop oracle for the simultaneous property, independent
// of the quotient-set implementation under test.
inline std::optional<StppWitness> stpp_violation_oracle(
    const SimultaneousFamily& f) {
  const Group& g = f.group();
  const Elem one = g.identity();
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (const Elem& si : f.triples()[i].s()) {
          for (const Elem& sj : f.triples()[j].s()) {
            const Elem a = g.mul(si, g.inv(sj));
            for (const Elem& tj : f.triples()[j].t()) {
              for (const Elem& tk : f.triples()[k].t()) {
                const Elem b = g.mul(a, g.mul(tj, g.inv(tk)));
                for (const Elem& uk : f.triples()[k].u()) {
                  for (const Elem& ui : f.triples()[i].u()) {
                    if (g.mul(b, g.mul(uk, g.inv(ui))) == one &&
                        !(i == j && j == k && si == sj && tj == tk &&
                          uk == ui)) {
                      return StppWitness{i, j, k, si, sj, tj, tk, uk, ui};
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Checks that a reported witness actually violates the property.
inline bool tpp_witness_valid(const Group& g, const TppWitness& w) {
  const Elem product = g.mul(
      g.mul(w.s_prime, g.inv(w.s)),
      g.mul(g.mul(w.t_prime, g.inv(w.t)), g.mul(w.u_prime, g.inv(w.u))));
  return product == g.identity() &&
         !(w.s_prime == w.s && w.t_prime == w.t && w.u_prime == w.u);
}

inline bool stpp_witness_valid(const SimultaneousFamily& f,
                               const StppWitness& w) {
  const Group& g = f.group();
  const Elem product =
      g.mul(g.mul(w.s_i, g.inv(w.s_j)),
            g.mul(g.mul(w.t_j, g.inv(w.t_k)), g.mul(w.u_k, g.inv(w.u_i))));
  return product == g.identity() &&
         !(w.i == w.j && w.j == w.k && w.s_i == w.s_j && w.t_j == w.t_k &&
           w.u_k == w.u_i);
}

}  // namespace gtmm::test
