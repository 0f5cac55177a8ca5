#include "gtmm/algebra.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace gtmm {

namespace {

const Rational& zero() {
  static const Rational z = 0;
  return z;
}

void require_dims(const RationalMatrix& m, std::size_t rows, std::size_t cols,
                  const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DomainError(std::string(what) + " must be " + std::to_string(rows) +
                      "x" + std::to_string(cols) + ", got " +
                      std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()));
  }
}

AlgebraElement embed(const Group& g, std::span<const Elem> rows,
                     std::span<const Elem> cols, const RationalMatrix& m,
                     const char* what) {
  require_dims(m, rows.size(), cols.size(), what);
  AlgebraElement out(g);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Elem row_inv = g.inv(rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Rational& c = m.at(i, j);
      if (c == 0) continue;
      out.add_term(g.mul(row_inv, cols[j]), c);
    }
  }
  return out;
}

}  // namespace

AlgebraElement::AlgebraElement(Group group) : group_(std::move(group)) {}

const Rational& AlgebraElement::coefficient(const Elem& e) const {
  if (!group_.owns(e)) {
    throw InstanceMismatchError("coefficient of a foreign element");
  }
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e.code,
      [](const auto& term, std::uint64_t code) { return term.first < code; });
  if (it == terms_.end() || it->first != e.code) return zero();
  return it->second;
}

void AlgebraElement::add_term(const Elem& e, const Rational& c) {
  if (!group_.owns(e)) {
    throw InstanceMismatchError("term element of a foreign group");
  }
  if (c == 0) return;
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e.code,
      [](const auto& term, std::uint64_t code) { return term.first < code; });
  if (it != terms_.end() && it->first == e.code) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {e.code, c});
  }
}

std::vector<std::pair<Elem, Rational>> AlgebraElement::sorted_terms() const {
  std::vector<std::pair<Elem, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& [code, c] : terms_) {
    out.emplace_back(Elem{group_.instance_id(), code}, c);
  }
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.group_ == b.group_ && a.terms_ == b.terms_;
}

AlgebraElement embed_left(const Group& g, std::span<const Elem> s,
                          std::span<const Elem> t, const RationalMatrix& a) {
  return embed(g, s, t, a, "left matrix");
}

AlgebraElement embed_right(const Group& g, std::span<const Elem> t,
                           std::span<const Elem> u, const RationalMatrix& b) {
  return embed(g, t, u, b, "right matrix");
}

AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y,
                           OpCount* ops) {
  if (!(x.group() == y.group())) {
    throw InstanceMismatchError("algebra product across group instances");
  }
  const Group& g = x.group();
  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(x.terms_.size() * 2);
  std::uint64_t mults = 0;
  for (const auto& [ca, va] : x.terms_) {
    const Elem ea{g.instance_id(), ca};
    for (const auto& [cb, vb] : y.terms_) {
      acc[g.mul(ea, Elem{g.instance_id(), cb}).code] += va * vb;
      ++mults;
    }
  }
  if (ops != nullptr) ops->scalar_mults += mults;
  AlgebraElement out(g);
  out.terms_.reserve(acc.size());
  for (auto& [code, c] : acc) {
    if (c != 0) out.terms_.emplace_back(code, std::move(c));
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

RationalMatrix extract_product(const AlgebraElement& z,
                               std::span<const Elem> s,
                               std::span<const Elem> u) {
  if (s.empty() || u.empty()) {
    throw DomainError("extraction needs nonempty index subsets");
  }
  const Group& g = z.group();
  RationalMatrix m(s.size(), u.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Elem row_inv = g.inv(s[i]);
    for (std::size_t j = 0; j < u.size(); ++j) {
      m.at(i, j) = z.coefficient(g.mul(row_inv, u[j]));
    }
  }
  return m;
}

namespace {

// Injectivity of (s, t) -> s^{-1} t over one block; guaranteed by the
// triple product property, asserted cheaply here.
void require_injective(const Group& g, std::span<const Elem> rows,
                       std::span<const Elem> cols, const char* what) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(rows.size() * cols.size());
  for (const Elem& r : rows) {
    const Elem r_inv = g.inv(r);
    for (const Elem& c : cols) {
      if (!seen.insert(g.mul(r_inv, c).code).second) {
        throw DomainError(std::string(what) +
                          " embedding is not injective; the property "
                          "check should have failed");
      }
    }
  }
}

}  // namespace

RationalMatrix realize_product(const SubsetTriple& t, const RationalMatrix& a,
                               const RationalMatrix& b, OpCount* ops) {
  if (!t.tpp_verified()) {
    throw UnverifiedError(
        "realize_product requires a triple that passed tpp_check");
  }
  const auto [m, p, q] = t.sizes();
  require_dims(a, m, p, "left matrix");
  require_dims(b, p, q, "right matrix");
  const Group& g = t.group();
  require_injective(g, t.s(), t.t(), "S x T");
  const AlgebraElement za = embed_left(g, t.s(), t.t(), a);
  const AlgebraElement zb = embed_right(g, t.t(), t.u(), b);
  return extract_product(algebra_mul(za, zb, ops), t.s(), t.u());
}

namespace {

// The packed reads are exact iff no off-block chain can land on a block's
// read positions: for every i and (j, k) != (i, i), at least one of
// S_i & S_j, T_j & T_k, U_k & U_i must be empty. All families constructed
// in this library have pairwise disjoint S, T and U lists, which implies
// this; degenerate hand-built families that pass the simultaneous check but
// overlap are refused rather than silently mis-read.
void require_block_independence(const SimultaneousFamily& f) {
  const std::size_t n = f.size();
  auto codes = [](const std::vector<Elem>& v) {
    std::unordered_set<std::uint64_t> out;
    out.reserve(v.size());
    for (const Elem& e : v) out.insert(e.code);
    return out;
  };
  auto intersects = [](const std::unordered_set<std::uint64_t>& a,
                       const std::unordered_set<std::uint64_t>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (std::uint64_t c : small) {
      if (large.contains(c)) return true;
    }
    return false;
  };
  std::vector<std::unordered_set<std::uint64_t>> s(n), t(n), u(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = codes(f.triples()[i].s());
    t[i] = codes(f.triples()[i].t());
    u[i] = codes(f.triples()[i].u());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (j == i && k == i) continue;
        if (intersects(s[i], s[j]) && intersects(t[j], t[k]) &&
            intersects(u[k], u[i])) {
          throw DomainError(
              "family blocks overlap; packed products would not separate");
        }
      }
    }
  }
}

}  // namespace

std::vector<RationalMatrix> realize_simultaneous(
    const SimultaneousFamily& f, std::span<const MatrixPair> pairs,
    OpCount* ops) {
  if (f.status() != FamilyStatus::stpp) {
    throw UnverifiedError(
        "realize_simultaneous requires a family that passed stpp_check");
  }
  if (pairs.size() != f.size()) {
    throw DomainError("expected one matrix pair per family triple");
  }
  const Group& g = f.group();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [m, p, q] = f.triples()[i].sizes();
    require_dims(pairs[i].a, m, p, "left matrix");
    require_dims(pairs[i].b, p, q, "right matrix");
  }
  require_block_independence(f);

  AlgebraElement za(g), zb(g);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const SubsetTriple& t = f.triples()[i];
    for (std::size_t r = 0; r < t.s().size(); ++r) {
      const Elem row_inv = g.inv(t.s()[r]);
      for (std::size_t c = 0; c < t.t().size(); ++c) {
        za.add_term(g.mul(row_inv, t.t()[c]), pairs[i].a.at(r, c));
      }
    }
    for (std::size_t r = 0; r < t.t().size(); ++r) {
      const Elem row_inv = g.inv(t.t()[r]);
      for (std::size_t c = 0; c < t.u().size(); ++c) {
        zb.add_term(g.mul(row_inv, t.u()[c]), pairs[i].b.at(r, c));
      }
    }
  }
  const AlgebraElement z = algebra_mul(za, zb, ops);
  std::vector<RationalMatrix> out;
  out.reserve(f.size());
  for (const SubsetTriple& t : f.triples()) {
    out.push_back(extract_product(z, t.s(), t.u()));
  }
  return out;
}

}  // namespace gtmm
