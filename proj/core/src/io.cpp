#include "gtmm/io.hpp"

#include <fstream>
#include <sstream>

namespace gtmm::io {

namespace {

std::uint64_t uint_from_json(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    if (v >= 0) return static_cast<std::uint64_t>(v);
  }
  throw ParseError(std::string(what) + " must be a non-negative integer");
}

}  // namespace

json word_of(const Group& g, const Elem& e) {
  switch (g.kind()) {
    case GroupKind::cyclic:
      return e.code;
    case GroupKind::product: {
      const auto parts = g.to_factors(e);
      json out = json::array();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out.push_back(word_of(g.factors()[i], parts[i]));
      }
      return out;
    }
    case GroupKind::symmetric:
      return g.to_images(e);
    case GroupKind::wreath: {
      const auto [parts, images] = g.to_wreath(e);
      json base = json::array();
      for (const Elem& p : parts) base.push_back(word_of(g.wreath_base(), p));
      return json::array({base, images});
    }
  }
  throw ParseError("unreachable group kind");
}

Elem element_from_word(const Group& g, const json& word) {
  switch (g.kind()) {
    case GroupKind::cyclic: {
      const std::uint64_t v = uint_from_json(word, "cyclic word");
      if (v >= g.order()) throw ParseError("cyclic word out of range");
      return g.element(v);
    }
    case GroupKind::product: {
      const auto& factors = g.factors();
      if (!word.is_array() || word.size() != factors.size()) {
        throw ParseError("product word must list one entry per factor");
      }
      std::vector<Elem> parts;
      parts.reserve(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) {
        parts.push_back(element_from_word(factors[i], word[i]));
      }
      return g.from_factors(parts);
    }
    case GroupKind::symmetric: {
      if (!word.is_array()) throw ParseError("permutation word must be an array");
      std::vector<std::uint32_t> images;
      for (const json& v : word) {
        images.push_back(
            static_cast<std::uint32_t>(uint_from_json(v, "image")));
      }
      try {
        return g.from_images(images);
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
    }
    case GroupKind::wreath: {
      if (!word.is_array() || word.size() != 2 || !word[0].is_array() ||
          !word[1].is_array()) {
        throw ParseError("wreath word must be [[base words], [images]]");
      }
      std::vector<Elem> parts;
      for (const json& w : word[0]) {
        parts.push_back(element_from_word(g.wreath_base(), w));
      }
      std::vector<std::uint32_t> images;
      for (const json& v : word[1]) {
        images.push_back(
            static_cast<std::uint32_t>(uint_from_json(v, "image")));
      }
      try {
        return g.from_wreath(parts, images);
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
    }
  }
  throw ParseError("unreachable group kind");
}

namespace {

json subset_to_json(const Group& g, const std::vector<Elem>& subset) {
  json out = json::array();
  for (const Elem& e : subset) out.push_back(word_of(g, e));
  return out;
}

std::vector<Elem> subset_from_json(const Group& g, const json& j,
                                   const char* label) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(std::string(label) + " must be a nonempty array");
  }
  std::vector<Elem> out;
  out.reserve(j.size());
  for (const json& w : j) out.push_back(element_from_word(g, w));
  return out;
}

}  // namespace

json triple_to_json(const SubsetTriple& t) {
  return json{{"S", subset_to_json(t.group(), t.s())},
              {"T", subset_to_json(t.group(), t.t())},
              {"U", subset_to_json(t.group(), t.u())}};
}

SubsetTriple triple_from_json(const Group& g, const json& j) {
  if (!j.is_object() || !j.contains("S") || !j.contains("T") ||
      !j.contains("U")) {
    throw ParseError("triple must be an object with S, T and U");
  }
  try {
    return SubsetTriple(g, subset_from_json(g, j["S"], "S"),
                        subset_from_json(g, j["T"], "T"),
                        subset_from_json(g, j["U"], "U"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json family_to_json(const SimultaneousFamily& f) {
  json triples = json::array();
  for (const SubsetTriple& t : f.triples()) triples.push_back(triple_to_json(t));
  return json{{"triples", triples}};
}

SimultaneousFamily family_from_json(const Group& g, const json& j) {
  std::vector<SubsetTriple> triples;
  if (j.is_object() && j.contains("triples")) {
    if (!j["triples"].is_array() || j["triples"].empty()) {
      throw ParseError("\"triples\" must be a nonempty array");
    }
    for (const json& t : j["triples"]) triples.push_back(triple_from_json(g, t));
  } else {
    triples.push_back(triple_from_json(g, j));
  }
  return SimultaneousFamily(g, std::move(triples));
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& v = m.at(i, j);
      if (v.get_den() == 1 && v.get_num().fits_slong_p()) {
        row.push_back(v.get_num().get_si());
      } else {
        row.push_back(rational_to_string(v));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    throw ParseError("matrix must be a nonempty array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ParseError("ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const json& v = j[r][c];
      if (v.is_number_integer()) {
        m.at(r, c) = rational_from_int(v.get<std::int64_t>());
      } else if (v.is_string()) {
        m.at(r, c) = rational_from_string(v.get<std::string>());
      } else {
        throw ParseError(
            "matrix entries must be integers or \"p/q\" strings");
      }
    }
  }
  return m;
}

json computation_to_json(const BilinearComputation& c) {
  json terms = json::array();
  for (const BilinearTerm& t : c.terms()) {
    terms.push_back(json{{"f", matrix_to_json(t.f)},
                         {"g", matrix_to_json(t.g)},
                         {"w", matrix_to_json(t.w)}});
  }
  return json{{"m", c.shape().m},
              {"p", c.shape().p},
              {"q", c.shape().q},
              {"terms", terms}};
}

BilinearComputation computation_from_json(const json& j,
                                          std::uint32_t verify_trials,
                                          std::uint64_t seed) {
  if (!j.is_object() || !j.contains("m") || !j.contains("p") ||
      !j.contains("q") || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("computation must carry m, p, q and terms");
  }
  const MatMulTensor shape{uint_from_json(j["m"], "m"),
                           uint_from_json(j["p"], "p"),
                           uint_from_json(j["q"], "q")};
  std::vector<BilinearTerm> terms;
  for (const json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("f") || !t.contains("g") ||
        !t.contains("w")) {
      throw ParseError("each term needs f, g and w");
    }
    terms.push_back(BilinearTerm{matrix_from_json(t["f"]),
                                 matrix_from_json(t["g"]),
                                 matrix_from_json(t["w"])});
  }
  BilinearComputation out(shape, std::move(terms));
  if (verify_trials > 0 && !verify_computation(out, verify_trials, seed)) {
    throw ParseError("loaded computation fails verification");
  }
  return out;
}

json bound_report_to_json(const BoundReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json out{{"formula", r.formula},
           {"parameters", params},
           {"omega_bound", r.omega_bound},
           {"flags",
            json{{"vacuous", r.vacuous}, {"hypothetical_k", r.hypothetical_k}}}};
  if (r.residual.has_value()) out["residual"] = *r.residual;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json perm_family_to_json(const PermutationFamily& f) {
  json triples = json::array();
  for (const PermTriple& t : f.triples) {
    triples.push_back(
        json{{"sigma", t.sigma}, {"tau", t.tau}, {"upsilon", t.upsilon}});
  }
  return json{{"degree", f.degree}, {"triples", triples}};
}

PermutationFamily perm_family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("triples")) {
    throw ParseError("permutation family needs degree and triples");
  }
  PermutationFamily out;
  out.degree = static_cast<std::uint32_t>(uint_from_json(j["degree"], "degree"));
  for (const json& t : j["triples"]) {
    PermTriple pt;
    for (const auto& [key, member] :
         {std::pair{"sigma", &PermTriple::sigma},
          std::pair{"tau", &PermTriple::tau},
          std::pair{"upsilon", &PermTriple::upsilon}}) {
      if (!t.contains(key) || !t[key].is_array()) {
        throw ParseError("permutation triple needs sigma, tau, upsilon");
      }
      for (const json& v : t[key]) {
        (pt.*member).push_back(
            static_cast<std::uint32_t>(uint_from_json(v, "image")));
      }
      if (!perm::is_valid(pt.*member)) {
        throw ParseError("invalid permutation images");
      }
    }
    out.triples.push_back(std::move(pt));
  }
  return out;
}

std::uint64_t content_hash(const json& j) {
  const std::string dump = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hash_string(std::uint64_t h) {
  std::ostringstream out;
  out << "0x" << std::hex << h;
  return out.str();
}

}  // namespace

json seal(json body) {
  body["hash"] = hash_string(content_hash(body));
  return body;
}

json unseal(const json& sealed) {
  if (!sealed.is_object() || !sealed.contains("hash")) {
    throw ParseError("missing content hash");
  }
  json body = sealed;
  const std::string want = body["hash"].get<std::string>();
  body.erase("hash");
  if (hash_string(content_hash(body)) != want) {
    throw ParseError("content hash mismatch; file was edited");
  }
  return body;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace gtmm::io
