#include <lattice/document.hpp>

#include <json.hpp>

namespace lattice {

using nlohmann::json;

ComplexDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("complex document must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "ambient_dim" && key != "vertices" && key != "maximal_simplices")
      throw ParseError("unexpected key '" + key + "' in complex document");
  for (const char* key : {"ambient_dim", "vertices", "maximal_simplices"})
    if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");

  ComplexDocument doc;
  const json& dim = j["ambient_dim"];
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 0)
    throw ParseError("ambient_dim must be a nonnegative integer");
  doc.ambient_dim = dim.get<std::size_t>();

  const json& verts = j["vertices"];
  if (!verts.is_array()) throw ParseError("vertices must be an array");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const json& v = verts[i];
    if (!v.is_array() || v.size() != doc.ambient_dim)
      throw ParseError("vertex " + std::to_string(i) + " must have " +
                       std::to_string(doc.ambient_dim) + " coordinates");
    std::vector<std::int64_t> coords;
    for (const json& c : v) {
      if (!c.is_number_integer())
        throw ParseError("vertex " + std::to_string(i) + " has a non-integer coordinate");
      if (c.is_number_unsigned() && c.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxSafeInteger))
        throw ParseError("vertex " + std::to_string(i) + " coordinate exceeds 2^53-1");
      const auto x = c.get<std::int64_t>();
      if (x > kMaxSafeInteger || x < -kMaxSafeInteger)
        throw ParseError("vertex " + std::to_string(i) + " coordinate exceeds 2^53-1 in magnitude");
      coords.push_back(x);
    }
    doc.vertices.push_back(std::move(coords));
  }

  const json& simplices = j["maximal_simplices"];
  if (!simplices.is_array()) throw ParseError("maximal_simplices must be an array");
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const json& s = simplices[i];
    if (!s.is_array() || s.empty())
      throw ParseError("maximal simplex " + std::to_string(i) + " must be a nonempty array");
    std::vector<std::size_t> idx;
    for (const json& v : s) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
          v.get<std::uint64_t>() >= doc.vertices.size())
        throw ParseError("maximal simplex " + std::to_string(i) + " has an invalid vertex index");
      idx.push_back(v.get<std::size_t>());
    }
    doc.maximal_simplices.push_back(std::move(idx));
  }
  return doc;
}

std::string serialize(const ComplexDocument& doc) {
  json j;
  j["ambient_dim"] = doc.ambient_dim;
  j["vertices"] = json::array();
  for (const auto& v : doc.vertices) j["vertices"].push_back(v);
  j["maximal_simplices"] = json::array();
  for (const auto& s : doc.maximal_simplices) j["maximal_simplices"].push_back(s);
  return j.dump();
}

SimplicialComplex load_complex(const ComplexDocument& doc) {
  std::vector<LatticePoint> vertices;
  vertices.reserve(doc.vertices.size());
  for (const auto& v : doc.vertices) {
    if (v.size() != doc.ambient_dim) throw ParseError("vertex length differs from ambient_dim");
    std::vector<Integer> c;
    for (std::int64_t x : v) c.emplace_back(static_cast<long>(x));
    vertices.emplace_back(std::move(c));
  }
  SimplicialComplex c;
  try {
    c = close_under_faces(doc.maximal_simplices, std::move(vertices), doc.ambient_dim);
  } catch (const ValidationError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
  const ValidationReport rep = validate(c);
  if (!rep.ok()) {
    std::string msg = "invalid simplicial complex:";
    for (const auto& p : rep.problems) msg += " " + p + ";";
    msg.pop_back();
    throw ValidationError(msg);
  }
  return c;
}

ComplexDocument to_document(const SimplicialComplex& c) {
  ComplexDocument doc;
  doc.ambient_dim = c.ambient_dim();
  for (const auto& v : c.vertices()) {
    std::vector<std::int64_t> coords;
    for (const auto& x : v.coords) {
      const auto y = to_int64(x);
      if (!y || *y > kMaxSafeInteger || *y < -kMaxSafeInteger)
        throw InputError("vertex coordinate does not fit a JSON-safe integer");
      coords.push_back(*y);
    }
    doc.vertices.push_back(std::move(coords));
  }
  for (const auto& f : c.maximal_faces()) doc.maximal_simplices.push_back(f);
  return doc;
}

}  // namespace lattice
