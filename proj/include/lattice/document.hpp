#pragma once

#include <lattice/complex.hpp>
#include <lattice/error.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lattice {

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// JSON object with exactly the keys ambient_dim, vertices, maximal_simplices.
struct ComplexDocument {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<std::int64_t>> vertices;
  std::vector<std::vector<std::size_t>> maximal_simplices;

  friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

// Largest coordinate magnitude exactly representable as a JSON number.
inline constexpr std::int64_t kMaxSafeInteger = (std::int64_t{1} << 53) - 1;

ComplexDocument parse_document(std::string_view text);
std::string serialize(const ComplexDocument& doc);

// Closes under faces and validates. Throws ParseError for index and shape
// problems, ValidationError (naming the failing face or pair) otherwise.
SimplicialComplex load_complex(const ComplexDocument& doc);

// Maximal faces in sorted order, vertex list as stored.
ComplexDocument to_document(const SimplicialComplex& c);

}  // namespace lattice
