#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oplat/lattice.hpp"

namespace oplat {

/// Raised for malformed problem files and inconsistent dimensions; the CLI
/// maps it to exit code 2.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// Scalars travel as canonical strings, matrices as arrays of arrays of
// such strings, vectors as flat arrays, subspaces as arrays of basis rows.
json scalar_to_json(const Scalar& s);
json vector_to_json(const Vector& v);
json matrix_to_json(const Matrix& m);
json subspace_to_json(const Subspace& s);

Scalar scalar_from_json(const json& j, Field field);
Vector vector_from_json(const json& j, Field field);
Matrix matrix_from_json(const json& j, Field field);

/// Nest formats: {"type":"coordinate","dims":[d1,...]} with the spans of
/// leading standard basis vectors, or {"type":"explicit","subspaces":[...]}
/// with basis rows per element; 0 and I are implied. The lattice format is
/// identical with unordered elements.
Nest nest_from_json(const json& j, std::size_t ambient_dim, Field field);
SubspaceLattice lattice_from_json(const json& j, std::size_t ambient_dim, Field field);

/// Parsed problem file; dimensions are cross-validated at parse time.
struct ProblemFile {
    Field field = Field::Rationals;
    std::optional<Matrix> matrix;
    std::optional<Nest> nest;
    std::optional<SubspaceLattice> lattice;
    std::vector<Matrix> generators;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
};

ProblemFile problem_from_json(const json& j, std::optional<Field> field_override = {});

/// FNV-1a 64-bit digest of the raw input bytes, hex encoded.
std::string input_digest(const std::string& bytes);

}  // namespace oplat
