#include "oplat/json_io.hpp"

namespace oplat {

json scalar_to_json(const Scalar& s) { return s.str(); }

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(scalar_to_json(v[i]));
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

Scalar scalar_from_json(const json& j, Field field) {
    try {
        if (j.is_number_integer()) return Scalar(j.get<long>());
        if (j.is_string()) return Scalar::parse(j.get<std::string>(), field);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    throw InputError("scalar entries must be strings like \"p/q\" or integers");
}

Vector vector_from_json(const json& j, Field field) {
    if (!j.is_array()) throw InputError("vector must be an array of scalars");
    Vector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(j[i], field);
    return v;
}

Matrix matrix_from_json(const json& j, Field field) {
    if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
    std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw InputError("matrix rows must be nonempty arrays");
    Matrix m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        Vector row = vector_from_json(j[i], field);
        if (row.dim() != cols) throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
    }
    return m;
}

namespace {

std::vector<Subspace> family_from_json(const json& j, std::size_t ambient_dim, Field field) {
    std::vector<Subspace> elements;
    elements.push_back(Subspace::zero(ambient_dim));
    elements.push_back(Subspace::full(ambient_dim));
    if (!j.is_object() || !j.contains("type"))
        throw InputError("nest/lattice must be an object with a \"type\"");
    std::string type = j.at("type").get<std::string>();
    if (type == "coordinate") {
        for (const auto& dj : j.at("dims")) {
            std::size_t d = dj.get<std::size_t>();
            if (d > ambient_dim) throw InputError("coordinate dimension exceeds ambient");
            Matrix rows(d, ambient_dim);
            for (std::size_t i = 0; i < d; ++i) rows(i, i) = Scalar(1);
            elements.push_back(Subspace::span_rows(rows));
        }
    } else if (type == "explicit") {
        for (const auto& sj : j.at("subspaces")) {
            if (!sj.is_array()) throw InputError("explicit subspace must be an array of rows");
            if (sj.empty()) continue;  // the zero subspace; implied anyway
            Matrix rows = matrix_from_json(sj, field);
            if (rows.cols() != ambient_dim)
                throw InputError("subspace row length disagrees with ambient dimension");
            elements.push_back(Subspace::span_rows(rows));
        }
    } else {
        throw InputError("unknown nest/lattice type '" + type + "'");
    }
    return elements;
}

}  // namespace

Nest nest_from_json(const json& j, std::size_t ambient_dim, Field field) {
    try {
        return Nest(ambient_dim, family_from_json(j, ambient_dim, field));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

SubspaceLattice lattice_from_json(const json& j, std::size_t ambient_dim, Field field) {
    try {
        return SubspaceLattice(ambient_dim, family_from_json(j, ambient_dim, field));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

ProblemFile problem_from_json(const json& j, std::optional<Field> field_override) {
    if (!j.is_object()) throw InputError("problem file must be a JSON object");
    ProblemFile p;
    if (field_override) {
        p.field = *field_override;
    } else if (j.contains("field")) {
        try {
            p.field = field_from_name(j.at("field").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    if (j.contains("matrix")) p.matrix = matrix_from_json(j.at("matrix"), p.field);
    if (j.contains("generators"))
        for (const auto& gj : j.at("generators"))
            p.generators.push_back(matrix_from_json(gj, p.field));

    // The ambient dimension comes from the operator data.
    std::optional<std::size_t> dim;
    if (p.matrix) {
        if (!p.matrix->is_square()) throw InputError("operator matrix must be square");
        dim = p.matrix->rows();
    }
    for (const auto& g : p.generators) {
        if (!g.is_square()) throw InputError("generator matrices must be square");
        if (dim && g.rows() != *dim) throw InputError("generator dimension mismatch");
        if (!dim) dim = g.rows();
    }
    if (j.contains("nest") || j.contains("lattice")) {
        if (!dim) throw InputError("a matrix or generators are needed to fix the dimension");
        if (j.contains("nest")) p.nest = nest_from_json(j.at("nest"), *dim, p.field);
        if (j.contains("lattice"))
            p.lattice = lattice_from_json(j.at("lattice"), *dim, p.field);
    }
    if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) {
        int s = j.at("samples").get<int>();
        if (s < 0) throw InputError("samples must be nonnegative");
        p.samples = s;
    }
    return p;
}

std::string input_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(hex[(h >> shift) & 0xf]);
    return out;
}

}  // namespace oplat
