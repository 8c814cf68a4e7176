#include "mcm/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace mcm {

Json field_to_json(const Field& F) {
    return Json{{"p", F.p()}, {"e", F.e()}, {"modulus", F.modulus()}};
}

Field field_from_json(const Json& j) {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto e = j.at("e").get<std::uint32_t>();
    if (j.contains("modulus"))
        return Field::make(p, e, j.at("modulus").get<std::vector<std::uint32_t>>());
    return Field::make(p, e);
}

Json shape_to_json(const Shape& s) {
    return Json{{"l", s.blocks()}, {"m", s.row_counts()}, {"n", s.col_counts()}};
}

Shape shape_from_json(const Json& j, bool checked) {
    auto m = j.at("m").get<std::vector<std::uint32_t>>();
    auto n = j.at("n").get<std::vector<std::uint32_t>>();
    if (j.contains("l") && j.at("l").get<std::size_t>() != m.size())
        throw std::invalid_argument("shape: l does not match m");
    return checked ? Shape::make(std::move(m), std::move(n))
                   : Shape::unchecked(std::move(m), std::move(n));
}

Json tuple_to_json(const MatrixTuple& C) {
    Json blocks = Json::array();
    for (const Mat& b : C.blocks) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < b.rows; ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < b.cols; ++c) row.push_back(b.at(r, c));
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    return Json{{"shape", shape_to_json(C.shape)}, {"blocks", std::move(blocks)}};
}

MatrixTuple tuple_from_json(const Json& j, bool checked_shape) {
    const Shape s = shape_from_json(j.at("shape"), checked_shape);
    MatrixTuple out = MatrixTuple::zero(s);
    const Json& blocks = j.at("blocks");
    if (blocks.size() != s.blocks()) throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < s.blocks(); ++i) {
        const Json& b = blocks[i];
        if (b.size() != s.m(i)) throw std::invalid_argument("shape mismatch");
        for (std::size_t r = 0; r < s.m(i); ++r) {
            const Json& row = b[r];
            if (row.size() != s.n(i)) throw std::invalid_argument("shape mismatch");
            for (std::size_t c = 0; c < s.n(i); ++c)
                out.blocks[i].at(r, c) = row[c].get<Elem>();
        }
    }
    return out;
}

Json code_to_json(const LinearCode& C) {
    Json gen = Json::array();
    const Mat& G = C.generator();
    for (std::size_t r = 0; r < G.rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < G.cols; ++c) row.push_back(G.at(r, c));
        gen.push_back(std::move(row));
    }
    return Json{{"field", field_to_json(C.field())},
                {"shape", shape_to_json(C.shape())},
                {"generator", std::move(gen)}};
}

LinearCode code_from_json(const Json& j) {
    const Field F = field_from_json(j.at("field"));
    const Shape s = shape_from_json(j.at("shape"), /*checked=*/false);
    std::vector<std::vector<Elem>> rows;
    for (const Json& row : j.at("generator"))
        rows.push_back(row.get<std::vector<Elem>>());
    return LinearCode::make(s, F, rows);
}

std::string big_to_string(const Big& v) { return v.str(); }

std::string canonical_dump(const Json& j, int indent) { return j.dump(indent); }

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file: " + path);
    Json j;
    in >> j;
    return code_from_json(j);
}

void save_code_file(const std::string& path, const LinearCode& C) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open code file: " + path);
    out << canonical_dump(code_to_json(C), 2) << '\n';
}

} // namespace mcm
