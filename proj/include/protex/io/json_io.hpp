#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <protex/errors.hpp>
#include <protex/weighted/map.hpp>

namespace protex {

using json = nlohmann::json;

// Parses a JSON document; syntax errors become parse_error with line and column.
json parse_json_text(const std::string& text, const std::string& source);
json load_json_file(const std::string& path);

// Which scalar type a field description selects.
struct FieldSpec {
    std::string scalar;   // "F2", "F3", "F5" or "Q"
    unsigned prime = 0;   // nonzero for the p-adic rationals
};

FieldSpec parse_field_spec(const json& j, const std::string& path = "/field");

inline json magnitude_json(const Magnitude& m) { return m.str(); }

inline Magnitude parse_magnitude(const json& j, const std::string& path) {
    if (!j.is_string()) throw parse_error(path + ": expected a magnitude string such as \"0\" or \"g^1/2\"");
    try {
        return Magnitude::parse(j.get<std::string>());
    }
    catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

template <typename S>
json field_json(const ValuedField<S>& f) {
    if (f.is_padic()) return {{"padic", f.prime()}};
    return {{"trivial", scalar_traits<S>::name()}};
}

template <typename S>
ValuedField<S> parse_field(const json& j, const std::string& path = "/field") {
    auto spec = parse_field_spec(j, path);
    if (spec.scalar != scalar_traits<S>::name()) throw parse_error(path + ": expected a field over " + scalar_traits<S>::name() + ", got " + spec.scalar);
    if (spec.prime) {
        if constexpr (scalar_traits<S>::is_finite) throw parse_error(path + ": finite fields carry only the trivial absolute value");
        else return ValuedField<S>::padic(spec.prime);
    }
    return ValuedField<S>::trivial();
}

template <typename S>
json scalar_json(const S& x) { return scalar_traits<S>::format(x); }

template <typename S>
S parse_scalar(const json& j, const std::string& path) {
    if (j.is_number_integer()) return parse_scalar<S>(json(std::to_string(j.get<long long>())), path);
    if (!j.is_string()) throw parse_error(path + ": expected a field element string");
    try {
        return scalar_traits<S>::parse(j.get<std::string>());
    }
    catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

template <typename S>
json space_json(const WeightedSpace<S>& x) {
    json w = json::array();
    for (auto& m: x.weights()) w.push_back(magnitude_json(m));
    json j{{"field", field_json(x.field())}, {"weights", w}};
    if (!x.label().empty()) j["label"] = x.label();
    return j;
}

inline const json& member(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw parse_error((path.empty()? "/": path) + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw parse_error((path.empty()? "/": path) + ": missing field '" + key + "'");
    return *it;
}

template <typename S>
WeightedSpace<S> parse_space(const json& j, const std::string& path = "") {
    auto field = parse_field<S>(member(j, "field", path), path + "/field");
    const auto& w = member(j, "weights", path);
    if (!w.is_array()) throw parse_error(path + "/weights: expected an array");
    std::vector<Magnitude> weights;
    for (std::size_t i = 0; i < w.size(); ++i) weights.push_back(parse_magnitude(w[i], path + "/weights/" + std::to_string(i)));
    std::string label;
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw parse_error(path + "/label: expected a string");
        label = j["label"].get<std::string>();
    }
    return WeightedSpace<S>(field, std::move(weights), std::move(label));
}

template <typename S>
json matrix_json(const Mat<S>& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (Index j = 0; j < m.cols(); ++j) r.push_back(scalar_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

template <typename S>
Mat<S> parse_matrix(const json& j, Index rows, Index cols, const std::string& path) {
    if (!j.is_array()) throw parse_error(path + ": expected an array of rows");
    if (Index(j.size()) != rows) throw parse_error(path + ": expected " + std::to_string(rows) + " rows (codomain dimension), got " + std::to_string(j.size()));
    Mat<S> m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const auto& r = j[std::size_t(i)];
        auto rp = path + "/" + std::to_string(i);
        if (!r.is_array()) throw parse_error(rp + ": expected an array of entries");
        if (Index(r.size()) != cols) throw parse_error(rp + ": expected " + std::to_string(cols) + " entries (domain dimension), got " + std::to_string(r.size()));
        for (Index c = 0; c < cols; ++c) m(i, c) = parse_scalar<S>(r[std::size_t(c)], rp + "/" + std::to_string(c));
    }
    return m;
}

template <typename S>
json map_json(const BoundedMap<S>& f) {
    return {{"domain", space_json(f.dom())}, {"codomain", space_json(f.cod())}, {"matrix", matrix_json(f.matrix())}};
}

// Invariant violations of the constructed map are rethrown with the path prefixed.
template <typename S>
BoundedMap<S> parse_map(const json& j, const std::string& path = "") {
    auto dom = parse_space<S>(member(j, "domain", path), path + "/domain");
    auto cod = parse_space<S>(member(j, "codomain", path), path + "/codomain");
    auto m = parse_matrix<S>(member(j, "matrix", path), cod.dim(), dom.dim(), path + "/matrix");
    try {
        return BoundedMap<S>(dom, cod, std::move(m));
    }
    catch (const invariant_violation& e) {
        throw invariant_violation((path.empty()? std::string("/"): path) + ": " + e.what());
    }
}

template <typename S>
json vector_json(const Vec<S>& v) {
    json a = json::array();
    for (Index i = 0; i < v.size(); ++i) a.push_back(scalar_json(v(i)));
    return a;
}

template <typename S>
Vec<S> parse_vector(const json& j, Index dim, const std::string& path) {
    if (!j.is_array()) throw parse_error(path + ": expected an array of field elements");
    if (Index(j.size()) != dim) throw parse_error(path + ": expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
    Vec<S> v(dim);
    for (Index i = 0; i < dim; ++i) v(i) = parse_scalar<S>(j[std::size_t(i)], path + "/" + std::to_string(i));
    return v;
}

} // namespace protex
