#include <protex/io/json_io.hpp>

#include <fstream>
#include <sstream>

namespace protex {

json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            }
            else ++col;
        }
        std::string what = e.what();
        auto colon = what.find("]");
        throw parse_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON" +
                          (colon == std::string::npos? "": what.substr(colon + 1)));
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

FieldSpec parse_field_spec(const json& j, const std::string& path) {
    if (!j.is_object() || j.size() != 1) throw parse_error(path + ": expected {\"padic\": p} or {\"trivial\": \"F2\"|\"F3\"|\"F5\"|\"Q\"}");
    if (j.contains("padic")) {
        const auto& p = j["padic"];
        if (!p.is_number_integer() || p.get<long long>() < 2 || p.get<long long>() > 1'000'000 || !detail::is_prime(int(p.get<long long>())))
            throw parse_error(path + "/padic: expected a prime");
        return {"Q", unsigned(p.get<long long>())};
    }
    if (j.contains("trivial")) {
        const auto& s = j["trivial"];
        if (!s.is_string()) throw parse_error(path + "/trivial: expected a field name");
        auto name = s.get<std::string>();
        if (name != "F2" && name != "F3" && name != "F5" && name != "Q")
            throw parse_error(path + "/trivial: unknown field '" + name + "' (expected F2, F3, F5 or Q)");
        return {name, 0};
    }
    throw parse_error(path + ": expected key 'padic' or 'trivial'");
}

} // namespace protex
