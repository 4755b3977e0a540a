#include "origami/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "origami/errors.hpp"

namespace origami {

Json origami_to_json(const Origami& o) {
    Json j;
    j["n"] = o.size();
    j["h"] = o.h.images();
    j["v"] = o.v.images();
    if (!o.name.empty()) j["name"] = o.name;
    return j;
}

Origami origami_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("h") || !j.contains("v"))
            throw ParseError("origami JSON needs fields n, h, v");
        const int n = j.at("n").get<int>();
        auto h = j.at("h").get<std::vector<int>>();
        auto v = j.at("v").get<std::vector<int>>();
        if (static_cast<int>(h.size()) != n || static_cast<int>(v.size()) != n)
            throw ParseError("origami JSON: h/v length disagrees with n");
        std::string name;
        if (j.contains("name")) name = j.at("name").get<std::string>();
        return make_origami(Permutation(std::move(h)), Permutation(std::move(v)),
                            std::move(name));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("origami JSON: ") + e.what());
    }
}

std::string permutation_to_cycle_text(const Permutation& p) {
    std::ostringstream out;
    for (const auto& cyc : p.cycles()) {
        out << '(';
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (k) out << ',';
            out << cyc[k] + 1; // 1-based labels on the wire
        }
        out << ')';
    }
    return out.str();
}

namespace {

struct CycleParse {
    std::vector<std::vector<int>> cycles; // 0-based
    int max_label = 0;                    // 1-based maximum seen
};

CycleParse parse_cycles(const std::string& text) {
    CycleParse res;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw ParseError("cycle text: expected '(' at position " + std::to_string(i));
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("cycle text: expected a label");
            const int label = std::stoi(text.substr(start, i - start));
            if (label < 1) throw ParseError("cycle text: labels are 1-based");
            cyc.push_back(label - 1);
            res.max_label = std::max(res.max_label, label);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i >= text.size()) throw ParseError("cycle text: unterminated cycle");
        ++i; // ')'
        if (!cyc.empty()) res.cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return res;
}

} // namespace

Permutation permutation_from_cycle_text(const std::string& text, int n_hint) {
    const CycleParse parsed = parse_cycles(text);
    const int n = std::max(parsed.max_label, n_hint);
    std::vector<char> seen(n, 0);
    for (const auto& cyc : parsed.cycles)
        for (int x : cyc) {
            if (seen[x]) throw ParseError("cycle text: label used twice");
            seen[x] = 1;
        }
    if (n == 0) throw ParseError("cycle text: no labels");
    return Permutation::from_cycles(n, parsed.cycles);
}

std::string origami_to_text(const Origami& o) {
    return "h=" + permutation_to_cycle_text(o.h) + "; v=" + permutation_to_cycle_text(o.v);
}

Origami origami_from_text(const std::string& text) {
    const std::size_t semi = text.find(';');
    if (semi == std::string::npos)
        throw ParseError("origami text: expected 'h=...; v=...'");
    auto trim = [](std::string s) {
        const auto notspace = [](unsigned char c) { return !std::isspace(c); };
        s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
        s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
        return s;
    };
    std::string hpart = trim(text.substr(0, semi));
    std::string vpart = trim(text.substr(semi + 1));
    if (hpart.rfind("h=", 0) != 0 || vpart.rfind("v=", 0) != 0)
        throw ParseError("origami text: expected 'h=...; v=...'");
    hpart = hpart.substr(2);
    vpart = vpart.substr(2);
    // The square count is the largest label mentioned on either side.
    const int n = std::max(parse_cycles(hpart).max_label, parse_cycles(vpart).max_label);
    if (n == 0) throw ParseError("origami text: no labels");
    return make_origami(permutation_from_cycle_text(hpart, n),
                        permutation_from_cycle_text(vpart, n));
}

} // namespace origami
