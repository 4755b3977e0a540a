// origami-lab: command-line front end for the origami_core library.
//
// Exit codes: 0 success / all checks passed, 1 input error (bad flags, bad
// files, degenerate or otherwise inadmissible parameters), 2 verification
// failure (a computed report did not pass).

#include <algorithm>
#include <atomic>
#include <cctype>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "origami/affine.hpp"
#include "origami/curves.hpp"
#include "origami/elliptic.hpp"
#include "origami/errors.hpp"
#include "origami/intersect.hpp"
#include "origami/io.hpp"
#include "origami/origami.hpp"
#include "origami/veech.hpp"
#include "origami/weierstrass.hpp"

namespace {

using origami::Complex;
using origami::Json;

// ---------------------------------------------------------------------------
// Small utilities: parallelism cap, complex parsing/formatting, file I/O.
// ---------------------------------------------------------------------------

int thread_cap() {
    if (const char* env = std::getenv("ORIGAMI_LAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(0..count-1) on up to thread_cap() workers. Callers collect results
// into index-addressed storage, so the output order never depends on timing.
template <typename F>
void parallel_for(int count, F&& fn) {
    const int workers = std::min(thread_cap(), std::max(count, 1));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < count;) fn(i);
        });
    for (std::thread& t : pool) t.join();
}

Json complex_json(const Complex& z) {
    Json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

// One signed real literal: decimal ("-1.5", "2e-3") or fraction ("1/3").
double parse_real_literal(const std::string& s) {
    const auto parse_plain = [](const std::string& t) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw origami::ParseError("cannot parse number: '" + t + "'");
        }
        if (used != t.size())
            throw origami::ParseError("trailing characters in number: '" + t + "'");
        return v;
    };
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return parse_plain(s);
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty())
        throw origami::ParseError("malformed fraction: '" + s + "'");
    const double d = parse_plain(den);
    if (d == 0.0) throw origami::ParseError("zero denominator: '" + s + "'");
    return parse_plain(num) / d;
}

// Accepts decimals, fractions p/q, pure imaginaries ("i", "-2i", "i/3"), and
// sums "a+bi" / "a-bi" in either order.
Complex parse_complex(std::string s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw origami::ParseError("empty complex literal");

    // Split into signed chunks at '+'/'-' that are neither leading nor part
    // of an exponent.
    std::vector<std::string> chunks;
    std::size_t start = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            chunks.push_back(t.substr(start, i - start));
            start = i;
        }
    }
    chunks.push_back(t.substr(start));
    if (chunks.size() > 2)
        throw origami::ParseError("malformed complex literal: '" + s + "'");

    double re = 0, im = 0;
    bool saw_re = false, saw_im = false;
    for (std::string chunk : chunks) {
        double sign = 1;
        if (!chunk.empty() && (chunk[0] == '+' || chunk[0] == '-')) {
            if (chunk[0] == '-') sign = -1;
            chunk.erase(chunk.begin());
        }
        if (chunk.empty())
            throw origami::ParseError("malformed complex literal: '" + s + "'");
        const bool imaginary = chunk.back() == 'i' || chunk.back() == 'I';
        if (imaginary) chunk.pop_back();
        double mag = 1;
        if (!chunk.empty()) {
            mag = parse_real_literal(chunk);
        } else if (!imaginary) {
            throw origami::ParseError("malformed complex literal: '" + s + "'");
        }
        if (imaginary) {
            if (saw_im) throw origami::ParseError("two imaginary parts: '" + s + "'");
            im = sign * mag;
            saw_im = true;
        } else {
            if (saw_re) throw origami::ParseError("two real parts: '" + s + "'");
            re = sign * mag;
            saw_re = true;
        }
    }
    return {re, im};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw origami::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

origami::Origami builtin_origami(const std::string& name) {
    if (name == "W") return origami::quaternion_origami();
    if (name.rfind("torus", 0) == 0) {
        try {
            const int k = std::stoi(name.substr(5));
            if (k >= 1) return origami::torus_grid(k);
        } catch (const std::exception&) {
        }
    }
    throw origami::ParseError("unknown builtin surface: '" + name +
                              "' (expected W or torus<k>)");
}

origami::Origami load_origami(const std::string& in_path, const std::string& builtin) {
    if (!in_path.empty() && !builtin.empty())
        throw origami::ParseError("give either --in or --builtin, not both");
    if (!builtin.empty()) return builtin_origami(builtin);
    if (in_path.empty()) throw origami::ParseError("one of --in or --builtin is required");
    const std::string text = read_file(in_path);
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw origami::ParseError("empty input file: " + in_path);
    if (text[first] == '{') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded())
            throw origami::ParseError("invalid JSON in " + in_path);
        return origami::origami_from_json(j);
    }
    return origami::origami_from_text(text);
}

// ---------------------------------------------------------------------------
// Output: canonical JSON, or an indented key/value text rendering in which
// {re, im} pairs print as single complex scalars.
// ---------------------------------------------------------------------------

bool is_complex_object(const Json& j) {
    return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im");
}

std::string complex_str(const Json& j) {
    std::ostringstream os;
    os << j["re"].get<double>();
    const double im = j["im"].get<double>();
    os << (im < 0 ? "" : "+") << im << "i";
    return os.str();
}

bool is_scalar_like(const Json& j) {
    return j.is_primitive() || is_complex_object(j);
}

std::string scalar_str(const Json& j) {
    if (is_complex_object(j)) return complex_str(j);
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_text(const Json& j, std::ostream& os, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_scalar_like(value)) {
                os << pad << key << ": " << scalar_str(value) << "\n";
            } else if (value.is_array() &&
                       std::all_of(value.begin(), value.end(), is_scalar_like)) {
                os << pad << key << ":";
                for (const Json& e : value) os << " " << scalar_str(e);
                os << "\n";
            } else {
                os << pad << key << ":\n";
                render_text(value, os, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const Json& e : j) {
            if (is_scalar_like(e)) {
                os << pad << "- " << scalar_str(e) << "\n";
            } else if (e.is_array() && std::all_of(e.begin(), e.end(), is_scalar_like)) {
                os << pad << "-";
                for (const Json& x : e) os << " " << scalar_str(x);
                os << "\n";
            } else {
                os << pad << "-\n";
                render_text(e, os, indent + 2);
            }
        }
    } else {
        os << pad << scalar_str(j) << "\n";
    }
}

void emit(const Json& j, const std::string& format, const std::string& out_path) {
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw origami::ParseError("cannot write file: " + out_path);
        out << j.dump(2) << "\n";
        return;
    }
    if (format == "text")
        render_text(j, std::cout, 0);
    else
        std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// JSON builders shared between subcommands.
// ---------------------------------------------------------------------------

Json cylinders_json(const std::vector<origami::Cylinder>& cyls) {
    Json arr = Json::array();
    for (const origami::Cylinder& c : cyls)
        arr.push_back(Json{{"circumference", c.circumference}, {"height", c.height}});
    return arr;
}

Json info_json(const origami::Origami& o) {
    Json j;
    j["n"] = o.size();
    j["squares"] = o.size();
    j["genus"] = origami::genus(o);
    j["vertices"] = origami::singularity_profile(o).vertex_count;
    j["stratum"] = origami::stratum(o);
    if (!o.name.empty()) j["name"] = o.name;
    j["horizontal_cylinders"] = cylinders_json(origami::horizontal_cylinders(o));
    j["vertical_cylinders"] = cylinders_json(origami::vertical_cylinders(o));
    return j;
}

Json matrix_json(const origami::Mat2& m) {
    return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})});
}

Json veech_json(const origami::VeechResult& res) {
    Json j;
    j["index"] = res.index;
    j["cusp_count"] = origami::cusp_count(res);
    j["cusp_widths"] = res.cusp_widths;
    Json gens = Json::array();
    for (const origami::VeechGenerator& g : res.generators)
        gens.push_back(Json{{"word", g.word.str()}, {"matrix", matrix_json(g.matrix)}});
    j["generators"] = gens;
    Json table = Json::array();
    for (const auto& row : res.coset_table)
        table.push_back(Json::array({row[0], row[1]}));
    j["coset_table"] = table;
    return j;
}

std::string derivative_str(origami::Derivative d) {
    switch (d) {
        case origami::Derivative::I: return "I";
        case origami::Derivative::MinusI: return "-I";
        case origami::Derivative::S: return "S";
        case origami::Derivative::SInv: return "S^-1";
    }
    return "I";
}

Json fixed_points_json(const origami::FixedPointReport& rep) {
    Json j;
    j["square_centers"] = rep.square_centers;
    j["vertical_edge_midpoints"] = rep.vertical_edge_midpoints;
    j["horizontal_edge_midpoints"] = rep.horizontal_edge_midpoints;
    j["vertices"] = rep.vertices;
    j["total"] = rep.total();
    return j;
}

Json auto_json(const origami::Origami& o, const origami::AffineAuto& a) {
    Json j;
    j["pi"] = a.pi.images();
    j["derivative"] = derivative_str(a.d);
    j["order"] = origami::element_order(a);
    j["fixed_points"] = fixed_points_json(origami::fixed_points(o, a));
    return j;
}

Json torsion_row(const origami::TorsionPoint& t) {
    Json row;
    row["x"] = complex_json(t.x);
    row["y"] = complex_json(t.y);
    row["order"] = t.order;
    try {
        const origami::LambdaResult lr = origami::lambda_from_torsion(t);
        row["zeta"] = complex_json(lr.zeta);
        row["lambda"] = complex_json(lr.lambda);
    } catch (const origami::TwoTorsionInput&) {
        row["zeta"] = nullptr;
        row["lambda"] = nullptr;
    }
    return row;
}

Json theorem_json(const origami::TheoremReport& rep) {
    Json j;
    j["lambda"] = complex_json(rep.lambda);
    j["zeta"] = complex_json(rep.zeta);
    j["representative_x_matches"] = rep.representative_x_matches;
    j["images_on_curve"] = rep.images_on_curve;
    j["image_orders"] = rep.image_orders;
    j["n_multiple_rot_fixed"] = rep.n_multiple_rot_fixed;
    j["two_n_kills"] = rep.two_n_kills;
    j["passed"] = rep.passed;
    return j;
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.
// ---------------------------------------------------------------------------

int run_info(const std::string& in_path, const std::string& builtin,
             const std::string& format) {
    emit(info_json(load_origami(in_path, builtin)), format, "");
    return 0;
}

int run_veech(const std::string& in_path, const std::string& builtin,
              const std::string& format, const std::string& out_path) {
    const origami::Origami o = load_origami(in_path, builtin);
    emit(veech_json(origami::veech_group(o)), format, out_path);
    return 0;
}

int run_autos(const std::string& in_path, const std::string& builtin,
              const std::string& format, const std::string& derivative) {
    const origami::Origami o = load_origami(in_path, builtin);
    std::vector<origami::AffineAuto> autos;
    if (derivative.empty()) {
        autos = origami::affine_group(o);
    } else {
        const std::map<std::string, origami::Derivative> names = {
            {"I", origami::Derivative::I},
            {"-I", origami::Derivative::MinusI},
            {"S", origami::Derivative::S},
            {"S^-1", origami::Derivative::SInv},
            {"Sinv", origami::Derivative::SInv},
        };
        const auto it = names.find(derivative);
        if (it == names.end())
            throw origami::ParseError("unknown derivative: '" + derivative + "'");
        autos = origami::affine_autos(o, it->second);
    }
    Json j;
    j["count"] = autos.size();
    Json list = Json::array();
    for (const origami::AffineAuto& a : autos) list.push_back(auto_json(o, a));
    j["autos"] = list;
    emit(j, format, "");
    return 0;
}

int run_wms(const std::string& format) {
    const origami::Origami w = origami::quaternion_origami();
    Json checks = Json::array();
    bool all = true;
    const auto record = [&](const std::string& name, bool passed, Json info) {
        info["name"] = name;
        info["passed"] = passed;
        Json ordered;
        ordered["name"] = info["name"];
        ordered["passed"] = info["passed"];
        for (const auto& [k, v] : info.items())
            if (k != "name" && k != "passed") ordered[k] = v;
        checks.push_back(ordered);
        all = all && passed;
    };

    {
        const std::vector<origami::Cylinder> two_long = {{4, 1}, {4, 1}};
        const bool ok = origami::genus(w) == 3 &&
                        origami::singularity_profile(w).vertex_count == 4 &&
                        origami::stratum(w) == std::vector<int>{1, 1, 1, 1} &&
                        origami::horizontal_cylinders(w) == two_long &&
                        origami::vertical_cylinders(w) == two_long;
        Json info;
        info["genus"] = origami::genus(w);
        info["vertices"] = origami::singularity_profile(w).vertex_count;
        info["stratum"] = origami::stratum(w);
        info["horizontal_cylinders"] = cylinders_json(origami::horizontal_cylinders(w));
        info["vertical_cylinders"] = cylinders_json(origami::vertical_cylinders(w));
        record("surface_shape", ok, std::move(info));
    }
    {
        const origami::VeechResult res = origami::veech_group(w);
        Json info;
        info["index"] = res.index;
        info["cusp_widths"] = res.cusp_widths;
        record("one_point_orbit", res.index == 1 && origami::cusp_count(res) == 1,
               std::move(info));
    }
    {
        const origami::CharacteristicReport rep = origami::verify_characteristic_W();
        Json info;
        info["candidate_pairs"] = rep.candidate_pairs;
        info["epimorphisms"] = rep.epimorphisms;
        info["covers_isomorphic"] = rep.covers_isomorphic;
        record("characteristic_cover",
               rep.candidate_pairs == 36 && rep.epimorphisms == 24 &&
                   rep.covers_isomorphic == 24 && rep.all_covers_match,
               std::move(info));
    }
    const std::vector<origami::AffineAuto> trans = origami::translations(w);
    {
        bool nonabelian = false;
        for (const origami::AffineAuto& a : trans)
            for (const origami::AffineAuto& b : trans)
                if (!(origami::compose(a, b) == origami::compose(b, a)))
                    nonabelian = true;
        const auto hist = origami::order_histogram(trans);
        Json hist_json;
        for (const auto& [order, count] : hist)
            hist_json[std::to_string(order)] = count;
        Json info;
        info["count"] = trans.size();
        info["order_histogram"] = hist_json;
        info["nonabelian"] = nonabelian;
        record("translation_group",
               trans.size() == 8 && nonabelian &&
                   hist == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}},
               std::move(info));
    }
    const std::vector<origami::AffineAuto> minus =
        origami::affine_autos(w, origami::Derivative::MinusI);
    {
        std::vector<origami::AffineAuto> aut = trans;
        aut.insert(aut.end(), minus.begin(), minus.end());
        const auto hist = origami::order_histogram(aut);
        Json hist_json;
        for (const auto& [order, count] : hist)
            hist_json[std::to_string(order)] = count;
        Json info;
        info["point_reflections"] = minus.size();
        info["order_histogram"] = hist_json;
        info["center_size"] = origami::center_of(aut).size();
        record("automorphism_table",
               minus.size() == 8 &&
                   hist == std::map<int, int>{{1, 1}, {2, 7}, {4, 8}} &&
                   origami::center_of(aut).size() == 4,
               std::move(info));
    }
    {
        Json tables = Json::array();
        bool ok = minus.size() == 8;
        for (const origami::AffineAuto& a : minus) {
            const origami::FixedPointReport rep = origami::fixed_points(w, a);
            ok = ok && rep.total() == 4;
            Json row;
            row["order"] = origami::element_order(a);
            row["fixed_points"] = fixed_points_json(rep);
            tables.push_back(row);
        }
        Json info;
        info["tables"] = tables;
        record("fixed_point_tables", ok, std::move(info));
    }
    {
        const origami::AffineAuto* antipode = nullptr;
        for (const origami::AffineAuto& a : trans)
            if (!a.pi.is_identity() && origami::element_order(a) == 2) antipode = &a;
        bool ok = antipode != nullptr;
        Json info;
        if (ok) {
            const origami::Origami half = origami::quotient_by_translations(
                w, std::vector<origami::AffineAuto>{origami::identity_auto(w), *antipode});
            const origami::Origami point = origami::quotient_by_translations(w, trans);
            ok = half.size() == 4 && origami::genus(half) == 1 &&
                 origami::is_isomorphic(half, origami::torus_grid(2)) &&
                 origami::is_isomorphic(point, origami::torus_grid(1));
            info["half_turn_quotient_squares"] = half.size();
            info["half_turn_quotient_genus"] = origami::genus(half);
            info["full_quotient_squares"] = point.size();
        }
        record("quotients", ok, std::move(info));
    }

    Json j;
    j["surface"] = "W";
    j["checks"] = checks;
    j["all_passed"] = all;
    emit(j, format, "");
    return all ? 0 : 2;
}

int run_torsion(int n, const std::string& format) {
    if (n < 2) throw origami::ParseError("--n must be at least 2");
    const std::vector<origami::TorsionPoint> pts = origami::torsion_points(n);
    Json j;
    j["n"] = n;
    j["count"] = pts.size();
    Json rows = Json::array();
    for (const origami::TorsionPoint& t : pts) rows.push_back(torsion_row(t));
    j["points"] = rows;
    emit(j, format, "");
    return 0;
}

int run_verify(const std::string& lambda_str, std::uint64_t seed, double tol,
               int samples, const std::string& format) {
    const Complex lambda = parse_complex(lambda_str);
    const origami::VerifyReport rep = origami::verify_identities(lambda, samples, seed, tol);
    Json j;
    j["lambda"] = complex_json(lambda);
    j["seed"] = seed;
    j["samples"] = samples;
    j["tol"] = tol;
    Json checks;
    for (const auto& [name, passed] : rep.checks) checks[name] = passed;
    j["checks"] = checks;
    j["commuting_square_power"] = rep.commuting_square_power;
    j["all_passed"] = rep.all_passed;
    emit(j, format, "");
    return rep.all_passed ? 0 : 2;
}

int run_theorem(int n, double tol, const std::string& format) {
    if (n < 3) throw origami::ParseError("--n must be at least 3");
    const std::vector<origami::TorsionPoint> pts = origami::torsion_points(n);
    std::vector<origami::TheoremReport> reports(pts.size());
    parallel_for(static_cast<int>(pts.size()),
                 [&](int i) { reports[i] = origami::theorem_check(pts[i], tol); });
    bool all = true;
    Json rows = Json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Json row;
        row["x"] = complex_json(pts[i].x);
        row["y"] = complex_json(pts[i].y);
        row["order"] = pts[i].order;
        row["report"] = theorem_json(reports[i]);
        rows.push_back(row);
        all = all && reports[i].passed;
    }
    Json j;
    j["n"] = n;
    j["tol"] = tol;
    j["count"] = pts.size();
    j["points"] = rows;
    j["all_passed"] = all;
    emit(j, format, "");
    return all ? 0 : 2;
}

int run_intersect(int n, int a, int b, const std::string& what,
                  const std::string& format, const std::string& out_path) {
    const origami::GridPoint p = origami::make_grid_point(a, b, n);
    if (what == "origami") {
        emit(origami::origami_to_json(origami::construct_D(p)), format, out_path);
        return 0;
    }
    if (what != "certificate")
        throw origami::ParseError("--emit must be 'origami' or 'certificate'");
    const origami::IntersectionCertificate cert = origami::pipeline(p);
    Json j;
    j["n"] = cert.n;
    j["point"] = Json{{"a", cert.point.a}, {"b", cert.point.b}, {"n", cert.point.n}};
    j["order"] = cert.torsion_order;
    j["lambda"] = complex_json(cert.lambda);
    Json checks;
    checks["representative_x_matches"] = cert.theorem.representative_x_matches;
    checks["images_on_curve"] = cert.theorem.images_on_curve;
    checks["image_orders"] = cert.theorem.image_orders;
    checks["n_multiple_rot_fixed"] = cert.theorem.n_multiple_rot_fixed;
    checks["two_n_kills"] = cert.theorem.two_n_kills;
    checks["theorem_passed"] = cert.theorem.passed;
    j["checks"] = checks;
    j["passed"] = cert.passed;
    j["cover"] = origami::origami_to_json(cert.cover);
    emit(j, format, out_path);
    return cert.passed ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"origami-lab: square-tiled surfaces, their affine symmetries, "
                 "and the torsion certificates of the quaternionic family"};
    app.require_subcommand(1);

    std::string in_path, builtin, format = "json", out_path, derivative;
    std::string lambda_str, emit_what = "certificate";
    int n = 0, a = 0, b = 0, samples = 12;
    std::uint64_t seed = 0;
    double tol_identity = 1e-9, tol_torsion = 1e-8;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };
    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "Origami file (JSON or cycle text)");
        cmd->add_option("--builtin", builtin, "Built-in surface: W or torus<k>");
    };

    CLI::App* info = app.add_subcommand("info", "Invariants of a square-tiled surface");
    add_input(info);
    add_format(info);

    CLI::App* veech = app.add_subcommand("veech", "Orbit, index, cusps and stabilizer "
                                                  "generators under the shear action");
    add_input(veech);
    add_format(veech);
    veech->add_option("--out", out_path, "Write the JSON report to this file");

    CLI::App* autos = app.add_subcommand("autos", "Affine automorphisms with fixed-point "
                                                  "reports");
    add_input(autos);
    add_format(autos);
    autos->add_option("--derivative", derivative,
                      "Restrict to one derivative class: I, -I, S, S^-1");

    CLI::App* wms = app.add_subcommand("wms", "Full verification suite for the "
                                              "eight-square quaternionic surface");
    add_format(wms);

    CLI::App* torsion = app.add_subcommand("torsion", "Torsion points of exact order n "
                                                      "with their family parameters");
    torsion->add_option("--n", n, "Exact torsion order")->required();
    add_format(torsion);

    CLI::App* verify = app.add_subcommand("verify", "Automorphism identity suite for one "
                                                    "family parameter");
    verify->add_option("--lambda", lambda_str,
                       "Family parameter (decimal, fraction p/q, or a+bi)")
        ->required();
    verify->add_option("--seed", seed, "Sampling seed")->required();
    verify->add_option("--tol", tol_identity, "Identity tolerance")->capture_default_str();
    verify->add_option("--samples", samples, "Sample points per check")
        ->capture_default_str();
    add_format(verify);

    CLI::App* theorem = app.add_subcommand("theorem", "Torsion criterion at every exact "
                                                      "order-n point");
    theorem->add_option("--n", n, "Exact torsion order")->required();
    theorem->add_option("--tol", tol_torsion, "Torsion equality tolerance")
        ->capture_default_str();
    add_format(theorem);

    CLI::App* intersect = app.add_subcommand("intersect", "Branched double cover and "
                                                          "intersection certificate for a "
                                                          "marked grid point");
    intersect->add_option("--n", n, "Grid size")->required();
    intersect->add_option("--a", a, "First coordinate")->required();
    intersect->add_option("--b", b, "Second coordinate")->required();
    intersect->add_option("--emit", emit_what, "What to output")
        ->check(CLI::IsMember({"origami", "certificate"}))
        ->capture_default_str();
    intersect->add_option("--out", out_path, "Write the JSON output to this file");
    add_format(intersect);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (info->parsed()) return run_info(in_path, builtin, format);
        if (veech->parsed()) return run_veech(in_path, builtin, format, out_path);
        if (autos->parsed()) return run_autos(in_path, builtin, format, derivative);
        if (wms->parsed()) return run_wms(format);
        if (torsion->parsed()) return run_torsion(n, format);
        if (verify->parsed())
            return run_verify(lambda_str, seed, tol_identity, samples, format);
        if (theorem->parsed()) return run_theorem(n, tol_torsion, format);
        if (intersect->parsed())
            return run_intersect(n, a, b, emit_what, format, out_path);
    } catch (const origami::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const origami::DegenerateLambda& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const origami::TwoTorsionInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const origami::NotBijection& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const origami::NotConnected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const origami::Disconnected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const origami::WrongCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const origami::Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
