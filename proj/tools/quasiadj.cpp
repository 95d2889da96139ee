#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "quasiadj/errors.hpp"
#include "quasiadj/report.hpp"

using namespace quasiadj;
using report::Json;

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string format = "table";
    std::string weights;
    std::string at;
    std::string svg;
    bool rupture_only = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Resolution load(const std::string& path) {
    const std::string text = read_file(path);
    if (ends_with(path, ".graph")) return load_resolution_graph(text);
    if (ends_with(path, ".germ")) return resolve_embedded(parse_germ(text));
    throw Error("unknown input type for " + path + " (expected .germ or .graph)");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

WeightVector parse_weights(const std::string& text, std::size_t r) {
    if (text.empty()) return WeightVector::diagonal(r);
    std::vector<std::int64_t> w;
    for (const auto& item : split_commas(text)) {
        const Rat v = Rat::parse(item);
        if (!v.is_integer()) throw DomainError("weight " + item + " is not an integer");
        w.push_back(to_i64(v.num()));
    }
    return WeightVector(w);
}

CubePoint parse_point(const std::string& text, std::size_t r) {
    if (text.empty()) throw DomainError("--at is required");
    std::vector<Rat> x;
    for (const auto& item : split_commas(text)) x.push_back(Rat::parse(item));
    if (x.size() != r) throw DomainError("--at has " + std::to_string(x.size()) + " coordinates, expected " +
                                         std::to_string(r));
    return CubePoint(x);
}

void emit(const RunConfig& cfg, const Json& j, const std::string& table) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table;
}

void run(const RunConfig& cfg) {
    const Resolution res = load(cfg.input);
    const ResolutionData& d = res.data;

    if (cfg.command == "resolve") {
        emit(cfg, report::resolution_json(d), report::resolution_table(d));
    } else if (cfg.command == "faces") {
        const auto fs = faces(d, cfg.rupture_only);
        if (!cfg.svg.empty()) {
            std::ofstream out(cfg.svg);
            if (!out) throw Error("cannot write " + cfg.svg);
            out << report::faces_svg(d, fs, cfg.rupture_only);
        }
        emit(cfg, report::faces_json(fs), report::faces_table(fs));
    } else if (cfg.command == "ideal") {
        const CubePoint x = parse_point(cfg.at, d.r);
        const IdealHandle a = quasiadjunction_ideal(d, x);
        const IdealHandle app = log_quasiadjunction_ideal(d, x);
        const auto fp = face_at(d, x);
        Json planes = Json::array();
        if (fp)
            for (const auto& h : fp->planes) planes.push_back(Json::array({h.m, h.n}));
        Json j{{"point", report::rationals(x.coords())},
               {"A", report::ideal_json(a)},
               {"A_log", report::ideal_json(app)},
               {"depth_log", a.codim - app.codim},
               {"on_face", fp.has_value()},
               {"face_hyperplanes", planes}};
        std::ostringstream t;
        t << "point " << x.str() << "\n";
        t << "A      closure (" << Json(a.closure).dump() << ") codim " << a.codim << "\n";
        t << "A_log  closure (" << Json(app.closure).dump() << ") codim " << app.codim << "\n";
        t << "depth_log " << (a.codim - app.codim) << "\n";
        if (fp)
            for (const auto& h : fp->planes) t << "on face " << h.str() << "\n";
        emit(cfg, j, t.str());
    } else if (cfg.command == "spectrum" || cfg.command == "diagonal") {
        const WeightVector w = cfg.command == "diagonal" ? WeightVector::diagonal(d.r) : parse_weights(cfg.weights, d.r);
        const auto s = spectrum_line(d, w, cfg.rupture_only);
        const auto xi = jumping_numbers(d, w, cfg.rupture_only);
        Json j{{"weights", w.values()},
               {"spectrum", report::spectrum_json(s)},
               {"jumping_numbers", report::spectrum_json(xi)},
               {"mirrored", report::spectrum_json(mirrored(s))}};
        std::string table = "weights " + w.str() + "\n" + report::spectrum_table(s, "s");
        if (cfg.command == "diagonal") {
            const auto diag = spectrum_diagonal(d, cfg.rupture_only);
            j["faces_met"] = diag.faces_met;
            table += "faces met: " + std::to_string(diag.faces_met) + "\n";
        }
        emit(cfg, j, table);
    } else if (cfg.command == "bernstein") {
        const auto fs = bernstein_hyperplanes(d, cfg.rupture_only);
        std::string t;
        for (const auto& f : fs) t += f.str() + "\n";
        emit(cfg, report::bernstein_json(fs), t);
    } else if (cfg.command == "milnor") {
        const auto md = milnor_delta(res);
        const auto m = milnor_consistency(res);
        std::ostringstream t;
        t << "delta " << md.delta << "\nmu_direct " << m.mu_direct << "\nmu_formula " << m.mu_formula << "\nmatch "
          << (m.match ? "yes" : "no") << "\nassumes Gr_0^W H^1 = 0\n";
        emit(cfg, report::milnor_json(m, md), t.str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasiadj: faces of quasiadjunction, spectra and Bernstein hyperplanes of plane curve germs"};
    RunConfig cfg;
    app.add_option("command", cfg.command, "resolve|faces|ideal|spectrum|diagonal|bernstein|milnor")
        ->required()
        ->check(CLI::IsMember({"resolve", "faces", "ideal", "spectrum", "diagonal", "bernstein", "milnor"}));
    app.add_option("file", cfg.input, ".germ or .graph file")->required();
    app.add_option("--weights", cfg.weights, "weights a1,a2,... (default all 1)");
    app.add_option("--at", cfg.at, "cube point x1,x2,...");
    app.add_flag("--rupture-only", cfg.rupture_only, "use rupture-divisor walls only");
    app.add_option("--svg", cfg.svg, "write a wall plot");
    app.add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    CLI11_PARSE(app, argc, argv);

    try {
        run(cfg);
        return 0;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const GraphError& e) {
        for (const auto& v : e.violations()) std::cerr << v << "\n";
        const bool schema = !e.violations().empty() && e.violations().front().rfind("schema error", 0) == 0;
        return schema ? 1 : 3;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const ResolutionError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
