#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "quasiadj/resolution.hpp"

namespace corpus {

inline std::string path(const std::string& name) { return std::string(QUASIADJ_CORPUS_DIR) + "/" + name; }

inline std::string read(const std::string& name) {
    std::ifstream in(path(name));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline quasiadj::Resolution load(const std::string& name) {
    if (name.size() > 6 && name.substr(name.size() - 6) == ".graph") return quasiadj::load_resolution_graph(read(name));
    return quasiadj::resolve_embedded(quasiadj::parse_germ(read(name)));
}

struct Entry {
    std::string name;
    quasiadj::Resolution res;
};

// Every corpus entry that yields resolution data.
inline std::vector<Entry> all() {
    std::vector<Entry> out;
    for (const char* n : {"cusp.germ", "twocusps.germ", "tacnode.germ", "split3.germ", "split4.germ", "split5.germ",
                          "split6.germ", "cusp.graph", "x5y5.graph", "irr_tacnode.graph"})
        out.push_back({n, load(n)});
    return out;
}

}  // namespace corpus
