#include "ekrshift/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ekrshift {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in) {
    std::vector<std::string> order;
    std::map<std::string, int> index;
    bool declared = false;
    bool saw_header_slot = false;
    std::vector<Mask> facets;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (!saw_header_slot && toks[0] == "vertices:") {
            saw_header_slot = true;
            declared = true;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (index.count(toks[i])) fail(lineno, "duplicate vertex label '" + toks[i] + "'");
                index[toks[i]] = static_cast<int>(order.size());
                order.push_back(toks[i]);
            }
            if (order.empty()) fail(lineno, "empty vertex header");
            if (order.size() > 64) fail(lineno, "more than 64 vertices");
            continue;
        }
        saw_header_slot = true;
        Mask f = 0;
        for (const auto& t : toks) {
            if (t == "vertices:") fail(lineno, "vertex header must be the first line");
            auto it = index.find(t);
            if (it == index.end()) {
                if (declared) fail(lineno, "vertex '" + t + "' is absent from the declared header");
                if (order.size() >= 64) fail(lineno, "more than 64 vertices");
                index[t] = static_cast<int>(order.size());
                order.push_back(t);
                it = index.find(t);
            }
            f |= Mask{1} << it->second;
        }
        facets.push_back(f);
    }
    if (facets.empty()) throw std::runtime_error("empty facet list");
    return SimplicialComplex::from_facets(facets, static_cast<int>(order.size()), order);
}

SimplicialComplex parse_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_complex(in);
}

std::string to_facet_list(const SimplicialComplex& cx) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& l : cx.labels()) out << ' ' << l;
    out << '\n';
    std::vector<Mask> facets = cx.facets();
    std::sort(facets.begin(), facets.end(), [](Mask a, Mask b) {
        if (face_size(a) != face_size(b)) return face_size(a) < face_size(b);
        return lex_less(a, b);
    });
    for (Mask f : facets) {
        if (f == 0) continue;  // {∅} has no printable facet line
        bool first = true;
        for (int v : face_vertices(f)) {
            if (!first) out << ' ';
            first = false;
            out << cx.labels()[static_cast<std::size_t>(v)];
        }
        out << '\n';
    }
    return out.str();
}

std::string digest(const SimplicialComplex& cx) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : to_facet_list(cx)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex;
    for (int i = 15; i >= 0; --i) out << ((h >> (4 * i)) & 0xF);
    return out.str();
}

}  // namespace ekrshift
