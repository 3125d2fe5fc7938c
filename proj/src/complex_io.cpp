#include "tightcx/complex_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tightcx/errors.hpp"

namespace tightcx {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

ComplexDocument parse_complex_text(std::istream& in) {
    ComplexDocument doc;
    std::vector<std::vector<int>> facets;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string body = line;
        const auto hash = body.find('#');
        if (hash != std::string::npos) {
            const std::string comment = trim(body.substr(hash + 1));
            if (!doc.name && comment.rfind("name:", 0) == 0)
                doc.name = trim(comment.substr(5));
            body = body.substr(0, hash);
        }
        body = trim(body);
        if (body.empty()) continue;

        std::vector<int> facet;
        std::istringstream tokens(body);
        std::string tok;
        while (tokens >> tok) {
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw InvalidInput("line " + std::to_string(lineNo) + ": non-integer token '" +
                                   tok + "'");
            long v = 0;
            try {
                v = std::stol(tok);
            } catch (const std::exception&) {
                throw InvalidInput("line " + std::to_string(lineNo) + ": bad vertex label '" +
                                   tok + "'");
            }
            if (v > kMaxVertexLabel)
                throw InvalidInput("line " + std::to_string(lineNo) + ": vertex label " +
                                   std::to_string(v) + " exceeds " +
                                   std::to_string(kMaxVertexLabel));
            // repeated labels inside a line collapse: a facet is a set
            if (std::find(facet.begin(), facet.end(), static_cast<int>(v)) == facet.end())
                facet.push_back(static_cast<int>(v));
        }
        if (facet.empty())
            throw InvalidInput("line " + std::to_string(lineNo) + ": empty facet");
        facets.push_back(std::move(facet));
    }
    doc.complex = SimplicialComplex::fromFacets(facets);
    return doc;
}

ComplexDocument parse_complex_text(const std::string& text) {
    std::istringstream in(text);
    return parse_complex_text(in);
}

ComplexDocument load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    return parse_complex_text(in);
}

std::string serialize_complex(const SimplicialComplex& x,
                              const std::optional<std::string>& name) {
    std::ostringstream out;
    if (name && !name->empty()) out << "# name: " << *name << "\n";
    for (const auto& facet : x.facetVertexLists()) {
        bool first = true;
        for (int v : facet) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace tightcx
