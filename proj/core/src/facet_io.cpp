#include "regconn/facet_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "regconn/error.hpp"

namespace regconn {

namespace {

int parse_label(const std::string& token, std::size_t line) {
  int value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected a positive integer, got '" + token + "'");
  }
  if (value < 1 || value > kMaxVertices) {
    throw ParseError(line, "vertex label " + token + " outside 1.." +
                               std::to_string(kMaxVertices));
  }
  return value;
}

}  // namespace

SimplicialComplex read_facets(std::istream& in, GhostPolicy policy) {
  std::optional<int> declared_n;
  std::vector<VertexSet> faces;
  int max_label = 0;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::string token;
    std::vector<std::string> words;
    while (tokens >> token) words.push_back(token);
    if (words.empty()) continue;

    if (words.front() == "n") {
      if (declared_n) throw ParseError(line, "duplicate 'n' header");
      if (!faces.empty()) throw ParseError(line, "'n' header must precede the facets");
      if (words.size() != 2) throw ParseError(line, "header must read 'n <count>'");
      declared_n = parse_label(words[1], line);
      continue;
    }
    VertexSet face;
    for (const std::string& w : words) {
      const int label = parse_label(w, line);
      if (declared_n && label > *declared_n) {
        throw ParseError(line, "vertex " + w + " exceeds declared n = " +
                                   std::to_string(*declared_n));
      }
      max_label = std::max(max_label, label);
      face = face.with(label - 1);
    }
    faces.push_back(face);
  }
  if (faces.empty()) throw ParseError(line, "no facets found");
  const int n = declared_n.value_or(max_label);
  return SimplicialComplex::from_facets(n, faces, policy);
}

SimplicialComplex read_facet_file(const std::string& path, GhostPolicy policy) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  SimplicialComplex complex = read_facets(in, policy);
  complex.set_provenance(path);
  return complex;
}

void write_facets(std::ostream& out, const SimplicialComplex& complex) {
  if (!complex.provenance().empty()) out << "# " << complex.provenance() << '\n';
  out << "n " << complex.ambient_size() << '\n';
  for (VertexSet f : complex.facets()) {
    bool first = true;
    for (int label : f.labels()) {
      if (!first) out << ' ';
      out << label;
      first = false;
    }
    out << '\n';
  }
}

std::string to_facet_text(const SimplicialComplex& complex) {
  std::ostringstream out;
  write_facets(out, complex);
  return out.str();
}

}  // namespace regconn
