#include "regconn/vertex_set.hpp"

#include "regconn/error.hpp"

namespace regconn {

namespace {

void check_index(int index) {
  if (index < 0 || index >= kMaxVertices) {
    throw Error(ErrorKind::BadParameters,
                "vertex index " + std::to_string(index) + " out of range");
  }
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<int> indices) {
  VertexSet out;
  for (int i : indices) {
    check_index(i);
    out = out.with(i);
  }
  return out;
}

VertexSet VertexSet::from_labels(std::initializer_list<int> labels) {
  return from_labels(std::span<const int>(labels.begin(), labels.size()));
}

VertexSet VertexSet::from_labels(std::span<const int> labels) {
  VertexSet out;
  for (int label : labels) {
    check_index(label - 1);
    out = out.with(label - 1);
  }
  return out;
}

std::vector<int> VertexSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v + 1);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  out += '}';
  return out;
}

SubsetIndexer::SubsetIndexer(VertexSet universe) : positions_(universe.indices()) {
  identity_ = universe == VertexSet::range(universe.size());
  if (width() >= 63) {
    throw Error(ErrorKind::BadParameters, "subset enumeration wider than 62 bits");
  }
}

}  // namespace regconn
