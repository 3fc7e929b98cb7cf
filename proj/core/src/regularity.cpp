#include "regconn/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "regconn/error.hpp"

namespace regconn {

RestrictionStore::RestrictionStore(const SimplicialComplex& complex, FieldSpec field,
                                   const EnumerationLimits& limits)
    : complex_(complex), field_(field), indexer_(complex.vertices()) {
  check_cap(indexer_.width(), limits);
  const std::uint64_t total = indexer_.count();
  const FaceLattice lattice(complex_);

  const std::uint64_t blocks = (total + kSubsetBlock - 1) / kSubsetBlock;
  std::vector<std::vector<Entry>> block_entries(blocks);
  std::vector<std::uint32_t> counts(total, 0);
  top_.assign(total, static_cast<std::int8_t>(kAcyclic));

  parallel_blocks(total, kSubsetBlock, limits.jobs,
                  [&](std::uint64_t begin, std::uint64_t end) {
                    auto& local = block_entries[begin / kSubsetBlock];
                    for (std::uint64_t k = begin; k < end; ++k) {
                      const BettiVector b =
                          reduced_betti_of_restriction(lattice, indexer_.expand(k), field_);
                      for (int d = -1; d <= b.max_degree(); ++d) {
                        if (b[d] == 0) continue;
                        local.push_back({static_cast<std::int16_t>(d), b[d]});
                        ++counts[k];
                        top_[k] = static_cast<std::int8_t>(d);
                      }
                    }
                  });

  offsets_.resize(total + 1);
  offsets_[0] = 0;
  for (std::uint64_t k = 0; k < total; ++k) offsets_[k + 1] = offsets_[k] + counts[k];
  entries_.reserve(offsets_[total]);
  for (auto& block : block_entries) {
    entries_.insert(entries_.end(), block.begin(), block.end());
  }

  // Subset-max transform: reg_[T] = 1 + max over U ⊆ T of top_[U].
  std::vector<std::int8_t> best = top_;
  for (int bit = 0; bit < indexer_.width(); ++bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    for (std::uint64_t k = 0; k < total; ++k) {
      if (k & b) best[k] = std::max(best[k], best[k ^ b]);
    }
  }
  reg_.resize(total);
  for (std::uint64_t k = 0; k < total; ++k) {
    reg_[k] = static_cast<std::int8_t>(best[k] + 1);
  }
}

BettiVector RestrictionStore::betti_at(std::uint64_t compact) const {
  const VertexSet subset = indexer_.expand(compact);
  // Stored range matches the restriction's dimension: at most |T| - 1.
  const int top = subset.empty() ? -1 : subset.size() - 1;
  std::vector<std::uint32_t> values(static_cast<std::size_t>(top + 2), 0);
  for (std::uint64_t e = offsets_[compact]; e < offsets_[compact + 1]; ++e) {
    values[static_cast<std::size_t>(entries_[e].degree + 1)] = entries_[e].value;
  }
  // Trim to the highest nonzero entry so equal homology compares equal.
  while (values.size() > 1 && values.back() == 0) values.pop_back();
  return BettiVector(std::move(values));
}

std::uint32_t RestrictionStore::betti_in_degree(VertexSet subset, int degree) const {
  const std::uint64_t compact = indexer_.compress(subset);
  for (std::uint64_t e = offsets_[compact]; e < offsets_[compact + 1]; ++e) {
    if (entries_[e].degree == degree) return entries_[e].value;
  }
  return 0;
}

std::uint64_t GradedBettiTable::at(int i, int j) const noexcept {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void GradedBettiTable::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

int GradedBettiTable::regularity() const noexcept {
  int reg = 0;
  for (const auto& [key, value] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

int GradedBettiTable::projective_dimension() const noexcept {
  int pd = 0;
  for (const auto& [key, value] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::string GradedBettiTable::to_text() const {
  const int pd = projective_dimension();
  const int reg = regularity();
  std::vector<std::uint64_t> totals(static_cast<std::size_t>(pd + 1), 0);
  for (const auto& [key, value] : entries_) totals[static_cast<std::size_t>(key.first)] += value;

  std::vector<std::size_t> width(static_cast<std::size_t>(pd + 1), 1);
  for (int i = 0; i <= pd; ++i) {
    width[i] = std::max(std::to_string(i).size(), std::to_string(totals[i]).size());
  }
  std::size_t label_width = std::string("total:").size();
  for (int r = 0; r <= reg; ++r) {
    label_width = std::max(label_width, std::to_string(r).size() + 1);
  }

  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t w) {
    out << std::string(w > s.size() ? w - s.size() : 0, ' ') << s;
  };
  pad("", label_width);
  for (int i = 0; i <= pd; ++i) {
    out << ' ';
    pad(std::to_string(i), width[i]);
  }
  out << '\n';
  pad("total:", label_width);
  for (int i = 0; i <= pd; ++i) {
    out << ' ';
    pad(std::to_string(totals[i]), width[i]);
  }
  out << '\n';
  for (int r = 0; r <= reg; ++r) {
    pad(std::to_string(r) + ":", label_width);
    for (int i = 0; i <= pd; ++i) {
      const std::uint64_t v = at(i, i + r);
      out << ' ';
      pad(v == 0 ? "." : std::to_string(v), width[i]);
    }
    out << '\n';
  }
  return out.str();
}

std::string GradedBettiTable::to_json() const {
  nlohmann::ordered_json j;
  j["field"] = field_.prime();
  j["n"] = n_;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : entries_) {
    j["entries"].push_back({{"i", key.first}, {"j", key.second}, {"beta", value}});
  }
  return j.dump();
}

GradedBettiTable hochster_table(const RestrictionStore& store) {
  GradedBettiTable table(store.complex().vertex_count(), store.field());
  const std::uint64_t total = store.subset_count();
  for (std::uint64_t k = 0; k < total; ++k) {
    if (store.top_degree_at(k) == RestrictionStore::kAcyclic) continue;
    const int j = std::popcount(k);
    const BettiVector b = store.betti_at(k);
    for (int d = -1; d <= b.max_degree(); ++d) {
      if (b[d] != 0) table.add(j - d - 1, j, b[d]);
    }
  }
  return table;
}

GradedBettiTable hochster_table(const SimplicialComplex& complex, FieldSpec field,
                                const EnumerationLimits& limits) {
  return hochster_table(RestrictionStore(complex, field, limits));
}

RegularityResult regularity(const RestrictionStore& store) {
  RegularityResult out;
  const std::uint64_t total = store.subset_count();
  int best = RestrictionStore::kAcyclic - 1;
  std::uint64_t where = 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    if (store.top_degree_at(k) > best) {
      best = store.top_degree_at(k);
      where = k;
    }
  }
  out.reg = best + 1;
  out.witness_degree = best;
  out.witness_subset = store.indexer().expand(where);

  const int from_table = hochster_table(store).regularity();
  if (from_table != out.reg) {
    throw Error(ErrorKind::Internal,
                "regularity from the Betti table (" + std::to_string(from_table) +
                    ") differs from restriction homology (" + std::to_string(out.reg) + ")");
  }
  return out;
}

RegularityResult regularity(const SimplicialComplex& complex, FieldSpec field,
                            const EnumerationLimits& limits) {
  return regularity(RestrictionStore(complex, field, limits));
}

TaylorSupportCheck taylor_support_check(const GradedBettiTable& table, int s) {
  TaylorSupportCheck out;
  for (const auto& [key, value] : table.entries()) {
    const auto [i, j] = key;
    if (i >= 1 && j > s * i) out.violations.emplace_back(i, j);
  }
  out.holds = out.violations.empty();
  return out;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational taylor_bound(int n, int s) {
  if (s < 2) throw Error(ErrorKind::DegenerateS, "Taylor bound needs s >= 2");
  if (n < 1) throw Error(ErrorKind::BadParameters, "Taylor bound needs n >= 1");
  std::int64_t num = static_cast<std::int64_t>(n) * (s - 1);
  std::int64_t den = s;
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

DhsBound dhs_bound(int n, int k) {
  if (k < 1 || n < 1) {
    throw Error(ErrorKind::BadParameters, "DHS bound needs k >= 1 and n >= 1");
  }
  const long double base = static_cast<long double>(k + 4) / 2.0L;
  const long double log_base = std::log(base);
  const long double m = static_cast<long double>(n - 1);
  const long double arg1 = m / static_cast<long double>(k + 1);
  const long double arg2 =
      m * log_base / static_cast<long double>(k + 1) + 2.0L / static_cast<long double>(k + 4);

  DhsBound out;
  if (arg1 > 0) out.first = std::log(arg1) / log_base + 2.0L;
  if (arg2 > 0) out.second = std::log(arg2) / log_base + 2.0L;
  if (!out.first && !out.second) {
    throw Error(ErrorKind::DomainError, "DHS bound undefined: no positive log argument");
  }
  if (out.first && (!out.second || *out.first <= *out.second)) {
    out.value = *out.first;
    out.branch = 1;
  } else {
    out.value = *out.second;
    out.branch = 2;
  }
  return out;
}

std::int64_t dhs_integer_bound(const DhsBound& bound) noexcept {
  return static_cast<std::int64_t>(std::floor(bound.value + kRealBoundEpsilon));
}

std::optional<int> max_dhs_parameter(const SimplicialComplex& complex) {
  if (!predicates(complex).is_flag) return std::nullopt;
  const Graph skeleton = one_skeleton(complex);
  const std::optional<int> shortest = shortest_long_induced_cycle(skeleton);
  if (!shortest) return std::max(1, complex.vertex_count() - 3);
  const int k = *shortest - 1 - 3;
  if (k < 1) return std::nullopt;
  return k;
}

SuitabilityResult check_suitable(const RestrictionStore& store, BoundSpec bound) {
  const SimplicialComplex& complex = store.complex();
  std::vector<VertexSet> nonfaces;
  if (bound.kind == BoundKind::Taylor) {
    nonfaces = minimal_nonface_sets(complex);
  } else {
    if (bound.k < 1) throw Error(ErrorKind::BadParameters, "DHS parameter k must be >= 1");
    if (!predicates(complex).is_flag) {
      throw Error(ErrorKind::HypothesisUnmet, "DHS bound requires a flag complex");
    }
    const auto cycles = induced_cycle_free_up_to(one_skeleton(complex), bound.k + 3);
    if (!cycles.free) {
      throw Error(ErrorKind::HypothesisUnmet,
                  "1-skeleton has an induced cycle of length " +
                      std::to_string(cycles.witness.size()) + " <= k + 3");
    }
  }

  SuitabilityResult out;
  bool have_tightest = false;
  const std::uint64_t total = store.subset_count();
  for (std::uint64_t k = 1; k < total; ++k) {
    const VertexSet subset = store.indexer().expand(k);
    const int reg = store.regularity_at(k);
    std::int64_t limit = 0;
    if (bound.kind == BoundKind::Taylor) {
      // Minimal nonfaces of Δ|_T are the minimal nonfaces of Δ inside T.
      int s = 0;
      for (VertexSet nf : nonfaces) {
        if (nf.is_subset_of(subset)) s = std::max(s, nf.size());
      }
      if (s == 0) {
        ++out.vacuous;
        if (reg != 0) {
          out.holds = false;
          out.violations.push_back(subset);
        }
        continue;
      }
      limit = taylor_bound(subset.size(), s).floor();
    } else {
      limit = dhs_integer_bound(dhs_bound(subset.size(), bound.k));
    }
    ++out.checked;
    const std::int64_t slack = limit - reg;
    if (slack < 0) {
      out.holds = false;
      out.violations.push_back(subset);
    }
    const bool tighter = !have_tightest || slack < out.min_slack ||
                         (slack == out.min_slack && subset.size() > out.tightest.size());
    if (tighter) {
      have_tightest = true;
      out.min_slack = slack;
      out.tightest = subset;
    }
  }
  return out;
}

}  // namespace regconn
