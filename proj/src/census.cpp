#include "fintop/census.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "fintop/notation.hpp"

namespace fintop {

namespace {

using Json = nlohmann::ordered_json;

// Row-major relation matrix with entry (0,0) most significant.
std::uint64_t matrix_key(const FiniteSpace& s) {
  const std::size_t n = s.size();
  std::uint64_t key = 0;
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) key = (key << 1) | (s.leq(x, y) ? 1U : 0U);
  }
  return key;
}

bool is_closed_rows(const std::vector<std::uint64_t>& rows, std::uint64_t set) {
  for (std::uint64_t s = set; s != 0; s &= s - 1) {
    if ((rows[static_cast<std::size_t>(std::countr_zero(s))] & ~set) != 0) return false;
  }
  return true;
}

// All ways of adding point k to a preorder on points 0..k-1, given as closure rows.
template <class Visit>
void for_each_extension(const FiniteSpace& base, Visit&& visit) {
  const std::size_t k = base.size();
  std::vector<std::uint64_t> rows(k);
  std::vector<std::uint64_t> cols(k);
  for (PointIndex x = 0; x < k; ++x) {
    rows[x] = base.closure_bits(x);
    cols[x] = base.neighbourhood_bits(x);
  }
  std::vector<std::uint64_t> closed, open;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    if (is_closed_rows(rows, s)) closed.push_back(s);
    if (is_closed_rows(cols, s)) open.push_back(s);
  }
  const std::uint64_t self = std::uint64_t{1} << k;
  for (std::uint64_t below : closed) {      // points in cl{k}
    for (std::uint64_t above : open) {      // points x with k in cl{x}
      bool transitive = true;
      for (std::uint64_t a = above; a != 0 && transitive; a &= a - 1) {
        transitive = (below & ~rows[static_cast<std::size_t>(std::countr_zero(a))]) == 0;
      }
      if (!transitive) continue;
      std::vector<std::uint64_t> next(k + 1);
      for (PointIndex x = 0; x < k; ++x) next[x] = rows[x] | (((above >> x) & 1U) ? (self | below) : 0);
      next[k] = self | below;
      visit(std::move(next));
    }
  }
}

std::vector<FiniteSpace> extend_all(const std::vector<FiniteSpace>& previous) {
  std::vector<FiniteSpace> out;
  for (const auto& base : previous) {
    for_each_extension(base, [&](std::vector<std::uint64_t> rows) { out.push_back(space_from_closures(std::move(rows))); });
  }
  return out;
}

std::vector<FiniteSpace> dedup_homeomorphic(std::vector<FiniteSpace> spaces) {
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<FiniteSpace> reps;
  for (auto& s : spaces) {
    auto& bucket = buckets[homeomorphism_invariant(s)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                  [&](std::size_t i) { return are_homeomorphic(reps[i], s); });
    if (seen) continue;
    bucket.push_back(reps.size());
    reps.push_back(std::move(s));
  }
  return reps;
}

void sort_by_matrix(std::vector<FiniteSpace>& spaces) {
  std::stable_sort(spaces.begin(), spaces.end(),
                   [](const FiniteSpace& a, const FiniteSpace& b) { return matrix_key(a) < matrix_key(b); });
}

template <class Pred>
ImplicationResult implication(const std::string& name, const std::vector<CensusRecord>& records, Pred&& holds) {
  ImplicationResult r{name};
  for (const auto& rec : records) {
    ++r.checked;
    if (!holds(rec)) r.violations.push_back(format_space(rec.space));
  }
  return r;
}

bool is_discrete(const FiniteSpace& s) {
  for (PointIndex x = 0; x < s.size(); ++x) {
    if (s.closure_bits(x) != (std::uint64_t{1} << x)) return false;
  }
  return true;
}

Json axiom_object(const std::map<AxiomId, bool>& m) {
  Json j = Json::object();
  for (auto id : kAllAxioms) {
    auto it = m.find(id);
    if (it != m.end()) j[std::string(axiom_name(id))] = it->second;
  }
  return j;
}

}  // namespace

std::size_t max_census_points(EnumerationMode mode) { return mode == EnumerationMode::labeled ? 6 : 7; }

std::vector<FiniteSpace> enumerate_topologies(std::size_t n, EnumerationMode mode) {
  if (n > max_census_points(mode)) {
    throw std::invalid_argument("census supports at most " + std::to_string(max_census_points(mode)) +
                                " points in this mode");
  }
  std::vector<FiniteSpace> spaces{FiniteSpace()};
  for (std::size_t k = 0; k < n; ++k) {
    spaces = extend_all(spaces);
    if (mode == EnumerationMode::up_to_iso) spaces = dedup_homeomorphic(std::move(spaces));
  }
  sort_by_matrix(spaces);
  return spaces;
}

CensusRecord classify(const FiniteSpace& space, std::size_t index) {
  CensusRecord r;
  r.n = space.size();
  r.index = index;
  r.space = space;
  for (auto id : kAllAxioms) {
    if (is_composite(id)) continue;
    r.axioms[id] = check_axiom_direct(space, id);
    if (!has_lifting_formula(id)) continue;
    auto verdict = check_axiom_lifting(space, id);
    r.lifting[id] = verdict.holds;
    r.lifting_agrees[id] = verdict.holds == r.axioms[id];
    if (verdict.holds != r.axioms[id] && verdict.witness) r.mismatch_witness[id] = *verdict.witness;
  }
  // Composites are conjunctions of already computed verdicts.
  auto conj = [&](AxiomId id, AxiomId a, AxiomId b) {
    r.axioms[id] = r.axioms[a] && r.axioms[b];
    r.lifting[id] = r.lifting[a] && r.lifting[b];
    r.lifting_agrees[id] = r.axioms[id] == r.lifting[id];
  };
  conj(AxiomId::T3, AxiomId::T0, AxiomId::REGULAR);
  conj(AxiomId::T3_HALF, AxiomId::T0, AxiomId::COMPLETELY_REGULAR);
  conj(AxiomId::T4, AxiomId::T1, AxiomId::NORMAL);
  return r;
}

std::vector<CensusRecord> classify_all(const std::vector<FiniteSpace>& spaces, unsigned threads) {
  std::vector<CensusRecord> out(spaces.size());
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(spaces.size(), 1))));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < spaces.size(); i = next++) out[i] = classify(spaces[i], i);
  };
  if (threads == 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  pool.clear();
  return out;
}

std::size_t EquivalenceReport::hard_mismatches() const {
  std::size_t total = 0;
  for (const auto& a : per_axiom) {
    if (a.hard) total += a.mismatches.size();
  }
  return total;
}

const AxiomAgreement& EquivalenceReport::at(AxiomId id) const {
  for (const auto& a : per_axiom) {
    if (a.id == id) return a;
  }
  throw std::invalid_argument("axiom not in report: " + std::string(axiom_name(id)));
}

EquivalenceReport equivalence_report(const std::vector<CensusRecord>& records) {
  EquivalenceReport report;
  report.spaces = records.size();
  for (auto id : kAllAxioms) {
    if (!has_lifting_formula(id)) continue;
    AxiomAgreement a{id, is_hard_equivalence(id)};
    for (const auto& rec : records) {
      ++a.checked;
      if (rec.lifting_agrees.at(id)) {
        ++a.agreements;
        continue;
      }
      AxiomMismatch m{format_space(rec.space), rec.n, rec.axioms.at(id), rec.lifting.at(id)};
      if (auto it = rec.mismatch_witness.find(id); it != rec.mismatch_witness.end()) m.witness = it->second;
      a.mismatches.push_back(std::move(m));
    }
    report.per_axiom.push_back(std::move(a));
  }
  return report;
}

EquivalenceReport run_equivalence_suite(std::size_t n, unsigned threads) {
  return equivalence_report(classify_all(enumerate_topologies(n, EnumerationMode::labeled), threads));
}

std::size_t ImplicationReport::violation_count() const {
  std::size_t total = 0;
  for (const auto& r : results) total += r.violations.size();
  return total;
}

ImplicationReport implication_report(const std::vector<CensusRecord>& records) {
  using enum AxiomId;
  auto ax = [](const CensusRecord& r, AxiomId id) { return r.axioms.at(id); };
  auto implies = [&](AxiomId a, AxiomId b) {
    return [=](const CensusRecord& r) { return !ax(r, a) || ax(r, b); };
  };
  ImplicationReport report;
  auto add = [&](const std::string& name, auto pred) { report.results.push_back(implication(name, records, pred)); };
  add("T1 <=> T0 and R0", [&](const CensusRecord& r) { return ax(r, T1) == (ax(r, T0) && ax(r, R0)); });
  add("T2 <=> T0 and R1", [&](const CensusRecord& r) { return ax(r, T2) == (ax(r, T0) && ax(r, R1)); });
  add("T2 => T1", implies(T2, T1));
  add("T1 => T0", implies(T1, T0));
  add("T2_HALF => T2", implies(T2_HALF, T2));
  add("COMPLETELY_T2 => T2_HALF", implies(COMPLETELY_T2, T2_HALF));
  add("REGULAR => R1", implies(REGULAR, R1));
  add("R1 => R0", implies(R1, R0));
  add("T3 => T2_HALF", implies(T3, T2_HALF));
  add("COMPLETELY_REGULAR => REGULAR", implies(COMPLETELY_REGULAR, REGULAR));
  add("T3_HALF => T3 and COMPLETELY_T2",
      [&](const CensusRecord& r) { return !ax(r, T3_HALF) || (ax(r, T3) && ax(r, COMPLETELY_T2)); });
  add("T4 => T3_HALF", implies(T4, T3_HALF));
  add("COMPLETELY_NORMAL => NORMAL", implies(COMPLETELY_NORMAL, NORMAL));
  add("PERFECTLY_NORMAL => COMPLETELY_NORMAL", implies(PERFECTLY_NORMAL, COMPLETELY_NORMAL));
  add("NORMAL <=> NORMAL_URYSOHN", [&](const CensusRecord& r) { return ax(r, NORMAL) == ax(r, NORMAL_URYSOHN); });
  add("T1 => discrete", [&](const CensusRecord& r) { return !ax(r, T1) || is_discrete(r.space); });
  return report;
}

ImplicationReport run_implication_suite(std::size_t n, unsigned threads) {
  return implication_report(classify_all(enumerate_topologies(n, EnumerationMode::labeled), threads));
}

ImplicationReport predicate_chain_report(const std::vector<FiniteSpace>& spaces) {
  using Pred = bool (*)(const FiniteSpace&, const SubsetMask&, const SubsetMask&);
  const std::vector<std::pair<std::string, Pred>> chain = {
      {"precisely separated by function", precisely_separated_by_function},
      {"separated by function", separated_by_function},
      {"separated by closed neighbourhoods", separated_by_closed_neighbourhoods},
      {"separated by neighbourhoods", separated_by_neighbourhoods},
      {"separated", separated},
      {"disjoint", [](const FiniteSpace&, const SubsetMask& a, const SubsetMask& b) { return !a.intersects(b); }},
  };
  ImplicationReport report;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    report.results.push_back({chain[i].first + " => " + chain[i + 1].first});
  }
  for (const auto& s : spaces) {
    const std::uint64_t end = std::uint64_t{1} << s.size();
    for (std::uint64_t a = 0; a < end; ++a) {
      for (std::uint64_t b = 0; b < end; ++b) {
        const SubsetMask sa(s.size(), a), sb(s.size(), b);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          auto& r = report.results[i];
          ++r.checked;
          if (chain[i].second(s, sa, sb) && !chain[i + 1].second(s, sa, sb)) {
            r.violations.push_back(format_space(s) + " A=" + std::to_string(a) + " B=" + std::to_string(b));
          }
        }
      }
    }
  }
  return report;
}

std::map<AxiomId, std::size_t> count_by_axiom(const std::vector<CensusRecord>& records) {
  std::map<AxiomId, std::size_t> counts;
  for (auto id : kAllAxioms) counts[id] = 0;
  for (const auto& rec : records) {
    for (const auto& [id, holds] : rec.axioms) counts[id] += holds ? 1 : 0;
  }
  return counts;
}

std::map<AxiomId, std::size_t> count_by_axiom(std::size_t n, unsigned threads) {
  return count_by_axiom(classify_all(enumerate_topologies(n, EnumerationMode::labeled), threads));
}

std::string census_record_line(const CensusRecord& record) {
  Json j;
  j["n"] = record.n;
  j["index"] = record.index;
  Json arrows = Json::array();
  for (auto [x, y] : generating_arrows(record.space)) arrows.push_back({x, y});
  j["arrows"] = std::move(arrows);
  j["axioms"] = axiom_object(record.axioms);
  j["lifting_agrees"] = axiom_object(record.lifting_agrees);
  return j.dump();
}

std::string census_summary_line(const std::vector<CensusRecord>& records, const EquivalenceReport& equivalence,
                                const ImplicationReport* implications) {
  Json counts = Json::object();
  counts["spaces"] = records.size();
  for (const auto& [id, count] : count_by_axiom(records)) counts[std::string(axiom_name(id))] = count;
  Json violations = Json::array();
  for (const auto& a : equivalence.per_axiom) {
    if (!a.hard) continue;
    for (const auto& m : a.mismatches) {
      violations.push_back({{"kind", "equivalence"},
                            {"axiom", std::string(axiom_name(a.id))},
                            {"space", m.space},
                            {"direct", m.direct},
                            {"lifting", m.lifting}});
    }
  }
  if (implications != nullptr) {
    for (const auto& r : implications->results) {
      for (const auto& v : r.violations) violations.push_back({{"kind", "implication"}, {"rule", r.name}, {"space", v}});
    }
  }
  Json j;
  j["counts"] = std::move(counts);
  j["violations"] = std::move(violations);
  return j.dump();
}

void write_census(std::ostream& out, const std::vector<CensusRecord>& records, const EquivalenceReport& equivalence,
                  const ImplicationReport* implications) {
  for (const auto& rec : records) out << census_record_line(rec) << '\n';
  out << census_summary_line(records, equivalence, implications) << '\n';
}

}  // namespace fintop
