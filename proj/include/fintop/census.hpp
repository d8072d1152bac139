#pragma once

// Exhaustive enumeration of finite topologies and the suites run over them.

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fintop/axioms.hpp"
#include "fintop/space.hpp"

namespace fintop {

enum class EnumerationMode { labeled, up_to_iso };

/// Largest supported n for the mode (6 labeled, 7 up to homeomorphism).
std::size_t max_census_points(EnumerationMode mode);

/// Labeled: every preorder on n points, in lexicographic order of the
/// row-major relation matrix. Up to iso: one representative per class.
/// Throws std::invalid_argument when n is out of range.
std::vector<FiniteSpace> enumerate_topologies(std::size_t n, EnumerationMode mode);

struct CensusRecord {
  std::size_t n = 0;
  std::size_t index = 0;
  FiniteSpace space;
  std::map<AxiomId, bool> axioms;          // direct verdicts, every axiom
  std::map<AxiomId, bool> lifting;         // lifting verdicts, every axiom with a formula
  std::map<AxiomId, bool> lifting_agrees;  // direct == lifting
  std::map<AxiomId, LiftingWitness> mismatch_witness;
};

CensusRecord classify(const FiniteSpace& space, std::size_t index);
/// Classifies spaces on worker threads; results keep the input order.
std::vector<CensusRecord> classify_all(const std::vector<FiniteSpace>& spaces, unsigned threads = 1);

// ---- equivalence suite -----------------------------------------------------------

struct AxiomMismatch {
  std::string space;  // notation
  std::size_t points = 0;
  bool direct = false;
  bool lifting = false;
  std::optional<LiftingWitness> witness;
};

struct AxiomAgreement {
  AxiomId id;
  bool hard = false;
  std::size_t checked = 0;
  std::size_t agreements = 0;
  std::vector<AxiomMismatch> mismatches;  // in census order, so the first is minimal when n ascends
  double fraction() const { return checked == 0 ? 1.0 : static_cast<double>(agreements) / checked; }
};

struct EquivalenceReport {
  std::size_t spaces = 0;
  std::vector<AxiomAgreement> per_axiom;  // every axiom with a lifting formula
  std::size_t hard_mismatches() const;
  const AxiomAgreement& at(AxiomId id) const;
};

EquivalenceReport equivalence_report(const std::vector<CensusRecord>& records);
/// Labeled spaces on exactly n points.
EquivalenceReport run_equivalence_suite(std::size_t n, unsigned threads = 1);

// ---- implication suite -----------------------------------------------------------

struct ImplicationResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;  // offending spaces in notation
};

struct ImplicationReport {
  std::vector<ImplicationResult> results;
  std::size_t violation_count() const;
};

/// Relations between axioms (direct verdicts), including "T1 => discrete".
ImplicationReport implication_report(const std::vector<CensusRecord>& records);
ImplicationReport run_implication_suite(std::size_t n, unsigned threads = 1);

/// The strength chain of the separation predicates, over every ordered pair of
/// subsets of every space: precisely by function => by function => by closed
/// neighbourhoods => by neighbourhoods => separated => disjoint.
ImplicationReport predicate_chain_report(const std::vector<FiniteSpace>& spaces);

// ---- counts and persistence ------------------------------------------------------

/// Labeled spaces on n points satisfying each axiom (direct verdicts).
std::map<AxiomId, std::size_t> count_by_axiom(std::size_t n, unsigned threads = 1);
std::map<AxiomId, std::size_t> count_by_axiom(const std::vector<CensusRecord>& records);

/// One census line: {"n", "index", "arrows", "axioms", "lifting_agrees"}.
std::string census_record_line(const CensusRecord& record);
/// Closing line: {"counts": {...}, "violations": [...]}.
std::string census_summary_line(const std::vector<CensusRecord>& records, const EquivalenceReport& equivalence,
                                const ImplicationReport* implications);

/// Writes every record line followed by the summary line.
void write_census(std::ostream& out, const std::vector<CensusRecord>& records, const EquivalenceReport& equivalence,
                  const ImplicationReport* implications);

}  // namespace fintop
