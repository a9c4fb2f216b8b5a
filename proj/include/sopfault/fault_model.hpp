#pragma once

#include <string>
#include <vector>

#include "sopfault/bit_vector.hpp"
#include "sopfault/sop.hpp"

namespace sopfault {

struct FaultSite {
  enum class Kind { LiteralInput, TermOutput, CircuitOutput };

  Kind kind = Kind::CircuitOutput;
  int term_index = -1;     // LiteralInput, TermOutput
  int literal_index = -1;  // LiteralInput

  static FaultSite literal(int term, int literal) { return {Kind::LiteralInput, term, literal}; }
  static FaultSite term_output(int term) { return {Kind::TermOutput, term, -1}; }
  static FaultSite circuit_output() { return {}; }

  friend bool operator==(const FaultSite&, const FaultSite&) = default;
};

/// "t0.l1", "t1.out" or "out".
std::string describe(const FaultSite& site);

struct Fault {
  FaultSite site;
  bool stuck_value = false;
  int fault_id = 0;

  friend bool operator==(const Fault&, const Fault&) = default;
};

/// "t0.l1 s-a-0".
std::string describe(const Fault& fault);

/// Faults whose output columns are bit-identical over all 2^n inputs.
struct FaultClass {
  int class_id = 0;
  Fault representative;
  std::vector<Fault> members;
  BitVector column;
};

/// Faults that no input vector can expose.
struct UndetectableReport {
  std::vector<Fault> faults;
};

struct CollapseResult {
  std::vector<FaultClass> classes;
  UndetectableReport undetectable;
  BitVector fault_free;
};

/// Literal inputs by (term, position), then term outputs, then the circuit
/// output; s-a-0 before s-a-1 at each site. Yields 2 * (L + T + 1) faults.
std::vector<Fault> enumerate_faults(const SopExpr& expr);

/// Scalar simulation of the circuit with the fault's site forced.
bool faulty_evaluate(const SopExpr& expr, const Fault& fault, const InputVector& v);

/// Column over all 2^n rows, row r at bit r. Bit-parallel.
BitVector fault_free_column(const SopExpr& expr);
BitVector fault_column(const SopExpr& expr, const Fault& fault);

/// Columns for every fault in order. jobs == 0 uses the hardware thread count;
/// results do not depend on jobs.
std::vector<BitVector> fault_columns(const SopExpr& expr, const std::vector<Fault>& faults, unsigned jobs = 1);

/// Groups faults by identical column. Classes are ordered by representative
/// fault_id; the group matching the fault-free column becomes the report.
CollapseResult collapse(const SopExpr& expr, const std::vector<Fault>& faults, unsigned jobs = 1);

/// Resolves jobs == 0 to the hardware concurrency.
unsigned resolve_jobs(unsigned jobs);

}  // namespace sopfault
