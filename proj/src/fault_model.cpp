#include "sopfault/fault_model.hpp"

#include <algorithm>
#include <array>
#include <thread>
#include <unordered_map>

namespace sopfault {

std::string describe(const FaultSite& site) {
  switch (site.kind) {
    case FaultSite::Kind::LiteralInput:
      return "t" + std::to_string(site.term_index) + ".l" + std::to_string(site.literal_index);
    case FaultSite::Kind::TermOutput:
      return "t" + std::to_string(site.term_index) + ".out";
    case FaultSite::Kind::CircuitOutput:
      break;
  }
  return "out";
}

std::string describe(const Fault& fault) {
  return describe(fault.site) + (fault.stuck_value ? " s-a-1" : " s-a-0");
}

std::vector<Fault> enumerate_faults(const SopExpr& expr) {
  std::vector<FaultSite> sites;
  for (const auto& term : expr.terms()) {
    for (std::size_t l = 0; l < term.literals.size(); ++l) {
      sites.push_back(FaultSite::literal(term.term_index, static_cast<int>(l)));
    }
  }
  for (const auto& term : expr.terms()) sites.push_back(FaultSite::term_output(term.term_index));
  sites.push_back(FaultSite::circuit_output());

  std::vector<Fault> faults;
  faults.reserve(sites.size() * 2);
  for (const auto& site : sites) {
    for (bool stuck : {false, true}) {
      faults.push_back({site, stuck, static_cast<int>(faults.size())});
    }
  }
  return faults;
}

bool faulty_evaluate(const SopExpr& expr, const Fault& fault, const InputVector& v) {
  const auto& site = fault.site;
  if (site.kind == FaultSite::Kind::CircuitOutput) return fault.stuck_value;

  bool out = false;
  for (const auto& term : expr.terms()) {
    bool product = true;
    if (site.kind == FaultSite::Kind::TermOutput && site.term_index == term.term_index) {
      product = fault.stuck_value;
    } else {
      for (std::size_t l = 0; l < term.literals.size(); ++l) {
        const bool forced = site.kind == FaultSite::Kind::LiteralInput && site.term_index == term.term_index &&
                            site.literal_index == static_cast<int>(l);
        product = product && (forced ? fault.stuck_value : literal_value(term.literals[l], v));
      }
    }
    out = out || product;
  }
  return out;
}

namespace {

/// Column of variable var (x1 is var 0) over 2^n rows.
BitVector variable_column(int var, int n) {
  const std::size_t rows = std::size_t{1} << n;
  const int shift = n - 1 - var;
  BitVector col(rows);
  auto& words = col.mutable_words();
  if (shift >= 6) {
    for (std::size_t w = 0; w < words.size(); ++w) {
      words[w] = ((w * 64) >> shift) & 1u ? ~BitVector::Word{0} : BitVector::Word{0};
    }
  } else {
    BitVector::Word pattern = 0;
    for (unsigned r = 0; r < 64; ++r) {
      if ((r >> shift) & 1u) pattern |= BitVector::Word{1} << r;
    }
    for (auto& w : words) w = pattern;
  }
  col.trim();
  return col;
}

class ColumnEvaluator {
 public:
  explicit ColumnEvaluator(const SopExpr& expr) : expr_(expr) {
    const int n = expr.num_vars();
    for (int v = 0; v < n; ++v) {
      positive_.push_back(variable_column(v, n));
      negative_.push_back(~positive_.back());
    }
  }

  BitVector evaluate(const Fault* fault) const {
    const std::size_t rows = expr_.num_rows();
    if (fault && fault->site.kind == FaultSite::Kind::CircuitOutput) return BitVector(rows, fault->stuck_value);

    BitVector out(rows);
    for (const auto& term : expr_.terms()) {
      if (fault && fault->site.kind == FaultSite::Kind::TermOutput && fault->site.term_index == term.term_index) {
        if (fault->stuck_value) return BitVector(rows, true);
        continue;
      }
      BitVector product(rows, true);
      for (std::size_t l = 0; l < term.literals.size(); ++l) {
        const auto& lit = term.literals[l];
        if (fault && fault->site.kind == FaultSite::Kind::LiteralInput &&
            fault->site.term_index == term.term_index && fault->site.literal_index == static_cast<int>(l)) {
          if (!fault->stuck_value) product.fill(false);
          continue;
        }
        product &= lit.complemented ? negative_[static_cast<std::size_t>(lit.var_index)]
                                    : positive_[static_cast<std::size_t>(lit.var_index)];
      }
      out |= product;
    }
    return out;
  }

 private:
  const SopExpr& expr_;
  std::vector<BitVector> positive_;
  std::vector<BitVector> negative_;
};

}  // namespace

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

BitVector fault_free_column(const SopExpr& expr) { return ColumnEvaluator(expr).evaluate(nullptr); }

BitVector fault_column(const SopExpr& expr, const Fault& fault) { return ColumnEvaluator(expr).evaluate(&fault); }

std::vector<BitVector> fault_columns(const SopExpr& expr, const std::vector<Fault>& faults, unsigned jobs) {
  const ColumnEvaluator evaluator(expr);
  std::vector<BitVector> columns(faults.size());
  const unsigned workers = std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(std::max<std::size_t>(faults.size(), 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < faults.size(); ++i) columns[i] = evaluator.evaluate(&faults[i]);
    return columns;
  }
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < faults.size(); i += workers) columns[i] = evaluator.evaluate(&faults[i]);
      });
    }
  }
  return columns;
}

CollapseResult collapse(const SopExpr& expr, const std::vector<Fault>& faults, unsigned jobs) {
  CollapseResult result;
  result.fault_free = fault_free_column(expr);
  auto columns = fault_columns(expr, faults, jobs);

  std::unordered_map<BitVector, std::size_t> class_of;
  for (std::size_t i = 0; i < faults.size(); ++i) {
    if (columns[i] == result.fault_free) {
      result.undetectable.faults.push_back(faults[i]);
      continue;
    }
    auto [it, inserted] = class_of.try_emplace(columns[i], result.classes.size());
    if (inserted) {
      FaultClass cls;
      cls.class_id = static_cast<int>(result.classes.size());
      cls.representative = faults[i];
      cls.column = std::move(columns[i]);
      result.classes.push_back(std::move(cls));
    }
    result.classes[it->second].members.push_back(faults[i]);
  }
  return result;
}

}  // namespace sopfault
