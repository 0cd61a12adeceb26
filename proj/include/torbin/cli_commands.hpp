#pragma once

#include <cstdint>
#include <ostream>

#include "torbin/permutation.hpp"

namespace torbin {

enum class OutputFormat { Plain, Csv, JsonLines, BFile };

// Which one-dimensional slice of the count table cmd_bfile emits.
enum class SequenceSelector { Row, Col, Diagonal };

// Each command writes results to out and diagnostics to err, returning the
// process exit code: 0 success, 1 usage error, 2 verification failure.

/// Print the exact orbit count for one shape.
int cmd_count(unsigned rows, unsigned cols, GroupKind kind, std::ostream& out,
              std::ostream& err);

/// Print the full max_rows x max_cols grid of counts.
int cmd_table(unsigned max_rows, unsigned max_cols, GroupKind kind,
              OutputFormat format, std::ostream& out, std::ostream& err);

/// Print one line per orbit: representative, weight, orbit size.
int cmd_enumerate(unsigned rows, unsigned cols, GroupKind kind,
                  OutputFormat format, unsigned cap, std::ostream& out,
                  std::ostream& err);

/// Cross-check closed forms, cycle formulas, the Burnside oracle, and (within
/// the cap) exhaustive enumeration for every shape in range. One PASS/FAIL
/// line per shape; the FAIL line names the first failing check.
int cmd_verify(unsigned max_rows, unsigned max_cols, unsigned cap,
               std::ostream& out, std::ostream& err);

/// Emit a row, column, or diagonal of the count table in the two-column
/// b-file convention, indices from 1.
int cmd_bfile(GroupKind kind, SequenceSelector selector, unsigned index,
              unsigned terms, std::ostream& out, std::ostream& err);

}  // namespace torbin
