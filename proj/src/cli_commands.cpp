#include "torbin/cli_commands.hpp"

#include <cstdint>
#include <exception>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "torbin/counting.hpp"
#include "torbin/cycle_formulas.hpp"
#include "torbin/orbits.hpp"

namespace torbin {
namespace {

Natural count_for(GridShape shape, GroupKind kind) {
  return kind == GroupKind::Cyclic ? count_cyclic(shape)
                                   : count_dihedral(shape);
}

const char* kind_name(GroupKind kind) {
  return kind == GroupKind::Cyclic ? "cyclic" : "dihedral";
}

std::string describe(const GroupElement& g) {
  std::string s = "element i=" + std::to_string(g.row_shift) +
                  " j=" + std::to_string(g.col_shift);
  if (g.reflect_rows) s += " with row reflection";
  if (g.reflect_cols) s += " with column reflection";
  return s;
}

std::string check_cycle_formula(GridShape shape, unsigned i, unsigned j,
                                const char* name, CycleCount formula,
                                const GroupElement& g) {
  const CycleCount oracle = cycle_count_oracle(shape, g);
  if (formula == oracle) return "";
  std::ostringstream msg;
  msg << name << " at m=" << shape.rows << " n=" << shape.cols << " i=" << i
      << " j=" << j << ": formula " << formula << ", oracle " << oracle
      << ", " << describe(g);
  return msg.str();
}

// First failing check for one shape, or empty when everything agrees.
std::string verify_shape(GridShape shape, unsigned cap) {
  for (unsigned i = 0; i < shape.rows; ++i) {
    for (unsigned j = 0; j < shape.cols; ++j) {
      std::string bad;
      bad = check_cycle_formula(shape, i, j, "cycles_rotation",
                                cycles_rotation(shape, i, j),
                                GroupElement{i, j, false, false});
      if (!bad.empty()) return bad;
      bad = check_cycle_formula(shape, i, j, "cycles_row_reflection",
                                cycles_row_reflection(shape, i, j),
                                GroupElement{i, j, true, false});
      if (!bad.empty()) return bad;
      bad = check_cycle_formula(shape, i, j, "cycles_col_reflection",
                                cycles_col_reflection(shape, i, j),
                                GroupElement{i, j, false, true});
      if (!bad.empty()) return bad;
      bad = check_cycle_formula(shape, i, j, "cycles_full_reflection",
                                cycles_full_reflection(shape, i, j),
                                GroupElement{i, j, true, true});
      if (!bad.empty()) return bad;
    }
  }

  for (GroupKind kind : {GroupKind::Cyclic, GroupKind::Dihedral}) {
    const Natural closed = count_for(shape, kind);
    const Natural oracle = burnside_oracle_count(shape, kind);
    if (closed != oracle) {
      std::ostringstream msg;
      msg << kind_name(kind) << " count at m=" << shape.rows
          << " n=" << shape.cols << ": closed form " << closed
          << ", Burnside oracle " << oracle;
      return msg.str();
    }
  }

  const unsigned cells = shape.cell_count();
  if (cells <= cap && cells < 64) {
    for (GroupKind kind : {GroupKind::Cyclic, GroupKind::Dihedral}) {
      const std::vector<OrbitRecord> records =
          enumerate_orbits(shape, kind, cap);
      const std::vector<OrbitRecord> reference =
          enumerate_orbits_serial(shape, kind, cap);
      if (records != reference) {
        return std::string(kind_name(kind)) +
               " enumeration: parallel and serial records disagree";
      }
      const Natural closed = count_for(shape, kind);
      if (Natural(records.size()) != closed) {
        std::ostringstream msg;
        msg << kind_name(kind) << " enumeration: " << records.size()
            << " orbits, closed form " << closed;
        return msg.str();
      }
      std::uint64_t covered = 0;
      for (const OrbitRecord& record : records) covered += record.orbit_size;
      if (covered != std::uint64_t(1) << cells) {
        std::ostringstream msg;
        msg << kind_name(kind) << " enumeration: orbit sizes cover " << covered
            << " of " << (std::uint64_t(1) << cells) << " states";
        return msg.str();
      }
    }
  }
  return "";
}

}  // namespace

int cmd_count(unsigned rows, unsigned cols, GroupKind kind, std::ostream& out,
              std::ostream& err) {
  try {
    out << count_for(GridShape(rows, cols), kind) << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_table(unsigned max_rows, unsigned max_cols, GroupKind kind,
              OutputFormat format, std::ostream& out, std::ostream& err) {
  try {
    if (format == OutputFormat::BFile) {
      err << "error: b-file format applies only to single sequences; "
             "use the bfile command\n";
      return 1;
    }
    std::vector<std::vector<std::string>> grid(max_rows);
    for (unsigned i = 1; i <= max_rows; ++i) {
      for (unsigned j = 1; j <= max_cols; ++j) {
        grid[i - 1].push_back(count_for(GridShape(i, j), kind).str());
      }
    }
    if (format == OutputFormat::Csv) {
      out << "m\\n";
      for (unsigned j = 1; j <= max_cols; ++j) out << "," << j;
      out << "\n";
      for (unsigned i = 1; i <= max_rows; ++i) {
        out << i;
        for (const std::string& cell : grid[i - 1]) out << "," << cell;
        out << "\n";
      }
    } else if (format == OutputFormat::JsonLines) {
      for (unsigned i = 1; i <= max_rows; ++i) {
        for (unsigned j = 1; j <= max_cols; ++j) {
          out << "{\"m\":" << i << ",\"n\":" << j
              << ",\"count\":" << grid[i - 1][j - 1] << "}\n";
        }
      }
    } else {
      std::vector<std::size_t> width(max_cols, 0);
      for (unsigned j = 0; j < max_cols; ++j) {
        for (unsigned i = 0; i < max_rows; ++i) {
          width[j] = std::max(width[j], grid[i][j].size());
        }
      }
      for (unsigned i = 0; i < max_rows; ++i) {
        for (unsigned j = 0; j < max_cols; ++j) {
          if (j > 0) out << " ";
          out << std::setw(static_cast<int>(width[j])) << grid[i][j];
        }
        out << "\n";
      }
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_enumerate(unsigned rows, unsigned cols, GroupKind kind,
                  OutputFormat format, unsigned cap, std::ostream& out,
                  std::ostream& err) {
  try {
    if (format == OutputFormat::BFile) {
      err << "error: b-file format applies only to single sequences; "
             "use the bfile command\n";
      return 1;
    }
    const std::vector<OrbitRecord> records =
        enumerate_orbits(GridShape(rows, cols), kind, cap);
    if (format == OutputFormat::Csv) {
      out << "representative,weight,orbit_size\n";
      for (const OrbitRecord& r : records) {
        out << r.representative << "," << r.weight << "," << r.orbit_size
            << "\n";
      }
    } else if (format == OutputFormat::JsonLines) {
      for (const OrbitRecord& r : records) {
        out << "{\"representative\":" << r.representative
            << ",\"weight\":" << r.weight << ",\"orbit_size\":" << r.orbit_size
            << "}\n";
      }
    } else {
      for (const OrbitRecord& r : records) {
        out << r.representative << " " << r.weight << " " << r.orbit_size
            << "\n";
      }
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(unsigned max_rows, unsigned max_cols, unsigned cap,
               std::ostream& out, std::ostream& err) {
  try {
    bool all_pass = true;
    for (unsigned m = 1; m <= max_rows; ++m) {
      for (unsigned n = 1; n <= max_cols; ++n) {
        const std::string failure = verify_shape(GridShape(m, n), cap);
        if (failure.empty()) {
          out << "PASS " << m << "x" << n << "\n";
        } else {
          out << "FAIL " << m << "x" << n << " (" << failure << ")\n";
          all_pass = false;
        }
      }
    }
    return all_pass ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_bfile(GroupKind kind, SequenceSelector selector, unsigned index,
              unsigned terms, std::ostream& out, std::ostream& err) {
  try {
    for (unsigned t = 1; t <= terms; ++t) {
      GridShape shape = selector == SequenceSelector::Row ? GridShape(index, t)
                        : selector == SequenceSelector::Col
                            ? GridShape(t, index)
                            : GridShape(t, t);
      out << t << " " << count_for(shape, kind) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace torbin
