#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "torbin/cli_commands.hpp"
#include "torbin/orbits.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact counts and explicit orbits of toroidal binary arrays under "
      "row/column rotations (cyclic) or rotations and reflections "
      "(dihedral)"};
  app.require_subcommand(1);

  const std::map<std::string, torbin::GroupKind> kind_names{
      {"cyclic", torbin::GroupKind::Cyclic},
      {"dihedral", torbin::GroupKind::Dihedral}};
  const std::map<std::string, torbin::OutputFormat> format_names{
      {"plain", torbin::OutputFormat::Plain},
      {"csv", torbin::OutputFormat::Csv},
      {"jsonl", torbin::OutputFormat::JsonLines},
      {"bfile", torbin::OutputFormat::BFile}};

  torbin::GroupKind kind = torbin::GroupKind::Cyclic;
  torbin::OutputFormat format = torbin::OutputFormat::Plain;
  unsigned rows = 1;
  unsigned cols = 1;
  unsigned max_square = 0;
  unsigned max_rows = 0;
  unsigned max_cols = 0;
  unsigned cap = torbin::kDefaultEnumerationCap;
  unsigned terms = 8;
  unsigned row_index = 0;
  unsigned col_index = 0;
  bool diagonal = false;

  CLI::App* count = app.add_subcommand(
      "count", "Print the exact orbit count for one shape");
  count->add_option("-m,--rows", rows, "Number of rows")
      ->required()
      ->check(CLI::PositiveNumber);
  count->add_option("-n,--cols", cols, "Number of columns")
      ->required()
      ->check(CLI::PositiveNumber);
  count->add_option("-g,--group", kind, "Symmetry group")
      ->transform(CLI::CheckedTransformer(kind_names, CLI::ignore_case));

  CLI::App* table = app.add_subcommand(
      "table", "Print the grid of counts for all shapes up to a bound");
  CLI::Option* table_max =
      table->add_option("--max", max_square, "Square range: rows = cols = MAX")
          ->check(CLI::PositiveNumber);
  CLI::Option* table_max_rows =
      table->add_option("--max-rows", max_rows, "Largest row count")
          ->check(CLI::PositiveNumber);
  CLI::Option* table_max_cols =
      table->add_option("--max-cols", max_cols, "Largest column count")
          ->check(CLI::PositiveNumber);
  table_max->excludes(table_max_rows)->excludes(table_max_cols);
  table->add_option("-g,--group", kind, "Symmetry group")
      ->transform(CLI::CheckedTransformer(kind_names, CLI::ignore_case));
  table->add_option("-f,--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "List every orbit: representative, weight, orbit size");
  enumerate->add_option("-m,--rows", rows, "Number of rows")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("-n,--cols", cols, "Number of columns")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("-g,--group", kind, "Symmetry group")
      ->transform(CLI::CheckedTransformer(kind_names, CLI::ignore_case));
  enumerate->add_option("-f,--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  enumerate
      ->add_option("--cap", cap,
                   "Largest cell count m*n allowed for enumeration")
      ->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand(
      "verify",
      "Cross-check closed forms against the cycle oracle, the Burnside "
      "average, and exhaustive enumeration");
  CLI::Option* verify_max =
      verify->add_option("--max", max_square, "Square range: rows = cols = MAX")
          ->check(CLI::PositiveNumber);
  CLI::Option* verify_max_rows =
      verify->add_option("--max-rows", max_rows, "Largest row count")
          ->check(CLI::PositiveNumber);
  CLI::Option* verify_max_cols =
      verify->add_option("--max-cols", max_cols, "Largest column count")
          ->check(CLI::PositiveNumber);
  verify_max->excludes(verify_max_rows)->excludes(verify_max_cols);
  verify
      ->add_option("--cap", cap,
                   "Largest cell count m*n checked by enumeration")
      ->check(CLI::PositiveNumber);

  CLI::App* bfile = app.add_subcommand(
      "bfile", "Emit a row, column, or diagonal of the count table as "
               "\"index value\" lines");
  bfile->add_option("-g,--group", kind, "Symmetry group")
      ->transform(CLI::CheckedTransformer(kind_names, CLI::ignore_case));
  CLI::Option* bfile_row =
      bfile->add_option("--row", row_index, "Emit row ROW of the table")
          ->check(CLI::PositiveNumber);
  CLI::Option* bfile_col =
      bfile->add_option("--col", col_index, "Emit column COL of the table")
          ->check(CLI::PositiveNumber);
  CLI::Option* bfile_diag =
      bfile->add_flag("--diagonal", diagonal, "Emit the diagonal");
  bfile_row->excludes(bfile_col)->excludes(bfile_diag);
  bfile_col->excludes(bfile_diag);
  bfile->add_option("-t,--terms", terms, "Number of terms")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (count->parsed()) {
    return torbin::cmd_count(rows, cols, kind, std::cout, std::cerr);
  }
  if (table->parsed() || verify->parsed()) {
    const bool square_given =
        table->parsed() ? table_max->count() > 0 : verify_max->count() > 0;
    const bool rows_given = table->parsed() ? table_max_rows->count() > 0
                                            : verify_max_rows->count() > 0;
    const bool cols_given = table->parsed() ? table_max_cols->count() > 0
                                            : verify_max_cols->count() > 0;
    if (square_given) {
      max_rows = max_square;
      max_cols = max_square;
    } else if (!rows_given || !cols_given) {
      std::cerr << "error: specify --max, or both --max-rows and --max-cols\n";
      return 1;
    }
    if (table->parsed()) {
      return torbin::cmd_table(max_rows, max_cols, kind, format, std::cout,
                               std::cerr);
    }
    return torbin::cmd_verify(max_rows, max_cols, cap, std::cout, std::cerr);
  }
  if (enumerate->parsed()) {
    return torbin::cmd_enumerate(rows, cols, kind, format, cap, std::cout,
                                 std::cerr);
  }
  if (bfile->parsed()) {
    const int selectors = (bfile_row->count() > 0 ? 1 : 0) +
                          (bfile_col->count() > 0 ? 1 : 0) + (diagonal ? 1 : 0);
    if (selectors != 1) {
      std::cerr << "error: choose exactly one of --row, --col, --diagonal\n";
      return 1;
    }
    torbin::SequenceSelector selector = torbin::SequenceSelector::Diagonal;
    unsigned index = 0;
    if (bfile_row->count() > 0) {
      selector = torbin::SequenceSelector::Row;
      index = row_index;
    } else if (bfile_col->count() > 0) {
      selector = torbin::SequenceSelector::Col;
      index = col_index;
    }
    return torbin::cmd_bfile(kind, selector, index, terms, std::cout,
                             std::cerr);
  }
  return 1;
}
