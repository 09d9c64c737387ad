#pragma once

// SPMF text formats.
//
//   database line:  item+ -1 (item+ -1)* -2
//   pattern line:   item+ -1 (item+ -1)* #SUP: <n>
//
// Lines starting with '#', '@' or '%' and blank lines are skipped when
// reading a database.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "taspm/core_model.hpp"

namespace taspm {

struct ParseOptions {
  // Sort and deduplicate itemsets instead of rejecting unsorted input.
  bool normalize = false;
};

// sids are assigned 0..n-1 in file order.
SequenceDatabase parse_database(std::istream& in, const ParseOptions& opts = {});
SequenceDatabase parse_database_text(std::string_view text, const ParseOptions& opts = {});
SequenceDatabase read_database_file(const std::string& path, const ParseOptions& opts = {});

void write_database(const SequenceDatabase& db, std::ostream& out);
std::string database_to_string(const SequenceDatabase& db);
void write_database_file(const SequenceDatabase& db, const std::string& path);

void write_patterns(const PatternSet& ps, std::ostream& out);
std::string patterns_to_string(const PatternSet& ps);

// Reads pattern lines back. Any whitespace is accepted around "#SUP:".
PatternSet parse_patterns(std::istream& in);

// Same token grammar as one database line; the trailing -2 is optional and
// "" or "-2" yields the empty query.
QuerySequence parse_query(std::string_view tokens, const ParseOptions& opts = {});
std::string format_query(const QuerySequence& qs);

struct DatasetStats {
  std::uint64_t db_size = 0;
  std::uint64_t distinct_items = 0;
  double avg_items_per_itemset = 0.0;
  double avg_sequence_length = 0.0;
  std::uint64_t min_size = 0;
  std::uint64_t max_size = 0;
};

// Throws EmptyDatabase for |D| = 0.
DatasetStats compute_stats(const SequenceDatabase& db);

// "|D|=4 |I|=7 avg(I)=1.79 avg(S)=6.25 min(S)=2 max(S)=4"
std::string format_stats(const DatasetStats& st);

}  // namespace taspm
