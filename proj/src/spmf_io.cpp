#include "taspm/spmf_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "taspm/error.hpp"

namespace taspm {

namespace {

constexpr std::int64_t kItemsetEnd = -1;
constexpr std::int64_t kSequenceEnd = -2;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#' || line.front() == '@' || line.front() == '%';
}

std::int64_t parse_int(std::string_view tok, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(ErrorCode::SyntaxError, "bad token '" + std::string(tok) + "'", line);
  return v;
}

template <typename F>
void for_each_token(std::string_view s, F&& f) {
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) f(s.substr(i, j - i));
    i = j;
  }
}

void finish_itemset(Itemset& cur, std::size_t line, const ParseOptions& opts) {
  if (opts.normalize) {
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    return;
  }
  for (std::size_t k = 1; k < cur.size(); ++k)
    if (cur[k - 1] >= cur[k])
      throw Error(ErrorCode::UnsortedItemset, "itemset not strictly increasing", line);
}

// Parses one line of the itemset grammar. When `require_end` is set the
// line must close with -2 and nothing may follow it.
std::vector<Itemset> parse_itemsets(std::string_view text, std::size_t line, bool require_end,
                                    const ParseOptions& opts) {
  std::vector<Itemset> out;
  Itemset cur;
  bool ended = false;
  for_each_token(text, [&](std::string_view tok) {
    if (ended) throw Error(ErrorCode::SyntaxError, "token after -2", line);
    std::int64_t v = parse_int(tok, line);
    if (v == kItemsetEnd) {
      if (cur.empty()) throw Error(ErrorCode::SyntaxError, "empty itemset", line);
      finish_itemset(cur, line, opts);
      out.push_back(std::move(cur));
      cur.clear();
    } else if (v == kSequenceEnd) {
      if (!cur.empty()) throw Error(ErrorCode::SyntaxError, "itemset not closed by -1", line);
      ended = true;
    } else if (v <= 0 || v > static_cast<std::int64_t>(UINT32_MAX)) {
      throw Error(ErrorCode::SyntaxError, "item " + std::to_string(v) + " out of range", line);
    } else {
      cur.push_back(static_cast<Item>(v));
    }
  });
  if (!cur.empty()) throw Error(ErrorCode::SyntaxError, "itemset not closed by -1", line);
  if (require_end && !ended) throw Error(ErrorCode::SyntaxError, "missing -2 terminator", line);
  return out;
}

void write_itemsets(std::ostream& out, ItemsetSpan itemsets) {
  for (const auto& is : itemsets) {
    for (Item e : is) out << e << ' ';
    out << "-1";
    if (&is != &itemsets.back()) out << ' ';
  }
}

}  // namespace

SequenceDatabase parse_database(std::istream& in, const ParseOptions& opts) {
  std::vector<Sequence> seqs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto itemsets = parse_itemsets(line, lineno, true, opts);
    if (itemsets.empty()) throw Error(ErrorCode::SyntaxError, "sequence has no itemsets", lineno);
    seqs.push_back(Sequence{static_cast<std::uint32_t>(seqs.size()), std::move(itemsets)});
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read failure");
  return SequenceDatabase(std::move(seqs));
}

SequenceDatabase parse_database_text(std::string_view text, const ParseOptions& opts) {
  std::istringstream in{std::string(text)};
  return parse_database(in, opts);
}

SequenceDatabase read_database_file(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return parse_database(in, opts);
}

void write_database(const SequenceDatabase& db, std::ostream& out) {
  for (const auto& s : db) {
    write_itemsets(out, s.itemsets);
    out << " -2\n";
  }
  if (!out) throw Error(ErrorCode::Io, "write failure");
}

std::string database_to_string(const SequenceDatabase& db) {
  std::ostringstream out;
  write_database(db, out);
  return out.str();
}

void write_database_file(const SequenceDatabase& db, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  write_database(db, out);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failure on '" + path + "'");
}

void write_patterns(const PatternSet& ps, std::ostream& out) {
  for (const auto& p : ps) {
    write_itemsets(out, p.itemsets);
    out << " #SUP: " << p.support << '\n';
  }
  if (!out) throw Error(ErrorCode::Io, "write failure");
}

std::string patterns_to_string(const PatternSet& ps) {
  std::ostringstream out;
  write_patterns(ps, out);
  return out.str();
}

PatternSet parse_patterns(std::istream& in) {
  PatternSet out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    auto mark = view.find("#SUP:");
    if (mark == std::string_view::npos)
      throw Error(ErrorCode::SyntaxError, "missing #SUP:", lineno);
    auto sup_text = trim(view.substr(mark + 5));
    std::int64_t sup = parse_int(sup_text, lineno);
    if (sup < 0) throw Error(ErrorCode::SyntaxError, "negative support", lineno);
    auto itemsets = parse_itemsets(view.substr(0, mark), lineno, false, {});
    if (itemsets.empty()) throw Error(ErrorCode::SyntaxError, "empty pattern", lineno);
    out.push_back(Pattern{std::move(itemsets), static_cast<std::uint64_t>(sup)});
  }
  return out;
}

QuerySequence parse_query(std::string_view tokens, const ParseOptions& opts) {
  return QuerySequence{parse_itemsets(tokens, 0, false, opts)};
}

std::string format_query(const QuerySequence& qs) {
  std::ostringstream out;
  write_itemsets(out, qs.itemsets);
  return out.str();
}

DatasetStats compute_stats(const SequenceDatabase& db) {
  if (db.empty()) throw Error(ErrorCode::EmptyDatabase, "statistics of an empty database");
  DatasetStats st;
  st.db_size = db.size();
  st.distinct_items = db.alphabet().size();
  std::uint64_t itemsets = 0;
  std::uint64_t items = 0;
  st.min_size = UINT64_MAX;
  for (const auto& s : db) {
    itemsets += s.size();
    items += s.length();
    st.min_size = std::min<std::uint64_t>(st.min_size, s.size());
    st.max_size = std::max<std::uint64_t>(st.max_size, s.size());
  }
  st.avg_items_per_itemset = static_cast<double>(items) / static_cast<double>(itemsets);
  st.avg_sequence_length = static_cast<double>(items) / static_cast<double>(db.size());
  return st;
}

std::string format_stats(const DatasetStats& st) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "|D|=%llu |I|=%llu avg(I)=%.2f avg(S)=%.2f min(S)=%llu max(S)=%llu",
                static_cast<unsigned long long>(st.db_size),
                static_cast<unsigned long long>(st.distinct_items), st.avg_items_per_itemset,
                st.avg_sequence_length, static_cast<unsigned long long>(st.min_size),
                static_cast<unsigned long long>(st.max_size));
  return buf;
}

}  // namespace taspm
