#include "taspm/bench.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <tuple>

#include "taspm/error.hpp"

namespace taspm {

const char* const kBenchCsvHeader =
    "dataset,algorithm,minsup,query,runtime_ms,intersections,peak_bitmap_bytes,patterns";

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw Error(ErrorCode::SyntaxError, "unterminated quote in CSV row");
  fields.push_back(std::move(cur));
  return fields;
}

std::uint64_t to_u64(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::SyntaxError, "bad integer '" + s + "' in CSV row");
  return v;
}

}  // namespace

std::string format_bench_row(const BenchRow& r) {
  return csv_field(r.dataset) + ',' + csv_field(r.algorithm) + ',' + std::to_string(r.minsup) +
         ',' + csv_field(r.query) + ',' + std::to_string(r.runtime_ms) + ',' +
         std::to_string(r.intersections) + ',' + std::to_string(r.peak_bitmap_bytes) + ',' +
         std::to_string(r.patterns);
}

BenchRow parse_bench_row(std::string_view line) {
  auto f = split_csv(line);
  if (f.size() != 8)
    throw Error(ErrorCode::SyntaxError,
                "expected 8 CSV fields, found " + std::to_string(f.size()));
  return BenchRow{f[0],         f[1],         to_u64(f[2]), f[3],
                  to_u64(f[4]), to_u64(f[5]), to_u64(f[6]), to_u64(f[7])};
}

std::vector<BenchRow> parse_bench_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::SyntaxError, "empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kBenchCsvHeader) throw Error(ErrorCode::SyntaxError, "unexpected CSV header", 1);
  std::vector<BenchRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      rows.push_back(parse_bench_row(line));
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), lineno);
    }
  }
  return rows;
}

std::vector<DatasetSource> expand_input(const std::string& spec, const GenParams& gen,
                                        const ParseOptions& opts) {
  std::vector<DatasetSource> out;
  auto generated = [&](std::uint64_t n) {
    GenParams p = gen;
    p.n_sequences = n;
    out.push_back({"gen:" + std::to_string(n), [p] { return generate(p); }});
  };
  if (spec.rfind("gen:", 0) == 0) {
    std::string body = spec.substr(4);
    auto dots = body.find("..");
    try {
      if (dots == std::string::npos) {
        generated(to_u64(body));
      } else {
        auto colon = body.find(':', dots);
        std::uint64_t lo = to_u64(body.substr(0, dots));
        std::uint64_t hi = to_u64(body.substr(dots + 2, colon == std::string::npos
                                                            ? std::string::npos
                                                            : colon - dots - 2));
        std::uint64_t step = colon == std::string::npos ? 1 : to_u64(body.substr(colon + 1));
        if (step == 0 || lo > hi) throw Error(ErrorCode::BadParams, "empty range");
        for (std::uint64_t n = lo; n <= hi; n += step) generated(n);
      }
    } catch (const Error&) {
      throw Error(ErrorCode::BadParams, "bad generator input '" + spec + "'");
    }
    return out;
  }
  out.push_back({spec, [spec, opts] { return read_database_file(spec, opts); }});
  return out;
}

std::vector<BenchRow> run_bench(const BenchPlan& plan,
                                const std::function<void(const BenchRow&)>& sink) {
  if (plan.repeat < 1) throw Error(ErrorCode::BadParams, "repeat must be >= 1");
  std::vector<BenchRow> rows;
  const std::string query = format_query(plan.query);
  for (const auto& ds : plan.datasets) {
    SequenceDatabase db = ds.load();
    for (const auto& algo : plan.algorithms) {
      for (std::uint64_t minsup : plan.minsups) {
        std::vector<std::uint64_t> times;
        BenchRow row{ds.label, algo.label, minsup, query, 0, 0, 0, 0};
        for (unsigned r = 0; r < plan.repeat; ++r) {
          auto res = mine(db, plan.query, MinSupport::absolute(minsup), algo);
          const auto& m = res.metrics;
          if (r > 0 && m.intersections != row.intersections)
            throw Error(ErrorCode::BadParams, "intersection count changed between repeats on " +
                                                  ds.label + "/" + algo.label);
          row.intersections = m.intersections;
          row.peak_bitmap_bytes = m.peak_bitmap_bytes;
          row.patterns = m.patterns_emitted;
          times.push_back(static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::milliseconds>(m.runtime).count()));
        }
        std::sort(times.begin(), times.end());
        row.runtime_ms = times[times.size() / 2];
        if (sink) sink(row);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<std::string> intersection_order_violations(const std::vector<BenchRow>& rows) {
  // (dataset, minsup) -> intersections per algorithm
  std::map<std::tuple<std::string, std::uint64_t, std::string>, std::map<std::string, std::uint64_t>>
      cells;
  for (const auto& r : rows) cells[{r.dataset, r.minsup, r.query}][r.algorithm] = r.intersections;

  const char* order[] = {"taspm-v2", "taspm-v1", "cmspam"};
  std::vector<std::string> out;
  for (const auto& [key, by_algo] : cells) {
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        auto lo = by_algo.find(order[a]);
        auto hi = by_algo.find(order[b]);
        if (lo == by_algo.end() || hi == by_algo.end()) continue;
        if (lo->second > hi->second)
          out.push_back(std::get<0>(key) + " minsup=" + std::to_string(std::get<1>(key)) + ": " +
                        order[a] + " " + std::to_string(lo->second) + " > " + order[b] + " " +
                        std::to_string(hi->second));
      }
    }
  }
  return out;
}

}  // namespace taspm
