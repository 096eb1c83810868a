// Copyright 2026 The qprof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qprof/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "qprof/circuit.hpp"
#include "qprof/errors.hpp"
#include "text_util.hpp"

namespace qprof {

namespace {

using Json = nlohmann::ordered_json;
using detail::parse_number;

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  while (true) {
    const std::size_t comma = line.find(',');
    cells.push_back(detail::trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return cells;
}

void check_cell(std::string_view cell, std::size_t line) {
  if (cell.find_first_of(",\n\r") != std::string_view::npos) {
    throw InvalidArgument("value '" + std::string(cell) +
                          "' cannot be written as a CSV cell (line " +
                          std::to_string(line) + ")");
  }
}

// Calls `row(cells, line_number)` for every data line after the header.
template <class F>
void for_each_row(std::string_view text, std::string_view header,
                  std::size_t columns, F row) {
  const auto lines = detail::split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && detail::trim(lines[i]).empty()) ++i;
  if (i == lines.size() || detail::trim(lines[i]) != header) {
    throw ParseError(i + 1, "expected header '" + std::string(header) + "'");
  }
  for (++i; i < lines.size(); ++i) {
    const std::string_view line = detail::trim(lines[i]);
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != columns) {
      throw ParseError(i + 1, "expected " + std::to_string(columns) +
                                  " fields, got " +
                                  std::to_string(cells.size()));
    }
    row(cells, i + 1);
  }
}

Json five_to_json(const FiveNumber& f) {
  return Json{{"min", f.min},
              {"q1", f.q1},
              {"median", f.median},
              {"q3", f.q3},
              {"max", f.max}};
}

FiveNumber five_from_json(const Json& j) {
  return {j.at("min").get<double>(), j.at("q1").get<double>(),
          j.at("median").get<double>(), j.at("q3").get<double>(),
          j.at("max").get<double>()};
}

}  // namespace

std::string records_to_csv(const std::vector<RunRecord>& records) {
  std::ostringstream os;
  os << kRecordsHeader << '\n';
  for (std::size_t i = 0; i < records.size(); ++i) {
    const RunRecord& r = records[i];
    check_cell(r.run_id, i + 2);
    check_cell(r.pass_name, i + 2);
    os << r.run_id << ',' << stage_name(r.stage) << ',' << r.pass_name << ','
       << r.iteration << ',' << r.wall_time << '\n';
  }
  return os.str();
}

std::vector<RunRecord> parse_records_csv(std::string_view text) {
  std::vector<RunRecord> out;
  for_each_row(text, kRecordsHeader, 5, [&](const auto& c, std::size_t line) {
    RunRecord r;
    r.run_id = std::string(c[0]);
    const auto stage = stage_from_name(c[1]);
    if (!stage) {
      throw ParseError(line, "unknown stage '" + std::string(c[1]) + "'");
    }
    r.stage = *stage;
    r.pass_name = std::string(c[2]);
    if (r.pass_name.empty()) throw ParseError(line, "empty pass name");
    r.iteration = parse_number<unsigned>(c[3], line, "iteration");
    r.wall_time = parse_number<Nanoseconds>(c[4], line, "wall time");
    if (r.wall_time < 0) throw ParseError(line, "negative wall time");
    out.push_back(std::move(r));
  });
  return out;
}

std::string summary_to_json(const ExperimentSummary& s) {
  Json j;
  j["configuration"] = Json{{"circuit", s.configuration.circuit},
                            {"qubits", s.configuration.qubits},
                            {"level", s.configuration.level},
                            {"target", s.configuration.target}};
  j["repetitions"] = s.repetitions;
  j["near_tie_threshold"] = s.near_tie_threshold;
  j["total_time_ns"] = five_to_json(s.total_time_ns);
  Json passes = Json::array();
  for (const PassSummary& p : s.passes) {
    passes.push_back(Json{{"pass_name", p.pass_name},
                          {"category", category_name(p.category)},
                          {"median_share_pct", p.median_share},
                          {"median_invocations", p.median_invocations},
                          {"time_ns", five_to_json(p.time_ns)}});
  }
  j["passes"] = std::move(passes);
  j["top"] = s.top;
  Json ties = Json::array();
  for (const auto& [a, b] : s.near_ties) ties.push_back(Json::array({a, b}));
  j["near_ties"] = std::move(ties);
  return j.dump(2) + "\n";
}

ExperimentSummary parse_summary_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    ExperimentSummary s;
    const Json& c = j.at("configuration");
    s.configuration.circuit = c.at("circuit").get<std::string>();
    s.configuration.qubits = c.at("qubits").get<std::size_t>();
    s.configuration.level = c.at("level").get<int>();
    s.configuration.target = c.at("target").get<std::string>();
    s.repetitions = j.at("repetitions").get<std::size_t>();
    s.near_tie_threshold = j.at("near_tie_threshold").get<double>();
    s.total_time_ns = five_from_json(j.at("total_time_ns"));
    for (const Json& p : j.at("passes")) {
      PassSummary ps;
      ps.pass_name = p.at("pass_name").get<std::string>();
      ps.category = category_from_name(p.at("category").get<std::string>());
      ps.median_share = p.at("median_share_pct").get<double>();
      ps.median_invocations = p.at("median_invocations").get<double>();
      ps.time_ns = five_from_json(p.at("time_ns"));
      s.passes.push_back(std::move(ps));
    }
    s.top = j.at("top").get<std::vector<std::string>>();
    for (const Json& t : j.at("near_ties")) {
      s.near_ties.emplace_back(t.at(0).get<std::string>(),
                               t.at(1).get<std::string>());
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("summary: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(0, std::string("summary: ") + e.what());
  }
}

std::string plot_data_to_csv(const ExperimentSummary& s) {
  std::ostringstream os;
  os << kPlotDataHeader << '\n';
  for (std::size_t i = 0; i < s.passes.size(); ++i) {
    const PassSummary& p = s.passes[i];
    check_cell(p.pass_name, i + 2);
    os << i + 1 << ',' << p.pass_name << ',' << category_name(p.category)
       << ',' << format_double(p.time_ns.min) << ','
       << format_double(p.time_ns.q1) << ','
       << format_double(p.time_ns.median) << ','
       << format_double(p.time_ns.q3) << ',' << format_double(p.time_ns.max)
       << ',' << format_double(p.median_share) << '\n';
  }
  return os.str();
}

std::vector<PassSummary> parse_plot_data_csv(std::string_view text) {
  std::vector<PassSummary> out;
  for_each_row(text, kPlotDataHeader, 9, [&](const auto& c, std::size_t line) {
    const auto rank = parse_number<std::size_t>(c[0], line, "rank");
    if (rank != out.size() + 1) throw ParseError(line, "ranks out of order");
    PassSummary p;
    p.pass_name = std::string(c[1]);
    try {
      p.category = category_from_name(std::string(c[2]));
    } catch (const InvalidArgument& e) {
      throw ParseError(line, e.what());
    }
    p.time_ns = {parse_number<double>(c[3], line, "min"),
                 parse_number<double>(c[4], line, "q1"),
                 parse_number<double>(c[5], line, "median"),
                 parse_number<double>(c[6], line, "q3"),
                 parse_number<double>(c[7], line, "max")};
    p.median_share = parse_number<double>(c[8], line, "share");
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<TraceRow> make_trace(const std::vector<PassAggregate>& aggregates,
                                 Nanoseconds total_time,
                                 const PassRegistry& registry) {
  std::vector<TraceRow> rows;
  rows.push_back({"qprof/transpiler/pass_manager", "run", 1, total_time});
  for (const PassAggregate& a : aggregates) {
    const PassDescriptor& d = registry.at(a.pass_name);
    const std::string path =
        std::string(kPassesLocation) + d.module + "/" + a.pass_name;
    rows.push_back({"qprof/transpiler/pass", "execute", a.invocation_count,
                    a.cumulative_time});
    rows.push_back({path, "run", a.invocation_count, a.cumulative_time});
  }
  return rows;
}

std::string trace_to_csv(const std::vector<TraceRow>& rows) {
  std::ostringstream os;
  os << kTraceHeader << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TraceRow& r = rows[i];
    check_cell(r.path, i + 2);
    check_cell(r.function, i + 2);
    os << r.path << ',' << r.function << ',' << r.calls << ','
       << r.cumulative_ns << '\n';
  }
  return os.str();
}

std::vector<TraceRow> parse_trace_csv(std::string_view text) {
  std::vector<TraceRow> out;
  for_each_row(text, kTraceHeader, 4, [&](const auto& c, std::size_t line) {
    out.push_back({std::string(c[0]), std::string(c[1]),
                   parse_number<std::size_t>(c[2], line, "calls"),
                   parse_number<Nanoseconds>(c[3], line, "cumulative")});
  });
  return out;
}

std::vector<std::pair<std::string, Nanoseconds>> filter_trace(
    const std::vector<TraceRow>& rows) {
  std::vector<std::pair<std::string, Nanoseconds>> out;
  for (const TraceRow& r : rows) {
    if (r.function != "run") continue;
    if (r.path.find(kPassesLocation) == std::string::npos) continue;
    out.emplace_back(r.path.substr(r.path.rfind('/') + 1), r.cumulative_ns);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComparisonRow comparison_row(const ExperimentSummary& summary,
                             std::string verification) {
  ComparisonRow row;
  row.level = summary.configuration.level;
  row.total_median_ns = summary.total_time_ns.median;
  if (!summary.passes.empty()) {
    row.top1_pass = summary.passes.front().pass_name;
    row.top1_share_pct = summary.passes.front().median_share;
  }
  for (const PassSummary& p : summary.passes) {
    row.executed_passes.push_back(p.pass_name);
  }
  row.verification = std::move(verification);
  return row;
}

std::string comparison_to_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream os;
  os << kComparisonHeader << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ComparisonRow& r = rows[i];
    std::string passes;
    for (const std::string& p : r.executed_passes) {
      check_cell(p, i + 2);
      if (!passes.empty()) passes += ';';
      passes += p;
    }
    check_cell(r.top1_pass, i + 2);
    check_cell(r.verification, i + 2);
    os << r.level << ',' << format_double(r.total_median_ns) << ','
       << r.top1_pass << ',' << format_double(r.top1_share_pct) << ','
       << passes << ',' << r.verification << '\n';
  }
  return os.str();
}

std::vector<ComparisonRow> parse_comparison_csv(std::string_view text) {
  std::vector<ComparisonRow> out;
  for_each_row(text, kComparisonHeader, 6, [&](const auto& c, std::size_t line) {
    ComparisonRow r;
    r.level = parse_number<int>(c[0], line, "level");
    r.total_median_ns = parse_number<double>(c[1], line, "total");
    r.top1_pass = std::string(c[2]);
    r.top1_share_pct = parse_number<double>(c[3], line, "share");
    std::string_view passes = c[4];
    while (!passes.empty()) {
      const std::size_t semi = passes.find(';');
      r.executed_passes.emplace_back(passes.substr(0, semi));
      if (semi == std::string_view::npos) break;
      passes.remove_prefix(semi + 1);
    }
    r.verification = std::string(c[5]);
    out.push_back(std::move(r));
  });
  return out;
}

}  // namespace qprof
