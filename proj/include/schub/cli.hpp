#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "schub/pipeline.hpp"

namespace schub {

enum class OutputFormat { Text, Json, Csv };

struct CliConfig {
  enum class Command { Compute, Table, Verify };

  Command command = Command::Compute;
  std::string perm;                 // compute
  int n = 0;                        // table / verify
  OutputFormat format = OutputFormat::Text;
  int jobs = 0;                     // 0 means hardware concurrency
  std::string cache_path;           // empty means no cache
  bool no_cache = false;
  std::set<std::string> show;      // rank-matrix, generators, gb, leadterms, hilbert
  TieBreak order = TieBreak::Grevlex;
};

inline const char* kCacheEnvVar = "SCHUB_CACHE";

namespace cli_detail {

inline int effective_jobs(const CliConfig& c) {
  if (c.jobs > 0) return c.jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Cache files are per term order; the pinned line format has no order field.
inline std::string effective_cache_path(const CliConfig& c) {
  if (c.no_cache) return {};
  std::string path = c.cache_path;
  if (path.empty()) {
    const char* env = std::getenv(kCacheEnvVar);
    if (env != nullptr && *env != '\0') path = env;
  }
  if (path.empty()) return {};
  if (c.order == TieBreak::Lex) path += ".lex";
  return path;
}

inline std::string csv_row(const MultiplicityRecord& r) {
  std::ostringstream out;
  out << r.n << ',' << r.word_str() << ',' << r.length << ',' << r.dimension << ','
      << r.multiplicity << ',' << (r.pattern_smooth ? "true" : "false");
  return out.str();
}

inline std::string text_row(const MultiplicityRecord& r) {
  std::ostringstream out;
  out << "w=" << r.word_str() << " length=" << r.length << " dimension=" << r.dimension
      << " multiplicity=" << r.multiplicity << " smooth="
      << (r.pattern_smooth ? "true" : "false");
  return out.str();
}

inline MultiplicityRecord record_from_json_line(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  MultiplicityRecord r;
  r.n = j.at("n").get<int>();
  r.word = Permutation::parse(j.at("w").get<std::string>()).image();
  r.length = j.at("length").get<int>();
  r.dimension = j.at("dimension").get<int>();
  r.multiplicity = j.at("multiplicity").get<long long>();
  r.pattern_smooth = j.at("smooth").get<bool>();
  return r;
}

}  // namespace cli_detail

/// Appendix-style grouping: multiplicities descending, words lexicographic
/// within each class.
inline std::string summarize(const std::vector<MultiplicityRecord>& records) {
  std::map<long long, std::vector<std::string>> classes;
  for (const auto& r : records) classes[r.multiplicity].push_back(r.word_str());
  std::ostringstream out;
  out << "Multiplicity | Permutations\n";
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
    std::sort(it->second.begin(), it->second.end());
    out << it->first << " | ";
    for (size_t i = 0; i < it->second.size(); ++i) {
      if (i) out << ", ";
      out << it->second[i];
    }
    out << "\n";
  }
  return out.str();
}

namespace cli_detail {

inline void print_records(const std::vector<MultiplicityRecord>& records, OutputFormat format,
                          std::ostream& out) {
  if (format == OutputFormat::Csv) out << "n,w,length,dimension,multiplicity,smooth\n";
  for (const auto& r : records) {
    switch (format) {
      case OutputFormat::Json:
        out << to_json_line(r) << "\n";
        break;
      case OutputFormat::Csv:
        out << csv_row(r) << "\n";
        break;
      case OutputFormat::Text:
        out << text_row(r) << "\n";
        break;
    }
  }
}

inline void print_trace(const CliConfig& config, const TracedResult& result, std::ostream& out) {
  const auto& trace = result.trace;
  const Permutation w(result.record.word);
  if (config.show.count("rank-matrix")) {
    out << "# rank matrix\n";
    for (int i = 1; i <= w.size(); ++i) {
      for (int j = 1; j <= w.size(); ++j) out << (j > 1 ? " " : "") << trace.rank.at(i, j);
      out << "\n";
    }
  }
  if (config.show.count("generators")) {
    out << "# w=" << w.word() << " generators=" << trace.generators.gens.size() << "\n";
    for (const auto& g : trace.generators.gens) out << to_string(g) << "\n";
  }
  if (config.show.count("gb")) {
    out << "# groebner basis (" << trace.gb.basis.size() << " elements)\n";
    for (const auto& g : trace.gb.basis) out << to_string(g) << "\n";
  }
  if (config.show.count("leadterms")) {
    out << "# initial ideal after sending t to 1\n";
    for (const auto& m : trace.eliminated.gens()) out << m.str() << "\n";
  }
  if (config.show.count("hilbert")) {
    out << "# hilbert numerator coefficients\n";
    for (size_t i = 0; i < trace.hilbert.coeffs.size(); ++i)
      out << (i ? " " : "") << trace.hilbert.coeffs[i];
    out << "\n";
  }
}

// Returns records for all of Sn in lexicographic order, consulting and
// updating the cache file when one is configured.
inline std::vector<MultiplicityRecord> records_for_group(const CliConfig& config, int n,
                                                         const TermOrder& ord) {
  const std::string cache = effective_cache_path(config);
  const std::vector<Permutation> group = symmetric_group(n);

  std::map<std::string, MultiplicityRecord> cached;
  if (!cache.empty()) {
    std::ifstream in(cache);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        MultiplicityRecord r = record_from_json_line(line);
        if (r.n == n) cached.emplace(r.word_str(), std::move(r));
      } catch (const std::exception&) {
        // Ignore unrelated or damaged lines.
      }
    }
  }

  std::vector<Permutation> todo;
  for (const auto& w : group)
    if (cached.find(w.word()) == cached.end()) todo.push_back(w);

  std::vector<MultiplicityRecord> fresh =
      compute_records(todo, ord, effective_jobs(config));

  if (!cache.empty() && !fresh.empty()) {
    std::ofstream out(cache, std::ios::app);
    for (const auto& r : fresh) out << to_json_line(r) << "\n";
  }

  std::vector<MultiplicityRecord> records;
  records.reserve(group.size());
  size_t fi = 0;
  for (const auto& w : group) {
    auto it = cached.find(w.word());
    if (it != cached.end())
      records.push_back(it->second);
    else
      records.push_back(fresh[fi++]);
  }
  return records;
}

}  // namespace cli_detail

/// Executes the parsed configuration. Exit status: 0 success / verification
/// pass, 1 verification mismatch, 2 usage or input error.
inline int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const TermOrder ord(config.order);
    switch (config.command) {
      case CliConfig::Command::Compute: {
        if (!config.show.empty() && config.format != OutputFormat::Text) {
          err << "error: --show requires --format text\n";
          return 2;
        }
        Permutation w = Permutation::parse(config.perm);
        TracedResult result = multiplicity_with_trace(w, ord);
        if (config.format == OutputFormat::Text) {
          cli_detail::print_trace(config, result, out);
          const auto& r = result.record;
          out << "w: " << r.word_str() << "\n";
          out << "n: " << r.n << "\n";
          out << "length: " << r.length << "\n";
          out << "dimension: " << r.dimension << "\n";
          out << "multiplicity: " << r.multiplicity << "\n";
          out << "smooth: " << (r.pattern_smooth ? "true" : "false") << "\n";
        } else {
          cli_detail::print_records({result.record}, config.format, out);
        }
        return 0;
      }
      case CliConfig::Command::Table: {
        std::vector<MultiplicityRecord> records =
            cli_detail::records_for_group(config, config.n, ord);
        cli_detail::print_records(records, config.format, out);
        if (config.format == OutputFormat::Text) out << "\n" << summarize(records);
        return 0;
      }
      case CliConfig::Command::Verify: {
        if (expected_table(config.n) == nullptr) {
          err << "error: no reference table for n=" << config.n << " (available: 5, 6)\n";
          return 2;
        }
        std::vector<MultiplicityRecord> records =
            cli_detail::records_for_group(config, config.n, ord);
        VerifyReport report = verify(config.n, records);
        out << report.details;
        return report.pass ? 0 : 1;
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace schub
