#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "bruhat_taquin/permutation.hpp"
#include "bruhat_taquin/polynomial.hpp"
#include "bruhat_taquin/schubert.hpp"

namespace bruhat_taquin {

/// On-disk Schubert memo store.
///
/// Line 1 is the version header; every further line is one record
///   <permutation> <variable count> <exponent>:<coeff> ...
/// with exponents written as dot-separated integers, e.g. "1423 3 2.0.0:1 1.1.0:1 0.2.0:1".
inline constexpr const char* kCacheHeader = "bruhat-taquin schubert cache v1";

struct CacheResult {
  bool ok = true;
  std::size_t records = 0;
  std::string warning;
};

namespace detail {

inline std::string format_record(const Permutation& w, const Polynomial& p) {
  std::string line = w.to_string() + " " + std::to_string(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    line += " ";
    for (std::size_t i = 0; i < e.size(); ++i) line += (i ? "." : "") + std::to_string(e[i]);
    line += ":" + std::to_string(c);
  }
  return line;
}

inline std::pair<Permutation, Polynomial> parse_record(const std::string& line) {
  std::istringstream in(line);
  std::string perm;
  int nvars = -1;
  if (!(in >> perm >> nvars) || nvars < 0) throw Error(ErrorCode::ParseError, "malformed record header");
  Polynomial p(nvars);
  std::string term;
  while (in >> term) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "term without coefficient");
    Polynomial::Exponent e;
    std::istringstream es(term.substr(0, colon));
    std::string part;
    while (std::getline(es, part, '.')) e.push_back(std::stoi(part));
    p.add_term(std::move(e), std::stoll(term.substr(colon + 1)));
  }
  return {Permutation::parse(perm), std::move(p)};
}

}  // namespace detail

/// Load records into the oracle. Any malformed or version-mismatched file is ignored as a whole.
inline CacheResult load_cache(const std::filesystem::path& path, SchubertOracle& oracle) {
  std::ifstream in(path);
  if (!in) return {true, 0, ""};
  std::string header;
  std::getline(in, header);
  if (header != kCacheHeader) return {false, 0, "ignoring cache " + path.string() + ": unrecognized version header"};
  std::vector<std::pair<Permutation, Polynomial>> records;
  std::string line;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      records.push_back(detail::parse_record(line));
    }
  } catch (const std::exception& e) {
    return {false, 0, "ignoring corrupt cache " + path.string() + ": " + e.what()};
  }
  for (auto& [w, p] : records) {
    if (trimmed(w) != w || p.nvars() != std::max(w.size() - 1, 0)) return {false, 0, "ignoring corrupt cache " + path.string() + ": bad record for " + w.to_string()};
  }
  for (auto& [w, p] : records) oracle.preload(w, std::move(p));
  return {true, records.size(), ""};
}

/// Write the memo store to a temporary file beside `path`, then rename it into place.
inline CacheResult save_cache(const std::filesystem::path& path, const SchubertOracle& oracle) {
  const auto snapshot = oracle.snapshot();
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return {false, 0, "cannot write cache " + path.string() + "; continuing without it"};
    out << kCacheHeader << "\n";
    for (const auto& [w, p] : snapshot) out << detail::format_record(w, p) << "\n";
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return {false, 0, "cannot write cache " + path.string() + "; continuing without it"};
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return {false, 0, "cannot replace cache " + path.string() + "; continuing without it"};
  }
  return {true, snapshot.size(), ""};
}

}  // namespace bruhat_taquin
