// Perimeter-bounded index of Heronian triangles, persisted as JSON Lines:
// one header object, then one record per line sorted by (perimeter, a, b, c).

#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heron/core.hpp"

namespace heron {

inline constexpr int kCatalogVersion = 1;

struct CatalogRecord {
  Triangle triangle;
  Int perimeter;
  Int area;
  Classification classification;

  bool operator==(const CatalogRecord&) const = default;
};

struct CatalogHeader {
  int version = kCatalogVersion;
  Int p_max = 0;
  std::size_t count = 0;
  std::string built;  // informational; ignored by equality

  bool operator==(const CatalogHeader& o) const {
    return version == o.version && p_max == o.p_max && count == o.count;
  }
};

class CatalogError : public std::runtime_error {
 public:
  CatalogError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class CatalogVersionError : public CatalogError {
 public:
  using CatalogError::CatalogError;
};

struct QueryResult {
  std::vector<Triangle> triangles;
  bool complete;  // false: triangles beyond the catalog bound may be missing
};

class Catalog {
 public:
  static Catalog build(Int p_max, unsigned workers = 0);

  /// Throws CatalogError (with line number) or CatalogVersionError.
  static Catalog load(const std::filesystem::path& path);
  static Catalog parse(std::istream& in);

  void save(const std::filesystem::path& path) const;
  void write(std::ostream& out) const;

  const CatalogHeader& header() const { return header_; }
  const std::vector<CatalogRecord>& records() const& { return records_; }
  std::vector<CatalogRecord> records() && { return std::move(records_); }
  Int p_max() const { return header_.p_max; }

  QueryResult query_by_area(Int area) const;
  QueryResult query_by_perimeter(Int perimeter) const;

  bool operator==(const Catalog& o) const {
    return header_ == o.header_ && records_ == o.records_;
  }

 private:
  Catalog(CatalogHeader header, std::vector<CatalogRecord> records);

  CatalogHeader header_;
  std::vector<CatalogRecord> records_;
  std::multimap<Int, std::size_t> by_perimeter_;
  std::multimap<Int, std::size_t> by_area_;
};

}  // namespace heron
