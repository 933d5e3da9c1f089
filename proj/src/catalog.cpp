#include "heron/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "heron/enumerate.hpp"

namespace heron {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormatName = "heronian-catalog";

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool record_less(const CatalogRecord& l, const CatalogRecord& r) {
  if (l.perimeter != r.perimeter) return l.perimeter < r.perimeter;
  return l.triangle < r.triangle;
}

Classification parse_class(const std::string& s, std::size_t line) {
  if (s == "equable") return Classification::Equable;
  if (s == "deficient") return Classification::Deficient;
  if (s == "abundant") return Classification::Abundant;
  throw CatalogError("unknown classification '" + s + "'", line);
}

template <typename T>
T field(const json& j, const char* key, std::size_t line) {
  const auto it = j.find(key);
  if (it == j.end()) throw CatalogError(std::string("missing field '") + key + "'", line);
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw CatalogError(std::string("bad value for '") + key + "'", line);
  }
}

CatalogRecord parse_record(const json& j, std::size_t line) {
  const auto a = field<Int>(j, "a", line);
  const auto b = field<Int>(j, "b", line);
  const auto c = field<Int>(j, "c", line);
  if (!(a <= b && b <= c)) throw CatalogError("sides not sorted", line);
  std::optional<Triangle> t;
  try {
    t.emplace(a, b, c);
  } catch (const std::invalid_argument& e) {
    throw CatalogError(e.what(), line);
  }
  CatalogRecord rec{*t, field<Int>(j, "perimeter", line), field<Int>(j, "area", line),
                    parse_class(field<std::string>(j, "class", line), line)};
  if (rec.perimeter != t->perimeter()) throw CatalogError("perimeter does not match sides", line);
  const auto area = heron_area(*t);
  if (!area || *area != rec.area) throw CatalogError("area does not match sides", line);
  if (rec.classification != classify(*t)) throw CatalogError("classification mismatch", line);
  return rec;
}

}  // namespace

Catalog::Catalog(CatalogHeader header, std::vector<CatalogRecord> records)
    : header_(std::move(header)), records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    by_perimeter_.emplace(records_[i].perimeter, i);
    by_area_.emplace(records_[i].area, i);
  }
}

Catalog Catalog::build(Int p_max, unsigned workers) {
  if (p_max < 0) throw std::invalid_argument("p_max must be nonnegative");
  std::vector<CatalogRecord> records;
  for (const auto& t : triangles_up_to_perimeter(p_max, workers)) {
    records.push_back({t, t.perimeter(), *heron_area(t), classify(t)});
  }
  std::sort(records.begin(), records.end(), record_less);
  CatalogHeader header{kCatalogVersion, p_max, records.size(), utc_timestamp()};
  return Catalog(std::move(header), std::move(records));
}

void Catalog::write(std::ostream& out) const {
  json head;
  head["format"] = kFormatName;
  head["version"] = header_.version;
  head["p_max"] = header_.p_max;
  head["count"] = header_.count;
  head["built"] = header_.built;
  out << head.dump() << '\n';
  for (const auto& r : records_) {
    json j;
    j["a"] = r.triangle.a();
    j["b"] = r.triangle.b();
    j["c"] = r.triangle.c();
    j["perimeter"] = r.perimeter;
    j["area"] = r.area;
    j["class"] = std::string(to_string(r.classification));
    out << j.dump() << '\n';
  }
}

void Catalog::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CatalogError("cannot open " + path.string() + " for writing", 0);
  write(out);
  out.flush();
  if (!out) throw CatalogError("write to " + path.string() + " failed", 0);
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot open " + path.string(), 0);
  return parse(in);
}

Catalog Catalog::parse(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  if (!std::getline(in, text)) throw CatalogError("missing header", 1);
  ++line;
  json head;
  try {
    head = json::parse(text);
  } catch (const json::parse_error&) {
    throw CatalogError("header is not valid JSON", line);
  }
  if (!head.is_object() || head.value("format", std::string{}) != kFormatName) {
    throw CatalogError("not a catalog header", line);
  }
  CatalogHeader header;
  header.version = field<int>(head, "version", line);
  if (header.version != kCatalogVersion) {
    throw CatalogVersionError("unsupported catalog version " + std::to_string(header.version) +
                                  " (expected " + std::to_string(kCatalogVersion) + ")",
                              line);
  }
  header.p_max = field<Int>(head, "p_max", line);
  header.count = field<std::size_t>(head, "count", line);
  header.built = head.value("built", std::string{});

  std::vector<CatalogRecord> records;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty()) throw CatalogError("empty line", line);
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error&) {
      throw CatalogError("record is not valid JSON", line);
    }
    if (!j.is_object()) throw CatalogError("record is not an object", line);
    auto rec = parse_record(j, line);
    if (rec.perimeter > header.p_max) throw CatalogError("record exceeds p_max", line);
    if (!records.empty() && !record_less(records.back(), rec)) {
      throw CatalogError("records out of order or duplicated", line);
    }
    records.push_back(rec);
  }
  if (records.size() != header.count) {
    throw CatalogError("header announces " + std::to_string(header.count) + " records, found " +
                           std::to_string(records.size()),
                       line + 1);
  }
  return Catalog(std::move(header), std::move(records));
}

QueryResult Catalog::query_by_area(Int area) const {
  QueryResult out{{}, area >= 1 && area_query_bound(area).perimeter_bound <= header_.p_max};
  auto [lo, hi] = by_area_.equal_range(area);
  for (auto it = lo; it != hi; ++it) out.triangles.push_back(records_[it->second].triangle);
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

QueryResult Catalog::query_by_perimeter(Int perimeter) const {
  QueryResult out{{}, perimeter <= header_.p_max};
  auto [lo, hi] = by_perimeter_.equal_range(perimeter);
  for (auto it = lo; it != hi; ++it) out.triangles.push_back(records_[it->second].triangle);
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

}  // namespace heron
