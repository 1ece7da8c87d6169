#include "ifkco/instances.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace ifkco {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& word : s_) word = sm.next();
}

Xoshiro256StarStar Xoshiro256StarStar::from_state(const std::array<std::uint64_t, 4>& state) {
  Xoshiro256StarStar g;
  g.s_ = state;
  return g;
}

std::uint64_t Xoshiro256StarStar::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256StarStar::uniform_int(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == max()) return next();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = max() - max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + x % range;
}

MetricInstance generate(const GenSpec& spec) {
  check_parameters(spec.n, spec.k, spec.q);
  if (!(spec.side > 0.0)) throw ParameterError("square side must be positive");

  Xoshiro256StarStar rng(spec.seed);
  std::vector<Point> points(spec.n);
  for (auto& p : points) {
    const double x = rng.uniform01() * spec.side;
    const double y = rng.uniform01() * spec.side;
    p = {x, y};
  }

  MetricInstance inst = build_from_points(std::move(points), spec.k, spec.q);
  std::ostringstream side;
  side.precision(17);
  side << spec.side;
  inst.set_metadata("generator", "xoshiro256**/splitmix64");
  inst.set_metadata("distribution", "uniform-square");
  inst.set_metadata("side", side.str());
  inst.set_metadata("seed", std::to_string(spec.seed));
  return inst;
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Splits one CSV record. Double-quoted fields may contain commas; "" inside
// quotes is a literal quote.
std::vector<std::string> split_record(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) {
    std::ostringstream msg;
    msg << "line " << line_no << ": unterminated quoted field";
    throw ParseError(msg.str());
  }
  fields.push_back(trim(cur));
  return fields;
}

std::optional<double> parse_double(const std::string& field) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

bool is_lat(const std::string& h) { return h == "lat" || h == "latitude"; }
bool is_lon(const std::string& h) { return h == "lon" || h == "lng" || h == "longitude"; }

}  // namespace

PointTable read_points_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!trim(line).empty()) {
      header = split_record(line, line_no);
      break;
    }
  }
  if (header.empty()) throw ParseError("CSV input is empty (missing header row)");
  for (auto& h : header) h = lower(h);

  std::optional<std::size_t> label_col, lat_col, lon_col;
  std::vector<std::size_t> coord_cols;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "label") {
      label_col = c;
    } else if (is_lat(header[c])) {
      lat_col = c;
    } else if (is_lon(header[c])) {
      lon_col = c;
    } else {
      coord_cols.push_back(c);
    }
  }

  PointTable table;
  if (lat_col || lon_col) {
    if (!lat_col || !lon_col)
      throw ParseError("line 1: geo CSV needs both lat and lon columns");
    if (!coord_cols.empty())
      throw ParseError("line 1: cannot mix lat/lon with planar coordinate columns");
    table.geo = true;
    coord_cols = {*lat_col, *lon_col};
  } else if (coord_cols.empty()) {
    throw ParseError("line 1: no coordinate columns in header");
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_record(line, line_no);
    if (fields.size() != header.size()) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected " << header.size() << " fields, got "
          << fields.size();
      throw ParseError(msg.str());
    }
    Point p;
    p.reserve(coord_cols.size());
    for (std::size_t c : coord_cols) {
      auto v = parse_double(fields[c]);
      if (!v) {
        std::ostringstream msg;
        msg << "line " << line_no << ": column '" << header[c] << "' is not a number: '"
            << fields[c] << "'";
        throw ParseError(msg.str());
      }
      p.push_back(*v);
    }
    table.points.push_back(std::move(p));
    if (label_col) table.labels.push_back(fields[*label_col]);
  }
  if (table.points.empty()) throw ParseError("CSV contains a header but no data rows");
  return table;
}

void write_points_csv(std::ostream& out, const PointTable& table) {
  const std::size_t dim = table.points.empty() ? 2 : table.points.front().size();
  const bool labels = !table.labels.empty();
  if (table.geo) {
    out << "lat,lon";
  } else {
    static constexpr const char* kAxes[] = {"x", "y", "z"};
    for (std::size_t c = 0; c < dim; ++c) {
      if (c) out << ',';
      if (c < 3) out << kAxes[c];
      else out << 'x' << c;
    }
  }
  if (labels) out << ",label";
  out << '\n';

  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < table.points.size(); ++i) {
    const Point& p = table.points[i];
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c) out << ',';
      out << p[c];
    }
    if (labels) {
      const std::string& label = table.labels[i];
      if (label.find_first_of(",\"") != std::string::npos) {
        out << ",\"";
        for (char ch : label) {
          if (ch == '"') out << '"';
          out << ch;
        }
        out << '"';
      } else {
        out << ',' << label;
      }
    }
    out << '\n';
  }
  out.precision(old_precision);
}

MetricInstance load_csv(const std::filesystem::path& path, std::size_t k, std::size_t q,
                        bool geo) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  PointTable table;
  try {
    table = read_points_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }

  std::vector<Point> points;
  if (geo) {
    if (!table.geo) throw ParseError(path.string() + ": geo input requires lat,lon columns");
    std::vector<GeoPoint> geo_points;
    geo_points.reserve(table.points.size());
    for (const Point& p : table.points) geo_points.push_back({p[0], p[1]});
    points = project_geo(geo_points);
  } else {
    points = std::move(table.points);
  }

  MetricInstance inst = build_from_points(std::move(points), k, q);
  if (!table.labels.empty()) inst.set_labels(std::move(table.labels));
  if (geo) inst.set_projection("equirectangular");
  inst.set_metadata("source", path.filename().string());
  return inst;
}

}  // namespace ifkco
