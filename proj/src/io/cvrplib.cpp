#include <algorithm>
#include <map>
#include <sstream>

#include "mtvrp/io.hpp"

namespace mtvrp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Instance parse_cvrplib(const std::string& text) {
  std::istringstream in(text);
  std::map<std::string, std::string> header;
  std::map<long, Point> coords;
  std::map<long, double> demand;
  std::vector<long> depots;
  std::vector<long> order;

  enum class Section { kHeader, kCoords, kDemand, kDepot, kOther } section = Section::kHeader;
  bool seen_coords = false, seen_demand = false, seen_depot = false;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line == "EOF") break;
    if (line.starts_with("NODE_COORD_SECTION")) {
      section = Section::kCoords;
      seen_coords = true;
      continue;
    }
    if (line.starts_with("DEMAND_SECTION")) {
      section = Section::kDemand;
      seen_demand = true;
      continue;
    }
    if (line.starts_with("DEPOT_SECTION")) {
      section = Section::kDepot;
      seen_depot = true;
      continue;
    }
    if (line.ends_with("_SECTION")) {
      section = Section::kOther;
      continue;
    }
    if (const auto colon = line.find(':'); colon != std::string::npos && section == Section::kHeader) {
      header[trim(line.substr(0, colon))] = trim(line.substr(colon + 1));
      continue;
    }

    std::istringstream row(line);
    switch (section) {
      case Section::kCoords: {
        long id;
        double x, y;
        if (!(row >> id >> x >> y)) throw ParseError("bad NODE_COORD_SECTION line: " + line);
        coords[id] = {x, y};
        order.push_back(id);
        break;
      }
      case Section::kDemand: {
        long id;
        double q;
        if (!(row >> id >> q)) throw ParseError("bad DEMAND_SECTION line: " + line);
        demand[id] = q;
        break;
      }
      case Section::kDepot: {
        long id;
        if (!(row >> id)) throw ParseError("bad DEPOT_SECTION line: " + line);
        if (id != -1) depots.push_back(id);
        break;
      }
      default:
        break;
    }
  }

  const auto type = header.find("EDGE_WEIGHT_TYPE");
  if (type == header.end() || type->second != "EUC_2D") {
    throw UnsupportedFormat("only EDGE_WEIGHT_TYPE EUC_2D is supported");
  }
  for (const char* key : {"DIMENSION", "CAPACITY"}) {
    if (!header.contains(key)) throw UnsupportedFormat(std::string("missing ") + key);
  }
  if (!seen_coords) throw UnsupportedFormat("missing NODE_COORD_SECTION");
  if (!seen_demand) throw UnsupportedFormat("missing DEMAND_SECTION");
  if (!seen_depot || depots.empty()) throw UnsupportedFormat("missing DEPOT_SECTION");
  if (depots.size() != 1) throw UnsupportedFormat("only single-depot files are supported");

  const auto dimension = static_cast<std::size_t>(std::stol(header["DIMENSION"]));
  const double capacity = std::stod(header["CAPACITY"]);
  if (coords.size() != dimension || demand.size() != dimension) {
    throw ParseError("section sizes do not match DIMENSION");
  }
  const long depot = depots.front();
  if (!coords.contains(depot)) throw ParseError("depot id has no coordinates");

  std::vector<long> ids{depot};
  for (long id : order) {
    if (id != depot) ids.push_back(id);
  }

  double min_x = coords[depot].x, max_x = min_x, min_y = coords[depot].y, max_y = min_y;
  for (const auto& [id, p] : coords) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  double scale = std::max(max_x - min_x, max_y - min_y);
  if (scale <= 0.0) scale = 1.0;

  InstanceData d;
  d.num_depots = 1;
  d.num_customers = static_cast<int>(ids.size()) - 1;
  d.capacity = capacity;
  d.scale = scale;
  for (long id : ids) {
    const Point& p = coords[id];
    d.coords.push_back({std::clamp((p.x - min_x) / scale, 0.0, 1.0), std::clamp((p.y - min_y) / scale, 0.0, 1.0)});
    d.linehaul.push_back(id == depot ? 0.0 : demand.at(id) / capacity);
  }
  const std::size_t nodes = ids.size();
  d.backhaul.assign(nodes, 0.0);
  d.tw_start.assign(nodes, 0.0);
  d.tw_end.assign(nodes, kUnbounded);
  d.service.assign(nodes, 0.0);
  try {
    return Instance(std::move(d));
  } catch (const InvalidInstance& e) {
    throw ParseError(std::string("CVRPLIB instance violates an invariant: ") + e.what());
  }
}

Instance read_cvrplib(const std::filesystem::path& path) { return parse_cvrplib(read_text(path)); }

}  // namespace mtvrp
