#include "plustour/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "plustour/common.hpp"

namespace plustour {

namespace {

LogLevel g_log_level = [] {
  const char* env = std::getenv("PLUSTOUR_LOG");
  if (env == nullptr) return LogLevel::Warn;
  std::string v(env);
  if (v == "error") return LogLevel::Error;
  if (v == "warn") return LogLevel::Warn;
  if (v == "info") return LogLevel::Info;
  if (v == "debug") return LogLevel::Debug;
  return LogLevel::Warn;
}();

std::mutex g_log_mutex;

} // namespace

LogLevel log_level() { return g_log_level; }
void set_log_level(LogLevel level) { g_log_level = level; }

void log_message(LogLevel level, const std::string& msg) {
  if (static_cast<int>(level) > static_cast<int>(g_log_level)) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::lock_guard<std::mutex> lock(g_log_mutex);
  std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return std::string(buf);
}

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

void check_coords(const LatLon& p) {
  if (!(p.lat >= -90.0 && p.lat <= 90.0) || !(p.lon >= -180.0 && p.lon <= 180.0)) {
    std::ostringstream os;
    os << "coordinates out of range: (" << p.lat << ", " << p.lon << ")";
    throw std::invalid_argument(os.str());
  }
}
} // namespace

double haversine_m(const LatLon& a, const LatLon& b) {
  check_coords(a);
  check_coords(b);
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dlam = (b.lon - a.lon) * kDegToRad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlam / 2.0);
  const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

PoiGraph::PoiGraph(std::vector<Poi> pois, std::vector<std::vector<double>> cost)
    : pois_(std::move(pois)) {
  const int n = static_cast<int>(pois_.size());
  const int v = n + 2;
  if (static_cast<int>(cost.size()) != v) {
    throw std::invalid_argument("cost matrix must be (n+2)x(n+2)");
  }
  for (int i = 0; i < n; ++i) {
    if (pois_[i].id != i + 1) {
      throw std::invalid_argument("POI ids must be dense 1..n in order");
    }
  }
  cost_.resize(static_cast<size_t>(v) * v, 0.0);
  for (int i = 0; i < v; ++i) {
    if (static_cast<int>(cost[i].size()) != v) {
      throw std::invalid_argument("cost matrix must be (n+2)x(n+2)");
    }
    for (int j = 0; j < v; ++j) cost_[static_cast<size_t>(i) * v + j] = cost[i][j];
  }
}

const Poi& PoiGraph::poi(int index) const {
  if (index < 1 || index > poi_count()) throw std::out_of_range("POI index outside 1..n");
  return pois_[index - 1];
}

Poi& PoiGraph::poi(int index) {
  if (index < 1 || index > poi_count()) throw std::out_of_range("POI index outside 1..n");
  return pois_[index - 1];
}

void PoiGraph::set_cost(int i, int j, double minutes) {
  cost_[static_cast<size_t>(i) * vertex_count() + j] = minutes;
}

double TravelSequence::duration_minutes() const {
  if (visits.empty()) return 0.0;
  return static_cast<double>(visits.back().departure - visits.front().arrival) / 60.0;
}

bool TravelSequence::has_repeated_poi() const {
  std::set<int> seen;
  for (const auto& v : visits) {
    if (!seen.insert(v.poi_id).second) return true;
  }
  return false;
}

std::set<int> TravelSequence::poi_set() const {
  std::set<int> out;
  for (const auto& v : visits) out.insert(v.poi_id);
  return out;
}

double TourProfile::interest_in(const std::string& category) const {
  auto it = interest.find(category);
  return it == interest.end() ? 0.0 : it->second;
}

void apply_app_demands(TourProfile& profile, const std::vector<Application>& apps) {
  profile.net_min = profile.net_max = profile.cpu_min = profile.cpu_max = 0.0;
  for (const auto& app : apps) {
    if (profile.apps.count(app.id) == 0) continue;
    profile.net_min += app.net_min;
    profile.net_max += app.net_max;
    profile.cpu_min += app.cpu_min;
    profile.cpu_max += app.cpu_max;
  }
}

double Scenario::network_capacity(int poi_id) const {
  auto it = network_capacity_by_poi.find(poi_id);
  return it == network_capacity_by_poi.end() ? default_network_capacity : it->second;
}

std::set<int> ParetoItinerary::interior_set() const {
  return std::set<int>(path.begin() + 1, path.end() - 1);
}

const UserAllocation* AllocationPlan::find(const std::string& user_id) const {
  for (const auto& u : users) {
    if (u.user_id == user_id) return &u;
  }
  return nullptr;
}

std::vector<std::string> validate_instance(const PoiGraph& graph,
                                           const std::vector<TourProfile>& profiles,
                                           const Scenario& scenario) {
  std::vector<std::string> violations;
  auto add = [&](const std::string& msg) { violations.push_back(msg); };

  const int n = graph.poi_count();
  const int end = graph.end_index();
  for (int i = 0; i <= end; ++i) {
    for (int j = 0; j <= end; ++j) {
      const double c = graph.cost(i, j);
      if (c < 0.0) {
        std::ostringstream os;
        os << "cost[" << i << "][" << j << "] is negative";
        add(os.str());
      }
      if (i == j && c != 0.0) {
        std::ostringstream os;
        os << "cost[" << i << "][" << j << "] diagonal must be 0";
        add(os.str());
      }
    }
  }
  for (int j = 1; j <= end; ++j) {
    if (graph.cost(0, j) != 0.0) {
      std::ostringstream os;
      os << "cost[0][" << j << "]: virtual start cost must be 0";
      add(os.str());
    }
  }
  for (int i = 0; i <= n; ++i) {
    if (graph.cost(i, end) != 0.0) {
      std::ostringstream os;
      os << "cost[" << i << "][" << end << "]: virtual end cost must be 0";
      add(os.str());
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (std::abs(graph.cost(i, j) - graph.cost(j, i)) > kTimeEps) {
        std::ostringstream os;
        os << "cost[" << i << "][" << j << "] asymmetric on an undirected graph";
        add(os.str());
      }
    }
  }

  std::set<std::string> categories;
  for (const auto& p : graph.pois()) categories.insert(p.category);
  for (const auto& u : profiles) {
    if (!(u.budget_minutes > 0.0)) {
      add("user " + u.user_id + ": budget must be positive");
    }
    for (const auto& [cat, val] : u.interest) {
      if (val < 0.0) add("user " + u.user_id + ": negative interest in " + cat);
      if (categories.count(cat) == 0) {
        add("user " + u.user_id + ": interest references absent category " + cat);
      }
    }
    if (u.net_min > u.net_max + kTimeEps) add("user " + u.user_id + ": net_min > net_max");
    if (u.cpu_min > u.cpu_max + kTimeEps) add("user " + u.user_id + ": cpu_min > cpu_max");
  }

  if (!(scenario.slot_minutes > 0.0)) add("scenario: slot_minutes must be positive");
  if (scenario.horizon_slots <= 0) add("scenario: horizon_slots must be positive");
  if (scenario.alpha < 0.0 || scenario.alpha > 1.0) add("scenario: alpha must be in [0,1]");
  if (scenario.default_network_capacity < 0.0) add("scenario: network capacity must be >= 0");
  for (const auto& h : scenario.mec_hosts) {
    if (h.cpu_capacity < 0.0) {
      add("scenario: host " + std::to_string(h.id) + " capacity must be >= 0");
    }
  }
  for (const auto& u : profiles) {
    if (u.budget_minutes > scenario.horizon_minutes() + kTimeEps) {
      add("user " + u.user_id + ": budget exceeds scheduling horizon");
    }
  }
  return violations;
}

} // namespace plustour
