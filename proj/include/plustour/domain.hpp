#ifndef PLUSTOUR_DOMAIN_HPP
#define PLUSTOUR_DOMAIN_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace plustour {

constexpr double kEarthRadiusM = 6'371'000.0;

struct LatLon {
  double lat{};
  double lon{};
};

/// Great-circle distance in meters (haversine). Throws std::invalid_argument
/// when a coordinate is outside [-90,90] x [-180,180].
double haversine_m(const LatLon& a, const LatLon& b);

struct Poi {
  int id{};                    // dense 1..n
  std::string name;
  double lat{};
  double lon{};
  std::string category;
  long long popularity{};      // visit count, filled from statistics
  double expected_duration{};  // minutes, filled from statistics
  double network_capacity{};   // Mbps, filled from the scenario
};

/// Complete undirected POI graph with travel-time costs in minutes.
/// Vertex 0 is the virtual tour start, vertex n+1 the virtual tour end;
/// real POIs occupy indices 1..n. Travel to/from the virtual endpoints is
/// free: cost[0][j] = cost[i][n+1] = 0.
class PoiGraph {
public:
  PoiGraph() = default;

  /// `cost` must be (n+2)x(n+2) where n = pois.size(); POI ids must be the
  /// dense range 1..n in order. Value-level invariants (non-negativity,
  /// zero virtual-endpoint columns) are checked by validate_instance, not
  /// here, so malformed instances can still be loaded and reported.
  PoiGraph(std::vector<Poi> pois, std::vector<std::vector<double>> cost);

  int poi_count() const { return static_cast<int>(pois_.size()); }
  int vertex_count() const { return poi_count() + 2; }
  int start_index() const { return 0; }
  int end_index() const { return poi_count() + 1; }

  const Poi& poi(int index) const;  // index in 1..n
  Poi& poi(int index);
  const std::vector<Poi>& pois() const { return pois_; }

  double cost(int i, int j) const { return cost_[static_cast<size_t>(i) * vertex_count() + j]; }
  void set_cost(int i, int j, double minutes);

private:
  std::vector<Poi> pois_;
  std::vector<double> cost_;  // row-major (n+2)x(n+2)
};

struct Application {
  int id{};
  std::string name;
  double net_min{};  // Mbps
  double net_max{};
  double cpu_min{};  // reference cores
  double cpu_max{};
};

struct MecHost {
  int id{};
  double cpu_capacity{};  // reference cores
};

struct TravelVisit {
  int poi_id{};
  std::int64_t arrival{};    // epoch seconds
  std::int64_t departure{};  // epoch seconds, >= arrival
  double duration_minutes() const { return static_cast<double>(departure - arrival) / 60.0; }
};

struct TravelSequence {
  std::string user_id;
  std::vector<TravelVisit> visits;

  /// First arrival to last departure, minutes.
  double duration_minutes() const;
  bool has_repeated_poi() const;
  std::set<int> poi_set() const;
};

struct TourProfile {
  std::string user_id;
  std::map<std::string, double> interest;  // category -> level, Eq. (3) values
  double budget_minutes{};
  std::string day{"d0"};
  std::set<int> apps;
  double net_min{};  // Mbps, sum over apps
  double net_max{};
  double cpu_min{};  // RC, sum over apps
  double cpu_max{};

  double interest_in(const std::string& category) const;
};

/// Fills the four demand sums of `profile` from its app set.
void apply_app_demands(TourProfile& profile, const std::vector<Application>& apps);

struct Scenario {
  double default_network_capacity{};             // Mbps, per POI
  std::map<int, double> network_capacity_by_poi; // overrides
  std::vector<MecHost> mec_hosts;
  double slot_minutes{};
  int horizon_slots{};
  double alpha{};

  double network_capacity(int poi_id) const;
  double horizon_minutes() const { return slot_minutes * horizon_slots; }
};

struct ParetoItinerary {
  std::vector<int> path;  // starts at 0, ends at n+1
  double profit{};
  double spent{};  // minutes

  int interior_count() const { return static_cast<int>(path.size()) - 2; }
  std::set<int> interior_set() const;
};

struct SlotInterval {
  int first{};  // inclusive, 1-based
  int last{};   // inclusive
};

struct PoiAllocation {
  int poi_id{};
  double mbps{};    // p
  double rc{};      // q at the assigned host
  int host_id{-1};  // -1 when the user has no compute demand
  SlotInterval slots;
};

struct UserAllocation {
  std::string user_id;
  ParetoItinerary itinerary;
  double normalized_profit{};
  std::vector<PoiAllocation> pois;
  bool min_relaxed{};  // baseline path: true when Eq. (17)/(18) lower bounds were dropped
};

struct AllocationPlan {
  std::vector<UserAllocation> users;
  const UserAllocation* find(const std::string& user_id) const;
};

/// Report-style instance checks: negative or asymmetric costs, non-zero
/// virtual-endpoint costs, interests referencing absent categories,
/// non-positive budgets, malformed scenarios. Empty result == admissible.
std::vector<std::string> validate_instance(const PoiGraph& graph,
                                           const std::vector<TourProfile>& profiles,
                                           const Scenario& scenario);

} // namespace plustour

#endif
