#include "lacunarity/density/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace lacunarity::density {

namespace {

nlohmann::json report_model(const DensityReport& r) {
  nlohmann::json j;
  j["source"] = r.source_id;
  j["set"] = {{"mode", r.set.text()},
              {"target_re", r.set.target.real()},
              {"target_im", r.set.target.imag()},
              {"tolerance", r.set.tolerance}};
  j["natural"] = r.estimate.natural;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& pt : r.estimate.dirichlet)
    pts.push_back({pt.s, pt.ratio});
  j["dirichlet"] = std::move(pts);
  nlohmann::json unreliable = nlohmann::json::array();
  for (const auto& pt : r.estimate.dirichlet)
    if (!pt.reliable) unreliable.push_back(pt.s);
  j["unreliable_s"] = std::move(unreliable);
  j["extrapolated"] = r.estimate.extrapolated;
  j["fit"] = r.estimate.fit;
  j["stabilized"] = r.estimate.stabilized;
  j["limit"] = r.estimate.limit;
  j["members"] = r.estimate.member_count;
  j["stream_length"] = r.estimate.stream_length;
  j["bound"] = {{"name", r.bound.name},
                {"value", r.bound.value},
                {"vacuous", r.bound.vacuous},
                {"direction",
                 r.bound.direction == BoundDirection::LowerOnSet ? "lower" : "upper"}};
  j["consistent"] = r.consistent;
  j["gap"] = r.gap;
  j["slack"] = r.slack;
  return j;
}

}  // namespace

std::string report_to_json(const DensityReport& report) {
  return report_model(report).dump(2);
}

std::string report_to_csv(const DensityReport& report) {
  const nlohmann::json j = report_model(report);
  std::ostringstream os;
  os << "source,set,natural,extrapolated,limit,members,stream_length,bound,bound_value,"
        "direction,consistent,gap,slack\n";
  os << std::setprecision(17);
  os << j["source"].get<std::string>() << ",\"" << j["set"]["mode"].get<std::string>()
     << "\"," << j["natural"].get<double>() << "," << j["extrapolated"].get<double>() << ","
     << j["limit"].get<long long>() << "," << j["members"].get<long long>() << ","
     << j["stream_length"].get<long long>() << "," << j["bound"]["name"].get<std::string>()
     << "," << j["bound"]["value"].get<double>() << ","
     << j["bound"]["direction"].get<std::string>() << ","
     << (j["consistent"].get<bool>() ? 1 : 0) << "," << j["gap"].get<double>() << ","
     << j["slack"].get<double>() << "\n";
  return os.str();
}

std::string report_to_table(const DensityReport& report) {
  const nlohmann::json j = report_model(report);
  std::ostringstream os;
  os << std::setprecision(6);
  os << "source        " << j["source"].get<std::string>() << "\n"
     << "set           " << j["set"]["mode"].get<std::string>() << "\n"
     << "limit         " << j["limit"].get<long long>() << "  (" << j["members"].get<long long>()
     << "/" << j["stream_length"].get<long long>() << " members)\n"
     << "natural       " << j["natural"].get<double>() << "\n";
  os << "dirichlet     ";
  bool first = true;
  for (const auto& pt : j["dirichlet"]) {
    if (!first) os << "  ";
    os << "s=" << pt[0].get<double>() << ":" << pt[1].get<double>();
    first = false;
  }
  os << "\n"
     << "extrapolated  " << j["extrapolated"].get<double>() << "\n"
     << "bound         " << j["bound"]["name"].get<std::string>() << " ("
     << j["bound"]["direction"].get<std::string>() << ") = " << j["bound"]["value"].get<double>()
     << (j["bound"]["vacuous"].get<bool>() ? "  [vacuous]" : "") << "\n"
     << "verdict       " << (j["consistent"].get<bool>() ? "consistent" : "INCONSISTENT")
     << "  gap=" << j["gap"].get<double>() << "  slack=" << j["slack"].get<double>() << "\n";
  return os.str();
}

void write_plot_data(const DensityReport& report, std::ostream& os) {
  os << std::setprecision(17);
  for (const auto& pt : report.estimate.dirichlet)
    os << pt.s - 1.0 << " " << pt.ratio << "\n";
}

}  // namespace lacunarity::density
