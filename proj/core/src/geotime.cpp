#include "gtloc/geotime.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gtloc {

namespace {

constexpr int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
constexpr double kPi = std::numbers::pi;
constexpr double kEarthRadiusKm = 6371.0;

// Equal Earth polynomial coefficients.
constexpr double kA1 = 1.340264;
constexpr double kA2 = -0.081106;
constexpr double kA3 = 0.000893;
constexpr double kA4 = 0.003796;

double deg2rad(double d) { return d * kPi / 180.0; }

// Proleptic Gregorian civil date from days since 1970-01-01.
void civil_from_days(std::int64_t z, int& year, int& month, int& day) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const std::int64_t doe = z - era * 146097;
  const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = yoe + era * 400;
  const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const std::int64_t mp = (5 * doy + 2) / 153;
  const std::int64_t d = doy - (153 * mp + 2) / 5 + 1;
  const std::int64_t m = mp < 10 ? mp + 3 : mp - 9;
  year = static_cast<int>(y + (m <= 2 ? 1 : 0));
  month = static_cast<int>(m);
  day = static_cast<int>(d);
}

double wrap_error(double delta) {
  double a = std::fabs(delta);
  return std::min(a, 1.0 - a);
}

}  // namespace

int days_in_month(int month) {
  if (month < 1 || month > 12) {
    throw std::invalid_argument("days_in_month: month " + std::to_string(month) +
                                " outside 1..12");
  }
  return kDays[month - 1];
}

bool date_tuple_valid(const DateTuple& d) {
  if (d.month < 1 || d.month > 12) return false;
  if (d.day < 1 || d.day > kDays[d.month - 1]) return false;
  if (d.hour < 0 || d.hour > 23) return false;
  if (d.minute < 0 || d.minute > 59) return false;
  if (d.second < 0 || d.second > 59) return false;
  return true;
}

DateTuple unix2tuple(std::int64_t unix_ts) {
  if (unix_ts < 0) {
    throw std::invalid_argument("unix2tuple: negative timestamp " + std::to_string(unix_ts));
  }
  const std::int64_t days = unix_ts / 86400;
  const std::int64_t secs = unix_ts % 86400;
  int year, month, day;
  civil_from_days(days, year, month, day);
  if (month == 2 && day == 29) day = 28;  // non-leap calendar
  DateTuple out;
  out.month = month;
  out.day = day;
  out.hour = static_cast<int>(secs / 3600);
  out.minute = static_cast<int>((secs / 60) % 60);
  out.second = static_cast<int>(secs % 60);
  return out;
}

CyclicTime tuple2cyclic(const DateTuple& d) {
  CyclicTime t;
  t.theta = ((d.month - 1) + static_cast<double>(d.day - 1) / kDays[d.month - 1]) / 12.0;
  t.phi = (d.hour + d.minute / 60.0 + d.second / 3600.0) / 24.0;
  return t;
}

CyclicTime tuple2cyclic_daily(const DateTuple& d) {
  int days_before = 0;
  for (int m = 1; m < d.month; ++m) days_before += kDays[m - 1];
  CyclicTime t;
  t.theta = static_cast<double>(days_before + d.day - 1) / 365.0;
  t.phi = (d.hour + d.minute / 60.0 + d.second / 3600.0) / 24.0;
  return t;
}

CyclicTime unix2cyclic(std::int64_t unix_ts, ToyScale scale) {
  const DateTuple d = unix2tuple(unix_ts);
  return scale == ToyScale::monthly ? tuple2cyclic(d) : tuple2cyclic_daily(d);
}

double toroidal_distance(CyclicTime a, CyclicTime b) {
  const double dt = wrap_error(a.theta - b.theta);
  const double dp = wrap_error(a.phi - b.phi);
  return std::sqrt(dt * dt + dp * dp);
}

ProjectedCoord equal_earth_project(GeoCoord g) {
  const double lat = deg2rad(g.lat);
  const double lon = deg2rad(g.lon);
  const double theta = std::asin(std::sqrt(3.0) / 2.0 * std::sin(lat));
  const double t2 = theta * theta;
  const double t6 = t2 * t2 * t2;
  ProjectedCoord p;
  p.y = theta * (kA1 + kA2 * t2) + t6 * theta * (kA3 + kA4 * t2);
  const double dy = kA1 + 3.0 * kA2 * t2 + t6 * (7.0 * kA3 + 9.0 * kA4 * t2);
  p.x = 2.0 * std::sqrt(3.0) * lon * std::cos(theta) / (3.0 * dy);
  return p;
}

double equal_earth_max_x() {
  static const double v = equal_earth_project({0.0, 180.0}).x;
  return v;
}

double equal_earth_max_y() {
  static const double v = equal_earth_project({90.0, 0.0}).y;
  return v;
}

ProjectedCoord equal_earth_unit(GeoCoord g) {
  ProjectedCoord p = equal_earth_project(g);
  p.x /= equal_earth_max_x();
  p.y /= equal_earth_max_y();
  return p;
}

double geodesic_km(GeoCoord a, GeoCoord b) {
  const double lat1 = deg2rad(a.lat);
  const double lat2 = deg2rad(b.lat);
  const double dlat = lat2 - lat1;
  const double dlon = deg2rad(b.lon - a.lon);
  const double sl = std::sin(dlat / 2.0);
  const double so = std::sin(dlon / 2.0);
  double h = sl * sl + std::cos(lat1) * std::cos(lat2) * so * so;
  h = std::clamp(h, 0.0, 1.0);
  return kEarthRadiusKm * 2.0 * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

double tps(double mean_month_err, double mean_hour_err) {
  if (mean_month_err < 0.0 || mean_month_err > 6.0) {
    throw std::invalid_argument("tps: month error " + std::to_string(mean_month_err) +
                                " outside [0, 6]");
  }
  if (mean_hour_err < 0.0 || mean_hour_err > 12.0) {
    throw std::invalid_argument("tps: hour error " + std::to_string(mean_hour_err) +
                                " outside [0, 12]");
  }
  const double toy = mean_month_err / 6.0;
  const double tod = mean_hour_err / 12.0;
  return 1.0 - std::sqrt((toy * toy + tod * tod) / 2.0);
}

CyclicError cyclic_abs_error(CyclicTime pred, CyclicTime truth) {
  CyclicError e;
  e.months = 12.0 * wrap_error(pred.theta - truth.theta);
  e.hours = 24.0 * wrap_error(pred.phi - truth.phi);
  return e;
}

}  // namespace gtloc
