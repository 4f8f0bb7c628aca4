#pragma once

#include <cstdint>

namespace gtloc {

/// Civil date-time with the year discarded. Non-leap calendar: day must be
/// within days_in_month(month), Feb 29 never appears (unix2tuple clamps it).
struct DateTuple {
  int month = 1;  // 1..12
  int day = 1;    // 1..days_in_month(month)
  int hour = 0;   // 0..23
  int minute = 0; // 0..59
  int second = 0; // 0..59
};

/// Point on the unit time torus: theta = normalized time-of-year,
/// phi = normalized time-of-day. Both in [0, 1); arithmetic wraps mod 1.
struct CyclicTime {
  double theta = 0.0;
  double phi = 0.0;
};

struct GeoCoord {
  double lat = 0.0;  // degrees, [-90, 90]
  double lon = 0.0;  // degrees, [-180, 180]
};

/// Equal Earth plane coordinates (radians-scaled; x in [-2.7067, 2.7067],
/// y in [-1.3174, 1.3174]).
struct ProjectedCoord {
  double x = 0.0;
  double y = 0.0;
};

/// Time-of-year normalization scale. Monthly is the default; daily spreads
/// theta over day-of-year / 365 instead of (month + day fraction) / 12.
enum class ToyScale { monthly, daily };

/// Days per month of the fixed non-leap calendar. Throws std::invalid_argument
/// for month outside 1..12.
int days_in_month(int month);

bool date_tuple_valid(const DateTuple& d);

/// Civil UTC decomposition of a unix timestamp, year discarded, Feb 29
/// clamped to Feb 28. Throws std::invalid_argument for negative timestamps.
DateTuple unix2tuple(std::int64_t unix_ts);

/// theta = ((m-1) + (d-1)/D(m)) / 12, phi = (H + M/60 + S/3600) / 24.
CyclicTime tuple2cyclic(const DateTuple& d);

/// theta = (day-of-year - 1 fraction) / 365; phi as in tuple2cyclic.
CyclicTime tuple2cyclic_daily(const DateTuple& d);

CyclicTime unix2cyclic(std::int64_t unix_ts, ToyScale scale = ToyScale::monthly);

/// Distance on the flat unit torus: the minimum over periodic copies,
/// sqrt(sum over axes of min(|da|, 1-|da|)^2). Range [0, sqrt(0.5)].
double toroidal_distance(CyclicTime a, CyclicTime b);

/// Equal Earth forward projection (Savric-Patterson-Jenny coefficients).
ProjectedCoord equal_earth_project(GeoCoord g);

/// Forward projection rescaled to [-1, 1]^2, the form fed to the encoders.
ProjectedCoord equal_earth_unit(GeoCoord g);

/// Extent of the raw projection: |x| <= equal_earth_max_x() at the equator
/// antimeridian, |y| <= equal_earth_max_y() at the poles.
double equal_earth_max_x();
double equal_earth_max_y();

/// Haversine great-circle distance in kilometers, Earth radius 6371.0 km.
double geodesic_km(GeoCoord a, GeoCoord b);

/// Time Prediction Score: 1 - sqrt((e_toy^2 + e_tod^2)/2) with the errors
/// normalized by their cyclic maxima (6 months, 12 hours). Throws
/// std::invalid_argument when an error exceeds its maximum or is negative.
double tps(double mean_month_err, double mean_hour_err);

struct CyclicError {
  double months = 0.0;  // [0, 6]
  double hours = 0.0;   // [0, 12]
};

/// Per-axis wrap-around absolute error between two torus points.
CyclicError cyclic_abs_error(CyclicTime pred, CyclicTime truth);

}  // namespace gtloc
