#pragma once

namespace dctx {

inline constexpr double kEarthRadiusM = 6371000.0;
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kMetersPerDegreeLat = kEarthRadiusM * kPi / 180.0;

struct LatLng {
  double lat = 0.0;
  double lng = 0.0;
};

/// Great-circle distance in meters on the R=6,371,000 m sphere.
double haversine_m(const LatLng& a, const LatLng& b);
double haversine_m(double lat1, double lng1, double lat2, double lng2);

/// Point reached from `origin` after travelling `distance_m` along the
/// initial bearing (degrees clockwise from north). Exact on the sphere, so
/// haversine_m(origin, destination(...)) recovers distance_m.
LatLng destination(const LatLng& origin, double bearing_deg, double distance_m);

/// Wrap an angle difference into [-180, 180).
double wrap_signed_deg(double deg);

/// Wrap a heading into [0, 360).
double wrap_heading_deg(double deg);

}  // namespace dctx
