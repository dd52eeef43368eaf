//! Local planar geometry.
//!
//! All distances in the crate go through a single equirectangular projection
//! anchored at the grid origin. At city scale (tens of km) the distortion is
//! below 0.1%, which is far inside the noise of crowdsourced GPS fixes.

use serde::{Deserialize, Serialize};

pub const EARTH_RADIUS_M: f64 = 6_371_000.0;

/// Geographic coordinate in degrees.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatLon {
    pub lat: f64,
    pub lon: f64,
}

impl LatLon {
    pub fn new(lat: f64, lon: f64) -> Self {
        LatLon { lat, lon }
    }
}

/// Planar position in meters east (x) and north (y) of the projection origin.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct XY {
    pub x: f64,
    pub y: f64,
}

impl XY {
    pub fn new(x: f64, y: f64) -> Self {
        XY { x, y }
    }

    pub fn dist(self, other: XY) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Compass bearing from `self` towards `to`, degrees in [0, 360);
    /// 0 = north, 90 = east.
    pub fn bearing_deg(self, to: XY) -> f64 {
        let deg = (to.x - self.x).atan2(to.y - self.y).to_degrees();
        if deg < 0.0 {
            deg + 360.0
        } else {
            deg
        }
    }
}

/// Equirectangular projection around a fixed origin.
#[derive(Clone, Copy, Debug)]
pub struct Projection {
    origin: LatLon,
    cos_lat0: f64,
}

impl Projection {
    pub fn new(origin: LatLon) -> Self {
        Projection {
            origin,
            cos_lat0: origin.lat.to_radians().cos(),
        }
    }

    pub fn origin(&self) -> LatLon {
        self.origin
    }

    pub fn to_xy(&self, p: LatLon) -> XY {
        let x = (p.lon - self.origin.lon).to_radians() * self.cos_lat0 * EARTH_RADIUS_M;
        let y = (p.lat - self.origin.lat).to_radians() * EARTH_RADIUS_M;
        XY { x, y }
    }

    pub fn to_latlon(&self, p: XY) -> LatLon {
        let lat = self.origin.lat + (p.y / EARTH_RADIUS_M).to_degrees();
        let lon = self.origin.lon + (p.x / (EARTH_RADIUS_M * self.cos_lat0)).to_degrees();
        LatLon { lat, lon }
    }

    pub fn distance_m(&self, a: LatLon, b: LatLon) -> f64 {
        self.to_xy(a).dist(self.to_xy(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn projection_roundtrip() {
        let proj = Projection::new(LatLon::new(37.7, -122.4));
        let p = LatLon::new(37.75, -122.35);
        let back = proj.to_latlon(proj.to_xy(p));
        assert_relative_eq!(back.lat, p.lat, epsilon = 1e-9);
        assert_relative_eq!(back.lon, p.lon, epsilon = 1e-9);
    }

    #[test]
    fn distance_symmetric_nonnegative() {
        let proj = Projection::new(LatLon::new(37.7, -122.4));
        let a = LatLon::new(37.71, -122.41);
        let b = LatLon::new(37.76, -122.38);
        let d1 = proj.distance_m(a, b);
        let d2 = proj.distance_m(b, a);
        assert!(d1 >= 0.0);
        assert_eq!(d1, d2);
        assert_eq!(proj.distance_m(a, a), 0.0);
    }

    #[test]
    fn one_degree_latitude_is_about_111_km() {
        let proj = Projection::new(LatLon::new(37.7, -122.4));
        let d = proj.distance_m(LatLon::new(37.7, -122.4), LatLon::new(38.7, -122.4));
        assert_relative_eq!(d, 111_194.9, max_relative = 1e-3);
    }

    #[test]
    fn bearing_cardinal_directions() {
        let o = XY::new(0.0, 0.0);
        assert_relative_eq!(o.bearing_deg(XY::new(0.0, 10.0)), 0.0);
        assert_relative_eq!(o.bearing_deg(XY::new(10.0, 0.0)), 90.0);
        assert_relative_eq!(o.bearing_deg(XY::new(0.0, -10.0)), 180.0);
        assert_relative_eq!(o.bearing_deg(XY::new(-10.0, 0.0)), 270.0);
    }
}
