//! Motion-planning toolkit: 2D/3D reactive navigation with a tabular
//! Q-learning decision layer, UAV coverage waypoint generation, Dubins and
//! Bézier tour planning, and a deterministic scenario simulator.

pub mod coverage;
pub mod curves;
pub mod dynamicnav;
pub mod geometry;
pub mod qlearn;
pub mod reactive2d;
pub mod reactive3d;
pub mod rng;
pub mod routing;
pub mod sim;
pub mod vehicle;

pub use geometry::{Point2, Point3};
pub use rng::DeterministicRng;

/// Wrap an angle into `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let mut r = a % tau;
    if r <= -std::f64::consts::PI {
        r += tau;
    } else if r > std::f64::consts::PI {
        r -= tau;
    }
    r
}

/// Sign function with `sgn(0) = 0`.
pub fn sgn(r: f64) -> f64 {
    if r > 0.0 {
        1.0
    } else if r < 0.0 {
        -1.0
    } else {
        0.0
    }
}
