//! Simulation and co-design of networked control systems.
//!
//! A control loop closed over lossy wireless links (sensor -> uplink ->
//! controller -> downlink -> actuator -> plant) is simulated at fixed time
//! resolution, per-episode key performance indicators are extracted, and a
//! two-stage stochastic program searches the communication parameter space
//! for the design that minimizes expected control cost subject to an
//! application-level reliability constraint. A classical top-down design
//! pipeline is included as a baseline for comparison.

pub mod aoi;
pub mod codesign;
pub mod comm;
pub mod controller;
pub mod dependability;
pub mod error;
pub mod pattern;
pub mod plant;
pub mod regression;
pub mod seeds;
pub mod sim;
pub mod stats;

pub use error::Error;

/// Finite stand-in for "worst possible" KPI values. Kept finite so reports
/// survive JSON serialization and CSV round trips.
pub const KPI_SENTINEL: f64 = 1.0e30;
