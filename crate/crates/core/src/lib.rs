//! Generic plane curves as combinatorial maps: Gauss codes, the defect
//! invariant, homotopy and electrical moves, flat torus knots, reduction
//! search, and the Casson invariant of random knot diagrams.

mod canon;
pub mod casson;
pub mod defect;
pub mod error;
pub mod gauss;
pub mod generators;
pub mod graph;
pub mod map;
pub mod moves;
pub mod reduction;
pub mod winding;

pub use canon::CanonicalKey;
pub use casson::{casson_c2, expected_c2_exhaustive, expected_c2_monte_carlo, ExactExpectation, KnotDiagram, MonteCarlo};
pub use defect::{defect_of_code, defect_polyak, defect_report, defect_winding, DefectReport};
pub use error::{Error, Result};
pub use gauss::{gauss_code, Sign, SignedGaussCode};
pub use generators::{connected_sum, cylindrical_grid, random_curve, rectangular_grid, torus_knot};
pub use graph::{apply_electrical, enumerate_electrical, medial_site, ElectricalKind, ElectricalSite, PlaneGraph};
pub use map::{CurveMap, Dart, Faces};
pub use moves::{apply_move, enumerate_moves, predict_delta, smooth, MoveKind, MoveSite, Smoothing, SmoothingChoice};
pub use winding::{alexander_numbering, dual_diameter, subloop_winding, AlexanderNumbering, Rational};
