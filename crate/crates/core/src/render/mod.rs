//! Equatorial-plane density images, classical orbit overlays and their
//! plain-text file formats.

mod axis;
mod grid;
mod io;
mod overlay;

pub use axis::{density_centroid, principal_axis, AXIS_ANISOTROPY_THRESHOLD};
pub use grid::{density_grid, density_grid_with, DensityGrid, EquatorialSlice, DEFAULT_EXTENT_AU, DEFAULT_RESOLUTION};
pub use io::{read_grid, write_grid, write_overlay_csv};
pub use overlay::{classical_overlay, EllipseOverlay};
