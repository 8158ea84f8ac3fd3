use super::DensityGrid;
use crate::{Error, Result};

/// Required ratio of the second-moment eigenvalues for a defined axis.
pub const AXIS_ANISOTROPY_THRESHOLD: f64 = 1.01;

/// Direction, mod pi, of the dominant eigenvector of the density-weighted
/// second-moment tensor about the origin. Returned in `(-pi/2, pi/2]`.
pub fn principal_axis(grid: &DensityGrid) -> Result<f64> {
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for row in 0..grid.resolution {
        let y = grid.coord(row);
        for col in 0..grid.resolution {
            let w = grid.get(row, col);
            let x = grid.coord(col);
            sxx += w * x * x;
            syy += w * y * y;
            sxy += w * x * y;
        }
    }
    let mean = 0.5 * (sxx + syy);
    let dev = (0.25 * (sxx - syy).powi(2) + sxy * sxy).sqrt();
    let (big, small) = (mean + dev, mean - dev);
    let ratio = if small > 0.0 { big / small } else if big > 0.0 { f64::INFINITY } else { 1.0 };
    if ratio <= AXIS_ANISOTROPY_THRESHOLD {
        return Err(Error::UndefinedAxis { ratio, threshold: AXIS_ANISOTROPY_THRESHOLD });
    }
    let mut angle = 0.5 * (2.0 * sxy).atan2(sxx - syy);
    if angle <= -std::f64::consts::FRAC_PI_2 {
        angle += std::f64::consts::PI;
    }
    Ok(angle)
}

/// Density-weighted mean position. Points toward aphelion for an orbit.
pub fn density_centroid(grid: &DensityGrid) -> [f64; 2] {
    let (mut sx, mut sy, mut total) = (0.0, 0.0, 0.0);
    for row in 0..grid.resolution {
        let y = grid.coord(row);
        for col in 0..grid.resolution {
            let w = grid.get(row, col);
            sx += w * grid.coord(col);
            sy += w * y;
            total += w;
        }
    }
    if total > 0.0 {
        [sx / total, sy / total]
    } else {
        [0.0, 0.0]
    }
}
