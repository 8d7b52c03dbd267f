//! Exhaustive box scan used as ground truth for the solvers.

use crate::error::{Error, Result};
use crate::lattice::Point;
use crate::region::Region;
use crate::solve3::Equation3;

/// Largest box, in points, that [`brute_force`] will scan.
pub const DEFAULT_CAP: u128 = 100_000_000;

/// Every point of the region's box that satisfies all `equations` and the
/// region's filters, sorted lexicographically.
pub fn brute_force(equations: &[Equation3], region: &Region<3>) -> Result<Vec<Point<3>>> {
    brute_force_with_cap(equations, region, DEFAULT_CAP)
}

pub fn brute_force_with_cap(
    equations: &[Equation3],
    region: &Region<3>,
    cap: u128,
) -> Result<Vec<Point<3>>> {
    let volume = region.volume();
    if volume > cap {
        return Err(Error::CapExceeded { volume, cap });
    }
    let [(x0, x1), (y0, y1), (z0, z1)] = *region.bounds();
    let rows: Vec<[i128; 4]> = equations
        .iter()
        .map(|e| [e.a as i128, e.b as i128, e.c as i128, e.d as i128])
        .collect();
    let mut out = Vec::new();
    let mut partial = vec![0i128; rows.len()];
    for x in x0..=x1 {
        for y in y0..=y1 {
            for (s, r) in partial.iter_mut().zip(&rows) {
                *s = r[0] * x as i128 + r[1] * y as i128;
            }
            for z in z0..=z1 {
                let ok = partial
                    .iter()
                    .zip(&rows)
                    .all(|(s, r)| s + r[2] * z as i128 == r[3]);
                if ok {
                    let p = [x, y, z];
                    if region.passes_filters(&p) {
                        out.push(p);
                    }
                }
            }
        }
    }
    // loops run in lexicographic order already
    Ok(out)
}
