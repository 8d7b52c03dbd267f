//! Lattice points of a solution set inside a finite region.
//!
//! Parameter ranges come from exact rational bounds: the parameters are
//! `adj(M) * (p_S - base_S) / det(M)` for a nonsingular generator minor `M`,
//! which is linear in `p_S`, so its extremes over the box sit at box corners.
//! All parameters but one are swept over those ranges; the remaining one gets
//! an exact interval from every coordinate, so nothing inside the box is
//! missed and the innermost loop never visits an out-of-box point.

use crate::error::{Error, Result};
use crate::lattice::{adjugate, minor_matrix, pivot_minor, AffineLattice, Point, SolutionSet};
use crate::region::Region;

/// Points of `set` inside `region`, sorted lexicographically.
pub fn enumerate<const N: usize>(
    set: &SolutionSet<N>,
    region: &Region<N>,
) -> Result<Vec<Point<N>>> {
    let mut out = Vec::new();
    if let SolutionSet::Lattice(l) = set {
        visit(l, region, |p| out.push(*p))?;
    }
    out.sort_unstable();
    Ok(out)
}

/// Number of points [`enumerate`] would return, without collecting them.
pub fn count<const N: usize>(set: &SolutionSet<N>, region: &Region<N>) -> Result<u64> {
    let mut n = 0u64;
    if let SolutionSet::Lattice(l) = set {
        visit(l, region, |_| n += 1)?;
    }
    Ok(n)
}

/// Calls `f` once for every lattice point admitted by `region`, in no
/// particular order.
pub fn visit<const N: usize>(
    lattice: &AffineLattice<N>,
    region: &Region<N>,
    mut f: impl FnMut(&Point<N>),
) -> Result<()> {
    let gens = lattice.generators();
    let base = lattice.base().map(|v| v as i128);
    let bounds = region.bounds().map(|(lo, hi)| (lo as i128, hi as i128));

    if gens.is_empty() {
        let p = *lattice.base();
        if region.admits(&p) {
            f(&p);
        }
        return Ok(());
    }

    let ranges = parameter_ranges(gens, &base, &bounds)?;
    if ranges.iter().any(|r| r.is_none()) {
        return Ok(());
    }
    let ranges: Vec<(i128, i128)> = ranges.into_iter().flatten().collect();

    // the widest range gets the exact inner treatment
    let inner = (0..ranges.len())
        .max_by_key(|&k| ranges[k].1 - ranges[k].0)
        .expect("rank >= 1");
    let outer: Vec<usize> = (0..ranges.len()).filter(|&k| k != inner).collect();

    let mut params: Vec<i128> = outer.iter().map(|&k| ranges[k].0).collect();
    loop {
        // anchor = base + sum over outer parameters
        let mut anchor = base;
        for (&k, &t) in outer.iter().zip(&params) {
            for i in 0..N {
                anchor[i] = (gens[k][i] as i128)
                    .checked_mul(t)
                    .and_then(|v| v.checked_add(anchor[i]))
                    .ok_or(Error::Overflow)?;
            }
        }
        if let Some((lo, hi)) = exact_interval(&gens[inner], &anchor, &bounds)? {
            let mut t = lo;
            while t <= hi {
                let mut p = [0i64; N];
                for i in 0..N {
                    // in the box, so it fits
                    p[i] = (anchor[i] + gens[inner][i] as i128 * t) as i64;
                }
                if region.passes_filters(&p) {
                    f(&p);
                }
                t += 1;
            }
        }

        // odometer over the outer parameters
        let mut j = 0;
        loop {
            if j == outer.len() {
                return Ok(());
            }
            let (lo, hi) = ranges[outer[j]];
            if params[j] < hi {
                params[j] += 1;
                break;
            }
            params[j] = lo;
            j += 1;
        }
    }
}

/// Integer bounds for each parameter over the box; `None` when a range is empty.
fn parameter_ranges<const N: usize>(
    gens: &[Point<N>],
    base: &[i128; N],
    bounds: &[(i128, i128); N],
) -> Result<Vec<Option<(i128, i128)>>> {
    let (coords, det) = pivot_minor(gens)?.ok_or(Error::Contract("dependent generators"))?;
    let adj = adjugate(&minor_matrix(gens, &coords))?;
    let mut out = Vec::with_capacity(gens.len());
    for row in &adj {
        let (mut num_lo, mut num_hi) = (0i128, 0i128);
        for (j, &c) in coords.iter().enumerate() {
            let (lo, hi) = bounds[c];
            let d_lo = lo.checked_sub(base[c]).ok_or(Error::Overflow)?;
            let d_hi = hi.checked_sub(base[c]).ok_or(Error::Overflow)?;
            let a = row[j].checked_mul(d_lo).ok_or(Error::Overflow)?;
            let b = row[j].checked_mul(d_hi).ok_or(Error::Overflow)?;
            num_lo = num_lo.checked_add(a.min(b)).ok_or(Error::Overflow)?;
            num_hi = num_hi.checked_add(a.max(b)).ok_or(Error::Overflow)?;
        }
        let (lo, hi) = if det > 0 {
            (ceil_div(num_lo, det), floor_div(num_hi, det))
        } else {
            (ceil_div(num_hi, det), floor_div(num_lo, det))
        };
        out.push((lo <= hi).then_some((lo, hi)));
    }
    Ok(out)
}

/// All `t` with `lo_i <= anchor_i + t * g_i <= hi_i` for every axis.
fn exact_interval<const N: usize>(
    g: &Point<N>,
    anchor: &[i128; N],
    bounds: &[(i128, i128); N],
) -> Result<Option<(i128, i128)>> {
    let (mut lo_t, mut hi_t) = (i128::MIN, i128::MAX);
    for i in 0..N {
        let (lo, hi) = bounds[i];
        let gi = g[i] as i128;
        let a = anchor[i];
        if gi == 0 {
            if a < lo || a > hi {
                return Ok(None);
            }
            continue;
        }
        let below = lo.checked_sub(a).ok_or(Error::Overflow)?;
        let above = hi.checked_sub(a).ok_or(Error::Overflow)?;
        let (l, h) = if gi > 0 {
            (ceil_div(below, gi), floor_div(above, gi))
        } else {
            (ceil_div(above, gi), floor_div(below, gi))
        };
        lo_t = lo_t.max(l);
        hi_t = hi_t.min(h);
        if lo_t > hi_t {
            return Ok(None);
        }
    }
    Ok(Some((lo_t, hi_t)))
}

fn floor_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) == (b < 0)) {
        q + 1
    } else {
        q
    }
}
