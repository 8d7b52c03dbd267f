//! Affine integer lattices `{base + sum(l_i * g_i) : l_i in Z}` and the
//! solution-set type every solver returns.

use std::fmt;

use crate::error::{Error, Result};

pub type Point<const N: usize> = [i64; N];

/// Witness for an empty solution set: `divisor` does not divide `target`.
///
/// A zero divisor encodes an inconsistent `0 = target` with `target != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Obstruction {
    pub divisor: i64,
    pub target: i64,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.divisor == 0 {
            write!(f, "0 = {} is inconsistent", self.target)
        } else {
            write!(f, "{} does not divide {}", self.divisor, self.target)
        }
    }
}

/// A base point plus rationally independent integer generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLattice<const N: usize> {
    base: Point<N>,
    generators: Vec<Point<N>>,
}

impl<const N: usize> AffineLattice<N> {
    /// Builds a lattice, rejecting dependent or too many generators.
    pub fn new(base: Point<N>, generators: Vec<Point<N>>) -> Result<Self> {
        if generators.len() > N {
            return Err(Error::Contract("more generators than dimensions"));
        }
        if pivot_minor(&generators)?.is_none() {
            return Err(Error::Contract("generators are linearly dependent"));
        }
        Ok(Self { base, generators })
    }

    /// Every point of `Z^N`, spanned by the unit vectors.
    pub fn everything() -> Self {
        let generators = (0..N)
            .map(|i| {
                let mut e = [0; N];
                e[i] = 1;
                e
            })
            .collect();
        Self {
            base: [0; N],
            generators,
        }
    }

    pub fn base(&self) -> &Point<N> {
        &self.base
    }

    pub fn generators(&self) -> &[Point<N>] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// The point at the given parameter values.
    pub fn point(&self, params: &[i64]) -> Result<Point<N>> {
        if params.len() != self.rank() {
            return Err(Error::Contract("parameter count differs from rank"));
        }
        let mut p = self.base;
        for (g, &t) in self.generators.iter().zip(params) {
            for i in 0..N {
                p[i] = g[i]
                    .checked_mul(t)
                    .and_then(|v| v.checked_add(p[i]))
                    .ok_or(Error::Overflow)?;
            }
        }
        Ok(p)
    }

    /// Integer parameters reaching `p`, if `p` lies in the lattice.
    pub fn coordinates_of(&self, p: &Point<N>) -> Result<Option<Vec<i128>>> {
        let offset: Vec<i128> = (0..N)
            .map(|i| p[i] as i128 - self.base[i] as i128)
            .collect();
        let Some((coords, det)) = pivot_minor(&self.generators)? else {
            unreachable!("constructor guarantees independence");
        };
        let r = self.rank();
        let adj = adjugate(&minor_matrix(&self.generators, &coords))?;
        let mut params = Vec::with_capacity(r);
        for row in adj.iter().take(r) {
            let mut num = 0i128;
            for (j, &c) in coords.iter().enumerate() {
                num = row[j]
                    .checked_mul(offset[c])
                    .and_then(|t| t.checked_add(num))
                    .ok_or(Error::Overflow)?;
            }
            if num % det != 0 {
                return Ok(None);
            }
            params.push(num / det);
        }
        // the pivot coordinates match by construction; the rest must too
        for (i, &want) in offset.iter().enumerate() {
            let mut got = 0i128;
            for (g, &t) in self.generators.iter().zip(&params) {
                got = (g[i] as i128)
                    .checked_mul(t)
                    .and_then(|v| v.checked_add(got))
                    .ok_or(Error::Overflow)?;
            }
            if got != want {
                return Ok(None);
            }
        }
        Ok(Some(params))
    }

    pub fn contains(&self, p: &Point<N>) -> Result<bool> {
        Ok(self.coordinates_of(p)?.is_some())
    }

    /// True when every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        if !other.contains(&self.base)? {
            return Ok(false);
        }
        for g in &self.generators {
            let mut q = self.base;
            for i in 0..N {
                q[i] = q[i].checked_add(g[i]).ok_or(Error::Overflow)?;
            }
            if !other.contains(&q)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Solution set of a Diophantine equation or system in `N` unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionSet<const N: usize> {
    Empty(Obstruction),
    Lattice(AffineLattice<N>),
}

pub type SolutionSet2 = SolutionSet<2>;
pub type SolutionSet3 = SolutionSet<3>;

impl<const N: usize> SolutionSet<N> {
    pub fn is_empty(&self) -> bool {
        matches!(self, SolutionSet::Empty(_))
    }

    pub fn lattice(&self) -> Option<&AffineLattice<N>> {
        match self {
            SolutionSet::Lattice(l) => Some(l),
            SolutionSet::Empty(_) => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match self {
            SolutionSet::Empty(o) => Some(o),
            SolutionSet::Lattice(_) => None,
        }
    }

    /// Number of free parameters, or `None` for the empty set.
    pub fn rank(&self) -> Option<usize> {
        self.lattice().map(AffineLattice::rank)
    }

    pub fn contains(&self, p: &Point<N>) -> Result<bool> {
        match self {
            SolutionSet::Empty(_) => Ok(false),
            SolutionSet::Lattice(l) => l.contains(p),
        }
    }

    /// Set equality by mutual containment; the parametrisations may differ.
    pub fn same_set(&self, other: &Self) -> Result<bool> {
        match (self, other) {
            (SolutionSet::Empty(_), SolutionSet::Empty(_)) => Ok(true),
            (SolutionSet::Lattice(a), SolutionSet::Lattice(b)) => {
                Ok(a.rank() == b.rank() && a.is_subset_of(b)? && b.is_subset_of(a)?)
            }
            _ => Ok(false),
        }
    }
}

/// First coordinate subset (lexicographic) whose square generator minor is
/// nonzero, with that minor's determinant. `None` when the generators are
/// dependent. Zero generators give the empty subset and determinant 1.
pub(crate) fn pivot_minor<const N: usize>(gens: &[Point<N>]) -> Result<Option<(Vec<usize>, i128)>> {
    let r = gens.len();
    for coords in subsets(N, r) {
        let d = det(&minor_matrix(gens, &coords))?;
        if d != 0 {
            return Ok(Some((coords, d)));
        }
    }
    Ok(None)
}

/// `m[i][k] = gens[k][coords[i]]`: rows are coordinates, columns generators.
pub(crate) fn minor_matrix<const N: usize>(gens: &[Point<N>], coords: &[usize]) -> Vec<Vec<i128>> {
    coords
        .iter()
        .map(|&c| gens.iter().map(|g| g[c] as i128).collect())
        .collect()
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Laplace expansion; only ever called with side <= 3.
pub(crate) fn det(m: &[Vec<i128>]) -> Result<i128> {
    match m.len() {
        0 => Ok(1),
        1 => Ok(m[0][0]),
        n => {
            let mut acc = 0i128;
            for j in 0..n {
                if m[0][j] == 0 {
                    continue;
                }
                let sub = drop_row_col(m, 0, j);
                let term = m[0][j].checked_mul(det(&sub)?).ok_or(Error::Overflow)?;
                acc = if j % 2 == 0 {
                    acc.checked_add(term)
                } else {
                    acc.checked_sub(term)
                }
                .ok_or(Error::Overflow)?;
            }
            Ok(acc)
        }
    }
}

/// Transposed cofactor matrix, so that `m * adj = det(m) * I`.
pub(crate) fn adjugate(m: &[Vec<i128>]) -> Result<Vec<Vec<i128>>> {
    let n = m.len();
    if n == 1 {
        return Ok(vec![vec![1]]);
    }
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for (j, adj_row) in adj.iter_mut().enumerate() {
            let c = det(&drop_row_col(m, i, j))?;
            adj_row[i] = if (i + j) % 2 == 0 {
                c
            } else {
                c.checked_neg().ok_or(Error::Overflow)?
            };
        }
    }
    Ok(adj)
}

fn drop_row_col(m: &[Vec<i128>], row: usize, col: usize) -> Vec<Vec<i128>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice3(base: Point<3>, gens: &[Point<3>]) -> AffineLattice<3> {
        AffineLattice::new(base, gens.to_vec()).unwrap()
    }

    #[test]
    fn rank_two_membership() {
        // 6x - 15y + 10z = 4 written as (-6 - 30m + 5n, -2 - 10m + 2n, 1 + 3m)
        let l = lattice3([-6, -2, 1], &[[-30, -10, 3], [5, 2, 0]]);
        assert!(l.contains(&[-6, -2, 1]).unwrap());
        assert!(l
            .contains(&[-6 - 30 * 4 + 5 * -7, -2 - 40 - 14, 13])
            .unwrap());
        assert!(!l.contains(&[-6, -2, 2]).unwrap());
        assert!(!l.contains(&[0, 0, 0]).unwrap());
    }

    #[test]
    fn rank_one_membership() {
        let l = lattice3([5, 3, 4], &[[-10, 21, 48]]);
        assert!(l.contains(&[5, 3, 4]).unwrap());
        assert!(l.contains(&[-15, 45, 100]).unwrap());
        assert!(!l.contains(&[5, 3, 5]).unwrap());
        assert_eq!(l.coordinates_of(&[25, -39, -92]).unwrap(), Some(vec![-2]));
    }

    #[test]
    fn rank_zero_and_three() {
        let l = lattice3([1, 2, 3], &[]);
        assert!(l.contains(&[1, 2, 3]).unwrap());
        assert!(!l.contains(&[1, 2, 4]).unwrap());

        let all = AffineLattice::<3>::everything();
        assert!(all.contains(&[i64::MAX, i64::MIN, 0]).unwrap());

        // index-2 sublattice of Z^3
        let even = lattice3([0, 0, 0], &[[1, 1, 0], [1, -1, 0], [0, 0, 1]]);
        assert!(even.contains(&[2, 0, 5]).unwrap());
        assert!(!even.contains(&[1, 0, 5]).unwrap());
    }

    #[test]
    fn constructor_rejects_dependence() {
        assert_eq!(
            AffineLattice::new([0, 0, 0], vec![[1, 2, 3], [2, 4, 6]]),
            Err(Error::Contract("generators are linearly dependent"))
        );
        assert!(AffineLattice::new([0, 0], vec![[0, 0]]).is_err());
        assert!(AffineLattice::new([0, 0], vec![[1, 0], [0, 1], [1, 1]]).is_err());
    }

    #[test]
    fn same_set_ignores_parametrisation() {
        let a = SolutionSet::Lattice(lattice3([0, 0, 0], &[[3, 1, 0], [4, 0, 1]]));
        let b = SolutionSet::Lattice(lattice3([7, 1, 1], &[[7, 1, 1], [3, 1, 0]]));
        assert!(a.same_set(&b).unwrap());
        let c = SolutionSet::Lattice(lattice3([0, 0, 0], &[[6, 2, 0], [4, 0, 1]]));
        assert!(!a.same_set(&c).unwrap());
        assert!(c
            .lattice()
            .unwrap()
            .is_subset_of(a.lattice().unwrap())
            .unwrap());
        let e = SolutionSet::<3>::Empty(Obstruction {
            divisor: 2,
            target: 3,
        });
        assert!(!a.same_set(&e).unwrap());
        assert!(e
            .same_set(&SolutionSet::Empty(Obstruction {
                divisor: 0,
                target: 1
            }))
            .unwrap());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn adjugate_inverts() {
        let m = vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]];
        let d = det(&m).unwrap();
        let adj = adjugate(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s: i128 = (0..3).map(|k| m[i][k] * adj[k][j]).sum();
                assert_eq!(s, if i == j { d } else { 0 });
            }
        }
    }
}
