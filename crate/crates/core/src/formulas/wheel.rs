//! Wheel dimensions in all three pair modes, the constructed nonlocal basis
//! on the rim, and the rim-gap conditions that certify resolving sets.

use crate::error::{Error, Result};
use crate::graph::Vertex;

fn check_rim(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter("wheel needs rim length >= 3".into()));
    }
    Ok(())
}

/// Nonlocal metric dimension of the wheel `W_{1,n}`.
pub fn dimnl_wheel(n: usize) -> Result<usize> {
    check_rim(n)?;
    Ok(match n {
        3 => 1,
        4..=6 => 2,
        _ => 2 * n / 5,
    })
}

/// Metric dimension of the wheel `W_{1,n}`.
pub fn dim_wheel(n: usize) -> Result<usize> {
    check_rim(n)?;
    Ok(match n {
        3 => 3,
        4 | 5 => 2,
        6 => 3,
        _ => (2 * n + 2) / 5,
    })
}

/// Local metric dimension of the wheel `W_{1,n}`.
pub fn dimlocal_wheel(n: usize) -> Result<usize> {
    check_rim(n)?;
    Ok(match n {
        3 => 3,
        4..=6 => 2,
        _ => n.div_ceil(4),
    })
}

/// A nonlocal resolving set of `W_{1,n}` of size `2n/5` rounded down,
/// entirely on the rim. Defined for `n >= 7`; the layout depends on
/// `n mod 5`.
pub fn wheel_basis(n: usize) -> Result<Vec<Vertex>> {
    if n < 7 {
        return Err(Error::InvalidParameter(
            "wheel basis construction needs n >= 7".into(),
        ));
    }
    let k = n / 5;
    let mut basis = vec![0];
    match n % 5 {
        0 | 1 => {
            for i in 1..k {
                basis.push(5 * i);
                basis.push(5 * i + 2);
            }
            basis.push(5 * k - 1);
        }
        2 => {
            for i in 1..k {
                basis.push(5 * i);
                basis.push(5 * i + 2);
            }
            basis.push(5 * k);
        }
        _ => {
            for i in 1..=k {
                basis.push(5 * i);
                basis.push(5 * i + 2);
            }
        }
    }
    basis.sort_unstable();
    debug_assert_eq!(basis.len(), 2 * n / 5);
    Ok(basis)
}

/// A maximal run of rim vertices strictly between two consecutive members of
/// a rim set, in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gap {
    pub left: Vertex,
    pub right: Vertex,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct WheelGapProfile {
    pub rim: usize,
    /// The rim set, sorted ascending.
    pub members: Vec<Vertex>,
    /// One gap per consecutive member pair, cyclic, starting at the smallest
    /// member; sizes sum to `rim - members.len()`.
    pub gaps: Vec<Gap>,
}

/// Outcome of the three gap conditions on a rim set of `W_{1,n}`:
/// (i) every gap has at most 4 vertices, (ii) at most one gap has 3 or more,
/// (iii) gaps with 2 or more vertices have neighbors with at most 1.
#[derive(Clone, Debug)]
pub struct GapConditionReport {
    pub profile: WheelGapProfile,
    pub max_gap_at_most_4: bool,
    pub at_most_one_large_gap: bool,
    pub wide_gap_neighbors_small: bool,
}

impl GapConditionReport {
    /// For `n >= 7`, all three conditions holding certifies a nonlocal
    /// resolving set of the wheel.
    pub fn all_hold(&self) -> bool {
        self.max_gap_at_most_4 && self.at_most_one_large_gap && self.wide_gap_neighbors_small
    }
}

pub fn gap_profile(n: usize, rim_set: &[Vertex]) -> Result<WheelGapProfile> {
    check_rim(n)?;
    let mut members = rim_set.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.len() < 2 {
        return Err(Error::InvalidParameter(
            "gap profile needs at least two rim vertices".into(),
        ));
    }
    if let Some(&v) = members.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    let m = members.len();
    let mut gaps = Vec::with_capacity(m);
    for t in 0..m {
        let left = members[t];
        let right = members[(t + 1) % m];
        let size = (right + n - left - 1) % n;
        gaps.push(Gap { left, right, size });
    }
    debug_assert_eq!(gaps.iter().map(|g| g.size).sum::<usize>(), n - m);
    Ok(WheelGapProfile { rim: n, members, gaps })
}

pub fn wheel_gap_check(n: usize, rim_set: &[Vertex]) -> Result<GapConditionReport> {
    let profile = gap_profile(n, rim_set)?;
    let sizes: Vec<usize> = profile.gaps.iter().map(|g| g.size).collect();
    let m = sizes.len();
    let max_gap_at_most_4 = sizes.iter().all(|&s| s <= 4);
    let at_most_one_large_gap = sizes.iter().filter(|&&s| s >= 3).count() <= 1;
    let wide_gap_neighbors_small = (0..m).all(|t| {
        sizes[t] < 2 || (sizes[(t + m - 1) % m] <= 1 && sizes[(t + 1) % m] <= 1)
    });
    Ok(GapConditionReport {
        profile,
        max_gap_at_most_4,
        at_most_one_large_gap,
        wide_gap_neighbors_small,
    })
}

/// Rewrites a rim set satisfying the gap conditions into one of equal size
/// with no gap of exactly 3 vertices, still satisfying the conditions.
/// Expects a minimum basis; a redundant neighboring member is an error.
pub fn normalize_wheel_basis(n: usize, rim_set: &[Vertex]) -> Result<Vec<Vertex>> {
    if n < 7 {
        return Err(Error::InvalidParameter("normalization needs n >= 7".into()));
    }
    let report = wheel_gap_check(n, rim_set)?;
    if !report.all_hold() {
        return Err(Error::InvalidParameter(
            "rim set does not satisfy the gap conditions".into(),
        ));
    }
    let mut present = vec![false; n];
    for &v in &report.profile.members {
        present[v] = true;
    }
    // At most one gap of size >= 3 exists, so one rewrite suffices; loop for
    // safety with a hard cap.
    for _ in 0..n {
        let members: Vec<Vertex> = (0..n).filter(|&v| present[v]).collect();
        let profile = gap_profile(n, &members)?;
        let Some(gap) = profile.gaps.iter().find(|g| g.size == 3) else {
            break;
        };
        let i = gap.left;
        let after = (i + 5) % n;
        let before = (i + n - 1) % n;
        let far = (i + 6) % n;
        if !present[after] {
            present[after] = true;
            present[(i + 4) % n] = false;
        } else if !present[before] {
            present[before] = true;
            present[i] = false;
        } else if !present[far] {
            present[far] = true;
            present[(i + 4) % n] = false;
        } else {
            return Err(Error::InvalidParameter(
                "rim set has a redundant member next to a size-3 gap".into(),
            ));
        }
    }
    let out: Vec<Vertex> = (0..n).filter(|&v| present[v]).collect();
    debug_assert_eq!(out.len(), report.profile.members.len());
    debug_assert!(wheel_gap_check(n, &out)?.all_hold());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::solver::{is_resolving, PairMode};

    #[test]
    fn closed_form_tables() {
        assert_eq!(dimnl_wheel(3).unwrap(), 1);
        for n in 4..=6 {
            assert_eq!(dimnl_wheel(n).unwrap(), 2);
        }
        assert_eq!(dimnl_wheel(10).unwrap(), 4);
        assert_eq!(dimnl_wheel(13).unwrap(), 5);
        assert_eq!(dim_wheel(7).unwrap(), 3);
        assert_eq!(dimnl_wheel(7).unwrap(), 2);
        assert_eq!(dimlocal_wheel(8).unwrap(), 2);
        assert!(dimnl_wheel(2).is_err());
    }

    #[test]
    fn formulas_differ_exactly_on_residues_2_and_4() {
        for n in 7..60 {
            let gap = dim_wheel(n).unwrap() - dimnl_wheel(n).unwrap();
            let expected = usize::from(n % 5 == 2 || n % 5 == 4);
            assert_eq!(gap, expected, "n = {n}");
        }
    }

    #[test]
    fn constructed_bases() {
        assert_eq!(wheel_basis(10).unwrap(), vec![0, 5, 7, 9]);
        assert_eq!(wheel_basis(12).unwrap(), vec![0, 5, 7, 10]);
        assert_eq!(wheel_basis(13).unwrap(), vec![0, 5, 7, 10, 12]);
        assert_eq!(wheel_basis(7).unwrap(), vec![0, 5]);
        assert!(wheel_basis(6).is_err());
        for n in 7..=40 {
            let basis = wheel_basis(n).unwrap();
            assert_eq!(basis.len(), 2 * n / 5, "n = {n}");
            assert!(basis.iter().all(|&v| v < n));
            assert!(wheel_gap_check(n, &basis).unwrap().all_hold(), "n = {n}");
        }
    }

    #[test]
    fn gap_check_examples() {
        let r = wheel_gap_check(10, &[0, 5, 7, 9]).unwrap();
        assert!(r.all_hold());
        assert_eq!(
            r.profile.gaps.iter().map(|g| g.size).collect::<Vec<_>>(),
            vec![4, 1, 1, 0]
        );

        let r = wheel_gap_check(12, &[0, 1, 6, 7]).unwrap();
        assert!(r.max_gap_at_most_4);
        assert!(!r.at_most_one_large_gap);

        let r = wheel_gap_check(10, &[0, 2, 5, 7]).unwrap();
        assert!(r.all_hold());
        assert!(is_resolving(
            &families::wheel(10).unwrap(),
            &[0, 2, 5, 7],
            PairMode::NonAdjacent
        ));

        assert!(wheel_gap_check(9, &[1]).is_err());
        assert!(wheel_gap_check(9, &[0, 11]).is_err());
    }

    #[test]
    fn normalization_removes_size_3_gaps() {
        // {0, 4, 6, 8} on a 9-rim has gap sizes (3, 1, 1, 0).
        assert!(wheel_gap_check(9, &[0, 4, 6, 8]).unwrap().all_hold());
        let norm = normalize_wheel_basis(9, &[0, 4, 6, 8]).unwrap();
        assert_eq!(norm.len(), 4);
        let profile = gap_profile(9, &norm).unwrap();
        assert!(profile.gaps.iter().all(|g| g.size != 3));
        assert!(is_resolving(
            &families::wheel(9).unwrap(),
            &norm,
            PairMode::NonAdjacent
        ));

        // A minimum basis of W_{1,13} with a size-3 gap.
        let w13 = families::wheel(13).unwrap();
        assert!(is_resolving(&w13, &[0, 4, 6, 8, 11], PairMode::NonAdjacent));
        let norm = normalize_wheel_basis(13, &[0, 4, 6, 8, 11]).unwrap();
        assert_eq!(norm.len(), 5);
        assert!(gap_profile(13, &norm).unwrap().gaps.iter().all(|g| g.size != 3));
        assert!(is_resolving(&w13, &norm, PairMode::NonAdjacent));

        // Already normalized sets come back unchanged.
        let same = normalize_wheel_basis(10, &[0, 5, 7, 9]).unwrap();
        assert_eq!(same, vec![0, 5, 7, 9]);

        // Sets violating the conditions are rejected.
        assert!(normalize_wheel_basis(9, &[0, 4, 6]).is_err());
    }
}
