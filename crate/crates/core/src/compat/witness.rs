use serde::{Deserialize, Serialize};

use crate::bmatrix::{product_positive, BinaryMatrix};
use crate::tuples::IntTuple;

use super::CompatError;

/// Which set a witness certifies membership in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WitnessMode {
    /// Equal row sums everywhere and a nowhere-zero `VᵀW`.
    #[serde(rename = "DTILDE")]
    DTilde,
    /// Compatible matrices: the condition above holds after deleting the
    /// first and last rows.
    #[serde(rename = "D")]
    D,
}

/// A pair of 0-1 matrices certifying that `(m, n)` belongs to `D̃` or `D`.
///
/// `r` is the shared row-sum vector: of the full matrices in `DTilde` mode,
/// of the trimmed matrices in `D` mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub mode: WitnessMode,
    pub r: IntTuple,
    #[serde(rename = "V")]
    pub v: BinaryMatrix,
    #[serde(rename = "W")]
    pub w: BinaryMatrix,
    pub m: IntTuple,
    pub n: IntTuple,
}

impl WitnessPair {
    /// A `DTilde` witness from two matrices; sums are read off the matrices.
    pub fn dtilde(v: BinaryMatrix, w: BinaryMatrix) -> WitnessPair {
        WitnessPair {
            mode: WitnessMode::DTilde,
            r: v.row_sums(),
            m: v.col_sums(),
            n: w.col_sums(),
            v,
            w,
        }
    }

    /// Exchange the roles of the two graphs. Both defining conditions are
    /// symmetric under this swap.
    pub fn swap_sides(self) -> WitnessPair {
        WitnessPair {
            mode: self.mode,
            r: self.r,
            v: self.w,
            w: self.v,
            m: self.n,
            n: self.m,
        }
    }

    pub fn is_valid(&self) -> bool {
        validate_witness(self).is_ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serialises")
    }
}

/// Delete the first and last rows.
pub fn trim(x: &BinaryMatrix) -> Result<BinaryMatrix, CompatError> {
    if x.row_count() < 3 {
        return Err(CompatError::TooFewRows(x.row_count()));
    }
    Ok(x.row_slice(1..x.row_count() - 1))
}

/// Compatibility: at least three rows, equal trimmed row sums, and no
/// column of the trimmed `v` orthogonal to a column of the trimmed `w`.
pub fn is_compatible(v: &BinaryMatrix, w: &BinaryMatrix) -> Result<bool, CompatError> {
    if v.row_count() != w.row_count() {
        return Err(CompatError::Dimension(format!(
            "row counts differ: {} vs {}",
            v.row_count(),
            w.row_count()
        )));
    }
    let (vt, wt) = (trim(v)?, trim(w)?);
    if vt.row_sums() != wt.row_sums() {
        return Ok(false);
    }
    Ok(product_positive(&vt, &wt)?)
}

/// Re-check every witness invariant from scratch.
pub fn validate_witness(wp: &WitnessPair) -> Result<(), String> {
    let (v, w) = (&wp.v, &wp.w);
    if v.row_count() != w.row_count() {
        return Err(format!(
            "V has {} rows but W has {}",
            v.row_count(),
            w.row_count()
        ));
    }
    if v.col_count() != wp.m.len() || w.col_count() != wp.n.len() {
        return Err("column counts do not match m and n".into());
    }
    let vm = v.recomputed_marginals();
    let wm = w.recomputed_marginals();
    if vm.c != wp.m {
        return Err(format!("column sums of V are {} not {}", vm.c, wp.m));
    }
    if wm.c != wp.n {
        return Err(format!("column sums of W are {} not {}", wm.c, wp.n));
    }
    if wp.m.parts().contains(&0) || wp.n.parts().contains(&0) {
        return Err("size tuples must be positive".into());
    }
    let (core_v, core_w) = match wp.mode {
        WitnessMode::DTilde => (v.clone(), w.clone()),
        WitnessMode::D => {
            if v.row_count() < 3 {
                return Err(format!("mode D needs at least 3 rows, got {}", v.row_count()));
            }
            (trim(v).unwrap(), trim(w).unwrap())
        }
    };
    let rv = core_v.recomputed_marginals().r;
    let rw = core_w.recomputed_marginals().r;
    if rv != rw {
        return Err(format!("row sums disagree: {rv} vs {rw}"));
    }
    if rv != wp.r {
        return Err(format!("shared row sums are {rv}, witness claims {}", wp.r));
    }
    match product_positive(&core_v, &core_w) {
        Ok(true) => Ok(()),
        Ok(false) => Err("some column of V is orthogonal to some column of W".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn split_increment(inc: &IntTuple) -> Result<(Vec<u8>, Vec<u8>), CompatError> {
    let mut first = Vec::with_capacity(inc.len());
    let mut last = Vec::with_capacity(inc.len());
    for &x in inc.parts() {
        if x > 2 {
            return Err(CompatError::BadIncrement(inc.clone()));
        }
        let a = x.min(1) as u8;
        first.push(a);
        last.push(x as u8 - a);
    }
    Ok((first, last))
}

/// Turn a `D̃` witness for `(m - delta, n - eps)` into a `D` witness for
/// `(m, n)`: `delta` is split into two 0-1 rows placed above and below `V`,
/// and likewise `eps` around `W`.
pub fn extend_pair(
    base: &WitnessPair,
    delta: &IntTuple,
    eps: &IntTuple,
) -> Result<WitnessPair, CompatError> {
    if base.mode != WitnessMode::DTilde {
        return Err(CompatError::InvalidWitness("extend_pair needs a DTILDE base".into()));
    }
    if delta.len() != base.m.len() || eps.len() != base.n.len() {
        return Err(CompatError::Dimension("increment length mismatch".into()));
    }
    let (d_first, d_last) = split_increment(delta)?;
    let (e_first, e_last) = split_increment(eps)?;
    Ok(WitnessPair {
        mode: WitnessMode::D,
        r: base.r.clone(),
        v: base.v.with_border_rows(&d_first, &d_last),
        w: base.w.with_border_rows(&e_first, &e_last),
        m: base.m.add(delta),
        n: base.n.add(eps),
    })
}

fn unit_columns(x: &IntTuple) -> Vec<usize> {
    x.parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i, c as usize))
        .collect()
}

/// Grow a `D̃` witness for `(m, n)` into one for `(m + p, n + q)` by
/// appending one row per unit of `p`, paired in index order with the units
/// of `q`. Appended rows only add to `VᵀW`.
pub fn lemma_extend_rows(
    wp: &WitnessPair,
    p: &IntTuple,
    q: &IntTuple,
) -> Result<WitnessPair, CompatError> {
    if wp.mode != WitnessMode::DTilde {
        return Err(CompatError::InvalidWitness(
            "row extension needs a DTILDE witness".into(),
        ));
    }
    if p.total() != q.total() {
        return Err(CompatError::UnequalTotals {
            p: p.clone(),
            q: q.clone(),
        });
    }
    if p.len() != wp.m.len() || q.len() != wp.n.len() {
        return Err(CompatError::Dimension("increment length mismatch".into()));
    }
    let mut v = wp.v.clone();
    let mut w = wp.w.clone();
    let mut r = wp.r.parts().to_vec();
    for (i, j) in unit_columns(p).into_iter().zip(unit_columns(q)) {
        let mut vrow = vec![0u8; v.col_count()];
        let mut wrow = vec![0u8; w.col_count()];
        vrow[i] = 1;
        wrow[j] = 1;
        v.push_row(&vrow);
        w.push_row(&wrow);
        r.push(1);
    }
    Ok(WitnessPair {
        mode: WitnessMode::DTilde,
        r: IntTuple::new(r),
        v,
        w,
        m: wp.m.add(p),
        n: wp.n.add(q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u32]) -> IntTuple {
        IntTuple::from(v)
    }

    fn mat<const C: usize>(rows: &[[u8; C]]) -> BinaryMatrix {
        BinaryMatrix::from_rows(rows, C).unwrap()
    }

    /// The displayed pair for ((2^3), (3,1^3)) with r = (3,1,1,1).
    pub(crate) fn displayed_pair() -> WitnessPair {
        let v = mat(&[[1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let w = mat(&[[0, 1, 1, 1], [1, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0]]);
        WitnessPair {
            mode: WitnessMode::DTilde,
            r: t(&[3, 1, 1, 1]),
            v,
            w,
            m: t(&[2, 2, 2]),
            n: t(&[3, 1, 1, 1]),
        }
    }

    #[test]
    fn trim_examples() {
        let x = mat(&[[1, 0], [1, 1], [0, 1]]);
        assert_eq!(trim(&x).unwrap().rows(), vec![vec![1, 1]]);
        let x = mat(&[[1, 0], [1, 1], [0, 1], [0, 0]]);
        assert_eq!(trim(&x).unwrap().rows(), vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(
            trim(&mat(&[[1, 0], [1, 1]])),
            Err(CompatError::TooFewRows(2))
        );
    }

    #[test]
    fn compatibility_examples() {
        let base = displayed_pair();
        let v = base.v.with_border_rows(&[0, 0, 0], &[0, 0, 0]);
        let w = base.w.with_border_rows(&[0, 0, 0, 0], &[0, 0, 0, 0]);
        assert!(is_compatible(&v, &w).unwrap());

        let ones = mat(&[[1], [1], [1]]);
        assert!(is_compatible(&ones, &ones).unwrap());

        let v = mat(&[[0, 0], [1, 0], [0, 0]]);
        let w = mat(&[[0, 0], [0, 1], [0, 0]]);
        assert!(!is_compatible(&v, &w).unwrap());

        assert!(matches!(
            is_compatible(&mat(&[[1], [1]]), &mat(&[[1], [1]])),
            Err(CompatError::TooFewRows(2))
        ));
        assert!(matches!(
            is_compatible(&mat(&[[1], [1], [1]]), &mat(&[[1], [1], [1], [1]])),
            Err(CompatError::Dimension(_))
        ));
    }

    #[test]
    fn displayed_pair_validates() {
        let wp = displayed_pair();
        assert_eq!(validate_witness(&wp), Ok(()));
        let mut broken = wp.clone();
        broken.w.set(0, 0, true);
        assert!(validate_witness(&broken).is_err());
    }

    #[test]
    fn extend_pair_examples() {
        let base = displayed_pair();
        let zero_d = t(&[0, 0, 0]);
        let zero_e = t(&[0, 0, 0, 0]);
        let ext = extend_pair(&base, &zero_d, &zero_e).unwrap();
        assert_eq!(ext.mode, WitnessMode::D);
        assert_eq!(ext.v.row_count(), 6);
        assert_eq!(validate_witness(&ext), Ok(()));

        // ((3,2),(2,2)) from ((2,2),(2,2)) with delta = (1,0)
        let v = BinaryMatrix::ones(2, 2);
        let w = BinaryMatrix::ones(2, 2);
        let base = WitnessPair::dtilde(v, w);
        let ext = extend_pair(&base, &t(&[1, 0]), &t(&[0, 0])).unwrap();
        assert_eq!(ext.m, t(&[3, 2]));
        assert_eq!(ext.n, t(&[2, 2]));
        assert_ne!(ext.m.total(), ext.n.total());
        assert_eq!(validate_witness(&ext), Ok(()));

        let ext = extend_pair(&base, &t(&[2, 0]), &t(&[1, 1])).unwrap();
        assert_eq!(ext.v.row(0), vec![1, 0]);
        assert_eq!(ext.v.row(3), vec![1, 0]);
        assert_eq!(ext.w.row(0), vec![1, 1]);
        assert_eq!(ext.w.row(3), vec![0, 0]);
        assert_eq!(validate_witness(&ext), Ok(()));

        assert!(matches!(
            extend_pair(&base, &t(&[3, 0]), &t(&[0, 0])),
            Err(CompatError::BadIncrement(_))
        ));
    }

    #[test]
    fn lemma_extend_examples() {
        let base = displayed_pair();
        let same = lemma_extend_rows(&base, &t(&[0, 0, 0]), &t(&[0, 0, 0, 0])).unwrap();
        assert_eq!(same, base);

        let one = lemma_extend_rows(&base, &t(&[1, 0, 0]), &t(&[0, 1, 0, 0])).unwrap();
        assert_eq!(one.r, t(&[3, 1, 1, 1, 1]));
        assert_eq!(one.m, t(&[3, 2, 2]));
        assert_eq!(one.n, t(&[3, 2, 1, 1]));
        assert_eq!(validate_witness(&one), Ok(()));

        // base for ((2,2),(2,1,1)): two rows (11|110) and (11|101)
        let v = BinaryMatrix::ones(2, 2);
        let w = mat(&[[1, 1, 0], [1, 0, 1]]);
        let base = WitnessPair::dtilde(v, w);
        assert_eq!(validate_witness(&base), Ok(()));
        let grown = lemma_extend_rows(&base, &t(&[1, 0]), &t(&[0, 0, 1])).unwrap();
        assert_eq!(grown.m, t(&[3, 2]));
        assert_eq!(grown.n, t(&[2, 1, 2]));
        assert_eq!(validate_witness(&grown), Ok(()));

        assert!(matches!(
            lemma_extend_rows(&base, &t(&[1, 0]), &t(&[0, 0, 0])),
            Err(CompatError::UnequalTotals { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let json = displayed_pair().to_json();
        assert_eq!(
            json,
            r#"{"mode":"DTILDE","r":[3,1,1,1],"V":[[1,1,1],[1,0,0],[0,1,0],[0,0,1]],"W":[[0,1,1,1],[1,0,0,0],[1,0,0,0],[1,0,0,0]],"m":[2,2,2],"n":[3,1,1,1]}"#
        );
        let back: WitnessPair = serde_json::from_str(&json).unwrap();
        assert_eq!(back, displayed_pair());
    }
}
