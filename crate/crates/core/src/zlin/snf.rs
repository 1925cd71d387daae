//! Smith normal form with unimodular certificates.
//!
//! Elimination first runs on checked `i128` entries and restarts on
//! `BigInt` entries when an intermediate value overflows, so results are
//! always exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntegerMatrix;

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, its entries
/// nonnegative and each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .filter(|x| !Zero::is_zero(x))
            .collect()
    }
}

/// Computes the Smith normal form of `m` together with its certificates.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let data = Smith::compute(
        m,
        Track {
            u: true,
            u_inv: false,
            v: true,
        },
    );
    let d = IntegerMatrix::diagonal(m.rows(), m.cols(), &data.diag);
    SmithForm {
        u: data.u.expect("tracked"),
        d,
        v: data.v.expect("tracked"),
    }
}

/// Which transforms to record during elimination.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Track {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
}

/// Raw elimination output: `u * m * v = diag(diag)` padded with zeros.
#[derive(Clone, Debug)]
pub(crate) struct Smith {
    /// The first `rank` entries are positive and form a divisibility chain.
    pub diag: Vec<BigInt>,
    pub rank: usize,
    pub u: Option<IntegerMatrix>,
    pub u_inv: Option<IntegerMatrix>,
    pub v: Option<IntegerMatrix>,
}

impl Smith {
    pub fn compute(m: &IntegerMatrix, track: Track) -> Smith {
        let small = m
            .max_abs_entry()
            .to_i128()
            .filter(|x| *x < (1i128 << 60))
            .is_some();
        if small {
            let rows: Vec<Vec<i128>> = (0..m.rows())
                .map(|i| m.row(i).iter().map(|x| x.to_i128().unwrap()).collect())
                .collect();
            if let Ok(e) = Engine::run(rows, m.rows(), m.cols(), track) {
                return e.finish();
            }
        }
        let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        match Engine::run(rows, m.rows(), m.cols(), track) {
            Ok(e) => e.finish(),
            Err(Overflow) => unreachable!("BigInt arithmetic cannot overflow"),
        }
    }

    /// Invariant factors and rank only.
    pub fn diagonal_only(m: &IntegerMatrix) -> Smith {
        Self::compute(m, Track::default())
    }
}

#[derive(Debug, Clone, Copy)]
struct Overflow;

type Step = Result<(), Overflow>;

trait Scalar: Clone + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    fn is_unit(&self) -> bool;
    fn negate(&self) -> Result<Self, Overflow>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow>;
    /// Quotient rounded towards negative infinity.
    fn floor_div(&self, d: &Self) -> Self;
    fn divides(&self, x: &Self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn negate(&self) -> Result<Self, Overflow> {
        self.checked_neg().ok_or(Overflow)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        q.checked_mul(*b)
            .and_then(|p| self.checked_sub(p))
            .ok_or(Overflow)
    }
    fn floor_div(&self, d: &Self) -> Self {
        self.div_floor(d)
    }
    fn divides(&self, x: &Self) -> bool {
        *x % *self == 0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn negate(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        Ok(self - q * b)
    }
    fn floor_div(&self, d: &Self) -> Self {
        Integer::div_floor(self, d)
    }
    fn divides(&self, x: &Self) -> bool {
        Zero::is_zero(&(x % self))
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Engine<T> {
    a: Vec<Vec<T>>,
    rows: usize,
    cols: usize,
    u: Option<Vec<Vec<T>>>,
    u_inv: Option<Vec<Vec<T>>>,
    v: Option<Vec<Vec<T>>>,
    rank: usize,
}

fn identity<T: Scalar>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        })
        .collect()
}

fn to_matrix<T: Scalar>(m: &[Vec<T>], rows: usize, cols: usize) -> IntegerMatrix {
    IntegerMatrix::from_bigint_rows(
        m.iter()
            .map(|r| r.iter().map(Scalar::to_big).collect())
            .collect(),
        if rows == 0 { cols } else { m[0].len() },
    )
}

impl<T: Scalar> Engine<T> {
    fn run(a: Vec<Vec<T>>, rows: usize, cols: usize, track: Track) -> Result<Self, Overflow> {
        let mut e = Engine {
            a,
            rows,
            cols,
            u: track.u.then(|| identity(rows)),
            u_inv: track.u_inv.then(|| identity(rows)),
            v: track.v.then(|| identity(cols)),
            rank: 0,
        };
        e.eliminate()?;
        e.fix_divisibility()?;
        Ok(e)
    }

    fn finish(self) -> Smith {
        let n = self.rows.min(self.cols);
        let diag = (0..n).map(|i| self.a[i][i].to_big()).collect();
        Smith {
            diag,
            rank: self.rank,
            u: self.u.as_ref().map(|m| to_matrix(m, self.rows, self.rows)),
            u_inv: self.u_inv.as_ref().map(|m| to_matrix(m, self.rows, self.rows)),
            v: self.v.as_ref().map(|m| to_matrix(m, self.cols, self.cols)),
        }
    }

    // row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &T, from_col: usize) -> Step {
        let (ri, rt) = two_rows(&mut self.a, i, t);
        for j in from_col..ri.len() {
            if !rt[j].is_zero() {
                ri[j] = ri[j].sub_mul(q, &rt[j])?;
            }
        }
        if let Some(u) = self.u.as_mut() {
            let (ri, rt) = two_rows(u, i, t);
            for j in 0..ri.len() {
                if !rt[j].is_zero() {
                    ri[j] = ri[j].sub_mul(q, &rt[j])?;
                }
            }
        }
        if let Some(w) = self.u_inv.as_mut() {
            // column t += q * column i
            let nq = q.negate()?;
            for row in w.iter_mut() {
                if !row[i].is_zero() {
                    row[t] = row[t].sub_mul(&nq, &row[i])?;
                }
            }
        }
        Ok(())
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap(i, j);
        }
        if let Some(w) = self.u_inv.as_mut() {
            for row in w.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn row_negate(&mut self, i: usize) -> Step {
        for x in self.a[i].iter_mut() {
            *x = x.negate()?;
        }
        if let Some(u) = self.u.as_mut() {
            for x in u[i].iter_mut() {
                *x = x.negate()?;
            }
        }
        if let Some(w) = self.u_inv.as_mut() {
            for row in w.iter_mut() {
                row[i] = row[i].negate()?;
            }
        }
        Ok(())
    }

    // col_j -= q * col_t, applied to the given rows of `a` only
    fn col_sub(&mut self, j: usize, t: usize, q: &T, rows: &[usize]) -> Step {
        for &i in rows {
            if !self.a[i][t].is_zero() {
                self.a[i][j] = self.a[i][j].sub_mul(q, &self.a[i][t])?;
            }
        }
        if let Some(v) = self.v.as_mut() {
            for row in v.iter_mut() {
                if !row[t].is_zero() {
                    row[j] = row[j].sub_mul(q, &row[t])?;
                }
            }
        }
        Ok(())
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some(v) = self.v.as_mut() {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if x.is_unit() {
                    return Some((i, j));
                }
                match best {
                    Some((bi, bj)) if x.cmp_abs(&self.a[bi][bj]) != Ordering::Less => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn eliminate(&mut self) -> Step {
        let n = self.rows.min(self.cols);
        for t in 0..n {
            let Some((pi, pj)) = self.find_pivot(t) else {
                break;
            };
            self.row_swap(t, pi);
            self.col_swap(t, pj);
            loop {
                // clear column t below the pivot
                let mut leftover = false;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = self.a[i][t].floor_div(&self.a[t][t]);
                    self.row_sub(i, t, &q, t)?;
                    if !self.a[i][t].is_zero() {
                        leftover = true;
                    }
                }
                if leftover {
                    let i = self.min_in_column(t);
                    self.row_swap(t, i);
                    continue;
                }
                // clear row t right of the pivot; only row t is affected
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = self.a[t][j].floor_div(&self.a[t][t]);
                    self.col_sub(j, t, &q, &[t])?;
                    if !self.a[t][j].is_zero() {
                        leftover = true;
                    }
                }
                if leftover {
                    let j = self.min_in_row(t);
                    self.col_swap(t, j);
                    continue;
                }
                break;
            }
            self.rank = t + 1;
        }
        Ok(())
    }

    fn min_in_column(&self, t: usize) -> usize {
        let mut best = t;
        for i in t + 1..self.rows {
            let x = &self.a[i][t];
            if !x.is_zero() && (self.a[best][t].is_zero() || x.cmp_abs(&self.a[best][t]) == Ordering::Less) {
                best = i;
            }
        }
        best
    }

    fn min_in_row(&self, t: usize) -> usize {
        let mut best = t;
        for j in t + 1..self.cols {
            let x = &self.a[t][j];
            if !x.is_zero() && (self.a[t][best].is_zero() || x.cmp_abs(&self.a[t][best]) == Ordering::Less) {
                best = j;
            }
        }
        best
    }

    /// Turns diag(.., a, .., b, ..) into diag(.., gcd, .., lcm, ..) in place.
    fn gcd_lcm_block(&mut self, i: usize, j: usize) -> Step {
        // row_i += row_j puts b into position (i, j)
        let minus_one = T::one().negate()?;
        self.row_sub(i, j, &minus_one, 0)?;
        let rows = [i, j];
        loop {
            if !self.a[i][j].is_zero() {
                if self.a[i][i].is_zero() || self.a[i][j].cmp_abs(&self.a[i][i]) == Ordering::Less {
                    self.col_swap(i, j);
                }
                let q = self.a[i][j].floor_div(&self.a[i][i]);
                self.col_sub(j, i, &q, &rows)?;
                continue;
            }
            if !self.a[j][i].is_zero() {
                if self.a[i][i].is_zero() || self.a[j][i].cmp_abs(&self.a[i][i]) == Ordering::Less {
                    self.row_swap(i, j);
                    continue;
                }
                let q = self.a[j][i].floor_div(&self.a[i][i]);
                self.row_sub(j, i, &q, 0)?;
                continue;
            }
            break;
        }
        Ok(())
    }

    fn fix_divisibility(&mut self) -> Step {
        let k = self.rank;
        for i in 0..k {
            for j in i + 1..k {
                if !self.a[i][i].divides(&self.a[j][j]) {
                    self.gcd_lcm_block(i, j)?;
                }
            }
            if self.a[i][i].is_negative() {
                self.row_negate(i)?;
            }
        }
        Ok(())
    }
}

fn two_rows<T>(m: &mut [Vec<T>], i: usize, t: usize) -> (&mut Vec<T>, &Vec<T>) {
    assert_ne!(i, t);
    if i < t {
        let (lo, hi) = m.split_at_mut(t);
        (&mut lo[i], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(i);
        (&mut hi[0], &lo[t])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d, "u*m*v != d for {m:?}");
        assert!(s.u.determinant().magnitude().is_one());
        assert!(s.v.determinant().magnitude().is_one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(Zero::is_zero(&(&w[1] % &w[0])));
        }
        for x in &f {
            assert!(x.is_positive());
        }
        s
    }

    #[test]
    fn two_by_two_example() {
        let m = IntegerMatrix::from_rows(&[[2, 4], [6, 8]]);
        let s = check(&m);
        // oracle: d1 = gcd of entries, d1 * d2 = |det|
        let g = [2i64, 4, 6, 8].iter().fold(0i64, |a, &b| Integer::gcd(&a, &b));
        let det = m.determinant();
        assert_eq!(s.invariant_factors(), vec![BigInt::from(g), det.abs() / g]);
        assert_eq!(s.d, IntegerMatrix::from_rows(&[[2, 0], [0, 4]]));
    }

    #[test]
    fn zero_and_identity() {
        let z = IntegerMatrix::zeros(2, 3);
        assert_eq!(check(&z).d, z);
        let id = IntegerMatrix::identity(3);
        assert_eq!(check(&id).d, id);
        let e = IntegerMatrix::zeros(0, 4);
        assert_eq!(check(&e).d, e);
    }

    #[test]
    fn u_inverse_is_tracked() {
        let m = IntegerMatrix::from_rows(&[[3, 5, 7], [6, 9, 1], [0, 4, 4], [2, 2, 2]]);
        let s = Smith::compute(&m, Track { u: true, u_inv: true, v: true });
        let u = s.u.unwrap();
        let w = s.u_inv.unwrap();
        assert_eq!(&u * &w, IntegerMatrix::identity(4));
    }

    #[test]
    fn bigint_fallback_on_huge_entries() {
        let big: BigInt = BigInt::from(1u8) << 200usize;
        let m = IntegerMatrix::from_bigint_rows(
            vec![
                vec![big.clone(), BigInt::from(3)],
                vec![BigInt::from(6), big.clone() + 1],
            ],
            2,
        );
        check(&m);
    }

    proptest! {
        #[test]
        fn certificates_remultiply(rows in 0usize..5, cols in 0usize..5, seed in proptest::collection::vec(-20i64..20, 25)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 5 + j]).collect()).collect();
            let m = IntegerMatrix::from_rows_with_cols(&data, cols);
            check(&m);
        }
    }
}
