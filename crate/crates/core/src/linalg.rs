//! Exact incremental row echelon form over F_p.
//!
//! [`Echelon`] keeps a set of pivot rows, each normalized to 1 at its pivot
//! and zero to the left of it. Inserting a vector reduces it against the
//! pivots in increasing column order; a nonzero remainder becomes a new
//! pivot row. [`Echelon::make_reduced`] back-substitutes to reach reduced
//! row echelon form.

use crate::field::{FpElement, PrimeField};

#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Vec<FpElement>>,
    pivot_cols: Vec<usize>,
    // column -> index into `rows`
    pivot_of_col: Vec<Option<u32>>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivot_cols: Vec::new(), pivot_of_col: vec![None; ncols] }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vec<FpElement>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Reduces `v` in place until its first nonzero entry sits in a
    /// non-pivot column, which is returned (`None` when `v` reduces to zero).
    fn reduce_to_leading(&self, v: &mut [FpElement]) -> Option<usize> {
        let f = self.field;
        let p = f.modulus();
        for c in 0..self.ncols {
            let a = v[c];
            if a == 0 {
                continue;
            }
            match self.pivot_of_col[c] {
                Some(r) => {
                    let row = &self.rows[r as usize];
                    let neg = p - a;
                    v[c] = 0;
                    for k in c + 1..self.ncols {
                        let rk = row[k];
                        if rk != 0 {
                            v[k] = f.mul_add(v[k], neg, rk);
                        }
                    }
                }
                None => return Some(c),
            }
        }
        None
    }

    /// Fully reduces `v` against every pivot (the remainder modulo the span).
    pub fn reduce(&self, v: &mut [FpElement]) {
        let f = self.field;
        let p = f.modulus();
        for c in 0..self.ncols {
            let a = v[c];
            if a == 0 {
                continue;
            }
            if let Some(r) = self.pivot_of_col[c] {
                let row = &self.rows[r as usize];
                let neg = p - a;
                v[c] = 0;
                for k in c + 1..self.ncols {
                    let rk = row[k];
                    if rk != 0 {
                        v[k] = f.mul_add(v[k], neg, rk);
                    }
                }
            }
        }
    }

    /// True when `v` lies in the row span.
    pub fn contains(&self, v: &[FpElement]) -> bool {
        let mut w = v.to_vec();
        self.reduce_to_leading(&mut w).is_none()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<FpElement>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        if self.is_full() {
            return false;
        }
        match self.reduce_to_leading(&mut v) {
            None => false,
            Some(c) => {
                let f = self.field;
                let inv = f.inv(v[c]);
                for x in v[c..].iter_mut() {
                    if *x != 0 {
                        *x = f.mul(*x, inv);
                    }
                }
                self.pivot_of_col[c] = Some(self.rows.len() as u32);
                self.pivot_cols.push(c);
                self.rows.push(v);
                true
            }
        }
    }

    /// Back-substitutes so every pivot column is zero outside its own row,
    /// and orders rows by pivot column.
    pub fn make_reduced(&mut self) {
        let f = self.field;
        let p = f.modulus();
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivot_cols[i]);
        let mut rows: Vec<Vec<FpElement>> = order.iter().map(|&i| std::mem::take(&mut self.rows[i])).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivot_cols[i]).collect();
        for i in (0..rows.len()).rev() {
            let c = pivots[i];
            let (upper, lower) = rows.split_at_mut(i);
            let pivot_row = &lower[0];
            for row in upper.iter_mut() {
                let a = row[c];
                if a == 0 {
                    continue;
                }
                let neg = p - a;
                for k in c..self.ncols {
                    let rk = pivot_row[k];
                    if rk != 0 {
                        row[k] = f.mul_add(row[k], neg, rk);
                    }
                }
            }
        }
        self.pivot_of_col = vec![None; self.ncols];
        for (i, &c) in pivots.iter().enumerate() {
            self.pivot_of_col[c] = Some(i as u32);
        }
        self.rows = rows;
        self.pivot_cols = pivots;
    }

    /// True when the rows are in reduced row echelon form.
    pub fn is_reduced(&self) -> bool {
        self.pivot_cols.windows(2).all(|w| w[0] < w[1])
            && self.rows.iter().zip(&self.pivot_cols).all(|(row, &c)| {
                row[c] == 1
                    && row[..c].iter().all(|&x| x == 0)
                    && self.pivot_cols.iter().all(|&d| d == c || row[d] == 0)
            })
    }
}

/// Rank of a list of rows.
pub fn rank_of(field: PrimeField, ncols: usize, rows: impl IntoIterator<Item = Vec<FpElement>>) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

/// Basis of the right kernel `{v : A v = 0}` of the matrix with the given rows.
pub fn nullspace(field: PrimeField, ncols: usize, rows: impl IntoIterator<Item = Vec<FpElement>>) -> Vec<Vec<FpElement>> {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            return Vec::new();
        }
    }
    e.make_reduced();
    let mut is_pivot = vec![false; ncols];
    for &c in e.pivot_columns() {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0; ncols];
            v[free] = 1;
            for (row, &pc) in e.rows().iter().zip(e.pivot_columns()) {
                v[pc] = field.neg(row[free]);
            }
            v
        })
        .collect()
}
