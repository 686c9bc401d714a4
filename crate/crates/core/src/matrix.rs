//! Dense matrices of polynomials.

use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingSpec;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    field: Field,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize, nvars: usize, field: Field) -> PolyMatrix {
        PolyMatrix {
            rows,
            cols,
            nvars,
            field,
            data: vec![Polynomial::zero(nvars, field); rows * cols],
        }
    }

    pub fn zeros_in(ring: &RingSpec, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix::zero(rows, cols, ring.nvars(), ring.field())
    }

    pub fn identity(n: usize, nvars: usize, field: Field) -> PolyMatrix {
        let mut m = PolyMatrix::zero(n, n, nvars, field);
        for i in 0..n {
            m.set(i, i, Polynomial::one(nvars, field));
        }
        m
    }

    /// Builds from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>, nvars: usize, field: Field) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<Polynomial> = rows.into_iter().flatten().collect();
        if data
            .iter()
            .any(|p| p.nvars() != nvars || p.field() != field)
        {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            nvars,
            field,
            data,
        })
    }

    /// Builds from column vectors of length `rows`.
    pub fn from_columns(
        rows: usize,
        columns: &[Vec<Polynomial>],
        nvars: usize,
        field: Field,
    ) -> Result<PolyMatrix> {
        let mut m = PolyMatrix::zero(rows, columns.len(), nvars, field);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {} not {rows}",
                    col.len()
                )));
            }
            for (i, p) in col.iter().enumerate() {
                if p.nvars() != nvars || p.field() != field {
                    return Err(Error::RingMismatch);
                }
                m.set(i, j, p.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        debug_assert!(p.nvars() == self.nvars && p.field() == self.field);
        self.data[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            data: self.data.iter().map(f).collect(),
            ..self.clone()
        }
    }

    pub fn try_map(&self, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<PolyMatrix> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            data,
            ..self.clone()
        })
    }

    fn check_same(&self, other: &PolyMatrix) -> Result<()> {
        if self.nvars != other.nvars || self.field != other.field {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check_same(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(PolyMatrix {
            data,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check_same(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix difference".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(PolyMatrix {
            data,
            ..self.clone()
        })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.mul_with(other, &Budget::unlimited())
    }

    /// [`PolyMatrix::mul`], checking `budget` before every entry product.
    pub fn mul_with(&self, other: &PolyMatrix, budget: &Budget) -> Result<PolyMatrix> {
        self.check_same(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zero(self.rows, other.cols, self.nvars, self.field);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.nvars, self.field);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    budget.check()?;
                    acc = acc.add(&a.mul(b));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, p: &Polynomial) -> PolyMatrix {
        self.map(|a| a.mul(p))
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.cols, self.rows, self.nvars, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Selects rows and columns (in the given orders).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zero(rows.len(), cols.len(), self.nvars, self.field);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Determinant by dynamic programming over column subsets (exact, division free).
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(self.nvars, self.field));
        }
        assert!(n <= 20, "determinant expansion limited to 20x20");
        // dp[mask]: signed sum over injections of the first popcount(mask) rows onto `mask`
        let zero = Polynomial::zero(self.nvars, self.field);
        let mut dp: Vec<Polynomial> = vec![zero; 1 << n];
        dp[0] = Polynomial::one(self.nvars, self.field);
        for mask in 0usize..(1 << n) {
            if dp[mask].is_zero() {
                continue;
            }
            let row = mask.count_ones() as usize;
            if row == n {
                continue;
            }
            let cur = dp[mask].clone();
            for c in 0..n {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let a = self.get(row, c);
                if a.is_zero() {
                    continue;
                }
                // sign = parity of already used columns to the right of c
                let inversions = (mask >> (c + 1)).count_ones();
                let term = cur.mul(a);
                let next = mask | (1 << c);
                dp[next] = if inversions % 2 == 0 {
                    dp[next].add(&term)
                } else {
                    dp[next].sub(&term)
                };
            }
        }
        Ok(dp[(1 << n) - 1].clone())
    }

    /// Classical adjoint: `self · adj = adj · self = det · I`.
    pub fn adjugate(&self) -> Result<PolyMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(
                "adjugate of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut out = PolyMatrix::zero(n, n, self.nvars, self.field);
        if n == 1 {
            out.set(0, 0, Polynomial::one(self.nvars, self.field));
            return Ok(out);
        }
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let minor = self.submatrix(&rows, &cols).determinant()?;
                out.set(i, j, if (i + j) % 2 == 0 { minor } else { minor.neg() });
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.nvars, self.field);
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// Renders rows in the `| a b |` style with aligned columns.
    pub fn render_rows(&self, ring: &RingSpec, compact: bool) -> Vec<String> {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        if compact {
                            ring.render_compact(self.get(i, j))
                        } else {
                            ring.render(self.get(i, j))
                        }
                    })
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        cells
            .iter()
            .map(|r| {
                let body: Vec<String> = r
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                format!("| {} |", body.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix({}x{})", self.rows, self.cols)
    }
}
