use std::fmt;

use serde::{Serialize, Serializer};

use super::PolynomialLemniscate;
use crate::error::{Error, Result};
use crate::geometry::Point;

/// Largest focus count accepted by [`CoefficientTable::expand`].
pub const MAX_EXPANSION_FOCI: usize = 8;

/// Dense coefficients of a bivariate polynomial of total degree `2n`;
/// entry `(i, j)` multiplies `xⁱ yʲ`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    n: usize,
    size: usize,
    coeffs: Vec<f64>,
}

impl CoefficientTable {
    fn zeros(n: usize) -> Self {
        let size = 2 * n + 1;
        Self {
            n,
            size,
            coeffs: vec![0.0; size * size],
        }
    }

    /// Multiplies out `∏ ((x - a)² + (y - b)²) - radius^(2n)`.
    pub fn expand(l: &PolynomialLemniscate) -> Result<Self> {
        let n = l.order();
        if n > MAX_EXPANSION_FOCI {
            return Err(Error::TooManyFoci(n));
        }
        let mut table = Self::zeros(n);
        let s = table.size;
        table.coeffs[0] = 1.0;
        for (k, f) in l.foci().iter().enumerate() {
            // x² + y² - 2a x - 2b y + (a² + b²)
            let factor = [
                (2, 0, 1.0),
                (0, 2, 1.0),
                (1, 0, -2.0 * f.x),
                (0, 1, -2.0 * f.y),
                (0, 0, f.x * f.x + f.y * f.y),
            ];
            let mut next = vec![0.0; s * s];
            let deg = 2 * k;
            for i in 0..=deg {
                for j in 0..=(deg - i) {
                    let c = table.coeffs[i * s + j];
                    if c == 0.0 {
                        continue;
                    }
                    for &(di, dj, fc) in &factor {
                        next[(i + di) * s + (j + dj)] += c * fc;
                    }
                }
            }
            table.coeffs = next;
        }
        table.coeffs[0] -= l.level();
        Ok(table)
    }

    /// Number of foci the table was expanded from.
    pub fn focus_count(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, i: usize, j: usize) -> f64 {
        if i < self.size && j < self.size {
            self.coeffs[i * self.size + j]
        } else {
            0.0
        }
    }

    /// Largest `i + j` with a non-zero coefficient.
    pub fn total_degree(&self) -> usize {
        self.terms().map(|(i, j, _)| i + j).max().unwrap_or(0)
    }

    /// Non-zero terms `(i, j, coefficient)` in row-major order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let s = self.size;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(move |(k, c)| (k / s, k % s, *c))
    }

    /// Nested Horner evaluation, in `y` per power of `x`, then in `x`.
    pub fn evaluate(&self, p: Point) -> f64 {
        let s = self.size;
        let mut acc = 0.0;
        for i in (0..s).rev() {
            let row = &self.coeffs[i * s..(i + 1) * s];
            let inner = row[..s - i].iter().rev().fold(0.0, |a, c| a * p.y + c);
            acc = acc * p.x + inner;
        }
        acc
    }
}

impl fmt::Display for CoefficientTable {
    /// Highest total degree first, e.g. `x^4 + 2 x^2 y^2 + y^4 - 2 x^2 + 2 y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, j, c)) in terms.into_iter().enumerate() {
            let sign = if c < 0.0 { "-" } else { "+" };
            if k == 0 {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let mut parts = Vec::new();
            if mag != 1.0 || (i == 0 && j == 0) {
                parts.push(format!("{mag}"));
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Term {
    x: usize,
    y: usize,
    coefficient: f64,
}

impl Serialize for CoefficientTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            foci: usize,
            degree: usize,
            terms: Vec<Term>,
        }
        Repr {
            foci: self.n,
            degree: self.total_degree(),
            terms: self
                .terms()
                .map(|(x, y, coefficient)| Term { x, y, coefficient })
                .collect(),
        }
        .serialize(serializer)
    }
}
