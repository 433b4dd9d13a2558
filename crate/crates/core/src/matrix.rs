//! Square matrices of Laurent polynomials and their exact determinants.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{exact_div, Alphabet, LaurentPoly};
use crate::util::permutations_with_sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetMethod {
    Leibniz,
    Bareiss,
    /// Leibniz up to size 4, Bareiss above.
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    alpha: Alphabet,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    /// Builds an `n x n` matrix from `f(i, j)` with 0-based indices.
    pub fn from_fn<F>(n: usize, alpha: &Alphabet, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Result<LaurentPoly> + Sync + Send,
    {
        let entries: Vec<LaurentPoly> =
            (0..n * n).into_par_iter().map(|k| f(k / n, k % n)).collect::<Result<_>>()?;
        Self::from_entries(n, alpha, entries)
    }

    pub fn from_entries(n: usize, alpha: &Alphabet, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Structure(format!("{} entries for a {n}x{n} matrix", entries.len())));
        }
        if let Some(bad) = entries.iter().find(|e| e.alphabet() != alpha) {
            return Err(Error::Alphabet(format!("entry over {:?}", bad.alphabet())));
        }
        Ok(PolyMatrix { n, alpha: alpha.clone(), entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alpha
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn det(&self, method: DetMethod) -> LaurentPoly {
        match method {
            DetMethod::Leibniz => self.det_leibniz(),
            DetMethod::Bareiss => self.det_bareiss(),
            DetMethod::Auto if self.n <= 5 => self.det_leibniz(),
            DetMethod::Auto => self.det_bareiss(),
        }
    }

    /// Sum over all permutations; the zero-size determinant is one.
    pub fn det_leibniz(&self) -> LaurentPoly {
        let n = self.n;
        let parts: Vec<LaurentPoly> = permutations_with_sign(n)
            .into_par_iter()
            .filter_map(|(sigma, sign)| {
                if sigma.iter().enumerate().any(|(i, &j)| self.get(i, j).is_zero()) {
                    return None;
                }
                let mut idx: Vec<usize> = (0..n).collect();
                // multiply the sparsest factors first
                idx.sort_by_key(|&i| self.get(i, sigma[i]).len());
                let mut prod = LaurentPoly::one(&self.alpha);
                for i in idx {
                    prod = &prod * self.get(i, sigma[i]);
                }
                Some(if sign < 0 { -prod } else { prod })
            })
            .collect();
        LaurentPoly::sum(&self.alpha, parts.iter())
    }

    /// Fraction-free Gaussian elimination with row pivoting.
    pub fn det_bareiss(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one(&self.alpha);
        }
        let mut m: Vec<Vec<LaurentPoly>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one(&self.alpha);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return LaurentPoly::zero(&self.alpha),
                }
            }
            let pivot = m[k][k].clone();
            let row_k = m[k].clone();
            let updates: Vec<Vec<LaurentPoly>> = (k + 1..n)
                .into_par_iter()
                .map(|i| {
                    (k + 1..n)
                        .map(|j| {
                            let t = &(&m[i][j] * &pivot) - &(&m[i][k] * &row_k[j]);
                            exact_div(&t, &prev).expect("Bareiss step is exact")
                        })
                        .collect()
                })
                .collect();
            for (off, row) in updates.into_iter().enumerate() {
                let i = k + 1 + off;
                for (off_j, v) in row.into_iter().enumerate() {
                    m[i][k + 1 + off_j] = v;
                }
            }
            prev = pivot;
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Applies a ring map to every entry.
    pub fn map<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&LaurentPoly) -> Result<LaurentPoly> + Sync + Send,
    {
        let entries: Vec<LaurentPoly> = self.entries.par_iter().map(f).collect::<Result<_>>()?;
        let alpha = entries.first().map(|e| e.alphabet().clone()).unwrap_or_else(|| self.alpha.clone());
        Self::from_entries(self.n, &alpha, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Std;
    use crate::util::unrefined_matrix;
    use num_bigint::BigInt;

    #[test]
    fn small_cases() {
        let s = Std::new(2);
        let m0 = PolyMatrix::from_entries(0, &s.alpha, vec![]).unwrap();
        assert_eq!(m0.det(DetMethod::Leibniz), s.one());
        assert_eq!(m0.det(DetMethod::Bareiss), s.one());
        let f = s.free(1);
        let m1 = PolyMatrix::from_entries(1, &s.alpha, vec![f.clone()]).unwrap();
        assert_eq!(m1.det(DetMethod::Bareiss), f);
        let (a, b, c, d) = (s.u(), s.v(), s.w(), s.x(1, -1));
        let m2 = PolyMatrix::from_entries(2, &s.alpha, vec![a.clone(), b.clone(), c.clone(), d.clone()]).unwrap();
        let want = &(&a * &d) - &(&b * &c);
        assert_eq!(m2.det(DetMethod::Leibniz), want);
        assert_eq!(m2.det(DetMethod::Bareiss), want);
    }

    #[test]
    fn unrefined_five() {
        let s = Std::new(0);
        let rows = unrefined_matrix(5);
        let m = PolyMatrix::from_fn(5, &s.alpha, |i, j| Ok(LaurentPoly::constant(&s.alpha, rows[i][j].clone()))).unwrap();
        let want = LaurentPoly::constant(&s.alpha, BigInt::from(45885));
        assert_eq!(m.det(DetMethod::Bareiss), want);
        assert_eq!(m.det(DetMethod::Leibniz), want);
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let s = Std::new(1);
        let z = s.zero();
        let x = s.x(1, 1);
        let entries = vec![z.clone(), x.clone(), z.clone(), x.clone(), z.clone(), z.clone(), z.clone(), z.clone(), s.u()];
        let m = PolyMatrix::from_entries(3, &s.alpha, entries).unwrap();
        let want = -(&(&x * &x) * &s.u());
        assert_eq!(m.det(DetMethod::Bareiss), want);
        assert_eq!(m.det(DetMethod::Leibniz), want);
    }
}
