use super::params::Params;
use super::{EntryMismatch, Triangle};
use crate::ring::Scalar;
use crate::Verdict;

/// The tridiagonal matrix `J` with `T-bar = T J`, where `T-bar` is the
/// triangle with its first row removed.
///
/// `J[n][n+1] = r_n = b1 n + b1 + b2`,
/// `J[n][n]   = s_n = (2 lam b1 + a1) n + a2 + lam (b1 + b2)`,
/// `J[n][n-1] = t_n = lam (a1 + lam b1) n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductionMatrix {
    pub r: Vec<Scalar>,
    pub s: Vec<Scalar>,
    pub t: Vec<Scalar>,
}

/// Bands for indices `0..size`.
pub fn production_matrix(params: &Params, size: usize) -> ProductionMatrix {
    let p = params;
    let lam_b1 = &p.lam * &p.b1;
    let s_slope = &(&lam_b1 * &Scalar::int(2)) + &p.a1;
    let s_base = &p.a2 + &(&p.lam * &(&p.b1 + &p.b2));
    let t_slope = &p.lam * &(&p.a1 + &lam_b1);
    let mut band = ProductionMatrix { r: Vec::new(), s: Vec::new(), t: Vec::new() };
    for n in 0..size {
        let n_s = Scalar::int(n as i64);
        band.r.push(&(&(&p.b1 * &n_s) + &p.b1) + &p.b2);
        band.s.push(&(&s_slope * &n_s) + &s_base);
        band.t.push(&t_slope * &n_s);
    }
    band
}

impl ProductionMatrix {
    pub fn size(&self) -> usize {
        self.s.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        if i == j {
            self.s[i].clone()
        } else if j == i + 1 {
            self.r[i].clone()
        } else if i == j + 1 {
            self.t[i].clone()
        } else {
            Scalar::zero()
        }
    }
}

/// Checks row `n+1` of `tri` against `(row n) * J` for every stored `n`.
pub fn verify_production(tri: &Triangle) -> Verdict<EntryMismatch> {
    let size = tri.max_row() + 1;
    let j = production_matrix(tri.params(), size);
    for n in 0..tri.max_row() {
        let row = tri.row(n);
        for k in 0..size {
            let mut acc = tri.params().zero();
            for (i, x) in row.iter().enumerate() {
                let jk = j.entry(i, k);
                if !jk.is_zero() {
                    acc = &acc + &(x * &jk);
                }
            }
            let stored = tri.entry(n + 1, k);
            if acc != stored {
                return Verdict::Fail(EntryMismatch { n: n + 1, k, expected: acc, got: stored });
            }
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::{build_triangle, SpecializationId};

    #[test]
    fn stirling_bands() {
        let j = production_matrix(&SpecializationId::Stirling2.params(), 6);
        for n in 0..6 {
            assert_eq!(j.r[n], Scalar::int(1));
            assert_eq!(j.s[n], Scalar::int(n as i64));
            assert!(j.t[n].is_zero());
        }
        let tri = build_triangle(&SpecializationId::Stirling2.params(), 8);
        assert!(verify_production(&tri).is_pass());
    }

    #[test]
    fn zero_lambda_kills_subdiagonal() {
        let p = Params::new([
            super::super::Binding::Free,
            super::super::Binding::Free,
            super::super::Binding::Free,
            super::super::Binding::Free,
            0.into(),
        ]);
        let j = production_matrix(&p, 5);
        assert!(j.t.iter().all(Scalar::is_zero));
    }

    #[test]
    fn symbolic_production_identity() {
        let tri = build_triangle(&Params::symbolic(), 5);
        assert!(verify_production(&tri).is_pass());
    }
}
