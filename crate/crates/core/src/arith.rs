//! Euler's totient and the clique number of power graphs of cyclic groups.

use num_rational::Ratio;
use serde::Serialize;

use crate::algebra::builders::cyclic;
use crate::algebra_graphs::{build_graph, GraphKind};
use crate::classes::clique_number;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Largest `n` accepted by [`power_clique_cyclic`].
pub const MAX_CYCLIC_CLIQUE: usize = 300;

pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::input("euler_phi is undefined at 0"));
    }
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    Ok(phi)
}

/// Clique number of the power graph of the cyclic group of order `n`,
/// computed from the graph itself.
pub fn power_clique_cyclic(n: usize, limits: &Limits) -> Result<usize> {
    if n > MAX_CYCLIC_CLIQUE {
        return Err(Error::resource("cyclic power graph clique order", MAX_CYCLIC_CLIQUE));
    }
    let g = build_graph(&cyclic(n)?, GraphKind::Power, limits)?;
    let limits = Limits {
        max_clique: limits.max_clique.max(MAX_CYCLIC_CLIQUE),
        ..limits.clone()
    };
    clique_number(&g, &limits)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueRatioRow {
    pub n: u64,
    pub phi: u64,
    pub f: u64,
    #[serde(serialize_with = "ratio_text")]
    pub ratio: Ratio<u64>,
}

fn ratio_text<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl CliqueRatioRow {
    pub fn new(n: usize, limits: &Limits) -> Result<Self> {
        let phi = euler_phi(n as u64)?;
        let f = power_clique_cyclic(n, limits)? as u64;
        Ok(CliqueRatioRow {
            n: n as u64,
            phi,
            f,
            ratio: Ratio::new(f, phi),
        })
    }

    pub fn ratio_f64(&self) -> f64 {
        *self.ratio.numer() as f64 / *self.ratio.denom() as f64
    }
}

/// Rows for `n = 1..=max_n`.
pub fn clique_ratio_table(max_n: usize, limits: &Limits) -> Result<Vec<CliqueRatioRow>> {
    use rayon::prelude::*;
    (1..=max_n).into_par_iter().map(|n| CliqueRatioRow::new(n, limits)).collect()
}

/// The row with the largest `f(n)/φ(n)`, earliest on ties.
pub fn max_ratio(rows: &[CliqueRatioRow]) -> Option<&CliqueRatioRow> {
    rows.iter().fold(None, |best: Option<&CliqueRatioRow>, r| match best {
        Some(b) if b.ratio >= r.ratio => Some(b),
        _ => Some(r),
    })
}

/// CSV with header `n,phi,f,ratio`; the ratio is written as a reduced
/// fraction.
pub fn ratio_csv(rows: &[CliqueRatioRow]) -> String {
    let mut s = String::from("n,phi,f,ratio\n");
    for r in rows {
        s.push_str(&format!("{},{},{},{}\n", r.n, r.phi, r.f, r.ratio));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(6).unwrap(), 2);
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(euler_phi(97).unwrap(), 96);
        assert!(euler_phi(0).is_err());
        for n in 1..200u64 {
            let direct = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n).unwrap(), direct);
        }
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn clique_values() {
        let l = Limits::default();
        assert_eq!(power_clique_cyclic(1, &l).unwrap(), 1);
        assert_eq!(power_clique_cyclic(6, &l).unwrap(), 5);
        assert_eq!(power_clique_cyclic(7, &l).unwrap(), 7);
        assert!(matches!(power_clique_cyclic(301, &l), Err(Error::Resource { .. })));
    }

    #[test]
    fn csv_and_max() {
        let rows = clique_ratio_table(6, &Limits::default()).unwrap();
        assert_eq!(
            ratio_csv(&rows),
            "n,phi,f,ratio\n1,1,1,1\n2,1,2,2\n3,2,3,3/2\n4,2,4,2\n5,4,5,5/4\n6,2,5,5/2\n"
        );
        assert_eq!(max_ratio(&rows).unwrap().n, 6);
    }
}
