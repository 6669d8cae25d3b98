//! Deterministic populations of small algebras for the verification suites.

use std::collections::BTreeSet;

use crate::algebra::builders::{
    cyclic, dihedral, direct_product, elementary_abelian, is_prime, monogenic_semigroup,
    quasigroup_unary, quaternion8, symmetric, volkov_semigroup,
};
use crate::algebra::{FiniteAlgebra, Operation};
use crate::error::{Error, Result};

/// Largest order accepted by [`group_catalog`].
pub const MAX_GROUP_ORDER: usize = 64;
/// Largest order for which every semigroup table is enumerated.
pub const MAX_SEMIGROUP_ORDER: usize = 3;

/// Groups of order at most `max_order`: every cyclic group, dihedral groups
/// of order 8 and up, every non-cyclic abelian group (as a product of
/// cyclic groups in invariant-factor form), `Q8`, `S3`, `A4` and `S4`.
/// Sorted by order, then name.
pub fn group_catalog(max_order: usize) -> Result<Vec<FiniteAlgebra>> {
    if max_order == 0 {
        return Err(Error::input("group catalog: max order must be positive"));
    }
    if max_order > MAX_GROUP_ORDER {
        return Err(Error::resource("group catalog order", MAX_GROUP_ORDER));
    }
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(cyclic(n)?);
    }
    // D6 is S3, which is added under its own name below.
    for n in (8..=max_order).step_by(2) {
        out.push(dihedral(n)?);
    }
    for factors in invariant_factor_lists(max_order) {
        let p = factors[0];
        if is_prime(p) && factors.iter().all(|&d| d == p) {
            out.push(elementary_abelian(p, factors.len())?);
        } else {
            let parts = factors.iter().map(|&d| cyclic(d)).collect::<Result<Vec<_>>>()?;
            out.push(direct_product(&parts)?);
        }
    }
    for (order, build) in [
        (6, (|| symmetric(3, false)) as fn() -> Result<FiniteAlgebra>),
        (8, quaternion8),
        (12, || symmetric(4, true)),
        (24, || symmetric(4, false)),
    ] {
        if order <= max_order {
            out.push(build()?);
        }
    }
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.name().cmp(b.name())));
    Ok(out)
}

/// Chains `d1 | d2 | … | dk` with `k ≥ 2`, `d1 ≥ 2` and product at most `max`.
fn invariant_factor_lists(max: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, product: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let last = *prefix.last().unwrap_or(&1);
        let mut d = last.max(2);
        while product * d <= max {
            if d.is_multiple_of(last) {
                prefix.push(d);
                rec(prefix, product * d, max, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), 1, max, &mut out);
    out
}

/// The alternating group of degree 5.
pub fn a5() -> Result<FiniteAlgebra> {
    symmetric(5, true)
}

/// Every semigroup with at most `max_order` elements, one per class under
/// isomorphism and anti-isomorphism, followed by the monogenic semigroups
/// with `index + period - 1 ≤ 6` and the Volkov semigroup.
pub fn semigroup_catalog(max_order: usize) -> Result<Vec<FiniteAlgebra>> {
    if max_order == 0 {
        return Err(Error::input("semigroup catalog: max order must be positive"));
    }
    if max_order > MAX_SEMIGROUP_ORDER {
        return Err(Error::resource("exhaustive semigroup order", MAX_SEMIGROUP_ORDER));
    }
    let mut out = Vec::new();
    for n in 1..=max_order {
        for (k, table) in semigroup_tables(n).into_iter().enumerate() {
            let labels = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
            out.push(FiniteAlgebra::new(
                format!("sgp{n}_{}", k + 1),
                n,
                Some(labels),
                vec![Operation::new("mul", 2, table)],
            )?);
        }
    }
    for index in 1..=6 {
        for period in 1..=7 - index {
            out.push(monogenic_semigroup(index, period)?);
        }
    }
    out.push(volkov_semigroup());
    Ok(out)
}

/// Associative tables on `n` elements, canonical under relabelling and
/// transposition, in increasing order of their canonical form.
pub fn semigroup_tables(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    let mut table = vec![0usize; cells];
    loop {
        if is_associative(n, &table) {
            classes.insert(canonical(n, &table, &perms));
        }
        let mut i = cells;
        loop {
            if i == 0 {
                return classes.into_iter().collect();
            }
            i -= 1;
            table[i] += 1;
            if table[i] < n {
                break;
            }
            table[i] = 0;
        }
    }
}

pub fn is_associative(n: usize, t: &[usize]) -> bool {
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]])))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(n: usize, t: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for transpose in [false, true] {
        for p in perms {
            let mut img = vec![0usize; n * n];
            for x in 0..n {
                for y in 0..n {
                    let v = if transpose { t[y * n + x] } else { t[x * n + y] };
                    img[p[x] * n + p[y]] = p[v];
                }
            }
            if best.as_ref().is_none_or(|b| img < *b) {
                best = Some(img);
            }
        }
    }
    best.expect("at least one permutation")
}

/// An algebra of the independence family with the verdict the
/// independence-algebra check is expected to return.
#[derive(Debug, Clone)]
pub struct IndependenceCase {
    pub algebra: FiniteAlgebra,
    pub expected: bool,
}

/// Elementary abelian groups `C_p^k` with `p ∈ {2, 3}` and order at most 27,
/// the unary quasigroup algebras over every catalog group of order at most
/// 4, and a unary quasigroup algebra over the non-associative Latin square
/// `(2x + 3y) mod 5`, which is not an independence algebra.
pub fn independence_family() -> Result<Vec<IndependenceCase>> {
    let mut out = Vec::new();
    for (p, k) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)] {
        out.push(IndependenceCase {
            algebra: elementary_abelian(p, k)?,
            expected: true,
        });
    }
    for g in group_catalog(4)? {
        let mul = g.operation("mul").expect("groups have mul");
        let n = g.size();
        let square: Vec<Vec<usize>> = mul.table.chunks(n).map(|r| r.to_vec()).collect();
        out.push(IndependenceCase {
            algebra: quasigroup_unary(format!("Q1({})", g.name()), &square, Some(g.element_names().to_vec()))?,
            expected: true,
        });
    }
    let square: Vec<Vec<usize>> = (0..5).map(|x| (0..5).map(|y| (2 * x + 3 * y) % 5).collect()).collect();
    out.push(IndependenceCase {
        algebra: quasigroup_unary("Q1(2x+3y mod 5)", &square, None)?,
        expected: false,
    });
    Ok(out)
}
