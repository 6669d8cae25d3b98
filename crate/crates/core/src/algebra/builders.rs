//! Builders for the algebra families used throughout the crate.
//!
//! Groups carry the signature `(mul, inv, e)`: one binary, one unary and one
//! nullary operation. Semigroups carry only `mul`. The unary quasigroup
//! construction carries one unary operation per element and nothing else.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{FiniteAlgebra, Operation};
use crate::error::{Error, Result};

/// Largest carrier any builder will produce.
pub const MAX_ORDER: usize = 512;

/// A description of an algebra to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuilderSpec {
    /// Cyclic group of order `n`, written additively on `0..n`.
    Cyclic(usize),
    /// Dihedral group of order `n` (`n` even).
    Dihedral(usize),
    /// Symmetric group on `n ≤ 5` points.
    Symmetric(usize),
    /// Alternating group on `n ≤ 5` points.
    Alternating(usize),
    Quaternion8,
    ElementaryAbelian { p: usize, k: usize },
    DirectProduct(Vec<BuilderSpec>),
    /// Semigroup generated by `x` with `x^(index+period) = x^index`.
    MonogenicSemigroup { index: usize, period: usize },
    /// The three-element semigroup `{a, b, e}` amalgamating a 2-element
    /// group and a 2-element null semigroup over `e`.
    VolkovSemigroup,
    /// Right multiplications of the Latin square given by the first
    /// binary operation of the inner algebra, as unary operations.
    QuasigroupUnary(Box<BuilderSpec>),
    FromFile(PathBuf),
}

impl BuilderSpec {
    pub fn build(&self) -> Result<FiniteAlgebra> {
        match self {
            BuilderSpec::Cyclic(n) => cyclic(*n),
            BuilderSpec::Dihedral(n) => dihedral(*n),
            BuilderSpec::Symmetric(n) => symmetric(*n, false),
            BuilderSpec::Alternating(n) => symmetric(*n, true),
            BuilderSpec::Quaternion8 => quaternion8(),
            BuilderSpec::ElementaryAbelian { p, k } => elementary_abelian(*p, *k),
            BuilderSpec::DirectProduct(parts) => {
                let built = parts.iter().map(|p| p.build()).collect::<Result<Vec<_>>>()?;
                direct_product(&built)
            }
            BuilderSpec::MonogenicSemigroup { index, period } => {
                monogenic_semigroup(*index, *period)
            }
            BuilderSpec::VolkovSemigroup => Ok(volkov_semigroup()),
            BuilderSpec::QuasigroupUnary(inner) => {
                let base = inner.build()?;
                let op = base
                    .operations()
                    .iter()
                    .find(|o| o.arity == 2)
                    .ok_or_else(|| {
                        Error::input(format!("{} has no binary operation", base.name()))
                    })?;
                let n = base.size();
                let square: Vec<Vec<usize>> =
                    op.table.chunks(n).map(|row| row.to_vec()).collect();
                quasigroup_unary(
                    format!("Q1({})", base.name()),
                    &square,
                    Some(base.element_names().to_vec()),
                )
            }
            BuilderSpec::FromFile(path) => FiniteAlgebra::from_file(path),
        }
    }
}

impl FromStr for BuilderSpec {
    type Err = Error;

    /// Parses builder strings such as `cyclic:6`, `product:cyclic:2,cyclic:2`,
    /// `monosg:4:1`, `volkov`, `quasiunary:file:sq.json` or `file:a.json`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (s, None),
        };
        let num = |t: &str| -> Result<usize> {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::input(format!("bad number {t:?} in algebra spec {s:?}")))
        };
        let one = |r: Option<&str>| -> Result<usize> {
            num(r.ok_or_else(|| Error::input(format!("algebra spec {s:?} needs a size")))?)
        };
        let two = |r: Option<&str>| -> Result<(usize, usize)> {
            let r = r.ok_or_else(|| Error::input(format!("algebra spec {s:?} needs two numbers")))?;
            let (a, b) = r
                .split_once(':')
                .ok_or_else(|| Error::input(format!("algebra spec {s:?} needs two numbers")))?;
            Ok((num(a)?, num(b)?))
        };
        let spec = match head {
            "cyclic" => BuilderSpec::Cyclic(one(rest)?),
            "dihedral" => BuilderSpec::Dihedral(one(rest)?),
            "symmetric" => BuilderSpec::Symmetric(one(rest)?),
            "alternating" => BuilderSpec::Alternating(one(rest)?),
            "quaternion8" | "q8" => BuilderSpec::Quaternion8,
            "elemab" => {
                let (p, k) = two(rest)?;
                BuilderSpec::ElementaryAbelian { p, k }
            }
            "monosg" => {
                let (index, period) = two(rest)?;
                BuilderSpec::MonogenicSemigroup { index, period }
            }
            "volkov" => BuilderSpec::VolkovSemigroup,
            "product" => {
                let r = rest.ok_or_else(|| Error::input("product needs factors"))?;
                BuilderSpec::DirectProduct(
                    r.split(',').map(BuilderSpec::from_str).collect::<Result<_>>()?,
                )
            }
            "quasiunary" => {
                let r = rest.ok_or_else(|| Error::input("quasiunary needs a table source"))?;
                BuilderSpec::QuasigroupUnary(Box::new(r.parse()?))
            }
            "file" => BuilderSpec::FromFile(PathBuf::from(
                rest.ok_or_else(|| Error::input("file: needs a path"))?,
            )),
            other => return Err(Error::input(format!("unknown algebra builder {other:?}"))),
        };
        if rest.is_some() && matches!(spec, BuilderSpec::Quaternion8 | BuilderSpec::VolkovSemigroup)
        {
            return Err(Error::input(format!("algebra spec {s:?} takes no arguments")));
        }
        Ok(spec)
    }
}

impl fmt::Display for BuilderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuilderSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            BuilderSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            BuilderSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            BuilderSpec::Alternating(n) => write!(f, "alternating:{n}"),
            BuilderSpec::Quaternion8 => write!(f, "quaternion8"),
            BuilderSpec::ElementaryAbelian { p, k } => write!(f, "elemab:{p}:{k}"),
            BuilderSpec::DirectProduct(parts) => {
                write!(f, "product:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            BuilderSpec::MonogenicSemigroup { index, period } => {
                write!(f, "monosg:{index}:{period}")
            }
            BuilderSpec::VolkovSemigroup => write!(f, "volkov"),
            BuilderSpec::QuasigroupUnary(inner) => write!(f, "quasiunary:{inner}"),
            BuilderSpec::FromFile(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn check_order(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::input(format!("{what}: order must be positive")));
    }
    if n > MAX_ORDER {
        return Err(Error::resource(format!("{what} of order {n}"), MAX_ORDER));
    }
    Ok(())
}

/// Builds a group from its multiplication table, deriving the inverse table.
pub fn group_from_table(
    name: impl Into<String>,
    labels: Vec<String>,
    mul: Vec<usize>,
    identity: usize,
) -> Result<FiniteAlgebra> {
    let n = labels.len();
    let mut inv = vec![usize::MAX; n];
    for x in 0..n {
        inv[x] = (0..n)
            .find(|&y| mul[x * n + y] == identity)
            .ok_or_else(|| Error::input(format!("element {} has no inverse", labels[x])))?;
    }
    FiniteAlgebra::new(
        name,
        n,
        Some(labels),
        vec![
            Operation::new("mul", 2, mul),
            Operation::new("inv", 1, inv),
            Operation::nullary("e", identity),
        ],
    )
}

pub fn cyclic(n: usize) -> Result<FiniteAlgebra> {
    check_order(n, "cyclic group")?;
    let mul = (0..n * n).map(|t| (t / n + t % n) % n).collect();
    group_from_table(format!("C{n}"), (0..n).map(|i| i.to_string()).collect(), mul, 0)
}

/// Dihedral group of order `n = 2m`; element `r^i s^j` has index `i + m j`.
pub fn dihedral(n: usize) -> Result<FiniteAlgebra> {
    check_order(n, "dihedral group")?;
    if !n.is_multiple_of(2) {
        return Err(Error::input(format!("dihedral group order {n} must be even")));
    }
    let m = n / 2;
    let label = |i: usize, j: usize| {
        let r = match i {
            0 => String::new(),
            1 => "r".to_string(),
            _ => format!("r^{i}"),
        };
        let s = if j == 1 { "s" } else { "" };
        if i == 0 && j == 0 {
            "e".to_string()
        } else {
            format!("{r}{s}")
        }
    };
    let labels = (0..n).map(|t| label(t % m, t / m)).collect();
    let mut mul = vec![0; n * n];
    for x in 0..n {
        let (a, b) = (x % m, x / m);
        for y in 0..n {
            let (c, d) = (y % m, y / m);
            // r^a s^b r^c s^d = r^(a ± c) s^(b+d)
            let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
            mul[x * n + y] = rot + m * ((b + d) % 2);
        }
    }
    group_from_table(format!("D{n}"), labels, mul, 0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// Symmetric (or alternating) group on `n ≤ 5` points. Permutations are
/// listed lexicographically and composed left to right: `(pq)(x) = q(p(x))`.
pub fn symmetric(n: usize, even_only: bool) -> Result<FiniteAlgebra> {
    let what = if even_only { "alternating group" } else { "symmetric group" };
    if n == 0 {
        return Err(Error::input(format!("{what}: degree must be positive")));
    }
    if n > 5 {
        return Err(Error::resource(format!("{what} of degree {n}"), 5));
    }
    let perms: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    let size = perms.len();
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
    let mut mul = vec![0; size * size];
    for (x, p) in perms.iter().enumerate() {
        for (y, q) in perms.iter().enumerate() {
            let comp: Vec<usize> = (0..n).map(|i| q[p[i]]).collect();
            mul[x * size + y] = index(&comp);
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    let name = if even_only { format!("A{n}") } else { format!("S{n}") };
    group_from_table(name, labels, mul, 0)
}

pub fn quaternion8() -> Result<FiniteAlgebra> {
    // units 1,i,j,k as 0..4; element index = 2*unit + sign
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|t| {
            let u = names[t / 2];
            if t % 2 == 1 {
                format!("-{u}")
            } else {
                u.to_string()
            }
        })
        .collect();
    let mut mul = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (u, neg) = UNIT[x / 2][y / 2];
            let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
            mul[x * 8 + y] = 2 * u + usize::from(sign);
        }
    }
    group_from_table("Q8", labels, mul, 0)
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn elementary_abelian(p: usize, k: usize) -> Result<FiniteAlgebra> {
    if !is_prime(p) {
        return Err(Error::input(format!("elementary abelian: {p} is not prime")));
    }
    if k == 0 {
        return Err(Error::input("elementary abelian: rank must be positive"));
    }
    let order = u32::try_from(k).ok().and_then(|k| p.checked_pow(k));
    match order {
        Some(o) if o <= MAX_ORDER => {}
        _ => return Err(Error::resource(format!("elementary abelian {p}^{k}"), MAX_ORDER)),
    }
    if k == 1 {
        return cyclic(p);
    }
    let factor = cyclic(p)?;
    let parts = vec![factor; k];
    Ok(direct_product(&parts)?.renamed(format!("C{p}^{k}")))
}

/// Direct product of algebras with identical signatures (same operation
/// names and arities in the same order). Elements are tuples, first factor
/// most significant.
pub fn direct_product(parts: &[FiniteAlgebra]) -> Result<FiniteAlgebra> {
    let first = parts
        .first()
        .ok_or_else(|| Error::input("direct product needs at least one factor"))?;
    for p in &parts[1..] {
        let same = p.operations().len() == first.operations().len()
            && p
                .operations()
                .iter()
                .zip(first.operations())
                .all(|(a, b)| a.name == b.name && a.arity == b.arity);
        if !same {
            return Err(Error::input(format!(
                "direct product: signatures of {} and {} differ",
                first.name(),
                p.name()
            )));
        }
    }
    let sizes: Vec<usize> = parts.iter().map(|p| p.size()).collect();
    let n = sizes
        .iter()
        .try_fold(1usize, |acc, &s| acc.checked_mul(s).filter(|&t| t <= MAX_ORDER))
        .ok_or_else(|| Error::resource("direct product order", MAX_ORDER))?;
    let split = |mut x: usize| -> Vec<usize> {
        let mut coords = vec![0; sizes.len()];
        for i in (0..sizes.len()).rev() {
            coords[i] = x % sizes[i];
            x /= sizes[i];
        }
        coords
    };
    let join = |coords: &[usize]| coords.iter().zip(&sizes).fold(0, |acc, (&c, &s)| acc * s + c);
    let coords: Vec<Vec<usize>> = (0..n).map(split).collect();
    let labels = coords
        .iter()
        .map(|c| {
            let inner: Vec<&str> = c.iter().zip(parts).map(|(&x, p)| p.label(x)).collect();
            format!("({})", inner.join(","))
        })
        .collect();
    let mut ops = Vec::new();
    for (oi, op) in first.operations().iter().enumerate() {
        let k = op.arity;
        let len = n.pow(k as u32);
        let mut table = Vec::with_capacity(len);
        let mut args = vec![0usize; k];
        let mut comp_args = vec![0usize; k];
        for t in 0..len {
            let mut r = t;
            for a in args.iter_mut().rev() {
                *a = r % n;
                r /= n;
            }
            let mut out = vec![0; parts.len()];
            for (f, part) in parts.iter().enumerate() {
                for (ca, &a) in comp_args.iter_mut().zip(&args) {
                    *ca = coords[a][f];
                }
                out[f] = part.operations()[oi].apply(part.size(), &comp_args);
            }
            table.push(join(&out));
        }
        ops.push(Operation::new(op.name.clone(), k, table));
    }
    let name = parts.iter().map(|p| p.name()).collect::<Vec<_>>().join("x");
    FiniteAlgebra::new(name, n, Some(labels), ops)
}

pub fn monogenic_semigroup(index: usize, period: usize) -> Result<FiniteAlgebra> {
    if index == 0 || period == 0 {
        return Err(Error::input("monogenic semigroup: index and period must be positive"));
    }
    let n = index + period - 1;
    check_order(n, "monogenic semigroup")?;
    // element t (0-based) is x^(t+1)
    let reduce = |e: usize| if e <= n { e } else { index + (e - index) % period };
    let mut mul = vec![0; n * n];
    for a in 1..=n {
        for b in 1..=n {
            mul[(a - 1) * n + (b - 1)] = reduce(a + b) - 1;
        }
    }
    let labels = (1..=n).map(|i| format!("x^{i}")).collect();
    FiniteAlgebra::new(
        format!("monosg({index},{period})"),
        n,
        Some(labels),
        vec![Operation::new("mul", 2, mul)],
    )
}

pub fn volkov_semigroup() -> FiniteAlgebra {
    // rows/columns a, b, e
    let mul = vec![
        2, 1, 2, //
        1, 2, 1, //
        2, 1, 2,
    ];
    FiniteAlgebra::new(
        "volkov",
        3,
        Some(vec!["a".into(), "b".into(), "e".into()]),
        vec![Operation::new("mul", 2, mul)],
    )
    .expect("fixed table is valid")
}

/// True when every row and every column of `square` is a permutation.
pub fn is_latin_square(square: &[Vec<usize>]) -> bool {
    let n = square.len();
    fn perm(n: usize, mut it: impl Iterator<Item = usize>) -> bool {
        let mut seen = vec![false; n];
        it.all(|v| v < n && !std::mem::replace(&mut seen[v], true))
    }
    square.iter().all(|r| r.len() == n)
        && square.iter().all(|r| perm(n, r.iter().copied()))
        && (0..n).all(|c| perm(n, square.iter().map(|r| r[c])))
}

/// The algebra `Q^(1)` on a quasigroup `Q`: one unary operation
/// `rho_a : x ↦ x·a` per element `a`, no other operations.
pub fn quasigroup_unary(
    name: impl Into<String>,
    square: &[Vec<usize>],
    labels: Option<Vec<String>>,
) -> Result<FiniteAlgebra> {
    let n = square.len();
    check_order(n, "quasigroup")?;
    if !is_latin_square(square) {
        return Err(Error::input("quasigroup table is not a Latin square"));
    }
    let ops = (0..n)
        .map(|a| Operation::new(format!("rho_{a}"), 1, (0..n).map(|x| square[x][a]).collect()))
        .collect();
    FiniteAlgebra::new(name, n, labels, ops)
}
