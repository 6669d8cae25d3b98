//! Finite universal algebras given by explicit operation tables.
//!
//! An algebra is a carrier `0..n` together with a list of named operations
//! of arbitrary arity. Everything else in the crate (graphs, digraphs,
//! complexes) is derived from the closure operator implemented here.

use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub mod builders;
mod endo;
mod io;
mod lattice;
mod props;

pub use builders::BuilderSpec;
pub use endo::{enumerate_endomorphisms, exhaustive_endomorphisms, Endomorphism};
pub use lattice::{
    for_each_independent, generating_sets, is_independent, lattice_with_ranks,
    minimum_generating_set, rank_of, subalgebra_lattice, GeneratingMode,
};
pub use props::{
    check_property, group_signature, GroupSignature, Property, PropertyVerdict, PropertyWitness,
};

/// A set of element indices of one algebra.
pub type ElemSet = FixedBitSet;

/// Builds an [`ElemSet`] over a carrier of size `n`.
pub fn elem_set(n: usize, members: impl IntoIterator<Item = usize>) -> ElemSet {
    let mut s = FixedBitSet::with_capacity(n);
    for m in members {
        s.insert(m);
    }
    s
}

/// Sorted member list of a set.
pub fn members(set: &ElemSet) -> Vec<usize> {
    set.ones().collect()
}

/// A finitary operation stored as a dense row-major table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Operation {
    pub name: String,
    pub arity: usize,
    pub table: Vec<usize>,
}

impl Operation {
    pub fn new(name: impl Into<String>, arity: usize, table: Vec<usize>) -> Self {
        Operation {
            name: name.into(),
            arity,
            table,
        }
    }

    pub fn nullary(name: impl Into<String>, value: usize) -> Self {
        Operation::new(name, 0, vec![value])
    }

    /// Evaluates the operation; `args.len()` must equal the arity.
    pub fn apply(&self, n: usize, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        let idx = args.iter().fold(0usize, |acc, &a| acc * n + a);
        self.table[idx]
    }

    /// The value of a nullary operation.
    pub fn constant(&self) -> Option<usize> {
        (self.arity == 0).then(|| self.table[0])
    }
}

/// A finite algebra: a carrier with named operations of various arities.
///
/// Immutable after construction. The monogenic subalgebras `<x>` and the
/// minimal subalgebra `E(A)` are computed lazily and cached.
#[derive(Debug, Clone)]
pub struct FiniteAlgebra {
    name: String,
    elements: Vec<String>,
    operations: Vec<Operation>,
    constants: OnceLock<ElemSet>,
    monogenic: OnceLock<Vec<ElemSet>>,
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.elements == other.elements
            && self.operations == other.operations
    }
}

impl Eq for FiniteAlgebra {}

impl FiniteAlgebra {
    /// Validates and builds an algebra. Element names default to `"0".."n-1"`.
    pub fn new(
        name: impl Into<String>,
        size: usize,
        elements: Option<Vec<String>>,
        operations: Vec<Operation>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::input("algebra size must be at least 1"));
        }
        let elements = match elements {
            Some(e) => {
                if e.len() != size {
                    return Err(Error::input(format!(
                        "elements: expected {size} names, found {}",
                        e.len()
                    )));
                }
                let mut sorted: Vec<&String> = e.iter().collect();
                sorted.sort();
                if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                    return Err(Error::input(format!("elements: duplicate name {:?}", w[0])));
                }
                e
            }
            None => (0..size).map(|i| i.to_string()).collect(),
        };
        for (i, op) in operations.iter().enumerate() {
            if operations[..i].iter().any(|o| o.name == op.name) {
                return Err(Error::input(format!(
                    "operations[{i}].name: duplicate operation name {:?}",
                    op.name
                )));
            }
            let expected = u32::try_from(op.arity)
                .ok()
                .and_then(|k| size.checked_pow(k))
                .ok_or_else(|| {
                    Error::input(format!("operations[{i}].arity: table too large"))
                })?;
            if op.table.len() != expected {
                return Err(Error::input(format!(
                    "operations[{i}].table: expected {expected} entries, found {}",
                    op.table.len()
                )));
            }
            if let Some(j) = op.table.iter().position(|&v| v >= size) {
                return Err(Error::input(format!(
                    "operations[{i}].table[{j}]: index {} out of range 0..{size}",
                    op.table[j]
                )));
            }
        }
        Ok(FiniteAlgebra {
            name: name.into(),
            elements,
            operations,
            constants: OnceLock::new(),
            monogenic: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, x: usize) -> &str {
        &self.elements[x]
    }

    pub fn operations(&self) -> &[Operation] {
        &self.operations
    }

    pub fn operation(&self, name: &str) -> Option<&Operation> {
        self.operations.iter().find(|o| o.name == name)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    /// Same algebra under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let mut a = self.clone();
        a.name = name.into();
        a
    }

    pub fn empty_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.size())
    }

    pub fn full_set(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    fn check_indices(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&x| x >= self.size()) {
            Some(x) => Err(Error::input(format!(
                "element index {x} out of range 0..{}",
                self.size()
            ))),
            None => Ok(()),
        }
    }

    /// `<S>`: the least subset containing `S` closed under every operation.
    pub fn closure(&self, s: &[usize]) -> Result<SubalgebraSet> {
        self.check_indices(s)?;
        Ok(SubalgebraSet::new(self.close(s.iter().copied())))
    }

    /// Closure of an arbitrary seed, without validation.
    pub fn close(&self, seed: impl IntoIterator<Item = usize>) -> ElemSet {
        let mut set = self.empty_set();
        let mut order = Vec::new();
        for op in &self.operations {
            if let Some(c) = op.constant() {
                if !set.put(c) {
                    order.push(c);
                }
            }
        }
        for x in seed {
            if !set.put(x) {
                order.push(x);
            }
        }
        self.saturate(&mut set, &mut order, 0);
        set
    }

    /// Closure of `closed ∪ extra`, where `closed` is already a subalgebra.
    ///
    /// Only tuples involving a new element are evaluated.
    pub fn close_extending(
        &self,
        closed: &ElemSet,
        extra: impl IntoIterator<Item = usize>,
    ) -> ElemSet {
        let mut set = closed.clone();
        let mut order: Vec<usize> = closed.ones().collect();
        let start = order.len();
        for x in extra {
            if !set.put(x) {
                order.push(x);
            }
        }
        if order.len() == start {
            return set;
        }
        self.saturate(&mut set, &mut order, start);
        set
    }

    // Semi-naive fixpoint: at step i only tuples over order[..=i] that use
    // order[i] at least once are evaluated.
    fn saturate(&self, set: &mut ElemSet, order: &mut Vec<usize>, start: usize) {
        let n = self.size();
        let mut args = Vec::new();
        let mut i = start;
        while i < order.len() {
            let x = order[i];
            for op in &self.operations {
                match op.arity {
                    0 => {}
                    1 => {
                        let y = op.table[x];
                        if !set.put(y) {
                            order.push(y);
                        }
                    }
                    2 => {
                        for j in 0..=i {
                            let z = order[j];
                            for y in [op.table[x * n + z], op.table[z * n + x]] {
                                if !set.put(y) {
                                    order.push(y);
                                }
                            }
                        }
                    }
                    k => {
                        // odometer over (i+1)^k tuples, keeping those that use index i
                        let width = i + 1;
                        let mut idx = vec![0usize; k];
                        loop {
                            if idx.contains(&i) {
                                args.clear();
                                args.extend(idx.iter().map(|&t| order[t]));
                                let y = op.apply(n, &args);
                                if !set.put(y) {
                                    order.push(y);
                                }
                            }
                            let mut p = k;
                            loop {
                                if p == 0 {
                                    break;
                                }
                                p -= 1;
                                idx[p] += 1;
                                if idx[p] < width {
                                    break;
                                }
                                idx[p] = 0;
                            }
                            if idx.iter().all(|&t| t == 0) {
                                break;
                            }
                        }
                    }
                }
            }
            i += 1;
        }
    }

    /// `E(A)`: the subalgebra generated by the constants.
    pub fn minimal_subalgebra(&self) -> &ElemSet {
        self.constants.get_or_init(|| self.close(std::iter::empty()))
    }

    /// `<x>` for every element `x`, indexed by element.
    pub fn monogenic(&self) -> &[ElemSet] {
        self.monogenic.get_or_init(|| {
            let e = self.minimal_subalgebra();
            (0..self.size())
                .map(|x| self.close_extending(e, [x]))
                .collect()
        })
    }

    /// `<x>` for one element.
    pub fn generated_by(&self, x: usize) -> &ElemSet {
        &self.monogenic()[x]
    }

    /// True when `set` is closed under every operation.
    pub fn is_closed(&self, set: &ElemSet) -> bool {
        self.close(set.ones()) == *set
    }

    /// Index of the unique binary operation, if there is exactly one.
    pub fn sole_binary(&self) -> Option<usize> {
        let mut it = self
            .operations
            .iter()
            .enumerate()
            .filter(|(_, o)| o.arity == 2);
        match (it.next(), it.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    /// `x^k` under the unique binary operation (k ≥ 1).
    pub fn power(&self, x: usize, k: usize) -> Option<usize> {
        let op = &self.operations[self.sole_binary()?];
        let n = self.size();
        let mut acc = x;
        for _ in 1..k {
            acc = op.table[acc * n + x];
        }
        Some(acc)
    }

    pub fn labels_of(&self, set: &ElemSet) -> Vec<String> {
        set.ones().map(|i| self.elements[i].clone()).collect()
    }
}

/// A closed subset of an algebra, optionally tagged with its rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubalgebraSet {
    pub members: ElemSet,
    pub rank: Option<usize>,
}

impl SubalgebraSet {
    pub fn new(members: ElemSet) -> Self {
        SubalgebraSet {
            members,
            rank: None,
        }
    }

    pub fn with_rank(members: ElemSet, rank: usize) -> Self {
        SubalgebraSet {
            members,
            rank: Some(rank),
        }
    }

    pub fn elements(&self) -> Vec<usize> {
        members(&self.members)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }
}
