//! Signed Murnaghan–Nakayama restriction–induction diagrams for `(S_n, S_{n-j})`.
//!
//! Restriction removes a rim `j`-hook and induction adds one, each weighted by
//! `(-1)^{leg length}`. Restricting then inducing a virtual module tensors it
//! with `ρ_{ψ_j}`, the virtual representation whose character is `j·a_j`, so
//! walking `r` full levels from the trivial module `(n)` decomposes
//! `ρ_{ψ_j}^{⊗r}`. Only level decompositions are stored; edges are rebuilt on
//! demand for DOT output.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::abacus::inner_multiplicity;
use crate::characters::ClassFunctionDecomposition;
use crate::numbers::{binomial, stirling2_table};
use crate::{Error, Partition, Result};

pub use crate::numbers::stirling2;

/// Signed integer combination of irreducibles of `S_{level_size}`. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct VirtualDecomposition {
    level_size: usize,
    coefficients: BTreeMap<Partition, BigInt>,
}

impl VirtualDecomposition {
    pub fn new(level_size: usize) -> Self {
        VirtualDecomposition { level_size, coefficients: BTreeMap::new() }
    }

    /// The single irreducible `λ` with coefficient 1.
    pub fn irreducible(lambda: Partition) -> Self {
        let mut d = VirtualDecomposition::new(lambda.size());
        d.coefficients.insert(lambda, BigInt::one());
        d
    }

    pub fn from_terms<I>(level_size: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut d = VirtualDecomposition::new(level_size);
        for (p, c) in terms {
            d.add(p, c)?;
        }
        Ok(d)
    }

    pub fn level_size(&self) -> usize {
        self.level_size
    }

    pub fn add(&mut self, lambda: Partition, c: BigInt) -> Result<()> {
        if lambda.size() != self.level_size {
            return Err(Error::SizeMismatch { expected: self.level_size, actual: lambda.size() });
        }
        self.add_unchecked(lambda, c);
        Ok(())
    }

    fn add_unchecked(&mut self, lambda: Partition, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.coefficients.entry(lambda) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.coefficients.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Terms in descending partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coefficients.iter().rev()
    }

    /// Divides every coefficient by `scale`, giving a class-function decomposition.
    pub fn to_class_function(&self, scale: &BigInt) -> ClassFunctionDecomposition {
        let mut out = ClassFunctionDecomposition::new(self.level_size);
        for (p, c) in &self.coefficients {
            out.coefficients.insert(p.clone(), BigRational::new(c.clone(), scale.clone()));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.to_class_function(&BigInt::one()).to_json()
    }
}

impl fmt::Debug for VirtualDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VirtualDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}: {c}")?;
        }
        write!(f, "}}")
    }
}

/// A row of the diagram. `half_steps` is twice the level index, so odd
/// values are the half-integer levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliLevel {
    pub half_steps: usize,
    pub decomposition: VirtualDecomposition,
}

impl BratteliLevel {
    pub fn is_half(&self) -> bool {
        self.half_steps % 2 == 1
    }

    /// `0`, `1/2`, `1`, `3/2`, ...
    pub fn label(&self) -> String {
        if self.is_half() {
            format!("{}/2", self.half_steps)
        } else {
            (self.half_steps / 2).to_string()
        }
    }
}

/// Signed removal of rim `j`-hooks.
pub fn mn_restrict(d: &VirtualDecomposition, j: usize) -> Result<VirtualDecomposition> {
    if j == 0 {
        return Err(Error::param("j must be positive"));
    }
    if d.level_size < j {
        return Err(Error::param(format!(
            "cannot remove a rim {j}-hook from partitions of {}",
            d.level_size
        )));
    }
    let mut out = VirtualDecomposition::new(d.level_size - j);
    for (lambda, c) in &d.coefficients {
        for hook in lambda.removable_rim_hooks(j) {
            let term = if hook.is_odd() { -c.clone() } else { c.clone() };
            out.add_unchecked(hook.inner, term);
        }
    }
    Ok(out)
}

/// Signed addition of rim `j`-hooks.
pub fn mn_induce(d: &VirtualDecomposition, j: usize) -> Result<VirtualDecomposition> {
    if j == 0 {
        return Err(Error::param("j must be positive"));
    }
    let mut out = VirtualDecomposition::new(d.level_size + j);
    for (mu, c) in &d.coefficients {
        for hook in mu.addable_rim_hooks(j) {
            let term = if hook.is_odd() { -c.clone() } else { c.clone() };
            out.add_unchecked(hook.outer, term);
        }
    }
    Ok(out)
}

/// Levels `0, 1/2, ..., r` of the diagram rooted at `(n)`.
pub fn tensor_power_levels(n: usize, j: usize, r: usize) -> Result<Vec<BratteliLevel>> {
    if j == 0 || n <= j {
        return Err(Error::param(format!("need n > j >= 1 (n = {n}, j = {j})")));
    }
    let mut levels = Vec::with_capacity(2 * r + 1);
    let mut current = VirtualDecomposition::irreducible(Partition::row(n));
    levels.push(BratteliLevel { half_steps: 0, decomposition: current.clone() });
    for step in 0..r {
        let down = mn_restrict(&current, j)?;
        levels.push(BratteliLevel { half_steps: 2 * step + 1, decomposition: down.clone() });
        current = mn_induce(&down, j)?;
        levels.push(BratteliLevel { half_steps: 2 * step + 2, decomposition: current.clone() });
    }
    Ok(levels)
}

/// Decomposition of `ρ_{ψ_j}^{⊗r}` by path counting. Valid for every `n > j`.
pub fn tensor_power(n: usize, j: usize, r: usize) -> Result<VirtualDecomposition> {
    Ok(tensor_power_levels(n, j, r)?
        .pop()
        .expect("level 0 always present")
        .decomposition)
}

/// `c^j_{t,r} = Σ_{a=t}^r S(r,a) binom(a,t) j^{r-a}`; zero outside `0 <= t <= r`.
pub fn cluster_coeff(t: usize, r: usize, j: usize) -> BigUint {
    if t > r {
        return BigUint::zero();
    }
    let stirling = stirling2_table(r).swap_remove(r);
    let j = BigUint::from(j);
    (t..=r)
        .map(|a| &stirling[a] * binomial(a, t) * j.pow((r - a) as u32))
        .sum()
}

fn first_row_index(lambda: &Partition, n: usize, j: usize, r: usize) -> Option<usize> {
    let gap = n - lambda.first_row();
    (gap.is_multiple_of(j) && gap / j <= r).then_some(gap / j)
}

/// Multiplicity of `λ` in `ρ_{ψ_j}^{⊗r}` from the closed form
/// `R_j(λ̄) sgn(σ) c^j_{t,r}` with `λ = (n - tj, λ̄)`. Zero when the first row
/// is not of that shape.
pub fn closed_form_multiplicity(lambda: &Partition, r: usize, j: usize, n: usize) -> Result<BigInt> {
    if j == 0 {
        return Err(Error::param("j must be positive"));
    }
    if n < 2 * r * j {
        return Err(Error::ClosedFormRange { n, r, j });
    }
    if lambda.size() != n {
        return Err(Error::SizeMismatch { expected: n, actual: lambda.size() });
    }
    let Some(t) = first_row_index(lambda, n, j, r) else {
        return Ok(BigInt::zero());
    };
    let inner = inner_multiplicity(&lambda.below_first_row(), j)?;
    Ok(inner * BigInt::from(cluster_coeff(t, r, j)))
}

/// Decomposition of `(a_j)^r = j^{-r} Σ m^j_{λ,r} χ^λ`, for `n >= 2rj`.
pub fn ajr_decomposition(n: usize, j: usize, r: usize) -> Result<ClassFunctionDecomposition> {
    if j == 0 {
        return Err(Error::param("j must be positive"));
    }
    if n < 2 * r * j {
        return Err(Error::ClosedFormRange { n, r, j });
    }
    power_decomposition(n, j, r)
}

/// Same as [`ajr_decomposition`] but without the `n >= 2rj` gate; path
/// counting holds for every `n > j`.
pub fn power_decomposition(n: usize, j: usize, r: usize) -> Result<ClassFunctionDecomposition> {
    let scale = BigInt::from(j).pow(r as u32);
    Ok(tensor_power(n, j, r)?.to_class_function(&scale))
}

/// `K^j_r(ε) = Σ_{λ̄ ⊢ rj} m^j_{λ̄} d_{(n-rj, λ̄)}`; should equal `(-1)^r`.
pub fn cluster_identity_check(j: usize, r: usize, n: usize) -> Result<BigInt> {
    if j < 2 {
        return Err(Error::param("cluster identity needs j >= 2"));
    }
    if n < 2 * r * j {
        return Err(Error::ClosedFormRange { n, r, j });
    }
    let mut acc = BigInt::zero();
    for bar in crate::partition::partitions_of(r * j) {
        let m = inner_multiplicity(&bar, j)?;
        if m.is_zero() {
            continue;
        }
        let lambda = Partition::with_ambient(n, &bar)?;
        acc += m * BigInt::from(lambda.dimension());
    }
    Ok(acc)
}

/// An edge between consecutive levels; `upper` is the larger partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiagramEdge {
    /// Half-steps of the upper endpoint's level (the one closer to the root).
    pub from_half_steps: usize,
    pub from: Partition,
    pub to: Partition,
    pub odd_leg: bool,
}

/// Edges between vertices present (nonzero) in consecutive levels.
pub fn diagram_edges(levels: &[BratteliLevel], j: usize) -> Vec<DiagramEdge> {
    let mut edges = Vec::new();
    for pair in levels.windows(2) {
        let (upper, lower) = (&pair[0], &pair[1]);
        let present = |p: &Partition| !lower.decomposition.coefficient(p).is_zero();
        for (from, _) in upper.decomposition.terms() {
            let hooks = if upper.is_half() {
                from.addable_rim_hooks(j)
            } else {
                from.removable_rim_hooks(j)
            };
            for h in hooks {
                let to = if upper.is_half() { h.outer.clone() } else { h.inner.clone() };
                if present(&to) {
                    edges.push(DiagramEdge {
                        from_half_steps: upper.half_steps,
                        from: from.clone(),
                        to,
                        odd_leg: h.is_odd(),
                    });
                }
            }
        }
    }
    edges
}

fn node_id(half_steps: usize, p: &Partition) -> String {
    let body: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    format!("\"L{}_{}\"", half_steps, if body.is_empty() { "e".into() } else { body.join("_") })
}

/// Graphviz rendering; odd-leg edges are red.
pub fn to_dot(levels: &[BratteliLevel], j: usize) -> String {
    let mut out = String::new();
    let n = levels.first().map_or(0, |l| l.decomposition.level_size());
    writeln!(out, "digraph mn{j}_S{n} {{").unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for level in levels {
        writeln!(out, "  subgraph level_{} {{", level.half_steps).unwrap();
        writeln!(out, "    rank=same;").unwrap();
        for (p, c) in level.decomposition.terms() {
            writeln!(
                out,
                "    {} [label=\"{}\\n{}\", level=\"{}\"];",
                node_id(level.half_steps, p),
                p,
                c,
                level.label()
            )
            .unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for e in diagram_edges(levels, j) {
        let to_level = e.from_half_steps + 1;
        let color = if e.odd_leg { "red" } else { "black" };
        writeln!(
            out,
            "  {} -> {} [color={color}, arrowhead=none];",
            node_id(e.from_half_steps, &e.from),
            node_id(to_level, &e.to)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
