//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::numbers::factorial;
use crate::partition::partitions_of;
use crate::{Error, Partition, Result};

/// Cycle type of a conjugacy class of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        CycleType(partition)
    }

    pub fn identity(n: usize) -> Self {
        CycleType(Partition::from_sorted(vec![1; n]))
    }

    /// The class `(i, 1^{n-i})` of a single `i`-cycle.
    pub fn single_cycle(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::param(format!("cycle length {i} out of range for n = {n}")));
        }
        let mut parts = vec![i];
        parts.extend(std::iter::repeat_n(1, n - i));
        Ok(CycleType(Partition::from_sorted(parts)))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.size()
    }

    /// `m_i(μ)`; for `i = j` this is `a_j` on the class.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.multiplicity(i)
    }

    pub fn z(&self) -> BigUint {
        self.0.z()
    }

    pub fn class_size(&self) -> BigUint {
        factorial(self.n()) / self.z()
    }

    /// All cycle types of `S_n`.
    pub fn all(n: usize) -> Vec<CycleType> {
        partitions_of(n).into_iter().map(CycleType).collect()
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

pub fn z_of(mu: &CycleType) -> BigUint {
    mu.z()
}

pub fn class_size(mu: &CycleType) -> BigUint {
    mu.class_size()
}

type CharKey = (Partition, Partition);

fn cache() -> &'static RwLock<HashMap<CharKey, BigInt>> {
    static CACHE: OnceLock<RwLock<HashMap<CharKey, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ^λ(μ)`.
pub fn character_value(lambda: &Partition, mu: &CycleType) -> Result<BigInt> {
    if lambda.size() != mu.n() {
        return Err(Error::SizeMismatch { expected: lambda.size(), actual: mu.n() });
    }
    Ok(mn(lambda, mu.partition()))
}

// Strips the largest remaining part of `mu` first. Once only 1-cycles are
// left the value is the dimension.
fn mn(lambda: &Partition, mu: &Partition) -> BigInt {
    if mu.first_row() <= 1 {
        return BigInt::from(lambda.dimension());
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = cache().read().expect("cache poisoned").get(&key) {
        return v.clone();
    }
    let head = mu.first_row();
    let rest = mu.below_first_row();
    let mut acc = BigInt::zero();
    for hook in lambda.removable_rim_hooks(head) {
        let v = mn(&hook.inner, &rest);
        if hook.is_odd() {
            acc -= v;
        } else {
            acc += v;
        }
    }
    cache().write().expect("cache poisoned").insert(key, acc.clone());
    acc
}

/// A class function written in the irreducible-character basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunctionDecomposition {
    pub n: usize,
    pub coefficients: BTreeMap<Partition, BigRational>,
}

impl ClassFunctionDecomposition {
    pub fn new(n: usize) -> Self {
        ClassFunctionDecomposition { n, coefficients: BTreeMap::new() }
    }

    /// Adds `c` to the coefficient of `lambda`, dropping it if it cancels.
    pub fn add(&mut self, lambda: Partition, c: BigRational) -> Result<()> {
        if lambda.size() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: lambda.size() });
        }
        let entry = self.coefficients.entry(lambda.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coefficients.remove(&lambda);
        }
        Ok(())
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.coefficients.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in descending partition order, so `(n)` comes first.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coefficients.iter().rev()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DecompositionJson::from(self)).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: DecompositionJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::param(format!("bad decomposition json: {e}")))?;
        let mut out = ClassFunctionDecomposition::new(raw.n);
        for t in raw.terms {
            let c: BigRational = t
                .coeff
                .parse()
                .map_err(|_| Error::param(format!("bad rational {:?}", t.coeff)))?;
            out.add(t.partition, c)?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl From<&ClassFunctionDecomposition> for DecompositionJson {
    fn from(d: &ClassFunctionDecomposition) -> Self {
        DecompositionJson {
            n: d.n,
            terms: d
                .terms()
                .map(|(p, c)| TermJson { partition: p.clone(), coeff: c.to_string() })
                .collect(),
        }
    }
}

/// Decomposition of `a_j`, valid for `1 <= j <= n/2`:
/// `a_j = (1/j)(χ^(n) + Σ_{i<j} (-1)^i χ^(n-j, j-i, 1^i))`.
pub fn aj_decomposition(n: usize, j: usize) -> Result<ClassFunctionDecomposition> {
    if j == 0 {
        return Err(Error::param("j must be positive"));
    }
    if 2 * j > n {
        return Err(Error::FormulaRange { n, j });
    }
    let inv_j = BigRational::new(BigInt::one(), BigInt::from(j));
    let mut d = ClassFunctionDecomposition::new(n);
    d.add(Partition::row(n), inv_j.clone())?;
    for i in 0..j {
        let mut parts = vec![n - j, j - i];
        parts.extend(std::iter::repeat_n(1, i));
        let c = if i % 2 == 0 { inv_j.clone() } else { -inv_j.clone() };
        d.add(Partition::new(parts)?, c)?;
    }
    Ok(d)
}

/// `Σ_λ c_λ χ^λ(μ)`.
pub fn evaluate(decomp: &ClassFunctionDecomposition, mu: &CycleType) -> Result<BigRational> {
    if decomp.n != mu.n() {
        return Err(Error::SizeMismatch { expected: decomp.n, actual: mu.n() });
    }
    let mut acc = BigRational::zero();
    for (lambda, c) in &decomp.coefficients {
        acc += c * BigRational::from_integer(character_value(lambda, mu)?);
    }
    Ok(acc)
}
