//! Power-sum symmetric functions: just enough to check
//! `p_j (p_j^⊥ f ∗ g) = f ∗ (p_j g)` on basis elements.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Partition, Result};

/// A finite rational combination of `p_μ`, `μ ⊢ degree`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PowerSumVector {
    degree: usize,
    coefficients: BTreeMap<Partition, BigRational>,
}

fn z(mu: &Partition) -> BigRational {
    BigRational::from_integer(BigInt::from(mu.z()))
}

impl PowerSumVector {
    pub fn zero(degree: usize) -> Self {
        PowerSumVector { degree, coefficients: BTreeMap::new() }
    }

    /// The basis element `p_μ`.
    pub fn basis(mu: Partition) -> Self {
        let mut v = PowerSumVector::zero(mu.size());
        v.coefficients.insert(mu, BigRational::one());
        v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, mu: &Partition) -> BigRational {
        self.coefficients.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coefficients.iter().rev()
    }

    pub fn add_term(&mut self, mu: Partition, c: BigRational) -> Result<()> {
        if mu.size() != self.degree {
            return Err(Error::SizeMismatch { expected: self.degree, actual: mu.size() });
        }
        self.push(mu, c);
        Ok(())
    }

    fn push(&mut self, mu: Partition, c: BigRational) {
        use std::collections::btree_map::Entry;
        match self.coefficients.entry(mu) {
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

    pub fn add(&self, other: &PowerSumVector) -> Result<PowerSumVector> {
        same_degree(self, other)?;
        let mut out = self.clone();
        for (mu, c) in &other.coefficients {
            out.push(mu.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PowerSumVector) -> Result<PowerSumVector> {
        same_degree(self, other)?;
        let mut out = self.clone();
        for (mu, c) in &other.coefficients {
            out.push(mu.clone(), -c.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for PowerSumVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PowerSumVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·p{mu}")?;
        }
        Ok(())
    }
}

fn same_degree(f: &PowerSumVector, g: &PowerSumVector) -> Result<()> {
    if f.degree != g.degree {
        return Err(Error::SizeMismatch { expected: f.degree, actual: g.degree });
    }
    Ok(())
}

/// Kronecker (internal) product, `p_μ ∗ p_ν = δ_{μν} z_μ p_μ`.
pub fn kronecker(f: &PowerSumVector, g: &PowerSumVector) -> Result<PowerSumVector> {
    same_degree(f, g)?;
    let mut out = PowerSumVector::zero(f.degree);
    for (mu, a) in &f.coefficients {
        if let Some(b) = g.coefficients.get(mu) {
            out.push(mu.clone(), a * b * z(mu));
        }
    }
    Ok(out)
}

/// Multiplication by `p_j`: `p_μ ↦ p_{j ∪ μ}`.
pub fn mul_pj(f: &PowerSumVector, j: usize) -> PowerSumVector {
    let mut out = PowerSumVector::zero(f.degree + j);
    for (mu, c) in &f.coefficients {
        out.push(mu.add_part(j), c.clone());
    }
    out
}

/// The adjoint of [`mul_pj`] for the Hall inner product:
/// `p_{j ∪ γ} ↦ (z_{j∪γ}/z_γ) p_γ`, and `p_α ↦ 0` when `α` has no part `j`.
pub fn perp_pj(f: &PowerSumVector, j: usize) -> PowerSumVector {
    let mut out = PowerSumVector::zero(f.degree.saturating_sub(j));
    for (alpha, c) in &f.coefficients {
        if let Some(gamma) = alpha.remove_part(j) {
            let factor = z(alpha) / z(&gamma);
            out.push(gamma, c * factor);
        }
    }
    out
}

/// Hall inner product, diagonal in the power-sum basis with `⟨p_μ, p_μ⟩ = z_μ`.
pub fn hall_inner(f: &PowerSumVector, g: &PowerSumVector) -> Result<BigRational> {
    same_degree(f, g)?;
    Ok(f.coefficients
        .iter()
        .filter_map(|(mu, a)| g.coefficients.get(mu).map(|b| a * b * z(mu)))
        .sum())
}

/// `p_j(p_j^⊥ f ∗ g) − f ∗ (p_j g)`; zero whenever the identity holds.
pub fn tensor_identity_residual(
    f: &PowerSumVector,
    g: &PowerSumVector,
    j: usize,
) -> Result<PowerSumVector> {
    if f.degree != g.degree + j {
        return Err(Error::SizeMismatch { expected: g.degree + j, actual: f.degree });
    }
    let lhs = mul_pj(&kronecker(&perp_pj(f, j), g)?, j);
    let rhs = kronecker(f, &mul_pj(g, j))?;
    lhs.sub(&rhs)
}
