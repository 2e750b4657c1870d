//! The `j`-abacus: cores, quotients, rim-hook tableau counts and the sign of
//! the bead-compression permutation.
//!
//! A bead at position `p` sits on runner `p mod j`, row `p div j`. Pushing a
//! bead one row up its runner removes a rim `j`-hook, so compressing every
//! runner yields the `j`-core, and the runner contents give the `j`-quotient.

use serde::Serialize;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::numbers::multinomial;
use crate::{Error, Partition, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusConfiguration {
    j: usize,
    /// Ascending bead positions.
    beads: Vec<usize>,
}

impl AbacusConfiguration {
    pub fn from_positions(j: usize, mut beads: Vec<usize>) -> Result<Self> {
        if j == 0 {
            return Err(Error::param("an abacus needs at least one runner"));
        }
        beads.sort_unstable();
        if beads.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::param("bead positions must be distinct"));
        }
        Ok(AbacusConfiguration { j, beads })
    }

    pub fn runners(&self) -> usize {
        self.j
    }

    /// Bead positions in natural (row-major) order.
    pub fn positions(&self) -> &[usize] {
        &self.beads
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    /// Rows occupied on runner `r`, ascending.
    pub fn runner_rows(&self, r: usize) -> Vec<usize> {
        self.beads.iter().filter(|&&p| p % self.j == r).map(|&p| p / self.j).collect()
    }

    pub fn decode(&self) -> Partition {
        Partition::from_beta_set(&self.beads).expect("positions are distinct")
    }

    /// Pushes each runner's beads to the top rows, keeping their order.
    /// Returns the compressed configuration and, for each original bead (in
    /// natural order), its new position.
    fn compress(&self) -> (AbacusConfiguration, Vec<usize>) {
        let mut next_row = vec![0usize; self.j];
        let moved: Vec<usize> = self
            .beads
            .iter()
            .map(|&p| {
                let r = p % self.j;
                let pos = next_row[r] * self.j + r;
                next_row[r] += 1;
                pos
            })
            .collect();
        let mut beads = moved.clone();
        beads.sort_unstable();
        (AbacusConfiguration { j: self.j, beads }, moved)
    }

    /// Text rendering with bead labels, runner per column.
    pub fn render(&self, labels: &[usize]) -> String {
        let rows = self.beads.last().map_or(0, |&p| p / self.j + 1);
        let mut out = String::new();
        for row in 0..rows {
            let cells: Vec<String> = (0..self.j)
                .map(|r| {
                    let pos = row * self.j + r;
                    match self.beads.binary_search(&pos) {
                        Ok(k) => format!("o{:<3}", labels.get(k).copied().unwrap_or(k + 1)),
                        Err(_) => ".   ".to_string(),
                    }
                })
                .collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Smallest multiple of `j` that is at least the number of parts.
pub fn default_bead_count(lambda: &Partition, j: usize) -> usize {
    lambda.len().div_ceil(j) * j
}

pub fn to_abacus(lambda: &Partition, j: usize, bead_count: usize) -> Result<AbacusConfiguration> {
    let beta = lambda.beta_set(bead_count)?;
    AbacusConfiguration::from_positions(j, beta)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCore {
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl QuotientCore {
    pub fn quotient_size(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }
}

fn runner_partition(rows: &[usize]) -> Partition {
    Partition::from_beta_set(rows).expect("rows on a runner are distinct")
}

/// `j`-core and `j`-quotient, read from the canonical abacus. Component `i`
/// of the quotient is runner `i`.
pub fn core_and_quotient(lambda: &Partition, j: usize) -> Result<QuotientCore> {
    let abacus = to_abacus(lambda, j, default_bead_count(lambda, j))?;
    let quotient = (0..j).map(|r| runner_partition(&abacus.runner_rows(r))).collect();
    let core = abacus.compress().0.decode();
    Ok(QuotientCore { core, quotient })
}

/// Rebuilds `λ` from its `j`-core and `j`-quotient (same runner convention as
/// [`core_and_quotient`]).
pub fn reconstruct(qc: &QuotientCore, j: usize) -> Result<Partition> {
    if qc.quotient.len() != j {
        return Err(Error::param(format!("quotient has {} components, expected {j}", qc.quotient.len())));
    }
    let deepest = qc.quotient.iter().map(Partition::len).max().unwrap_or(0);
    let beads = default_bead_count(&qc.core, j) + j * deepest;
    let core = to_abacus(&qc.core, j, beads)?;
    let mut positions = Vec::with_capacity(beads);
    for (r, part) in qc.quotient.iter().enumerate() {
        let count = core.runner_rows(r).len();
        let rows = part.beta_set(count)?;
        positions.extend(rows.into_iter().map(|row| row * j + r));
    }
    Ok(AbacusConfiguration::from_positions(j, positions)?.decode())
}

/// Number of standard rim-`j`-hook tableaux of shape `λ`: zero with a
/// nonempty `j`-core, otherwise `binom(m; m_0..m_{j-1}) ∏ d_{λ^(i)}`.
pub fn rim_tableau_count(lambda: &Partition, j: usize) -> Result<BigUint> {
    let qc = core_and_quotient(lambda, j)?;
    if !qc.core.is_empty() {
        return Ok(BigUint::zero());
    }
    let sizes: Vec<usize> = qc.quotient.iter().map(Partition::size).collect();
    let dims: BigUint = qc.quotient.iter().map(Partition::dimension).product();
    Ok(multinomial(&sizes) * dims)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbacusSign {
    /// `+1` or `-1`.
    pub sign: i8,
    /// The compression permutation in one-line notation, 1-based.
    pub permutation: Vec<usize>,
    /// False when `λ` has a nonempty `j`-core; the sign is then unused since
    /// there are no rim-hook tableaux to sign.
    pub core_empty: bool,
}

pub fn permutation_sign(one_line: &[usize]) -> i8 {
    let n = one_line.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = one_line[x] - 1;
        }
    }
    if (n - cycles).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Bead count used when reporting `σ`: the smallest multiple of `j` strictly
/// above the number of parts, so the top row is always full. This is the
/// layout of the usual hand-drawn examples; the sign itself does not depend
/// on it.
pub fn sign_bead_count(lambda: &Partition, j: usize) -> usize {
    (lambda.len() / j + 1) * j
}

/// Sign of the compression permutation, with `σ` reported on
/// [`sign_bead_count`] beads.
pub fn abacus_sign(lambda: &Partition, j: usize) -> Result<AbacusSign> {
    abacus_sign_with_beads(lambda, j, sign_bead_count(lambda, j))
}

/// Number beads 1..b in row-major order, push every runner up keeping bead
/// order, then read the labels of the compressed configuration in row-major
/// order: that reading is `σ` in one-line notation.
pub fn abacus_sign_with_beads(lambda: &Partition, j: usize, beads: usize) -> Result<AbacusSign> {
    let abacus = to_abacus(lambda, j, beads)?;
    let (compressed, moved) = abacus.compress();
    let mut labelled: Vec<(usize, usize)> =
        moved.iter().enumerate().map(|(k, &pos)| (pos, k + 1)).collect();
    labelled.sort_unstable();
    let permutation: Vec<usize> = labelled.into_iter().map(|(_, label)| label).collect();
    Ok(AbacusSign {
        sign: permutation_sign(&permutation),
        permutation,
        core_empty: compressed.decode().is_empty(),
    })
}

/// Signed within-cluster multiplicity `R_j(λ̄)·sgn(σ)`.
pub fn inner_multiplicity(bar: &Partition, j: usize) -> Result<BigInt> {
    let count = rim_tableau_count(bar, j)?;
    if count.is_zero() {
        return Ok(BigInt::zero());
    }
    let sign = abacus_sign(bar, j)?;
    let count = BigInt::from(count);
    Ok(if sign.sign < 0 { -count } else { count })
}

/// Labels for [`AbacusConfiguration::render`]: the natural numbering.
pub fn natural_labels(abacus: &AbacusConfiguration) -> Vec<usize> {
    (1..=abacus.bead_count()).collect()
}

/// Labels of the compressed configuration as carried over from the original
/// natural numbering.
pub fn compressed_view(lambda: &Partition, j: usize) -> Result<(AbacusConfiguration, Vec<usize>)> {
    let abacus = to_abacus(lambda, j, sign_bead_count(lambda, j))?;
    let sign = abacus_sign(lambda, j)?;
    Ok((abacus.compress().0, sign.permutation))
}

impl AbacusSign {
    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }
}
