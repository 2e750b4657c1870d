//! Finite-`n` quantities converging to their limits.

use cycle_mixer::walk::{asymptotic_checks, AsymptoticLemma};
use cycle_mixer::p;

fn main() -> cycle_mixer::Result<()> {
    let grid = [16, 32, 64, 128, 256, 512];
    let lemmas = [
        AsymptoticLemma::FirstRowDimension { bar: p![2, 1] },
        AsymptoticLemma::StarTraceNLogN { bar: p![1, 1], c: 1.0 },
        AsymptoticLemma::StarTraceLinear { bar: p![2], c: 1.0 },
        AsymptoticLemma::CharacterRatio { bar: p![2, 1], i: 3 },
        AsymptoticLemma::ICycleTrace { bar: p![2], i: 3, c: 1.0 },
    ];
    for lemma in &lemmas {
        println!("{lemma:?}");
        for row in asymptotic_checks(lemma, &grid)? {
            println!("  n={:<4} finite {:.6}  limit {:.6}  gap {:.2e}", row.n, row.finite, row.limit, row.gap());
        }
    }
    Ok(())
}
