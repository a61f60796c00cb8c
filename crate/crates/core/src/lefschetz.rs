//! Weak and strong Lefschetz witnesses for one specific linear form.
//!
//! These decide whether the given `ℓ` witnesses WLP/SLP; they do not decide
//! the properties for the algebra, which would quantify over all `ℓ`.

use crate::apolar::HilbertFunction;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Maximum value of the Hilbert function.
pub fn sperner(h: &HilbertFunction) -> usize {
    h.values().iter().copied().max().unwrap_or(0)
}

/// `h^∨`: the `k`-th part counts the degrees with `h(i) ≥ k`.
pub fn conjugate(h: &HilbertFunction) -> Partition {
    let parts = (1..=sperner(h))
        .map(|k| h.values().iter().filter(|&&v| v >= k).count())
        .collect();
    Partition::new(parts).expect("counts are positive up to the Sperner number")
}

fn check_sums(p: &Partition, h: &HilbertFunction) -> Result<()> {
    if p.sum() != h.sum() {
        return Err(Error::SumMismatch {
            partition: p.sum(),
            hilbert: h.sum(),
        });
    }
    Ok(())
}

/// `ℓ` has maximal rank in every degree iff its Jordan type has as many parts
/// as the Sperner number.
pub fn wlp_witness(p: &Partition, h: &HilbertFunction) -> Result<bool> {
    check_sums(p, h)?;
    Ok(p.len() == sperner(h))
}

/// All powers of `ℓ` have maximal rank iff the Jordan type is `h^∨`.
pub fn slp_witness(p: &Partition, h: &HilbertFunction) -> Result<bool> {
    check_sums(p, h)?;
    Ok(*p == conjugate(h))
}
