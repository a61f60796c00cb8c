//! Codimension two: the Jordan type and socle degree determine the Jordan
//! degree type.
//!
//! A Gorenstein Hilbert function of codimension at most two rises by one per
//! degree up to some `r`, stays flat up to the middle and is symmetric, so it
//! is fixed by its dimension and socle degree. Each algebra `A^{(k)}` is again
//! of that kind, which pins every diagonal of the rank matrix once the
//! dimensions `dim A^{(k)}` are recovered from the Jordan type.

use crate::apolar::HilbertFunction;
use crate::error::{Error, Result};
use crate::jordan::{jdt_matrix, RankMatrix};
use crate::partition::{IndexedPartition, Partition};

/// The unique codimension ≤ 2 Gorenstein Hilbert function with dimension
/// `dim` and socle degree `socle`.
pub fn hilbert_from_dim_and_socle(dim: usize, socle: usize) -> Result<HilbertFunction> {
    if dim < socle + 1 {
        return Err(Error::DimensionTooSmall { dim, socle });
    }
    let half = socle / 2;
    let mut total = 0;
    for r in 0..=half {
        total += socle + 1 - 2 * r;
        if total == dim {
            let values = (0..=socle)
                .map(|i| {
                    let i = i.min(socle - i);
                    if i <= r {
                        i + 1
                    } else {
                        r + 1
                    }
                })
                .collect();
            return Ok(HilbertFunction::new(values));
        }
        if total > dim {
            break;
        }
    }
    Err(Error::NotCodimTwo { dim, socle })
}

/// Recovers `dim A^{(k)}` for `k = 0..=d` from the string-length
/// multiplicities, running the second-difference relation from the top.
fn dims_from_multiplicities(n: &[usize]) -> Result<Vec<usize>> {
    let d = n.len() - 1;
    let mut dims = vec![0i64; d + 3];
    for i in (0..=d).rev() {
        let v = n[i] as i64 + 2 * dims[i + 1] - dims[i + 2];
        if v < 0 {
            return Err(Error::NegativeDimension { index: i });
        }
        dims[i] = v;
    }
    Ok(dims[..=d].iter().map(|&v| v as usize).collect())
}

/// Rank matrix forced by a codimension-two Jordan type.
pub fn rank_matrix_from_jordan_type(p: &Partition, d: usize) -> Result<RankMatrix> {
    if let Some(&big) = p.parts().iter().find(|&&q| q > d + 1) {
        return Err(Error::PartTooLarge {
            part: big,
            degree: d,
        });
    }
    let n = p.multiplicities(d + 1);
    if n[d] >= 2 {
        return Err(Error::TopMultiplicity {
            n: n[d],
            size: d + 1,
        });
    }
    let dims = dims_from_multiplicities(&n)?;
    let mut rows = vec![vec![0; d + 1]; d + 1];
    for (k, &dim) in dims.iter().enumerate() {
        if dim == 0 {
            continue;
        }
        let h =
            hilbert_from_dim_and_socle(dim, d - k).map_err(|e| Error::UnrealizableDiagonal {
                index: k,
                source: Box::new(e),
            })?;
        for (i, &v) in h.values().iter().enumerate() {
            rows[i][i + k] = v;
        }
    }
    RankMatrix::from_rows(rows)
}

/// The Jordan degree type of any codimension-two algebra with Jordan type
/// `p` and socle degree `d`.
pub fn jdt_from_jordan_type(p: &Partition, d: usize) -> Result<IndexedPartition> {
    let m = rank_matrix_from_jordan_type(p, d)?;
    Ok(jdt_matrix(&m)?.jordan_degree_type())
}
