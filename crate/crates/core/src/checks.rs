//! Necessary conditions for a square matrix to be the rank matrix of an
//! Artinian Gorenstein algebra and a linear form.
//!
//! Each rule follows from rank-of-composition bounds or from the symmetry of
//! Gorenstein Hilbert functions, so every genuine rank matrix passes. Passing
//! does not imply the matrix is realizable.

use std::fmt;

use serde::Serialize;

use crate::jordan::{signed_jdt_entry, RankMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// R1: zero below the diagonal.
    UpperTriangular,
    /// R2: each diagonal reads the same backwards.
    SymmetricDiagonals,
    /// R3: rows weakly decrease to the right, columns weakly increase downwards.
    Monotone,
    /// R4: `M[i][j] = M[d-j][d-i]`.
    Duality,
    /// R5: the induced Jordan degree type matrix has no negative entry.
    NonnegativeJdt,
    /// R6: `M[0][0] = 1`.
    Unital,
}

impl Rule {
    pub fn code(self) -> &'static str {
        match self {
            Rule::UpperTriangular => "R1",
            Rule::SymmetricDiagonals => "R2",
            Rule::Monotone => "R3",
            Rule::Duality => "R4",
            Rule::NonnegativeJdt => "R5",
            Rule::Unital => "R6",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Rule::UpperTriangular => "upper-triangular",
            Rule::SymmetricDiagonals => "symmetric-diagonals",
            Rule::Monotone => "monotone",
            Rule::Duality => "duality",
            Rule::NonnegativeJdt => "nonnegative-jdt",
            Rule::Unital => "unital",
        };
        write!(f, "{} {}", self.code(), name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub position: (usize, usize),
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn violates(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return f.write_str("pass");
        }
        writeln!(f, "fail: {} violation(s)", self.violations.len())?;
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "  {} at ({},{}): {}",
                v.rule, v.position.0, v.position.1, v.detail
            )?;
        }
        Ok(())
    }
}

/// Runs R1 through R6 in order, collecting every violation.
pub fn check_rank_matrix(m: &RankMatrix) -> CheckReport {
    let d = m.socle_degree();
    let mut violations = Vec::new();
    let mut push = |rule, position, detail: String| {
        violations.push(Violation {
            rule,
            position,
            detail,
        })
    };

    for i in 0..=d {
        for j in 0..i {
            if m.get(i, j) != 0 {
                push(
                    Rule::UpperTriangular,
                    (i, j),
                    format!("entry {} below the diagonal", m.get(i, j)),
                );
            }
        }
    }

    for k in 0..=d {
        let diag = m.diagonal(k).expect("in range");
        let len = diag.len();
        for r in 0..len / 2 {
            if diag[r] != diag[len - 1 - r] {
                push(
                    Rule::SymmetricDiagonals,
                    (r, r + k),
                    format!(
                        "diagonal {k} has {} here but {} at ({},{})",
                        diag[r],
                        diag[len - 1 - r],
                        len - 1 - r,
                        len - 1 - r + k
                    ),
                );
            }
        }
    }

    for i in 0..=d {
        for j in i..=d {
            if j < d && m.get(i, j + 1) > m.get(i, j) {
                push(
                    Rule::Monotone,
                    (i, j + 1),
                    format!(
                        "row {i} increases from {} to {}",
                        m.get(i, j),
                        m.get(i, j + 1)
                    ),
                );
            }
            if i > 0 && m.get(i - 1, j) > m.get(i, j) {
                push(
                    Rule::Monotone,
                    (i, j),
                    format!(
                        "column {j} decreases from {} to {}",
                        m.get(i - 1, j),
                        m.get(i, j)
                    ),
                );
            }
        }
    }

    for i in 0..=d {
        for j in i..=d {
            let (a, b) = (d - j, d - i);
            // each unordered pair once
            if (i, j) < (a, b) && m.get(i, j) != m.get(a, b) {
                push(
                    Rule::Duality,
                    (i, j),
                    format!("{} differs from {} at ({a},{b})", m.get(i, j), m.get(a, b)),
                );
            }
        }
    }

    for i in 0..=d {
        for j in i..=d {
            let v = signed_jdt_entry(m, i, j);
            if v < 0 {
                push(Rule::NonnegativeJdt, (i, j), format!("J entry is {v}"));
            }
        }
    }

    if m.get(0, 0) != 1 {
        push(
            Rule::Unital,
            (0, 0),
            format!("top-left entry is {}", m.get(0, 0)),
        );
    }

    CheckReport {
        passed: violations.is_empty(),
        violations,
    }
}
