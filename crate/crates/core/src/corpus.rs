//! Reference instances with known rank matrices, Jordan types and Jordan
//! degree types. Used by `agjt verify-paper-examples` and the acceptance tests.

use crate::error::Result;
use crate::jordan::{analyze, JordanData};
use crate::parse::{parse_linear_form, parse_poly, VarTable};
use crate::partition::IndexedPartition;
use crate::poly::{LinearForm, Polynomial};

/// A generator together with everything it is expected to produce for `ell`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: &'static str,
    pub vars: &'static [&'static str],
    pub generator: &'static str,
    pub ell: &'static str,
    pub hilbert: &'static [usize],
    pub rank_matrix: &'static [&'static [usize]],
    /// Entries of the Jordan degree type matrix that are nonzero, as `(i, j, value)`.
    pub jdt_nonzero: Option<&'static [(usize, usize, usize)]>,
    pub jordan_type: &'static [usize],
    pub jordan_degree_type: &'static [(usize, usize)],
}

impl Instance {
    pub fn var_table(&self) -> VarTable {
        VarTable::new(self.vars).expect("static variable list")
    }

    pub fn parse(&self) -> Result<(Polynomial, LinearForm)> {
        let v = self.var_table();
        Ok((
            parse_poly(self.generator, &v)?,
            parse_linear_form(self.ell, &v)?,
        ))
    }

    pub fn analyze(&self) -> Result<JordanData> {
        let (f, ell) = self.parse()?;
        analyze(&f, &ell)
    }

    pub fn expected_jdt(&self) -> IndexedPartition {
        IndexedPartition::from_pairs(self.jordan_degree_type)
    }

    pub fn expected_rank_matrix(&self) -> Vec<Vec<usize>> {
        self.rank_matrix.iter().map(|r| r.to_vec()).collect()
    }
}

const XYZ: &[&str] = &["X", "Y", "Z"];
const XYZW: &[&str] = &["X", "Y", "Z", "W"];

pub const SMALL: Instance = Instance {
    name: "quartic X^4+XY^2Z, l=y",
    vars: XYZ,
    generator: "X^4 + XY^2Z",
    ell: "y",
    hilbert: &[1, 3, 5, 3, 1],
    rank_matrix: &[
        &[1, 1, 1, 0, 0],
        &[0, 3, 3, 2, 0],
        &[0, 0, 5, 3, 1],
        &[0, 0, 0, 3, 1],
        &[0, 0, 0, 0, 1],
    ],
    jdt_nonzero: Some(&[(0, 2, 1), (1, 3, 2), (2, 2, 1), (2, 4, 1)]),
    jordan_type: &[3, 3, 3, 3, 1],
    jordan_degree_type: &[(3, 0), (3, 1), (3, 1), (3, 2), (1, 2)],
};

pub const REALIZED: Instance = Instance {
    name: "quintic X^3Y^2+(Y+Z)^5, l=x",
    vars: XYZ,
    generator: "X^3Y^2 + (Y+Z)^5",
    ell: "x",
    hilbert: &[1, 3, 4, 4, 3, 1],
    rank_matrix: &[
        &[1, 1, 1, 1, 0, 0],
        &[0, 3, 2, 2, 1, 0],
        &[0, 0, 4, 3, 2, 1],
        &[0, 0, 0, 4, 2, 1],
        &[0, 0, 0, 0, 3, 1],
        &[0, 0, 0, 0, 0, 1],
    ],
    jdt_nonzero: None,
    jordan_type: &[4, 4, 4, 1, 1, 1, 1],
    jordan_degree_type: &[(4, 0), (4, 1), (4, 2), (1, 1), (1, 2), (1, 3), (1, 4)],
};

pub const CODIM3_A: Instance = Instance {
    name: "codim 3, degree 8, generator F",
    vars: XYZ,
    generator: "X^6Y^2 + X^3(Y+Z)^5 + XY(Y+Z)^6 + Y^8 + Z^8",
    ell: "x",
    hilbert: &[1, 3, 6, 9, 9, 9, 6, 3, 1],
    rank_matrix: &[
        &[1, 1, 1, 1, 1, 1, 1, 0, 0],
        &[0, 3, 3, 3, 3, 2, 2, 1, 0],
        &[0, 0, 6, 6, 5, 4, 3, 2, 1],
        &[0, 0, 0, 9, 6, 5, 4, 2, 1],
        &[0, 0, 0, 0, 9, 6, 5, 3, 1],
        &[0, 0, 0, 0, 0, 9, 6, 3, 1],
        &[0, 0, 0, 0, 0, 0, 6, 3, 1],
        &[0, 0, 0, 0, 0, 0, 0, 3, 1],
        &[0, 0, 0, 0, 0, 0, 0, 0, 1],
    ],
    jdt_nonzero: None,
    jordan_type: &[7, 7, 7, 4, 4, 4, 4, 2, 2, 1, 1, 1, 1, 1, 1],
    jordan_degree_type: &[
        (7, 0),
        (7, 1),
        (7, 2),
        (4, 1),
        (4, 2),
        (4, 3),
        (4, 4),
        (2, 2),
        (2, 5),
        (1, 3),
        (1, 3),
        (1, 4),
        (1, 4),
        (1, 5),
        (1, 5),
    ],
};

pub const CODIM3_B: Instance = Instance {
    name: "codim 3, degree 8, generator G",
    vars: XYZ,
    generator: "X^6Y^2 + X^3(Y^5+Z^5) + X(Y^7+Z^7) + Y^8 + Y^7Z + YZ^7 + Z^8",
    ell: "x",
    hilbert: &[1, 3, 6, 9, 9, 9, 6, 3, 1],
    rank_matrix: &[
        &[1, 1, 1, 1, 1, 1, 1, 0, 0],
        &[0, 3, 3, 3, 3, 2, 2, 1, 0],
        &[0, 0, 6, 5, 5, 4, 3, 2, 1],
        &[0, 0, 0, 9, 7, 5, 4, 2, 1],
        &[0, 0, 0, 0, 9, 7, 5, 3, 1],
        &[0, 0, 0, 0, 0, 9, 5, 3, 1],
        &[0, 0, 0, 0, 0, 0, 6, 3, 1],
        &[0, 0, 0, 0, 0, 0, 0, 3, 1],
        &[0, 0, 0, 0, 0, 0, 0, 0, 1],
    ],
    jdt_nonzero: None,
    jordan_type: &[7, 7, 7, 4, 4, 4, 4, 2, 2, 1, 1, 1, 1, 1, 1],
    jordan_degree_type: &[
        (7, 0),
        (7, 1),
        (7, 2),
        (4, 1),
        (4, 2),
        (4, 3),
        (4, 4),
        (2, 3),
        (2, 4),
        (1, 2),
        (1, 3),
        (1, 3),
        (1, 5),
        (1, 5),
        (1, 6),
    ],
};

pub const CODIM4_A: Instance = Instance {
    name: "codim 4, degree 5, generator F",
    vars: XYZW,
    generator: "X^4Y + X^2Y^2Z + XY^3W + Y^3W^2",
    ell: "x",
    hilbert: &[1, 4, 7, 7, 4, 1],
    rank_matrix: &[
        &[1, 1, 1, 1, 1, 0],
        &[0, 4, 4, 3, 2, 1],
        &[0, 0, 7, 4, 3, 1],
        &[0, 0, 0, 7, 4, 1],
        &[0, 0, 0, 0, 4, 1],
        &[0, 0, 0, 0, 0, 1],
    ],
    jdt_nonzero: None,
    jordan_type: &[5, 5, 3, 3, 2, 2, 1, 1, 1, 1],
    jordan_degree_type: &[
        (5, 0),
        (5, 1),
        (3, 1),
        (3, 2),
        (2, 1),
        (2, 3),
        (1, 2),
        (1, 2),
        (1, 3),
        (1, 3),
    ],
};

pub const CODIM4_B: Instance = Instance {
    name: "codim 4, degree 5, generator G",
    vars: XYZW,
    generator: "X^4Y + X^2Y^2Z + XZ^3Y + W^5",
    ell: "x",
    hilbert: &[1, 4, 7, 7, 4, 1],
    rank_matrix: &[
        &[1, 1, 1, 1, 1, 0],
        &[0, 4, 3, 3, 2, 1],
        &[0, 0, 7, 6, 3, 1],
        &[0, 0, 0, 7, 3, 1],
        &[0, 0, 0, 0, 4, 1],
        &[0, 0, 0, 0, 0, 1],
    ],
    jdt_nonzero: None,
    jordan_type: &[5, 5, 3, 3, 2, 2, 1, 1, 1, 1],
    jordan_degree_type: &[
        (5, 0),
        (5, 1),
        (3, 1),
        (3, 2),
        (2, 2),
        (2, 2),
        (1, 1),
        (1, 2),
        (1, 3),
        (1, 4),
    ],
};

/// All reference instances, in a fixed order.
pub fn all() -> [&'static Instance; 6] {
    [
        &SMALL, &REALIZED, &CODIM3_A, &CODIM3_B, &CODIM4_A, &CODIM4_B,
    ]
}

/// The first superdiagonal, the only place the two degree-8 rank matrices can differ.
pub const CODIM3_HIGHLIGHTED: [(usize, usize); 8] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
];

/// One checked assertion of the reference corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assertion {
    pub instance: &'static str,
    pub what: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Recomputes every instance and compares each stored quantity.
pub fn verify_all() -> Vec<Assertion> {
    let mut out = Vec::new();
    for inst in all() {
        let data = match inst.analyze() {
            Ok(d) => d,
            Err(e) => {
                out.push(Assertion {
                    instance: inst.name,
                    what: "pipeline",
                    passed: false,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        let mut check = |what: &'static str, passed: bool, detail: String| {
            out.push(Assertion {
                instance: inst.name,
                what,
                passed,
                detail,
            });
        };
        check(
            "hilbert function",
            data.hilbert.values() == inst.hilbert,
            data.hilbert.to_string(),
        );
        check(
            "rank matrix",
            data.rank_matrix.rows() == inst.expected_rank_matrix(),
            data.rank_matrix.to_string().replace('\n', " / "),
        );
        if let Some(nonzero) = inst.jdt_nonzero {
            let d = data.jdt_matrix.socle_degree();
            let mut expected = vec![vec![0; d + 1]; d + 1];
            for &(i, j, v) in nonzero {
                expected[i][j] = v;
            }
            check(
                "jdt matrix",
                data.jdt_matrix.rows() == expected,
                data.jdt_matrix.to_string().replace('\n', " / "),
            );
        }
        check(
            "jordan type",
            data.jordan_type.parts() == inst.jordan_type,
            data.jordan_type.to_string(),
        );
        check(
            "jordan degree type",
            data.jordan_degree_type == inst.expected_jdt(),
            data.jordan_degree_type.to_string(),
        );
    }

    let pairs = [
        (&CODIM3_A, &CODIM3_B, "degree-8 collision"),
        (&CODIM4_A, &CODIM4_B, "degree-5 collision"),
    ];
    for (a, b, what) in pairs {
        let (da, db) = match (a.analyze(), b.analyze()) {
            (Ok(x), Ok(y)) => (x, y),
            _ => continue,
        };
        out.push(Assertion {
            instance: a.name,
            what,
            passed: da.hilbert == db.hilbert
                && da.jordan_type == db.jordan_type
                && da.jordan_degree_type != db.jordan_degree_type,
            detail: format!("{} vs {}", da.jordan_degree_type, db.jordan_degree_type),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_verifies() {
        for a in verify_all() {
            assert!(a.passed, "{} / {}: got {}", a.instance, a.what, a.detail);
        }
    }

    #[test]
    fn highlighted_superdiagonal() {
        let mut diffs = Vec::new();
        for i in 0..9 {
            for j in 0..9 {
                if CODIM3_A.rank_matrix[i][j] != CODIM3_B.rank_matrix[i][j] {
                    diffs.push((i, j));
                }
            }
        }
        assert_eq!(diffs, [(2, 3), (3, 4), (4, 5), (5, 6)]);
        assert!(diffs.iter().all(|p| CODIM3_HIGHLIGHTED.contains(p)));
        let sum = |inst: &Instance| -> usize {
            CODIM3_HIGHLIGHTED
                .iter()
                .map(|&(i, j)| inst.rank_matrix[i][j])
                .sum()
        };
        assert_eq!(sum(&CODIM3_A), sum(&CODIM3_B));
    }
}
